#include "neelsim/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace neelsim {

namespace {

template <class T>
void put_le(std::ostream& os, T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(std::begin(buf), std::end(buf));
    os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get_le(std::istream& is) {
    unsigned char buf[sizeof(T)];
    is.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!is) throw std::runtime_error("snapshot: truncated file");
    if constexpr (std::endian::native == std::endian::big)
        std::reverse(std::begin(buf), std::end(buf));
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void save_snapshot(const std::string& path, const MagnetizationField& m, double delta,
                   double eps, double t) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("snapshot: cannot open " + path + " for writing");
    os.write("LLGF", 4);
    put_le<std::uint32_t>(os, 1);
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(m.grid.n1));
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(m.grid.n2));
    put_le<double>(os, delta);
    put_le<double>(os, eps);
    put_le<double>(os, t);
    const GridSpec& g = m.grid;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j)
            for (int c = 0; c < 3; ++c) put_le<double>(os, m.at(c, i, j));
    if (!os) throw std::runtime_error("snapshot: write failure on " + path);
}

Snapshot load_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("snapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "LLGF", 4) != 0)
        throw std::runtime_error("snapshot: bad magic in " + path);
    Snapshot snap;
    snap.version = get_le<std::uint32_t>(is);
    if (snap.version != 1) throw std::runtime_error("snapshot: unsupported version");
    const auto n1 = get_le<std::uint32_t>(is);
    const auto n2 = get_le<std::uint32_t>(is);
    if (n1 < 9 || n1 % 2 == 0 || n2 != (n1 - 1) / 2)
        throw std::runtime_error("snapshot: inconsistent grid dimensions");
    snap.delta = get_le<double>(is);
    snap.eps = get_le<double>(is);
    snap.t = get_le<double>(is);
    GridSpec g = GridSpec::make(static_cast<int>((n1 - 1) / 2));
    snap.m = MagnetizationField(g);
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j)
            for (int c = 0; c < 3; ++c) snap.m.at(c, i, j) = get_le<double>(is);
    return snap;
}

Config parse_config_text(const std::string& text) {
    Config cfg;
    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::runtime_error("config: unterminated section header at line " +
                                         std::to_string(lineno));
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: missing '=' at line " + std::to_string(lineno));
        const std::string key = trim(s.substr(0, eq));
        if (key.empty())
            throw std::runtime_error("config: empty key at line " + std::to_string(lineno));
        const std::string full = section.empty() ? key : section + "." + key;
        cfg[full] = trim(s.substr(eq + 1));
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream buf;
    buf << is.rdbuf();
    return parse_config_text(buf.str());
}

std::string config_to_text(const Config& cfg) {
    // bare keys must all precede the first section header, otherwise a
    // re-parse would fold them into whatever section came before them
    std::ostringstream os;
    bool wrote = false;
    for (const auto& [full, value] : cfg) {
        if (full.find('.') != std::string::npos) continue;
        os << full << " = " << value << "\n";
        wrote = true;
    }
    std::string current;
    for (const auto& [full, value] : cfg) {
        const auto dot = full.find('.');
        if (dot == std::string::npos) continue;
        const std::string section = full.substr(0, dot);
        if (section != current) {
            if (wrote) os << "\n";
            os << "[" << section << "]\n";
            current = section;
        }
        os << full.substr(dot + 1) << " = " << value << "\n";
        wrote = true;
    }
    return os.str();
}

void save_config(const std::string& path, const Config& cfg) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("config: cannot open " + path + " for writing");
    os << config_to_text(cfg);
    if (!os) throw std::runtime_error("config: write failure on " + path);
}

double config_num(const Config& cfg, const std::string& key, double fallback) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' is not a number: " + it->second);
    }
}

std::string config_str(const Config& cfg, const std::string& key, const std::string& fallback) {
    const auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
}

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("csv: cannot open " + path + " for writing");
    for (std::size_t c = 0; c < header.size(); ++c)
        os << header[c] << (c + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("csv: row width does not match header");
        for (std::size_t c = 0; c < row.size(); ++c)
            os << fmt_g17(row[c]) << (c + 1 < row.size() ? "," : "\n");
    }
    if (!os) throw std::runtime_error("csv: write failure on " + path);
}

void write_manifest(const std::string& path, const Config& resolved, const ModelParams& p,
                    double v_sup_sq) {
    Config out = resolved;
    out["flags.regime_ok"] = p.regime_ok() ? "true" : "false";
    out["flags.lambda_ok"] = p.lambda_ok() ? "true" : "false";
    out["flags.a3_ok"] =
        (v_sup_sq <= p.alpha() * p.beta() * (1.0 + 1e-12)) ? "true" : "false";
    out["flags.alpha"] = fmt_g17(p.alpha());
    out["flags.beta"] = fmt_g17(p.beta());
    out["flags.v_sup_sq"] = fmt_g17(v_sup_sq);
    save_config(path, out);
}

}  // namespace neelsim
