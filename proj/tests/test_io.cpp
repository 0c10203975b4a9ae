#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "neelsim/io.hpp"
#include "test_util.hpp"

using namespace neelsim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(static_cast<bool>(is));
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    REQUIRE(static_cast<bool>(os));
}

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

TEST_CASE("snapshot round trip is bit-exact, including signed zero and denormals") {
    const GridSpec g = GridSpec::make(12);
    auto rng = testutil::make_rng(3001);
    MagnetizationField m(g);
    testutil::fill_random(m, rng);
    m.at(0, 0, 0) = -0.0;
    m.at(1, 2, 3) = 5e-324;  // smallest denormal
    m.at(2, 1, 1) = 1e308;

    const std::string path = "/tmp/neelsim_io_snap.bin";
    save_snapshot(path, m, 0.1, 0.05, 1.75);
    Snapshot snap = load_snapshot(path);

    REQUIRE(snap.m.grid.n1 == g.n1);
    REQUIRE(snap.m.grid.n2 == g.n2);
    CHECK(std::memcmp(snap.m.v.data(), m.v.data(), m.v.size() * sizeof(double)) == 0);
    CHECK(same_bits(snap.m.at(0, 0, 0), -0.0));
    CHECK(snap.delta == 0.1);
    CHECK(snap.eps == 0.05);
    CHECK(snap.t == 1.75);
    CHECK(snap.version == 1);
}

TEST_CASE("snapshot rejects corrupted headers") {
    const GridSpec g = GridSpec::make(6);
    MagnetizationField m(g);
    const std::string path = "/tmp/neelsim_io_snap2.bin";
    save_snapshot(path, m, 0.2, 0.1, 0.0);
    const std::string good = slurp(path);

    const std::string trunc_path = "/tmp/neelsim_io_snap_trunc.bin";
    spit(trunc_path, good.substr(0, 20));
    CHECK_THROWS_AS(load_snapshot(trunc_path), std::runtime_error);

    std::string bad_magic = good;
    bad_magic[0] = 'X';
    spit(trunc_path, bad_magic);
    const std::string magic_msg = "snapshot: bad magic in " + trunc_path;
    CHECK_THROWS_WITH_AS(load_snapshot(trunc_path), magic_msg.c_str(), std::runtime_error);

    std::string bad_version = good;
    bad_version[4] = 2;  // little-endian u32 version field
    spit(trunc_path, bad_version);
    CHECK_THROWS_WITH_AS(load_snapshot(trunc_path), "snapshot: unsupported version",
                         std::runtime_error);

    std::string bad_dims = good;
    bad_dims[8] = 9;  // n1 = 9 while n2 still says 6
    spit(trunc_path, bad_dims);
    CHECK_THROWS_WITH_AS(load_snapshot(trunc_path), "snapshot: inconsistent grid dimensions",
                         std::runtime_error);

    CHECK_THROWS_AS(load_snapshot("/tmp/neelsim_io_does_not_exist.bin"), std::runtime_error);
}

TEST_CASE("parse_config_text: sections, comments, trimming") {
    const std::string text =
        "# leading comment\n"
        "  tol = 1e-9\n"
        "; another comment style\n"
        "[run]\n"
        "T = 2.5\n"
        "  dt  =  0.001  \n"
        "\n"
        "[grid]\n"
        "n = 64\n";
    Config cfg = parse_config_text(text);
    CHECK(cfg.size() == 4);
    CHECK(cfg.at("tol") == "1e-9");
    CHECK(cfg.at("run.T") == "2.5");
    CHECK(cfg.at("run.dt") == "0.001");
    CHECK(cfg.at("grid.n") == "64");

    CHECK_THROWS_WITH_AS(parse_config_text("x 5\n"), "config: missing '=' at line 1",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_config_text("a = 1\n[runx\n"),
                         "config: unterminated section header at line 2", std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_config_text("a = 1\n\n = 3\n"), "config: empty key at line 3",
                         std::runtime_error);
}

TEST_CASE("config_to_text round trip keeps bare keys ahead of sections") {
    Config cfg;
    cfg["zzz"] = "bare-but-late-alphabetically";
    cfg["aaa.k"] = "1";
    cfg["aaa.m"] = "2";
    cfg["run.T"] = "0.5";
    cfg["tol"] = "1e-8";

    const std::string text = config_to_text(cfg);
    Config back = parse_config_text(text);
    CHECK(back == cfg);

    const std::string path = "/tmp/neelsim_io_cfg.ini";
    save_config(path, cfg);
    CHECK(load_config(path) == cfg);
    CHECK_THROWS_AS(load_config("/tmp/neelsim_io_no_such_cfg.ini"), std::runtime_error);
}

TEST_CASE("config_num and config_str") {
    Config cfg;
    cfg["run.T"] = "2.5";
    cfg["run.bad"] = "abc";
    cfg["run.trail"] = "1.5x";
    cfg["run.name"] = "wall";

    CHECK(config_num(cfg, "run.T", 0.0) == 2.5);
    CHECK(config_num(cfg, "run.missing", -3.0) == -3.0);
    CHECK_THROWS_WITH_AS(config_num(cfg, "run.bad", 0.0),
                         "config: key 'run.bad' is not a number: abc", std::runtime_error);
    CHECK_THROWS_WITH_AS(config_num(cfg, "run.trail", 0.0),
                         "config: key 'run.trail' is not a number: 1.5x", std::runtime_error);
    CHECK(config_str(cfg, "run.name", "x") == "wall");
    CHECK(config_str(cfg, "run.other", "fallback") == "fallback");
}

TEST_CASE("fmt_g17 is strtod round-trip exact") {
    for (double v : {0.1, 1.0 / 3.0, 1e308, 5e-324, -0.0, 2.5, 3.141592653589793,
                     -1.2345678912345678e-7}) {
        const std::string s = fmt_g17(v);
        const double back = std::strtod(s.c_str(), nullptr);
        CHECK(same_bits(back, v));
    }
}

TEST_CASE("write_csv emits exact text and validates row width") {
    const std::string path = "/tmp/neelsim_io_test.csv";
    write_csv(path, {"a", "b"}, {{1.5, 2.25}, {-0.5, 3.0}});
    CHECK(slurp(path) == "a,b\n1.5,2.25\n-0.5,3\n");

    write_csv(path, {"only"}, {});
    CHECK(slurp(path) == "only\n");

    CHECK_THROWS_AS(write_csv(path, {"a", "b"}, {{1.0}}), std::invalid_argument);
}

TEST_CASE("write_manifest records regime flags and parameters") {
    Config resolved;
    resolved["run.T"] = "1";

    ModelParams p;
    p.delta = 0.2;
    p.eps = 0.04;
    p.nu = 1.0;
    p.lambda = 0.05;
    const double ab = p.alpha() * p.beta();

    const std::string path = "/tmp/neelsim_io_manifest.ini";
    write_manifest(path, resolved, p, ab);  // boundary case counts as admissible
    Config got = load_config(path);
    CHECK(got.at("run.T") == "1");
    CHECK(got.at("flags.regime_ok") == "true");
    CHECK(got.at("flags.lambda_ok") == "true");
    CHECK(got.at("flags.a3_ok") == "true");
    CHECK(config_num(got, "flags.alpha", 0.0) == p.alpha());
    CHECK(config_num(got, "flags.beta", 0.0) == p.beta());
    CHECK(config_num(got, "flags.v_sup_sq", 0.0) == ab);

    write_manifest(path, resolved, p, ab * 1.01);
    CHECK(load_config(path).at("flags.a3_ok") == "false");

    // the logarithmic regime fails at delta = 0.1, eps = 0.05
    ModelParams q;
    q.delta = 0.1;
    q.eps = 0.05;
    write_manifest(path, resolved, q, 0.0);
    CHECK(load_config(path).at("flags.regime_ok") == "false");
}
