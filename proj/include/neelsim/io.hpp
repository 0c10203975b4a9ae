/// @file io.hpp
/// Persistence: binary field snapshots, flat key=value configs with INI-style
/// sections, CSV emission with 17 significant digits, and run manifests.
///
/// Snapshot layout (all integers and floats little-endian):
///   bytes 0..3   magic "LLGF"
///   u32          version (currently 1)
///   u32 u32      n1, n2
///   f64 f64 f64  delta, eps, t
///   payload      n1*n2 row-major interleaved (m1, m2, m3) f64 triples
/// load(save(m)) reproduces the field bit-exactly.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "neelsim/energy.hpp"

namespace neelsim {

struct Snapshot {
    MagnetizationField m;
    double delta = 0.0, eps = 0.0, t = 0.0;
    std::uint32_t version = 1;
};

void save_snapshot(const std::string& path, const MagnetizationField& m, double delta,
                   double eps, double t);
Snapshot load_snapshot(const std::string& path);

/// flat configuration: keys are "section.key" (or bare "key" before any
/// section header); values kept as written
using Config = std::map<std::string, std::string>;

Config parse_config_text(const std::string& text);
Config load_config(const std::string& path);
std::string config_to_text(const Config& cfg);
void save_config(const std::string& path, const Config& cfg);

/// config access with validation errors that name the key
double config_num(const Config& cfg, const std::string& key, double fallback);
std::string config_str(const Config& cfg, const std::string& key, const std::string& fallback);

/// shortest round-trip-exact decimal form (17 significant digits)
std::string fmt_g17(double v);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// manifest: resolved config echoed back plus the regime flags
/// (regime_ok, lambda_ok, a3_ok for the drift bound ||v||^2 <= alpha beta)
void write_manifest(const std::string& path, const Config& resolved, const ModelParams& p,
                    double v_sup_sq);

}  // namespace neelsim
