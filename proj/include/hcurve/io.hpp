#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hcurve/classify.hpp"
#include "hcurve/curve.hpp"
#include "hcurve/frames.hpp"
#include "hcurve/group.hpp"
#include "hcurve/synth.hpp"

// Flat-file formats. Numbers are written in shortest round-trip form, independent of locale.
namespace hcurve::io {

/// {"n": int, "params": [...], "points": [[x_1..x_n, y_1..y_n, z], ...], "is_arclength": bool}
SampledCurve curve_from_json(const std::string& text);
std::string curve_to_json(const SampledCurve& c);

/// Header `s,kappa_1,…,kappa_n,tau`, one row per sample. `expected_n` = 0 accepts any n.
InvariantProfile profile_from_csv(const std::string& text, int expected_n = 0);
std::string profile_to_csv(const InvariantProfile& p);

/// {"n", "order", "totally_real", "nondegenerate", "margins": [...]}
std::string report_to_json(const OrderReport& r);

/// {"n", "rotation": row-major 2n×2n, "translation": [x…, y…, z]}
std::string symmetry_to_json(const Symmetry& phi);
Symmetry symmetry_from_json(const std::string& text);

std::string congruence_to_json(const CongruenceReport& r);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);

}  // namespace hcurve::io
