#pragma once

#include <iosfwd>

namespace hcurve::cli {

// sysexits-style codes
inline constexpr int kOk = 0;
inline constexpr int kNotCongruent = 1;
inline constexpr int kDegenerate = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;
inline constexpr int kSoftware = 70;
inline constexpr int kCantCreate = 73;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcurve::cli
