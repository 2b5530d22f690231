#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ecfp {

// Tolerance for simplex membership (sum-to-one, nonnegativity).
inline constexpr double kSimplexTol = 1e-9;

// Tolerance for doubly stochastic weight-matrix checks.
inline constexpr double kWeightTol = 1e-12;

// Brute-force multilinear evaluation refuses joint action spaces with more
// than this many pure profiles.
inline constexpr std::int64_t kEnumerationCap = 10'000'000;

// Thrown when a tabular enumeration would exceed kEnumerationCap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace ecfp
