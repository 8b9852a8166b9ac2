#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace wgres {

using Real = double;
using Complex = std::complex<double>;
using VecR = Eigen::VectorXd;
using VecC = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;
using MatC = Eigen::MatrixXcd;

inline constexpr Real pi = 3.14159265358979323846264338327950288;

// Error taxonomy mirrors the CLI exit codes: config(2), precondition(3),
// compute(4), verification(5).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};
struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& m) : std::runtime_error(m) {}
};

// Region/pole guard violations during complex evaluation of curvature data.
struct RegionError : PreconditionError {
  explicit RegionError(const std::string& m) : PreconditionError(m) {}
};
struct PoleProximityError : PreconditionError {
  explicit PoleProximityError(const std::string& m) : PreconditionError(m) {}
};

inline bool near(Real a, Real b, Real tol) { return std::abs(a - b) <= tol; }

// FNV-1a, doubled to 128 bits with distinct offsets. Registry identity only,
// not cryptographic.
inline std::string fnv1a128(const std::string& s) {
  auto run = [&](std::uint64_t h) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  };
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx",
                (unsigned long long)run(0xcbf29ce484222325ull),
                (unsigned long long)run(0x9ae16a3b2f90404full));
  return std::string(buf);
}

// Shortest round-trip decimal form; used everywhere numbers are persisted so
// that reruns are byte-identical.
inline std::string fmt_g17(Real x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf);
}

}  // namespace wgres
