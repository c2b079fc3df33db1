#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace abcage {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double half_pi = pi / 2.0;

enum class Boundary { Open, Periodic };
enum class Sublattice { A, B };
enum class Branch { Plus, Minus };
enum class Leg { Upper, Lower };
enum class Side { Left, Right };
enum class PhaseAxis { Phi1, Phi2 };

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A parameter lies outside its documented domain (J <= 0, N < 2, ...).
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// Matrix/vector dimensions do not agree.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// A cell or site index is out of range.
class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// The operation has no closed form / no meaning in the requested regime.
class UnsupportedRegime : public Error {
public:
    explicit UnsupportedRegime(const std::string& msg) : Error(msg) {}
};

// The CLS basis degenerates (exceptional point J = Gamma).
class DegenerateBasis : public Error {
public:
    explicit DegenerateBasis(const std::string& msg) : Error(msg) {}
};

// Requested a real oscillation period where none exists (Gamma >= J).
class NoRealPeriod : public Error {
public:
    explicit NoRealPeriod(const std::string& msg) : Error(msg) {}
};

// Dense eigensolver failed to converge.
class EigensolverError : public Error {
public:
    EigensolverError(const std::string& msg, long iterations)
        : Error(msg + " (iteration budget " + std::to_string(iterations) + ")"),
          iterations_(iterations) {}
    long iterations() const { return iterations_; }

private:
    long iterations_;
};

// Malformed run configuration (CLI layer).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace abcage
