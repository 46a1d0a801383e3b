#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit {

using Vector = std::vector<double>;
using Point = std::span<const double>;

// Error hierarchy. Every failure that is a property of the *input* (not of a
// numerical check) surfaces as one of these; numerical check failures are
// reported through report structs instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class DegenerateRegion : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class EvaluationError : public Error {
 public:
  using Error::Error;
};

class EmptySubmanifold : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class InconclusiveSpan : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw ContractViolation(what);
}

/// Deterministic generator. mt19937_64 output is fixed by the standard, but the
/// std distributions are not, so the mapping to doubles is done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double uniform(double lo, double hi);
  std::size_t index(std::size_t n);  // uniform in [0, n)

 private:
  std::mt19937_64 engine_;
};

double max_abs_diff(Point a, Point b);
double max_abs(Point a);
std::string format_point(Point p);

}  // namespace liekit
