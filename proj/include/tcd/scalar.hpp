#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "tcd/error.hpp"

namespace tcd {

using Int = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

inline Int num(const Scalar& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Scalar& x) { return boost::multiprecision::denominator(x); }

// Serialized form: "p" or "p/q" with q > 0 and gcd(p,q) = 1.
inline std::string scalar_to_string(const Scalar& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

inline Scalar scalar_from_string(const std::string& s) {
  auto bad = [&]() -> Error {
    return Error("BadRational", "cannot parse rational number", s);
  };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Scalar(Int(s));
    }
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw bad();
    return Scalar(p, q);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

// Deterministic source of small rationals/integers used by the sampling
// helpers. A fixed-seed mt19937_64 keeps every run reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform integer in [lo, hi].
  long intIn(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  // Small random rational with numerator in [-9, 9] and denominator in [1, 9].
  Scalar smallRational() {
    return Scalar(intIn(-9, 9), intIn(1, 9));
  }

  // Small nonzero rational.
  Scalar smallNonzero() {
    for (;;) {
      Scalar x = smallRational();
      if (x != 0) return x;
    }
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tcd
