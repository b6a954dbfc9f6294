#ifndef EXSUPER_TYPES_HPP
#define EXSUPER_TYPES_HPP

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace exsuper {

using Rat = boost::rational<long long>;

/// boost::rational (as of 1.74) recurses infinitely under C++20 when compared
/// against a plain integer via the rewritten operator== candidates, so every
/// literal comparison goes through these helpers instead.
inline bool rat_zero(const Rat& r) { return r.numerator() == 0; }
inline bool rat_eq(const Rat& r, long long n) {
  return r.denominator() == 1 && r.numerator() == n;
}

/// The three exceptional types. D2_1 is the one-parameter family; the
/// parameter zeta lives in ScalarContext, not here.
enum class SuperType { D2_1, G3, F3_1 };

inline const char* type_name(SuperType t) {
  switch (t) {
    case SuperType::D2_1: return "D(2|1;zeta)";
    case SuperType::G3: return "G(3)";
    case SuperType::F3_1: return "F(3|1)";
  }
  return "?";
}

/// Number of fundamental coordinates of a weight.
/// D2_1: (d,a,b) over (delta,eps1,eps2); G3: (d,r,s) over (delta,om1,om2);
/// F3_1: (a,b,c,d) over (om1..om4).
inline int weight_rank(SuperType t) { return t == SuperType::F3_1 ? 4 : 3; }

/// Dimension of the metric basis: (delta,eps1,eps2) or (delta,eps1,eps2,eps3).
inline int metric_rank(SuperType t) { return t == SuperType::F3_1 ? 4 : 3; }

/// Integral weight in the per-type fundamental coordinates.
struct Weight {
  std::vector<long long> c;
  auto operator<=>(const Weight&) const = default;
};

/// Rational vector over the metric basis.
struct MetricVector {
  std::vector<Rat> c;

  auto operator<=>(const MetricVector&) const = default;

  MetricVector operator+(const MetricVector& o) const {
    MetricVector r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  MetricVector operator-(const MetricVector& o) const {
    MetricVector r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  MetricVector operator-() const {
    MetricVector r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  MetricVector operator*(const Rat& s) const {
    MetricVector r = *this;
    for (auto& x : r.c) x *= s;
    return r;
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (!rat_zero(x)) return false;
    return true;
  }
};

inline MetricVector mv(std::vector<Rat> coords) { return MetricVector{std::move(coords)}; }

/// Exact value q0 + q1*zeta of the bilinear form. q1 is identically 0
/// outside type D2_1. Denominators divide 4.
struct FormValue {
  Rat q0 = 0;
  Rat q1 = 0;

  FormValue() = default;
  FormValue(Rat a) : q0(std::move(a)) {}
  FormValue(Rat a, Rat b) : q0(std::move(a)), q1(std::move(b)) {}
  FormValue(long long a) : q0(a) {}

  auto operator<=>(const FormValue&) const = default;

  FormValue operator+(const FormValue& o) const { return {q0 + o.q0, q1 + o.q1}; }
  FormValue operator-(const FormValue& o) const { return {q0 - o.q0, q1 - o.q1}; }
  FormValue operator-() const { return {-q0, -q1}; }
  FormValue operator*(const Rat& s) const { return {q0 * s, q1 * s}; }

  /// Zero as a polynomial in zeta (not zero in any particular field).
  bool structurally_zero() const { return rat_zero(q0) && rat_zero(q1); }
};

inline std::string to_string(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

inline std::string to_string(const FormValue& v) {
  if (rat_zero(v.q1)) return to_string(v.q0);
  return to_string(v.q0) + (v.q1.numerator() > 0 ? "+" : "") + to_string(v.q1) + "*zeta";
}

}  // namespace exsuper

#endif
