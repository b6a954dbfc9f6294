#include "exsuper/field.hpp"

namespace exsuper {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

void check_prime_for_type(SuperType type, long long p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  switch (type) {
    case SuperType::D2_1:
      if (p <= 2) throw UnsupportedCharacteristic("D(2|1;zeta) needs p > 2");
      break;
    case SuperType::G3:
      if (p < 3) throw UnsupportedCharacteristic("G(3) needs p >= 3");
      break;
    case SuperType::F3_1:
      if (p <= 3) throw UnsupportedCharacteristic("F(3|1) needs p > 3");
      break;
  }
}

long long mod(long long x, long long p) {
  long long r = x % p;
  return r < 0 ? r + p : r;
}

}  // namespace

ScalarContext ScalarContext::finite(SuperType type, long long p) {
  if (type == SuperType::D2_1)
    throw std::invalid_argument("D(2|1;zeta) context needs a zeta value");
  check_prime_for_type(type, p);
  ScalarContext c;
  c.type = type;
  c.p = p;
  return c;
}

ScalarContext ScalarContext::finite_d(long long p, long long zeta) {
  check_prime_for_type(SuperType::D2_1, p);
  const long long z = mod(zeta, p);
  if (z == 0 || z == p - 1)
    throw std::invalid_argument("zeta must avoid {0, -1} mod p");
  ScalarContext c;
  c.type = SuperType::D2_1;
  c.p = p;
  c.zeta_mode = ZetaMode::Fp;
  c.zeta_fp = z;
  return c;
}

ScalarContext ScalarContext::char_zero(SuperType type) {
  if (type == SuperType::D2_1)
    throw std::invalid_argument("D(2|1;zeta) context needs a zeta mode");
  ScalarContext c;
  c.type = type;
  return c;
}

ScalarContext ScalarContext::char_zero_d(Rat zeta) {
  if (rat_zero(zeta) || rat_eq(zeta, -1))
    throw std::invalid_argument("zeta must avoid {0, -1}");
  ScalarContext c;
  c.type = SuperType::D2_1;
  c.zeta_mode = ZetaMode::Rational;
  c.zeta_q = zeta;
  return c;
}

ScalarContext ScalarContext::char_zero_d_generic() {
  ScalarContext c;
  c.type = SuperType::D2_1;
  c.zeta_mode = ZetaMode::Generic;
  return c;
}

bool Residue::is_zero() const {
  if (auto* f = std::get_if<long long>(&v)) return *f == 0;
  if (auto* q = std::get_if<Rat>(&v)) return rat_zero(*q);
  const auto& g = std::get<std::pair<Rat, Rat>>(v);
  return rat_zero(g.first) && rat_zero(g.second);
}

Residue reduce(const FormValue& x, const ScalarContext& ctx) {
  if (ctx.type != SuperType::D2_1 && !rat_zero(x.q1))
    throw std::invalid_argument("zeta component outside type D(2|1;zeta)");
  switch (ctx.zeta_mode) {
    case ZetaMode::Generic:
      return Residue{std::pair<Rat, Rat>{x.q0, x.q1}};
    case ZetaMode::Rational:
      return Residue{x.q0 + x.q1 * ctx.zeta_q};
    case ZetaMode::None:
      if (!ctx.finite_char()) return Residue{x.q0};
      break;
    case ZetaMode::Fp:
      break;
  }
  // Finite characteristic: clear denominators by 4 (they divide 4 and p is odd,
  // so zeroness is preserved).
  const Rat s0 = x.q0 * 4, s1 = x.q1 * 4;
  if (s0.denominator() != 1 || s1.denominator() != 1)
    throw std::invalid_argument("form value denominator does not divide 4");
  long long r = mod(s0.numerator(), ctx.p);
  if (ctx.zeta_mode == ZetaMode::Fp)
    r = mod(r + mod(s1.numerator(), ctx.p) * ctx.zeta_fp, ctx.p);
  return Residue{r};
}

bool is_zero(const FormValue& x, const ScalarContext& ctx) {
  return reduce(x, ctx).is_zero();
}

}  // namespace exsuper
