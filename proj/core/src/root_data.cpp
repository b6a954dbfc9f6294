#include "exsuper/root_data.hpp"

#include <array>
#include <stdexcept>

namespace exsuper {

namespace {

Rat half() { return Rat(1, 2); }

MetricVector iv(std::vector<long long> v) {
  MetricVector m;
  m.c.assign(v.begin(), v.end());
  return m;
}

// Vector (t, x1, x2, x3) -> t*delta + x1*eps1 + x2*eps2 + x3*eps3, halved.
MetricVector hv(long long t, long long x1, long long x2, long long x3) {
  MetricVector m;
  m.c = {Rat(t, 2), Rat(x1, 2), Rat(x2, 2), Rat(x3, 2)};
  return m;
}

RootDatum make_d21() {
  RootDatum d;
  d.type = SuperType::D2_1;
  // beta_i = delta -+ eps1 -+ eps2
  d.odd_roots = {iv({1, -1, -1}), iv({1, 1, -1}), iv({1, -1, 1}), iv({1, 1, 1})};
  d.pos_odd_roots = d.odd_roots;
  d.pos_even_roots = {iv({2, 0, 0}), iv({0, 2, 0}), iv({0, 0, 2})};
  d.even_simple_roots = {iv({2, 0, 0}), iv({0, 2, 0}), iv({0, 0, 2})};
  d.simple_systems = {
      {iv({1, -1, -1}), iv({0, 2, 0}), iv({0, 0, 2})},    // Pi^0
      {iv({-1, 1, 1}), iv({1, 1, -1}), iv({1, -1, 1})},   // Pi^1
      {iv({0, 2, 0}), iv({-1, -1, 1}), iv({2, 0, 0})},    // Pi^2
      {iv({0, 0, 2}), iv({2, 0, 0}), iv({-1, 1, -1})},    // Pi^3
  };
  d.rho = iv({-1, 1, 1});
  d.rho0 = iv({1, 1, 1});
  d.rho1 = iv({2, 0, 0});
  // (delta,delta) = -(1+zeta), (eps1,eps1) = 1, (eps2,eps2) = zeta.
  d.gram = {{FormValue(-1, -1), FormValue(0), FormValue(0)},
            {FormValue(0), FormValue(1), FormValue(0)},
            {FormValue(0), FormValue(0), FormValue(Rat(0), Rat(1))}};
  return d;
}

RootDatum make_g3() {
  RootDatum d;
  d.type = SuperType::G3;
  // Metric basis (delta, eps1, eps2); eps3 = -eps1 - eps2.
  d.odd_roots = {iv({1, -1, -1}),   // beta_1 = delta + eps3
                 iv({1, 0, -1}),    // beta_2 = delta - eps2
                 iv({1, -1, 0})};   // beta_3 = delta - eps1
  d.pos_odd_roots = {iv({1, 0, 0}),                    // delta
                     iv({1, 1, 0}),  iv({1, -1, 0}),   // delta +- eps1
                     iv({1, 0, 1}),  iv({1, 0, -1}),   // delta +- eps2
                     iv({1, -1, -1}), iv({1, 1, 1})};  // delta +- eps3
  d.pos_even_roots = {iv({2, 0, 0}),                   // 2 delta
                      iv({0, 1, 0}),  iv({0, 0, 1}),   // eps1, eps2
                      iv({0, 1, 1}),                   // -eps3
                      iv({0, -1, 1}),                  // eps2 - eps1
                      iv({0, 2, 1}),                   // eps1 - eps3
                      iv({0, 1, 2})};                  // eps2 - eps3
  d.even_simple_roots = {iv({0, -1, 1}), iv({0, 1, 0}), iv({2, 0, 0})};
  d.simple_systems = {
      {iv({0, -1, 1}), iv({0, 1, 0}), iv({1, -1, -1})},   // Pi^0
      {iv({0, -1, 1}), iv({1, 0, -1}), iv({-1, 1, 1})},   // Pi^1
      {iv({1, -1, 0}), iv({-1, 0, 1}), iv({0, 1, 0})},    // Pi^2
      {iv({-1, 1, 0}), iv({0, -1, 1}), iv({1, 0, 0})},    // Pi^3
  };
  d.rho = mv({Rat(-5, 2), Rat(2), Rat(3)});
  d.rho0 = iv({1, 2, 3});
  d.rho1 = mv({Rat(7, 2), Rat(0), Rat(0)});
  d.gram = {{FormValue(-2), FormValue(0), FormValue(0)},
            {FormValue(0), FormValue(2), FormValue(-1)},
            {FormValue(0), FormValue(-1), FormValue(2)}};
  return d;
}

RootDatum make_f31() {
  RootDatum d;
  d.type = SuperType::F3_1;
  d.odd_roots = {hv(1, -1, -1, -1),   // gamma_1
                 hv(1, -1, -1, 1),    // gamma_2
                 hv(1, -1, 1, -1),    // gamma_3
                 hv(1, -1, 1, 1),     // gamma_4
                 hv(1, 1, -1, -1)};   // gamma_5
  d.pos_odd_roots = {hv(1, -1, -1, -1), hv(1, -1, -1, 1), hv(1, -1, 1, -1),
                     hv(1, -1, 1, 1),   hv(1, 1, -1, -1), hv(1, 1, -1, 1),
                     hv(1, 1, 1, -1),   hv(1, 1, 1, 1)};
  d.pos_even_roots = {iv({1, 0, 0, 0}),                        // delta
                      iv({0, 1, -1, 0}), iv({0, 1, 1, 0}),     // eps1 -+ eps2
                      iv({0, 1, 0, -1}), iv({0, 1, 0, 1}),     // eps1 -+ eps3
                      iv({0, 0, 1, -1}), iv({0, 0, 1, 1}),     // eps2 -+ eps3
                      iv({0, 1, 0, 0}), iv({0, 0, 1, 0}), iv({0, 0, 0, 1})};
  d.even_simple_roots = {iv({1, 0, 0, 0}), iv({0, 1, -1, 0}), iv({0, 0, 1, -1}),
                         iv({0, 0, 0, 1})};
  const MetricVector g1 = d.odd_roots[0], g2 = d.odd_roots[1], g3 = d.odd_roots[2],
                     g4 = d.odd_roots[3], g5 = d.odd_roots[4];
  const MetricVector e12 = iv({0, 1, -1, 0}), e23 = iv({0, 0, 1, -1}),
                     e3 = iv({0, 0, 0, 1}), delta = iv({1, 0, 0, 0});
  d.simple_systems = {
      {e12, e23, e3, g1},          // Pi^0
      {e12, e23, g2, -g1},         // Pi^1
      {e12, g3, -g2, e3},          // Pi^2
      {g5, -g3, e23, g4},          // Pi^3
      {delta, e3, e23, -g4},       // Pi^4
      {-g5, e12, e23, delta},      // Pi^5
  };
  d.rho = mv({Rat(-3, 2), Rat(5, 2), Rat(3, 2), half()});
  d.rho0 = mv({half(), Rat(5, 2), Rat(3, 2), half()});
  d.rho1 = iv({2, 0, 0, 0});
  d.gram = {{FormValue(-3), FormValue(0), FormValue(0), FormValue(0)},
            {FormValue(0), FormValue(1), FormValue(0), FormValue(0)},
            {FormValue(0), FormValue(0), FormValue(1), FormValue(0)},
            {FormValue(0), FormValue(0), FormValue(0), FormValue(1)}};
  return d;
}

}  // namespace

const RootDatum& root_datum(SuperType type) {
  static const RootDatum d21 = make_d21();
  static const RootDatum g3 = make_g3();
  static const RootDatum f31 = make_f31();
  switch (type) {
    case SuperType::D2_1: return d21;
    case SuperType::G3: return g3;
    case SuperType::F3_1: return f31;
  }
  throw std::logic_error("unknown type");
}

FormValue pairing(const MetricVector& u, const MetricVector& v, SuperType type) {
  const auto& gram = root_datum(type).gram;
  if (u.c.size() != gram.size() || v.c.size() != gram.size())
    throw std::invalid_argument("pairing: dimension mismatch");
  FormValue acc;
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    if (rat_zero(u.c[i])) continue;
    for (std::size_t j = 0; j < v.c.size(); ++j) {
      if (rat_zero(v.c[j])) continue;
      acc = acc + gram[i][j] * (u.c[i] * v.c[j]);
    }
  }
  return acc;
}

FormValue pair_with_odd_root(const Weight& lambda, int idx, SuperType type) {
  const auto& roots = root_datum(type).odd_roots;
  if (idx < 0 || idx >= static_cast<int>(roots.size()))
    throw std::out_of_range("odd root index");
  return pairing(to_metric(lambda, type), roots[idx], type);
}

MetricVector to_metric(const Weight& lambda, SuperType type) {
  if (static_cast<int>(lambda.c.size()) != weight_rank(type))
    throw std::invalid_argument("weight has wrong arity for type");
  switch (type) {
    case SuperType::D2_1: {
      // (d,a,b) -> d*delta + a*eps1 + b*eps2
      return mv({Rat(lambda.c[0]), Rat(lambda.c[1]), Rat(lambda.c[2])});
    }
    case SuperType::G3: {
      // om1 = eps1 + 2*eps2, om2 = eps1 + eps2
      const long long d = lambda.c[0], r = lambda.c[1], s = lambda.c[2];
      return mv({Rat(d), Rat(r + s), Rat(2 * r + s)});
    }
    case SuperType::F3_1: {
      // om1 = eps1, om2 = eps1+eps2, om3 = (eps1+eps2+eps3)/2, om4 = delta/2
      const long long a = lambda.c[0], b = lambda.c[1], c = lambda.c[2],
                      d = lambda.c[3];
      return mv({Rat(d, 2), Rat(a) + Rat(b) + Rat(c, 2), Rat(b) + Rat(c, 2),
                 Rat(c, 2)});
    }
  }
  throw std::logic_error("unknown type");
}

namespace {
std::optional<long long> as_int(const Rat& r) {
  if (r.denominator() != 1) return std::nullopt;
  return r.numerator();
}
}  // namespace

std::optional<Weight> from_metric(const MetricVector& v, SuperType type) {
  if (static_cast<int>(v.c.size()) != metric_rank(type)) return std::nullopt;
  switch (type) {
    case SuperType::D2_1: {
      auto d = as_int(v.c[0]), a = as_int(v.c[1]), b = as_int(v.c[2]);
      if (!d || !a || !b) return std::nullopt;
      return Weight{{*d, *a, *b}};
    }
    case SuperType::G3: {
      auto d = as_int(v.c[0]), r = as_int(v.c[2] - v.c[1]),
           s = as_int(v.c[1] * 2 - v.c[2]);
      if (!d || !r || !s) return std::nullopt;
      return Weight{{*d, *r, *s}};
    }
    case SuperType::F3_1: {
      auto d = as_int(v.c[0] * 2), c = as_int(v.c[3] * 2),
           b = as_int(v.c[2] - v.c[3]), a = as_int(v.c[1] - v.c[2]);
      if (!a || !b || !c || !d) return std::nullopt;
      return Weight{{*a, *b, *c, *d}};
    }
  }
  return std::nullopt;
}

bool is_dominant(const Weight& lambda, SuperType type) {
  if (static_cast<int>(lambda.c.size()) != weight_rank(type))
    throw std::invalid_argument("weight has wrong arity for type");
  for (long long x : lambda.c)
    if (x < 0) return false;
  return true;
}

}  // namespace exsuper
