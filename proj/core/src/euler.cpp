#include "exsuper/euler.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace exsuper {

namespace {

// t with a = t*b, defined for proportional form values. The reflection
// coefficients 2(v,alpha)/(alpha,alpha) are of this shape for every even
// simple root (the zeta dependence cancels).
Rat proportionality(const FormValue& a, const FormValue& b) {
  if (a.structurally_zero()) return 0;
  Rat t = rat_zero(b.q0) ? a.q1 / b.q1 : a.q0 / b.q0;
  if (!(a.q0 == t * b.q0 && a.q1 == t * b.q1))
    throw std::logic_error("reflection coefficient is not zeta-free");
  return t;
}

std::vector<std::vector<long long>> reflection_matrix(const MetricVector& alpha,
                                                      SuperType type) {
  const int n = metric_rank(type);
  const FormValue norm = pairing(alpha, alpha, type);
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int k = 0; k < n; ++k) {
    MetricVector e;
    e.c.assign(n, Rat(0));
    e.c[k] = 1;
    const Rat t = proportionality(pairing(e, alpha, type) * 2, norm);
    const MetricVector img = e - alpha * t;
    for (int i = 0; i < n; ++i) {
      if (img.c[i].denominator() != 1)
        throw std::logic_error("reflection matrix is not integral");
      m[i][k] = img.c[i].numerator();
    }
  }
  return m;
}

std::vector<std::vector<long long>> mat_mul(
    const std::vector<std::vector<long long>>& a,
    const std::vector<std::vector<long long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<WeylElement> generate_group(SuperType type) {
  const auto& datum = root_datum(type);
  const int n = metric_rank(type);
  std::vector<std::vector<std::vector<long long>>> gens;
  for (const auto& alpha : datum.even_simple_roots)
    gens.push_back(reflection_matrix(alpha, type));

  std::vector<std::vector<long long>> id(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;

  std::vector<WeylElement> group{{id, +1}};
  std::set<std::vector<std::vector<long long>>> seen{id};
  for (std::size_t head = 0; head < group.size(); ++head) {
    const WeylElement w = group[head];
    for (const auto& g : gens) {
      auto m = mat_mul(g, w.mat);
      if (seen.insert(m).second) group.push_back({std::move(m), -w.sign});
    }
  }
  return group;
}

}  // namespace

const std::vector<WeylElement>& weyl_group(SuperType type) {
  static const std::vector<WeylElement> d21 = generate_group(SuperType::D2_1);
  static const std::vector<WeylElement> g3 = generate_group(SuperType::G3);
  static const std::vector<WeylElement> f31 = generate_group(SuperType::F3_1);
  switch (type) {
    case SuperType::D2_1: return d21;
    case SuperType::G3: return g3;
    case SuperType::F3_1: return f31;
  }
  throw std::logic_error("unknown type");
}

MetricVector apply(const WeylElement& w, const MetricVector& v) {
  const std::size_t n = w.mat.size();
  MetricVector out;
  out.c.assign(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.mat[i][j] != 0) out.c[i] += Rat(w.mat[i][j]) * v.c[j];
  return out;
}

int exponent_scale(SuperType type) { return type == SuperType::F3_1 ? 4 : 2; }

void Character::add(const std::vector<long long>& exponent, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_.emplace(exponent, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<long long> Character::scaled_exponent(const MetricVector& mu,
                                                 int scale) {
  std::vector<long long> e(mu.c.size());
  for (std::size_t i = 0; i < mu.c.size(); ++i) {
    const Rat s = mu.c[i] * scale;
    if (s.denominator() != 1)
      throw std::invalid_argument("exponent does not scale to an integer");
    e[i] = s.numerator();
  }
  return e;
}

Character Character::operator*(const Character& o) const {
  Character out(scale_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<long long> e(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

void Character::mul_binomial_sum(const MetricVector& mu) {
  const auto u = scaled_exponent(mu, scale_);
  Character out(scale_);
  for (const auto& [e, c] : terms_) {
    std::vector<long long> ep(e.size()), em(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      ep[i] = e[i] + u[i];
      em[i] = e[i] - u[i];
    }
    out.add(ep, c);
    out.add(em, c);
  }
  terms_ = std::move(out.terms_);
}

void Character::div_binomial_diff(const MetricVector& mu) {
  const auto u = scaled_exponent(mu, scale_);
  std::vector<long long> nu(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) nu[i] = -u[i];
  // Leading (lex-largest) term of e^{u} - e^{-u}.
  const bool u_leads = u > nu;
  const std::vector<long long>& lead = u_leads ? u : nu;
  const std::vector<long long>& trail = u_leads ? nu : u;
  const long long lead_coeff = u_leads ? 1 : -1;

  Character quotient(scale_);
  // Exact divisibility holds mathematically; the cap only catches
  // implementation bugs that would otherwise descend forever.
  std::size_t steps = 0, cap = 1000000 + terms_.size() * 1000;
  while (!terms_.empty()) {
    if (++steps > cap) throw std::runtime_error("nonzero remainder in Weyl denominator division");
    const auto lt = std::prev(terms_.end());
    const std::vector<long long>& e = lt->first;
    const long long c = lt->second;
    std::vector<long long> qe(e.size()), te(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      qe[i] = e[i] - lead[i];
      te[i] = qe[i] + trail[i];
    }
    // Quotient term c/lead_coeff; subtracting q*g cancels the leading term
    // and, since trail_coeff = -lead_coeff, adds back c at the trailing slot.
    quotient.add(qe, c * lead_coeff);
    terms_.erase(lt);
    add(te, c);
  }
  terms_ = std::move(quotient).terms_;
}

Character Character::div_exact(const Character& divisor) const {
  if (divisor.terms_.empty())
    throw std::invalid_argument("division by the zero character");
  // Lex-largest divisor term; map order is lex on the exponent vectors.
  const auto dl = std::prev(divisor.terms_.end());
  const std::vector<long long>& dlead = dl->first;
  const long long dcoeff = dl->second;

  Character rem = *this;
  Character quotient(scale_);
  // Exact divisibility holds mathematically; the cap only catches
  // implementation bugs that would otherwise descend forever.
  std::size_t steps = 0, cap = 1000000 + terms_.size() * 1000;
  while (!rem.terms_.empty()) {
    if (++steps > cap)
      throw std::runtime_error("nonzero remainder in character division");
    const auto lt = std::prev(rem.terms_.end());
    const long long c = lt->second;
    if (c % dcoeff != 0)
      throw std::runtime_error("nonzero remainder in character division");
    const long long q = c / dcoeff;
    std::vector<long long> qe(lt->first.size());
    for (std::size_t i = 0; i < qe.size(); ++i) qe[i] = lt->first[i] - dlead[i];
    quotient.add(qe, q);
    for (const auto& [de, dc] : divisor.terms_) {
      std::vector<long long> e(qe.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = qe[i] + de[i];
      rem.add(e, -q * dc);
    }
  }
  return quotient;
}

MetricVector Character::unscale(const std::vector<long long>& exponent) const {
  MetricVector v;
  v.c.reserve(exponent.size());
  for (long long e : exponent) v.c.push_back(Rat(e, scale_));
  return v;
}

Character euler_char(const Weight& lambda, SuperType type) {
  const auto& datum = root_datum(type);
  const int scale = exponent_scale(type);
  const MetricVector shifted = to_metric(lambda, type) + datum.rho;

  Character numerator(scale);
  for (const auto& w : weyl_group(type))
    numerator.add(Character::scaled_exponent(apply(w, shifted), scale), w.sign);

  for (const auto& beta : datum.pos_odd_roots)
    numerator.mul_binomial_sum(beta * Rat(1, 2));

  // One division by the whole Weyl denominator, written as the signed orbit
  // sum of e^{rho0} (denominator identity). Much shorter division chains than
  // dividing by the binomial factors one root at a time.
  Character denom(scale);
  for (const auto& w : weyl_group(type))
    denom.add(Character::scaled_exponent(apply(w, datum.rho0), scale), w.sign);
  return numerator.div_exact(denom);
}

namespace {

// Coordinates of v over the distinguished simple system Pi^0 (its roots form
// a basis of the metric space for each type). Gaussian elimination on a small
// system.
std::vector<Rat> simple_root_coordinates(const MetricVector& v, SuperType type) {
  const auto& simples = root_datum(type).simple_systems[0];
  const int n = metric_rank(type);
  std::vector<std::vector<Rat>> aug(n, std::vector<Rat>(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = simples[j].c[i];
    aug[i][n] = v.c[i];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (!rat_zero(aug[row][col])) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::logic_error("simple system is degenerate");
    std::swap(aug[col], aug[pivot]);
    const Rat pv = aug[col][col];
    for (int j = col; j <= n; ++j) aug[col][j] /= pv;
    for (int row = 0; row < n; ++row) {
      if (row == col || rat_zero(aug[row][col])) continue;
      const Rat f = aug[row][col];
      for (int j = col; j <= n; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace

TopTerm top_term(const Character& c, SuperType type) {
  if (c.empty()) throw std::invalid_argument("top_term of the empty character");
  // Solve for the simple-root coordinates of every support point once;
  // dominance then reduces to componentwise comparison of cached vectors.
  struct Pt {
    MetricVector mu;
    std::vector<Rat> coords;
    Rat height;  // coordinate sum; mu >= nu forces height(mu) >= height(nu)
    long long coeff;
  };
  std::vector<Pt> pts;
  for (const auto& [e, coeff] : c.terms()) {
    Pt p;
    p.mu = c.unscale(e);
    p.coords = simple_root_coordinates(p.mu, type);
    p.height = 0;
    for (const Rat& x : p.coords) p.height += x;
    p.coeff = coeff;
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end(),
            [](const Pt& a, const Pt& b) { return a.height > b.height; });
  auto geq = [](const Pt& a, const Pt& b) {
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (a.coords[i] < b.coords[i]) return false;
    return true;
  };

  TopTerm out;
  std::vector<const Pt*> maximal;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool is_max = true;
    // only points of greater or equal height can dominate pts[i]
    for (std::size_t j = 0; j < pts.size() && pts[j].height >= pts[i].height; ++j) {
      if (j == i) continue;
      if (geq(pts[j], pts[i])) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(&pts[i]);
  }
  for (const Pt* p : maximal) out.maximal_points.push_back(p->mu);
  if (maximal.size() == 1) {
    const Pt& top = *maximal.front();
    bool greatest = true;
    for (const auto& p : pts)
      if (&p != &top && !geq(top, p)) {
        greatest = false;
        break;
      }
    if (greatest) {
      out.point = top.mu;
      out.weight = from_metric(top.mu, type);
      out.coeff = top.coeff;
    }
  }
  return out;
}

}  // namespace exsuper
