// Acceptance gate: one line per criterion, exit 0 iff everything passes.

#include <cstdio>
#include <random>
#include <set>

#include "exsuper/euler.hpp"
#include "exsuper/verify.hpp"

using namespace exsuper;

namespace {

int failures = 0;

void report(const char* name, bool ok) {
  std::printf("%-34s %s\n", name, ok ? "PASS" : "FAIL");
  if (!ok)++failures;
}

bool cross_validation() {
  bool ok = true;
  for (long long p : {3LL, 5LL, 7LL, 11LL}) {
    std::vector<long long> box(3, 3 * p);
    for (long long zeta = 1; zeta <= p - 2; ++zeta) {
      auto rep = verify_box(SuperType::D2_1, ScalarContext::finite_d(p, zeta), box);
      if (!rep.passed()) {
        std::printf("  D p=%lld zeta=%lld: %zu mismatches\n", p, zeta,
                    rep.mismatches.size());
        ok = false;
      }
    }
  }
  for (long long p : {5LL, 7LL, 11LL, 13LL}) {
    auto rep = verify_box(SuperType::G3, ScalarContext::finite(SuperType::G3, p),
                          std::vector<long long>(3, 3 * p));
    if (!rep.passed()) {
      std::printf("  G3 p=%lld: %zu mismatches\n", p, rep.mismatches.size());
      ok = false;
    }
  }
  {
    auto rep = verify_box(SuperType::G3, ScalarContext::finite(SuperType::G3, 3),
                          std::vector<long long>(3, 12));
    if (!rep.passed()) {
      std::printf("  G3 p=3: %zu mismatches\n", rep.mismatches.size());
      ok = false;
    }
  }
  for (long long p : {5LL, 7LL, 11LL}) {
    auto rep = verify_box(SuperType::F3_1, ScalarContext::finite(SuperType::F3_1, p),
                          std::vector<long long>(4, 2 * p));
    if (!rep.passed()) {
      std::printf("  F(3|1) p=%lld: %zu mismatches\n", p, rep.mismatches.size());
      ok = false;
    }
  }
  return ok;
}

bool char0_lists() {
  bool ok = true;
  for (auto [t, side] : {std::pair{SuperType::D2_1, 30LL},
                         {SuperType::G3, 30LL},
                         {SuperType::F3_1, 12LL}}) {
    auto rep = char0_check(t, std::vector<long long>(weight_rank(t), side));
    if (!rep.passed()) {
      std::printf("  %s char 0: %zu mismatches\n", type_name(t),
                  rep.mismatches.size());
      ok = false;
    }
  }
  return ok;
}

bool zeta_symmetry() {
  bool ok = true;
  for (long long p : {5LL, 7LL, 11LL}) {
    auto reports = zeta_sweep(p, std::vector<long long>(3, 2 * p));
    for (const auto& rep : reports)
      if (!rep.passed()) {
        std::printf("  sweep p=%lld zeta=%lld: %zu mismatches\n", p,
                    rep.ctx.zeta_fp, rep.mismatches.size());
        ok = false;
      }
  }
  return ok;
}

// lambda + rho pairs nonzero (generically in zeta) with every positive root,
// even and odd; only for such typical lambda is the character nonzero with
// guaranteed top term (lambda, 1).
bool typical(const Weight& w, SuperType t) {
  const auto& rd = root_datum(t);
  MetricVector shifted = to_metric(w, t) + rd.rho;
  for (const auto& alpha : rd.pos_even_roots)
    if (pairing(shifted, alpha, t).structurally_zero()) return false;
  for (const auto& beta : rd.pos_odd_roots) {
    if (!pairing(beta, beta, t).structurally_zero()) continue;
    if (pairing(shifted, beta, t).structurally_zero()) return false;
  }
  return true;
}

bool euler_engine() {
  bool ok = true;
  std::mt19937 rng(20260826);
  for (SuperType t : {SuperType::D2_1, SuperType::G3, SuperType::F3_1}) {
    const auto& rd = root_datum(t);
    const auto& W = weyl_group(t);
    std::size_t expect_w = t == SuperType::D2_1 ? 8 : t == SuperType::G3 ? 24 : 96;
    if (W.size() != expect_w) {
      std::printf("  %s: |W| = %zu\n", type_name(t), W.size());
      ok = false;
    }
    std::uniform_int_distribution<long long> pick(0, 4);
    // delta-coordinate floor that puts lambda + rho strictly inside the
    // dominant chamber; below it even a typical weight gets a reflected top
    const long long dmin = t == SuperType::D2_1 ? 2 : 3;
    const int dpos = t == SuperType::F3_1 ? 3 : 0;
    for (int trial = 0; trial < 10; ++trial) {
      Weight lambda;
      do {
        lambda.c.clear();
        for (int i = 0; i < weight_rank(t); ++i) lambda.c.push_back(pick(rng));
        lambda.c[dpos] += dmin;
      } while (!typical(lambda, t));
      Character chi = euler_char(lambda, t);  // throws if division is inexact

      // Weyl invariance
      for (const auto& g : W) {
        Character moved(chi.scale());
        for (const auto& [e, c] : chi.terms())
          moved.add(Character::scaled_exponent(apply(g, chi.unscale(e)), chi.scale()), c);
        if (!(moved == chi)) {
          std::printf("  %s: chi not W-invariant\n", type_name(t));
          ok = false;
          break;
        }
      }

      // multiply back by the even denominator, compare to the raw numerator
      Character numerator(chi.scale());
      MetricVector shifted = to_metric(lambda, t) + rd.rho;
      for (const auto& g : W)
        numerator.add(Character::scaled_exponent(apply(g, shifted), chi.scale()),
                      g.sign);
      for (const auto& beta : rd.pos_odd_roots)
        numerator.mul_binomial_sum(beta * Rat(1, 2));
      Character prod = chi;
      Character denom(chi.scale());
      denom.add(std::vector<long long>(metric_rank(t), 0), 1);
      for (const auto& alpha : rd.pos_even_roots) {
        Character factor(chi.scale());
        factor.add(Character::scaled_exponent(alpha * Rat(1, 2), chi.scale()), 1);
        factor.add(Character::scaled_exponent(alpha * Rat(-1, 2), chi.scale()), -1);
        denom = denom * factor;
      }
      if (!(prod * denom == numerator)) {
        std::printf("  %s: multiply-back check failed\n", type_name(t));
        ok = false;
      }

      TopTerm top = top_term(chi, t);
      if (!top.unique() || !top.weight || !(*top.weight == lambda) || top.coeff != 1) {
        std::printf("  %s: bad top term\n", type_name(t));
        ok = false;
      }
    }
  }
  return ok;
}

bool structural_invariants() {
  bool ok = true;
  for (SuperType t : {SuperType::D2_1, SuperType::G3, SuperType::F3_1}) {
    const auto& rd = root_datum(t);
    int n = metric_rank(t);
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if (!(rd.gram[i][j] == rd.gram[j][i])) {
          std::printf("  %s: gram not symmetric\n", type_name(t));
          ok = false;
          break;
        }
    MetricVector even{std::vector<Rat>(n, Rat(0))}, odd = even;
    for (const auto& a : rd.pos_even_roots) even = even + a;
    for (const auto& b : rd.pos_odd_roots) odd = odd + b;
    if (!(rd.rho == even * Rat(1, 2) - odd * Rat(1, 2))) {
      std::printf("  %s: rho != rho0 - rho1\n", type_name(t));
      ok = false;
    }
    for (const auto& b : rd.odd_roots)
      if (!pairing(b, b, t).structurally_zero()) {
        std::printf("  %s: distinguished odd root not isotropic\n", type_name(t));
        ok = false;
      }
    std::set<std::vector<Rat>> all;
    for (const auto& a : rd.pos_even_roots) {
      all.insert(a.c);
      all.insert((-a).c);
    }
    for (const auto& b : rd.pos_odd_roots) {
      all.insert(b.c);
      all.insert((-b).c);
    }
    for (const auto& sys : rd.simple_systems)
      for (const auto& r : sys)
        if (all.count(r.c) != 1) {
          std::printf("  %s: simple system member is not a root\n", type_name(t));
          ok = false;
        }
    const auto& dag = reflection_dag(t);
    std::size_t expect_edges = t == SuperType::F3_1 ? 5 : 3;
    if (dag.edges.size() != expect_edges ||
        dag.node_count != (int)rd.simple_systems.size()) {
      std::printf("  %s: DAG shape mismatch\n", type_name(t));
      ok = false;
    }
  }
  return ok;
}

bool property_suite() {
  bool ok = true;
  std::mt19937 rng(8261945);
  for (SuperType t : {SuperType::D2_1, SuperType::G3, SuperType::F3_1}) {
    long long p = t == SuperType::F3_1 ? 7 : 5;
    ScalarContext ctx = t == SuperType::D2_1 ? ScalarContext::finite_d(p, 2)
                                             : ScalarContext::finite(t, p);
    long long sat = t == SuperType::D2_1 ? 2 : t == SuperType::G3 ? 3 : 4;
    std::uniform_int_distribution<long long> coord(0, 3 * p);
    for (int trial = 0; trial < 1000; ++trial) {
      Weight lambda;
      for (int i = 0; i < weight_rank(t); ++i) lambda.c.push_back(coord(rng));

      // metric round trip
      auto back = from_metric(to_metric(lambda, t), t);
      if (!back || !(*back == lambda)) {
        std::printf("  %s: metric round trip failed\n", type_name(t));
        ok = false;
        break;
      }

      // chain weights stay integral (from_metric succeeds node by node) and
      // reflected nodes differ from their source by exactly one odd root
      auto res = chain(lambda, t, ctx);
      const auto& dag = reflection_dag(t);
      for (const auto& e : dag.edges) {
        const Weight& src = res.nodes[e.src].lambda;
        const Weight& dst = res.nodes[e.dst].lambda;
        bool fixed = res.nodes[e.dst].branch == Branch::FIXED;
        MetricVector diff = to_metric(src, t) - to_metric(dst, t);
        if (fixed ? !diff.is_zero()
                  : !(diff == root_datum(t).odd_roots[e.odd_root])) {
          std::printf("  %s: chain step inconsistent\n", type_name(t));
          ok = false;
        }
        if (fixed != is_zero(res.nodes[e.dst].edge_pairing, ctx)) {
          std::printf("  %s: branch/pairing mismatch\n", type_name(t));
          ok = false;
        }
      }

      // high-d saturation
      Weight high = lambda;
      high.c[t == SuperType::F3_1 ? 3 : 0] = sat + lambda.c[0] % 4;
      if (t == SuperType::F3_1) high.c[3] = sat + lambda.c[0] % 4;
      if (!classify_by_reflections(high, t, ctx).finite()) {
        std::printf("  %s: high-d weight not finite\n", type_name(t));
        ok = false;
      }
    }

    Weight zero;
    zero.c.assign(weight_rank(t), 0);
    if (!classify_by_reflections(zero, t, ctx).finite()) {
      std::printf("  %s: zero weight not finite\n", type_name(t));
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  report("cross-validation (methods A vs B)", cross_validation());
  report("characteristic-0 lists", char0_lists());
  report("zeta sweep and symmetry", zeta_symmetry());
  report("euler characteristic engine", euler_engine());
  report("structural invariants", structural_invariants());
  report("property suite", property_suite());
  if (failures) std::printf("%d criterion group(s) FAILED\n", failures);
  return failures ? 1 : 0;
}
