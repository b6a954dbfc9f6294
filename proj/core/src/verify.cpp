#include "exsuper/verify.hpp"

#include <chrono>

namespace exsuper {

namespace {

using Clock = std::chrono::steady_clock;

const char* verdict_name(Verdict v) {
  return v == Verdict::FINITE ? "FINITE" : "INFINITE";
}

void record(VerifyReport& report, const Weight& w, const Classification& a,
            const Classification& b) {
  Mismatch m;
  m.lambda = w;
  m.verdict_a = a.verdict;
  m.verdict_b = b.verdict;
  m.witness_node = a.witness_node;
  m.clause = b.matched_clause;
  report.mismatches.push_back(std::move(m));
}

}  // namespace

VerifyReport verify_box(SuperType type, const ScalarContext& ctx,
                        const std::vector<long long>& box) {
  if (ctx.type != type) throw std::invalid_argument("context type mismatch");
  if (static_cast<int>(box.size()) != weight_rank(type))
    throw std::invalid_argument("box arity mismatch");
  const auto t0 = Clock::now();
  VerifyReport report;
  report.type = type;
  report.ctx = ctx;
  report.box = box;
  const bool with_props =
      ctx.finite_char() && type != SuperType::D2_1;
  for_each_in_box(box, [&](const Weight& w) {
    ++report.total_weights;
    const Classification a = classify_by_reflections(w, type, ctx);
    const Classification b = ctx.finite_char()
                                 ? classify_by_theorem(w, type, ctx)
                                 : classify_char0(w, type, ctx);
    if (a.finite()) ++report.finite_count;
    if (a.verdict != b.verdict) record(report, w, a, b);
    if (with_props && !(type == SuperType::F3_1 && ctx.p == 3)) {
      const Classification pr = classify_by_props(w, type, ctx);
      if (pr.verdict != a.verdict) record(report, w, a, pr);
    }
  });
  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

std::vector<VerifyReport> zeta_sweep(long long p, const std::vector<long long>& box) {
  if (p == 2) throw std::invalid_argument("zeta sweep needs p > 2");
  std::vector<VerifyReport> reports;
  std::vector<std::vector<Weight>> finite_sets;  // indexed by zeta-1
  for (long long zeta = 1; zeta <= p - 2; ++zeta) {
    const auto ctx = ScalarContext::finite_d(p, zeta);
    reports.push_back(verify_box(SuperType::D2_1, ctx, box));
    finite_sets.push_back(list_finite(SuperType::D2_1, ctx, box));
  }
  // Symmetric box check: (d,a,b) finite under zeta iff (d,b,a) finite under
  // zeta^{-1}. Requires box[1] == box[2] so that the swap stays in the box.
  if (box[1] == box[2]) {
    for (long long zeta = 1; zeta <= p - 2; ++zeta) {
      long long inv = 0;
      for (long long t = 1; t < p; ++t)
        if (t * zeta % p == 1) inv = t;
      if (inv > zeta) continue;  // each pair once; zeta == inv also handled
      std::vector<Weight> swapped;
      for (const Weight& w : finite_sets[zeta - 1])
        swapped.push_back(Weight{{w.c[0], w.c[2], w.c[1]}});
      std::sort(swapped.begin(), swapped.end());
      if (swapped != finite_sets[inv - 1]) {
        Mismatch m;
        m.lambda = Weight{{-1, -1, -1}};
        m.clause = "zeta-symmetry(zeta=" + std::to_string(zeta) +
                   ",inv=" + std::to_string(inv) + ")";
        m.verdict_a = Verdict::INFINITE;
        m.verdict_b = Verdict::INFINITE;
        reports[zeta - 1].mismatches.push_back(std::move(m));
      }
    }
  }
  return reports;
}

VerifyReport char0_check(SuperType type, const std::vector<long long>& box) {
  const ScalarContext ctx = type == SuperType::D2_1
                                ? ScalarContext::char_zero_d_generic()
                                : ScalarContext::char_zero(type);
  const auto t0 = Clock::now();
  VerifyReport report;
  report.type = type;
  report.ctx = ctx;
  report.box = box;
  // The p=infinity lists, transcribed directly.
  auto remark_finite = [type](const Weight& w) {
    switch (type) {
      case SuperType::D2_1:
        return (w.c[0] == 0 && w.c[1] == 0 && w.c[2] == 0) || w.c[0] >= 2;
      case SuperType::G3:
        return (w.c[0] == 0 && w.c[1] == 0 && w.c[2] == 0) ||
               (w.c[0] == 2 && w.c[2] == 0) || w.c[0] >= 3;
      case SuperType::F3_1:
        return (w.c[0] == 0 && w.c[1] == 0 && w.c[2] == 0 && w.c[3] == 0) ||
               (w.c[3] == 2 && w.c[0] == 0 && w.c[2] == 0) ||
               (w.c[3] == 3 && w.c[2] == 2 * w.c[0] + 1) || w.c[3] >= 4;
    }
    return false;
  };
  for_each_in_box(box, [&](const Weight& w) {
    ++report.total_weights;
    const Classification c = classify_char0(w, type, ctx);
    if (c.finite()) ++report.finite_count;
    if (c.finite() != remark_finite(w)) {
      Classification expected;
      expected.verdict = remark_finite(w) ? Verdict::FINITE : Verdict::INFINITE;
      record(report, w, expected, c);
    }
  });
  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json ctx;
  ctx["characteristic"] = report.ctx.p;
  switch (report.ctx.zeta_mode) {
    case ZetaMode::None: break;
    case ZetaMode::Fp: ctx["zeta"] = report.ctx.zeta_fp; break;
    case ZetaMode::Rational: ctx["zeta"] = to_string(report.ctx.zeta_q); break;
    case ZetaMode::Generic: ctx["zeta"] = "generic"; break;
  }
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : report.mismatches) {
    nlohmann::json e;
    e["lambda"] = m.lambda.c;
    e["verdict_a"] = verdict_name(m.verdict_a);
    e["verdict_b"] = verdict_name(m.verdict_b);
    e["witness_node"] = m.witness_node ? nlohmann::json(*m.witness_node)
                                       : nlohmann::json(nullptr);
    e["clause"] = m.clause ? nlohmann::json(*m.clause) : nlohmann::json(nullptr);
    mismatches.push_back(std::move(e));
  }
  return nlohmann::json{{"type", type_name(report.type)},
                        {"ctx", ctx},
                        {"box", report.box},
                        {"total_weights", report.total_weights},
                        {"finite_count", report.finite_count},
                        {"mismatches", mismatches},
                        {"elapsed", report.elapsed_seconds}};
}

}  // namespace exsuper
