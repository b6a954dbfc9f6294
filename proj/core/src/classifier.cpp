#include "exsuper/classifier.hpp"

namespace exsuper {

namespace {

Classification finite_with(std::string clause) {
  Classification c;
  c.verdict = Verdict::FINITE;
  c.matched_clause = std::move(clause);
  return c;
}

Classification infinite() {
  Classification c;
  c.verdict = Verdict::INFINITE;
  return c;
}

void require_dominant(const Weight& lambda, SuperType type) {
  if (!is_dominant(lambda, type))
    throw std::invalid_argument("classification requires a dominant weight");
}

// One clause: all congruences vanish in ctx, all noncongruences do not, all
// guards hold.
struct Clause {
  std::string id;
  std::vector<FormValue> congruences;
  bool guards = true;
  std::vector<FormValue> noncongruences = {};
};

std::optional<std::string> match(const std::vector<Clause>& clauses,
                                 const ScalarContext& ctx) {
  for (const auto& cl : clauses) {
    if (!cl.guards) continue;
    bool ok = true;
    for (const auto& v : cl.congruences)
      if (!is_zero(v, ctx)) {
        ok = false;
        break;
      }
    for (const auto& v : cl.noncongruences)
      if (ok && is_zero(v, ctx)) ok = false;
    if (ok) return cl.id;
  }
  return std::nullopt;
}

FormValue fv(long long q0, long long q1 = 0) { return FormValue(Rat(q0), Rat(q1)); }

// Theorem clause table for D(2|1;zeta). Also used for characteristic 0, where
// the congruences become exact equations in zeta.
std::vector<Clause> d21_theorem_clauses(const Weight& lambda) {
  const long long d = lambda.c[0], a = lambda.c[1], b = lambda.c[2];
  return {
      {"ThmD(1)", {fv(a), fv(b)}, d == 0},
      {"ThmD(2)", {fv(a + 1, -(b + 1))}, d == 1},
      {"ThmD(3)", {fv(a + 1, b + 1)}, d == 1},
      {"ThmD(4)", {}, d >= 2},
  };
}

std::vector<Clause> g3_theorem_clauses(const Weight& lambda) {
  const long long d = lambda.c[0], r = lambda.c[1], s = lambda.c[2];
  return {
      {"ThmG3(1)", {fv(3 * r), fv(s)}, d == 0},
      {"ThmG3(2)(i)", {fv(s - 1), fv(3 * r + 4)}, d == 1},
      {"ThmG3(2)(ii)", {fv(s), fv(3 * r + 2)}, d == 1},
      {"ThmG3(3)(i)", {fv(s)}, d == 2},
      {"ThmG3(3)(ii)", {fv(3 * r + s + 3)}, d == 2},
      {"ThmG3(3)(iii)", {fv(3 * r + 2 * s + 4)}, d == 2},
      {"ThmG3(4)", {}, d >= 3},
  };
}

// p = 3 list for G3.
std::vector<Clause> g3_p3_clauses(const Weight& lambda) {
  const long long d = lambda.c[0], s = lambda.c[2];
  return {
      {"ThmG3p3(1)", {fv(s)}, d == 0},
      {"ThmG3p3(2)", {}, d == 2 && (s % 3 == 0 || s % 3 == 1)},
      {"ThmG3p3(3)", {}, d >= 3},
  };
}

// Fractional constants are cleared by 2 or 4; valid for p > 3.
std::vector<Clause> f31_theorem_clauses(const Weight& lambda) {
  const long long a = lambda.c[0], b = lambda.c[1], c = lambda.c[2],
                  d = lambda.c[3];
  return {
      {"ThmF4(1)", {fv(a), fv(b), fv(c)}, d == 0},
      {"ThmF4(2)(i)", {fv(a), fv(2 * b + 3), fv(c - 1)}, d == 1},
      {"ThmF4(2)(ii)", {fv(2 * a + 1), fv(2 * b + 1), fv(c)}, d == 1},
      {"ThmF4(2)(iii)", {fv(2 * a + 3), fv(b), fv(c)}, d == 1},
      {"ThmF4(3)(i)", {fv(a), fv(c)}, d == 2},
      {"ThmF4(3)(ii)", {fv(2 * a - c), fv(a + b + 1)}, d == 2},
      {"ThmF4(3)(iii)", {fv(b), fv(2 * a + c + 4)}, d == 2},
      {"ThmF4(3)(iv)", {fv(2 * a - c + 2), fv(2 * a + b + 3)}, d == 2 && c >= 1},
      {"ThmF4(3)(v)", {fv(2 * a + c + 2), fv(a - b)}, d == 2},
      {"ThmF4(3)(vi)", {fv(a + 2 * b + 3), fv(c)}, d == 2},
      {"ThmF4(4)(i)", {fv(2 * a - c + 1)}, d == 3},
      {"ThmF4(4)(ii)", {fv(2 * a + c + 3)}, d == 3},
      {"ThmF4(4)(iii)", {fv(2 * a + 4 * b + c + 7)}, d == 3},
      {"ThmF4(4)(iv)", {fv(2 * a + c + 7), fv(b)}, d == 3},
      {"ThmF4(4)(v)", {fv(2 * a + 4 * b + 3 * c + 9)}, d == 3},
      {"ThmF4(5)", {}, d >= 4},
  };
}

// The dominance summary for G3 before any simplification; valid for p >= 3.
// Clauses mix congruences with non-congruences, so they get a custom matcher.
std::optional<std::string> g3_props_match(const Weight& lambda,
                                          const ScalarContext& ctx) {
  const long long d = lambda.c[0], r = lambda.c[1], s = lambda.c[2];
  auto z = [&](long long v) { return is_zero(fv(v), ctx); };
  const long long x1 = 2 * d + 3 * r + 2 * s;
  if (d >= 3 && !z(x1) && !z(2 * d + 3 * r + s - 1) && !z(2 * d + s - 4))
    return "PropG3(1a)(i)";
  if (d >= 2 && z(2 * d + s - 4) && !z(3 * (r + 1)) && !z(x1))
    return "PropG3(1a)(ii)";
  if (d >= 2 && !z(3 * r) && z(2 * d + 3 * r + s - 1) && !z(x1))
    return "PropG3(1b)(i)";
  if (d >= 2 && z(3 * r) && z(2 * d + s - 1) && !z(x1))
    return "PropG3(1b)(ii)";
  if (d >= 2 && !z(s) && z(x1) && !z(3 * r + s + 3))
    return "PropG3(2a)(i)";
  if (d >= 1 && !z(s) && z(x1) && z(3 * r + s + 3))
    return "PropG3(2a)(ii)";
  if (z(s) && !z(2 * d) && z(2 * d + 3 * r))
    return "PropG3(2b)(i)";
  if (z(2 * d) && z(3 * r) && z(s))
    return "PropG3(2b)(ii)";
  return std::nullopt;
}

// Per-d proposition table for F3_1, p > 3. The d=2 and d=3 cases are the
// pre-simplification lists, with their inequalities and non-congruences kept,
// so this route is independent of the streamlined theorem clauses. Fractional
// constants are cleared by 2 or 4.
std::vector<Clause> f31_prop_clauses(const Weight& lambda) {
  const long long a = lambda.c[0], b = lambda.c[1], c = lambda.c[2],
                  d = lambda.c[3];
  return {
      {"PropF4-d0", {fv(a), fv(b), fv(c)}, d == 0},
      {"PropF4-d1(i)", {fv(a), fv(2 * b + 3), fv(c - 1)}, d == 1},
      {"PropF4-d1(ii)", {fv(2 * a + 1), fv(2 * b + 1), fv(c)}, d == 1},
      {"PropF4-d1(iii)", {fv(2 * a + 3), fv(b), fv(c)}, d == 1},
      {"PropF4-d2(1.1)", {fv(a), fv(c)}, d == 2, {fv(b + 1), fv(2 * b + 3)}},
      {"PropF4-d2(1.2)", {fv(b + a + 1), fv(c - 2 * a)}, d == 2 && b >= 1,
       {fv(a + 1)}},
      {"PropF4-d2(1.3)", {fv(b), fv(c + 2 * a + 4)}, d == 2, {fv(2 * a + 3)}},
      {"PropF4-d2(2.1)", {fv(c - 2 * a - 2), fv(b + 2 * a + 3)},
       d == 2 && c >= 1, {fv(a + 1)}},
      {"PropF4-d2(2.2i)", {fv(c + 2 * a + 2), fv(b - a)},
       d == 2 && c >= 2, {fv(2 * a + 3), fv(a + 1)}},
      {"PropF4-d2(2.2ii)", {fv(2 * a + 3), fv(2 * b + 3), fv(c - 1)}, d == 2},
      {"PropF4-d2(2.3)", {fv(c), fv(2 * b + a + 3)}, d == 2, {fv(a + 3)}},
      {"PropF4-d2(2.4)", {fv(c), fv(b), fv(a + 3)}, d == 2},
      {"PropF4-d3(1.1)", {fv(c - 2 * a - 1)}, d == 3,
       {fv(b + 2 * a + 3), fv(b + a + 2), fv(a + 1)}},
      {"PropF4-d3(1.2)", {fv(c + 2 * a + 3)}, d == 3, {fv(b + 1), fv(b - a)}},
      {"PropF4-d3(1.3)", {fv(4 * b + 2 * a + c + 7)}, d == 3,
       {fv(b), fv(c + 1)}},
      {"PropF4-d3(1.4)", {fv(b), fv(c + 2 * a + 7)}, d == 3, {fv(a + 3)}},
      {"PropF4-d3(2.1)", {fv(4 * b + 2 * a + 3 * c + 9)}, d == 3,
       {fv(c), fv(c + 2 * a + 5)}},
      {"PropF4-d3(2.2)", {fv(2 * b - 2 * a - 3), fv(c + 2 * a + 5)}, d == 3,
       {fv(c)}},
      {"PropF4-d3(2.3)", {fv(4 * b + 2 * a + 9), fv(c)}, d == 3, {fv(b)}},
      {"PropF4-d3(2.4)", {fv(2 * a + 9), fv(b), fv(c)}, d == 3},
      {"PropF4-d4plus", {}, d >= 4},
  };
}

Classification from_match(const std::optional<std::string>& m) {
  if (m) return finite_with(*m);
  return infinite();
}

}  // namespace

Classification classify_by_reflections(const Weight& lambda, SuperType type,
                                       const ScalarContext& ctx) {
  require_dominant(lambda, type);
  const ChainResult cr = chain(lambda, type, ctx);
  for (int i = 0; i < static_cast<int>(cr.nodes.size()); ++i) {
    if (!is_dominant(cr.nodes[i].lambda, type)) {
      Classification c;
      c.verdict = Verdict::INFINITE;
      c.witness_node = i;
      c.witness_weight = cr.nodes[i].lambda;
      return c;
    }
  }
  Classification c;
  c.verdict = Verdict::FINITE;
  return c;
}

Classification classify_by_theorem(const Weight& lambda, SuperType type,
                                   const ScalarContext& ctx) {
  require_dominant(lambda, type);
  if (ctx.type != type) throw std::invalid_argument("context type mismatch");
  if (!ctx.finite_char())
    throw std::invalid_argument("characteristic 0: use classify_char0");
  switch (type) {
    case SuperType::D2_1:
      return from_match(match(d21_theorem_clauses(lambda), ctx));
    case SuperType::G3:
      if (ctx.p == 3) return from_match(match(g3_p3_clauses(lambda), ctx));
      return from_match(match(g3_theorem_clauses(lambda), ctx));
    case SuperType::F3_1:
      if (ctx.p == 3) throw UnsupportedCharacteristic("F(3|1) at p=3 is not classified");
      return from_match(match(f31_theorem_clauses(lambda), ctx));
  }
  throw std::logic_error("unknown type");
}

Classification classify_by_props(const Weight& lambda, SuperType type,
                                 const ScalarContext& ctx) {
  require_dominant(lambda, type);
  if (!ctx.finite_char())
    throw std::invalid_argument("prop tables are finite-characteristic only");
  switch (type) {
    case SuperType::G3:
      return from_match(g3_props_match(lambda, ctx));
    case SuperType::F3_1:
      if (ctx.p == 3) throw UnsupportedCharacteristic("F(3|1) at p=3 is not classified");
      return from_match(match(f31_prop_clauses(lambda), ctx));
    case SuperType::D2_1:
      throw std::invalid_argument("no intermediate prop table for D(2|1;zeta)");
  }
  throw std::logic_error("unknown type");
}

Classification classify_char0(const Weight& lambda, SuperType type,
                              const ScalarContext& ctx) {
  require_dominant(lambda, type);
  if (ctx.finite_char())
    throw std::invalid_argument("classify_char0 needs a characteristic-0 context");
  switch (type) {
    case SuperType::D2_1:
      // Theorem clauses with exact (rational or generic) zeta arithmetic.
      return from_match(match(d21_theorem_clauses(lambda), ctx));
    case SuperType::G3: {
      const long long d = lambda.c[0], r = lambda.c[1], s = lambda.c[2];
      if (d == 0 && r == 0 && s == 0) return finite_with("Char0G3(1)");
      if (d == 2 && s == 0) return finite_with("Char0G3(2)");
      if (d >= 3) return finite_with("Char0G3(3)");
      return infinite();
    }
    case SuperType::F3_1: {
      const long long a = lambda.c[0], b = lambda.c[1], c = lambda.c[2],
                      d = lambda.c[3];
      if (a == 0 && b == 0 && c == 0 && d == 0) return finite_with("Char0F4(1)");
      if (d == 2 && a == 0 && c == 0) return finite_with("Char0F4(2)");
      if (d == 3 && c == 2 * a + 1) return finite_with("Char0F4(3)");
      if (d >= 4) return finite_with("Char0F4(4)");
      return infinite();
    }
  }
  throw std::logic_error("unknown type");
}

std::vector<Weight> list_finite(SuperType type, const ScalarContext& ctx,
                                const std::vector<long long>& box) {
  if (static_cast<int>(box.size()) != weight_rank(type))
    throw std::invalid_argument("box arity mismatch");
  for (long long b : box)
    if (b < 0) throw std::invalid_argument("box bounds must be nonnegative");
  std::vector<Weight> out;
  for_each_in_box(box, [&](const Weight& w) {
    if (classify_by_reflections(w, type, ctx).finite()) out.push_back(w);
  });
  return out;
}

}  // namespace exsuper
