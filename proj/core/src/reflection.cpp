#include "exsuper/reflection.hpp"

namespace exsuper {

const ReflectionDag& reflection_dag(SuperType type) {
  static const ReflectionDag d21{4, {{0, 1, 0}, {1, 2, 1}, {1, 3, 2}}};
  static const ReflectionDag g3{4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}}};
  static const ReflectionDag f31{6, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {3, 5, 4}}};
  switch (type) {
    case SuperType::D2_1: return d21;
    case SuperType::G3: return g3;
    case SuperType::F3_1: return f31;
  }
  throw std::logic_error("unknown type");
}

namespace {

// lambda - beta in fundamental coordinates. Integral for every odd root of
// every type (the unit tests pin this down).
Weight subtract_odd_root(const Weight& lambda, int idx, SuperType type) {
  const auto& beta = root_datum(type).odd_roots[idx];
  auto w = from_metric(to_metric(lambda, type) - beta, type);
  if (!w) throw std::logic_error("odd reflection left the weight lattice");
  return *w;
}

}  // namespace

std::pair<Weight, Branch> odd_reflect(const Weight& lambda, int odd_root_idx,
                                      SuperType type, const ScalarContext& ctx) {
  const FormValue val = pair_with_odd_root(lambda, odd_root_idx, type);
  if (is_zero(val, ctx)) return {lambda, Branch::FIXED};
  return {subtract_odd_root(lambda, odd_root_idx, type), Branch::REFLECTED};
}

ChainResult chain(const Weight& lambda, SuperType type, const ScalarContext& ctx) {
  if (ctx.type != type) throw std::invalid_argument("context type mismatch");
  const auto& dag = reflection_dag(type);
  ChainResult res;
  res.nodes.resize(dag.node_count);
  res.nodes[0] = {lambda, FormValue(0), Branch::ROOT};
  for (const auto& e : dag.edges) {
    const Weight& src = res.nodes[e.src].lambda;
    const FormValue val = pair_with_odd_root(src, e.odd_root, type);
    if (is_zero(val, ctx))
      res.nodes[e.dst] = {src, val, Branch::FIXED};
    else
      res.nodes[e.dst] = {subtract_odd_root(src, e.odd_root, type), val, Branch::REFLECTED};
  }
  return res;
}

}  // namespace exsuper
