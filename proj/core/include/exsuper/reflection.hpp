#ifndef EXSUPER_REFLECTION_HPP
#define EXSUPER_REFLECTION_HPP

#include <utility>
#include <vector>

#include "exsuper/field.hpp"
#include "exsuper/root_data.hpp"

namespace exsuper {

struct DagEdge {
  int src, dst;
  int odd_root;  // index into RootDatum::odd_roots
};

/// Fixed per-type graph of Borel nodes Pi^0..Pi^k with odd-root edge labels.
/// D2_1 is a tree (nodes 2 and 3 hang off node 1); G3 is a chain; F3_1 forks
/// at node 3.
struct ReflectionDag {
  int node_count;
  std::vector<DagEdge> edges;  // in topological order
};

const ReflectionDag& reflection_dag(SuperType type);

enum class Branch { ROOT, REFLECTED, FIXED };

struct NodeResult {
  Weight lambda;
  FormValue edge_pairing;  // pairing tested on the incoming edge (ROOT: 0)
  Branch branch;
};

struct ChainResult {
  std::vector<NodeResult> nodes;
};

/// One step of the odd-reflection rule: lambda stays if (lambda, beta) = 0 in
/// ctx, otherwise moves to lambda - beta.
std::pair<Weight, Branch> odd_reflect(const Weight& lambda, int odd_root_idx,
                                      SuperType type, const ScalarContext& ctx);

/// Transport lambda across the whole DAG. Defined for any integral lambda;
/// dominance is not required.
ChainResult chain(const Weight& lambda, SuperType type, const ScalarContext& ctx);

}  // namespace exsuper

#endif
