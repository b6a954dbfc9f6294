#ifndef EXSUPER_CLASSIFIER_HPP
#define EXSUPER_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "exsuper/reflection.hpp"

namespace exsuper {

enum class Verdict { FINITE, INFINITE };

struct Classification {
  Verdict verdict;
  /// INFINITE via reflections: first DAG node with a non-dominant weight.
  std::optional<int> witness_node;
  std::optional<Weight> witness_weight;
  /// FINITE via a clause table: identifier of the matched clause.
  std::optional<std::string> matched_clause;

  bool finite() const { return verdict == Verdict::FINITE; }
};

/// Method A: FINITE iff every weight along the reflection DAG stays dominant.
/// Requires dominant input.
Classification classify_by_reflections(const Weight& lambda, SuperType type,
                                       const ScalarContext& ctx);

/// Method B: the closed-form classification theorems, clause by clause.
/// Requires dominant input and finite characteristic.
Classification classify_by_theorem(const Weight& lambda, SuperType type,
                                   const ScalarContext& ctx);

/// Third route, finite characteristic only: the raw pre-theorem condition
/// tables (G3 dominance summary; F3_1 per-d propositions). Requires dominant
/// input.
Classification classify_by_props(const Weight& lambda, SuperType type,
                                 const ScalarContext& ctx);

/// Characteristic-0 classification. For D2_1 the theorem clauses are evaluated
/// with exact rational or generic zeta; G3 and F3_1 use the p=infinity lists.
Classification classify_char0(const Weight& lambda, SuperType type,
                              const ScalarContext& ctx);

/// All dominant weights with coordinates <= box (inclusive, per coordinate)
/// that classify_by_reflections marks FINITE, in lexicographic order.
std::vector<Weight> list_finite(SuperType type, const ScalarContext& ctx,
                                const std::vector<long long>& box);

/// Lexicographic enumeration of the dominant box; calls f on every weight.
template <typename F>
void for_each_in_box(const std::vector<long long>& box, F&& f) {
  Weight w;
  w.c.assign(box.size(), 0);
  while (true) {
    f(w);
    std::size_t i = box.size();
    while (i > 0) {
      --i;
      if (w.c[i] < box[i]) {
        ++w.c[i];
        break;
      }
      w.c[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace exsuper

#endif
