#ifndef EXSUPER_VERIFY_HPP
#define EXSUPER_VERIFY_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "exsuper/classifier.hpp"

namespace exsuper {

struct Mismatch {
  Weight lambda;
  Verdict verdict_a;
  Verdict verdict_b;
  std::optional<int> witness_node;
  std::optional<std::string> clause;
};

struct VerifyReport {
  SuperType type;
  ScalarContext ctx;
  std::vector<long long> box;
  long long total_weights = 0;
  long long finite_count = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0;

  bool passed() const { return mismatches.empty(); }
};

/// Cross-validate classify_by_reflections against classify_by_theorem (and the
/// intermediate prop tables for G3/F3_1) over every dominant weight in the
/// box. In characteristic 0 the comparison is against classify_char0.
VerifyReport verify_box(SuperType type, const ScalarContext& ctx,
                        const std::vector<long long>& box);

/// One verify_box report per admissible zeta in F_p, plus the zeta <-> 1/zeta
/// (a <-> b) symmetry check across paired reports; violations are appended to
/// the report of the smaller zeta with clause "zeta-symmetry".
std::vector<VerifyReport> zeta_sweep(long long p, const std::vector<long long>& box);

/// Compare classify_char0 against the characteristic-0 lists transcribed as
/// literal predicates. D2_1 runs in generic-zeta mode.
VerifyReport char0_check(SuperType type, const std::vector<long long>& box);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace exsuper

#endif
