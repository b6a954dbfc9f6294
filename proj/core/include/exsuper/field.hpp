#ifndef EXSUPER_FIELD_HPP
#define EXSUPER_FIELD_HPP

#include <stdexcept>
#include <utility>
#include <variant>

#include "exsuper/types.hpp"

namespace exsuper {

/// Characteristic/zeta combination the type does not support
/// (e.g. F(3|1) at p=3).
struct UnsupportedCharacteristic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ZetaMode { None, Fp, Rational, Generic };

/// Where form values get evaluated: F_p with a concrete zeta, characteristic
/// zero with rational zeta, or characteristic zero with generic zeta.
/// Characteristic 0 is encoded as p == 0.
class ScalarContext {
 public:
  SuperType type;
  long long p = 0;  // 0 = characteristic zero, otherwise an odd prime
  ZetaMode zeta_mode = ZetaMode::None;
  long long zeta_fp = 0;  // Fp mode, canonical representative in [1, p-2]
  Rat zeta_q = 0;         // Rational mode

  /// Finite characteristic for G3 (p >= 3) or F3_1 (p > 3).
  static ScalarContext finite(SuperType type, long long p);
  /// Finite characteristic for D2_1 (p > 2), zeta in F_p \ {0, -1}.
  static ScalarContext finite_d(long long p, long long zeta);
  static ScalarContext char_zero(SuperType type);  // G3 or F3_1
  static ScalarContext char_zero_d(Rat zeta);      // D2_1, rational zeta
  static ScalarContext char_zero_d_generic();      // D2_1, generic zeta

  bool finite_char() const { return p != 0; }
};

/// Canonical image of a FormValue in the context: an element of F_p, an exact
/// rational, or the (q0, q1) pair in generic-zeta mode.
struct Residue {
  std::variant<long long, Rat, std::pair<Rat, Rat>> v;

  bool is_zero() const;
};

/// Reduce x. In finite characteristic the value carried is 4*x mod p (the
/// denominator-clearing scale; p is coprime to 4 so zeroness is unaffected).
Residue reduce(const FormValue& x, const ScalarContext& ctx);

bool is_zero(const FormValue& x, const ScalarContext& ctx);

bool is_prime(long long n);

}  // namespace exsuper

#endif
