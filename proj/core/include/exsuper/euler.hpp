#ifndef EXSUPER_EULER_HPP
#define EXSUPER_EULER_HPP

#include <map>
#include <optional>
#include <vector>

#include "exsuper/root_data.hpp"

namespace exsuper {

/// Element of the even Weyl group in the reflection representation on the
/// metric basis. sign == determinant == (-1)^length.
struct WeylElement {
  std::vector<std::vector<long long>> mat;
  int sign;
};

/// Full group generated by the reflections in the even simple roots.
/// Sizes: 8 (D2_1), 24 (G3), 96 (F3_1).
const std::vector<WeylElement>& weyl_group(SuperType type);

MetricVector apply(const WeylElement& w, const MetricVector& v);

/// Finitely supported integer-coefficient function on the weight lattice
/// scaled by a fixed per-type factor (2 for D2_1/G3, 4 for F3_1), so that all
/// half and quarter exponents are integral. Keys are scaled metric exponent
/// vectors; the map order doubles as the term order for division.
class Character {
 public:
  using Support = std::map<std::vector<long long>, long long>;

  explicit Character(int scale) : scale_(scale) {}

  int scale() const { return scale_; }
  const Support& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add(const std::vector<long long>& exponent, long long coeff);
  /// e^{mu} with mu given in unscaled metric coordinates (must scale to
  /// integers).
  static std::vector<long long> scaled_exponent(const MetricVector& mu, int scale);

  Character operator*(const Character& o) const;
  /// Multiply by (e^{mu} + e^{-mu}).
  void mul_binomial_sum(const MetricVector& mu);
  /// Exact division by (e^{mu} - e^{-mu}); throws if the division leaves a
  /// remainder.
  void div_binomial_diff(const MetricVector& mu);
  /// Exact long division by an arbitrary nonzero character; throws if the
  /// division leaves a remainder.
  Character div_exact(const Character& divisor) const;

  MetricVector unscale(const std::vector<long long>& exponent) const;

  bool operator==(const Character& o) const = default;

 private:
  int scale_;
  Support terms_;
};

int exponent_scale(SuperType type);

/// Euler characteristic: the odd-root product times the signed Weyl orbit sum
/// of e^{lambda+rho}, divided exactly by the even Weyl denominator.
Character euler_char(const Weight& lambda, SuperType type);

struct TopTerm {
  /// Unique greatest support point under the even dominance order, if any.
  std::optional<MetricVector> point;
  std::optional<Weight> weight;  // point converted back, when it is integral
  long long coeff = 0;
  /// All dominance-maximal support points (== {point} when unique).
  std::vector<MetricVector> maximal_points;
  bool unique() const { return point.has_value(); }
};

/// Highest support point of a nonzero character in the dominance order of the
/// even positive roots. Throws on the empty character.
TopTerm top_term(const Character& c, SuperType type);

}  // namespace exsuper

#endif
