#ifndef EXSUPER_ROOT_DATA_HPP
#define EXSUPER_ROOT_DATA_HPP

#include <optional>
#include <vector>

#include "exsuper/types.hpp"

namespace exsuper {

/// Fixed per-type root data over the metric basis. All members are literal
/// constants; the unit tests verify them against each other (rho = rho0 - rho1,
/// isotropy, reflection consistency of the simple systems, ...).
struct RootDatum {
  SuperType type;
  /// Distinguished positive odd roots: beta_1..beta_4 (D2_1), beta_1..beta_3
  /// (G3), gamma_1..gamma_5 (F3_1). Index 0 is beta_1/gamma_1.
  std::vector<MetricVector> odd_roots;
  /// Simple systems Pi^0..Pi^k sharing the even positive part.
  std::vector<std::vector<MetricVector>> simple_systems;
  /// Simple roots of the even positive system.
  std::vector<MetricVector> even_simple_roots;
  std::vector<MetricVector> pos_even_roots;
  std::vector<MetricVector> pos_odd_roots;
  MetricVector rho, rho0, rho1;
  /// Gram matrix of the form on the metric basis.
  std::vector<std::vector<FormValue>> gram;
};

const RootDatum& root_datum(SuperType type);

/// Exact bilinear pairing on the metric basis. Throws on dimension mismatch.
FormValue pairing(const MetricVector& u, const MetricVector& v, SuperType type);

/// (lambda, odd_roots[idx]).
FormValue pair_with_odd_root(const Weight& lambda, int idx, SuperType type);

MetricVector to_metric(const Weight& lambda, SuperType type);

/// Inverse of to_metric; empty if v is not in the image of the weight lattice.
std::optional<Weight> from_metric(const MetricVector& v, SuperType type);

/// Coordinatewise nonnegativity in the fundamental coordinates.
bool is_dominant(const Weight& lambda, SuperType type);

}  // namespace exsuper

#endif
