#pragma once

#include <variant>

#include "ellip/divisors.hpp"
#include "ellip/ellfun.hpp"
#include "ellip/numerics.hpp"

namespace ellip {

/// w = u + rζ + sz with ∂w = h, i.e. ∂u - rX + s = h.
struct PrimitiveResult {
  EllFun u;
  Scalar r;
  Scalar s;
};

/// h has simple-pole terms that no u + rζ + sz can absorb. With
/// h = a(X) + b(X)Y, the reduction leaves even_rem (a rational function of
/// X with squarefree denominator prime to the cubic) and odd_rem (the
/// same for b, any squarefree denominator). The points carrying the
/// residues are found numerically by residual_points.
struct ResidueObstruction {
  RatFun even_rem;
  RatFun odd_rem;
  /// Exact residue of h dz at z = 0.
  Scalar origin_residue;
};

using IntegrationResult = std::variant<PrimitiveResult, ResidueObstruction>;

IntegrationResult elliptic_primitive(const EllFun& h);

/// Derivative of u + rζ + sz as an element of K.
EllFun primitive_derivative(const PrimitiveResult& w);

/// Divisor of residues Res_ξ h dz over poles at torsion points of order
/// <= 12. Throws UnresolvedPoles when some pole is not such a point or a
/// residue is not recognised as a rational number.
PeriodicDivisor residual_points(const EllFun& h, const NumericLattice& L);

/// The divisor of Laurent coefficients a_{-ell} of h at its poles, same
/// resolution rules as residual_points.
PeriodicDivisor polar_divisor(const EllFun& h, int ell, const NumericLattice& L);

}  // namespace ellip
