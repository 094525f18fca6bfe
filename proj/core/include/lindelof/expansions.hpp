#pragma once

#include <optional>
#include <vector>

#include "lindelof/coeff_functions.hpp"
#include "lindelof/expansion.hpp"

namespace lindelof {

// Terms -Res(pi/sin(pi s) phi(s) z^s; s0) as z^{s0} times a polynomial in log z.
// pole.order is the order of phi alone (0 when phi is regular); a sine pole at an
// integer s0 adds one. The Laurent data come from contour quadrature on a circle of
// the given radius (default: half the distance to the nearest other singularity).
std::vector<ExpansionTerm> residue_terms(const CoefficientFunction& f, const PoleSingularity& pole,
                                         const PrecisionContext& ctx = {},
                                         std::optional<double> radius = std::nullopt);

// Expansion at infinity from all poles in -B < Re s < 1/2, error O(z^{-B}).
// Lattice members are kept up to |Im s| <= lattice_height_cap.
Expansion polar_expansion(const CoefficientFunction& f, double B, const PrecisionContext& ctx = {},
                          double lattice_height_cap = 40.0);

// Expansion at infinity driven by algebraic-type singularities, keeping the (k, j)
// pairs with Re(theta k + j) < K.
Expansion algebraic_expansion(const CoefficientFunction& f, double K, const PrecisionContext& ctx = {});

// Upper index of the regular-point sum in the algebraic expansion given the
// dominant singularities.
int regular_sum_upper_index(const std::vector<Complex>& dominant_locations);

}  // namespace lindelof
