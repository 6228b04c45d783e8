#pragma once

// Collocation matrices (u_j(t_i)) of a basis at increasing nodes, plus the
// node generators and stochasticity checks used by the experiments.

#include <vector>

#include "tpbasis/bases.hpp"
#include "tpbasis/matrix.hpp"

namespace tpb {

// (n+1)/(n+2), ..., interior nodes i/(n+2) for i = 1..n+1
std::vector<Rational> uniform_interior_nodes(int n);

// entry (i,j) = u_j(t_i); nodes must be strictly increasing and inside the domain
RatMatrix collocation_matrix(const BasisSystem& basis, const std::vector<Rational>& nodes);
DecMatrix collocation_matrix(const BasisSystem& basis, const std::vector<Decimal>& nodes,
                             const PrecisionConfig& cfg);

// nodes for any variant: domain endpoint mix lo + f*(hi-lo) at exact rational
// fractions f, evaluated at working precision (trig domains involve pi)
std::vector<Decimal> decimal_nodes(const BasisSystem& basis, const std::vector<Rational>& fractions,
                                   const PrecisionConfig& cfg);

// nonnegative entries and unit row sums; exact on rationals, within the
// comparison tolerance on decimals
bool is_stochastic(const RatMatrix& m);
bool is_stochastic(const DecMatrix& m, const PrecisionConfig& cfg);

}  // namespace tpb
