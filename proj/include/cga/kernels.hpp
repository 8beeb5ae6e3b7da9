#pragma once

// Data-parallel kernels. Each kernel has a serial reference loop and an
// OpenMP loop over the same independent work items; outputs are written to
// preallocated slots so both paths return identical results.

#include <vector>

#include "cga/exec.hpp"
#include "cga/liealg.hpp"
#include "cga/realization.hpp"
#include "cga/uea.hpp"

namespace cga::kernels {

/// Exact rank of the commutator table C_ij = sum_k c_ij^k x_k at each point.
std::vector<long> commutator_table_ranks(const LieAlgebra& alg,
                                         const std::vector<std::vector<long>>& points, Exec exec);

/// out[g][i] = [monomials[i], gens[g]]
std::vector<std::vector<UEAElement>> commutator_images(const LieAlgebra& alg,
                                                       const std::vector<Monomial>& monomials,
                                                       const std::vector<int>& gens, Exec exec);

/// out[i] = omega(monomials[i]) - monomials[i]
std::vector<UEAElement> omega_defects(const LieAlgebra& alg, const std::vector<Monomial>& monomials,
                                      Exec exec);

/// out[i] = rho(monomials[i]). Shared prefixes are composed once, level by
/// level, so work within a level is independent.
std::vector<DiffOp> realization_images(const Realization& rho, const std::vector<Monomial>& monomials,
                                       Exec exec);

std::vector<RealizationFailure> realization_bracket_failures(const Realization& rho, Exec exec);

}  // namespace cga::kernels
