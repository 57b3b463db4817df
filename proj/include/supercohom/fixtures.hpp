#pragma once

#include "supercohom/workspace.hpp"

#include <string>
#include <vector>

namespace supercohom {

/// Z_m on the super-Poincare algebra, m in {1, 2, 4}: g^k fixes J and P, multiplies Q by
/// zeta_m^k and Qb by zeta_m^{-k}.
ActionRep super_poincare_action(const LieSuperalgebra& sp, std::size_t m = 4);

/// Z_2 swapping e11 <-> e22 and e12 <-> e21 on gl(1|1).
ActionRep gl11_swap(const LieSuperalgebra& gl11);

/// mu(a, b) = a*b - (-1)^{ab} b*a on gl(m|n), where e_ij * e_kl = e_li when j = k and 0 otherwise.
Cochain matrix_unit_cochain(const CochainComplex& adjoint, std::size_t m, std::size_t n);

/// Shipped workspaces: gl11_z2, gl21, sl11, super_poincare_z4, heisenberg_z2.
std::vector<std::string> fixture_names();
Workspace fixture(const std::string& name);

} // namespace supercohom
