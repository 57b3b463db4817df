#pragma once

#include "supercohom/cochain.hpp"

#include <memory>
#include <random>
#include <string>

namespace testing_support {

using namespace supercohom;

/// An algebra with a finite group acting on it by automorphisms.
struct GAlgebra {
    std::string name;
    std::shared_ptr<LieSuperalgebra> algebra;
    std::shared_ptr<ActionRep> action;
};

struct Instance {
    std::string name;
    std::shared_ptr<CochainComplex> complex;
};

LieSuperalgebra make_osp12();
LieSuperalgebra make_sl2();
/// V plus its super exterior square, with [v_i, v_j] = w_ij.
LieSuperalgebra make_free_nilpotent(std::size_t v0, std::size_t v1);

/// Extends g in GL(V) to the free 2-step nilpotent algebra on V.
Matrix extend_to_free_nilpotent(const LieSuperalgebra& l, std::size_t v_dim, const Matrix& g);

/// Action of the paper's Z2 on gl(1|1): e11 <-> e22, e12 <-> e21.
ActionRep gl11_swap_action(const LieSuperalgebra& gl11);
/// x -> (-1)^{|x|} x, as a Z2 action.
ActionRep parity_action(const BasisPtr& basis, FieldSpec field);

/// Random parity-preserving change of basis applied to the structure constants and action.
GAlgebra change_basis(std::mt19937& rng, const GAlgebra& a);

/// A random valid G-superalgebra with parity dimensions at most (3|2); the group is trivial
/// when `with_group` is false, otherwise of order 2, 3 or 4 where the algebra admits one.
GAlgebra random_galgebra(std::mt19937& rng, bool with_group);

/// Complex for the adjoint module or a small trivial module carrying a sign character.
Instance random_instance(std::mt19937& rng, bool with_group);
Instance adjoint_instance(const GAlgebra& a);

/// Random element of a parity block of C^n, as a cochain.
Cochain random_cochain(std::mt19937& rng, const CochainComplex& cx, std::size_t n, int parity,
                       bool equivariant);

Scalar random_scalar(std::mt19937& rng, FieldSpec field, long bound = 3);

} // namespace testing_support

namespace testing_support {

/// The paper's mu_1(a, b) = a*b - (-1)^{ab} b*a on gl(1|1), where e_ij * e_kl = e_li if j = k.
Cochain paper_mu1(const CochainComplex& adjoint_gl11);

/// Random element of the even equivariant cocycles Z^n_G, or of the coboundaries when
/// `exact` is set.
Cochain random_cocycle(std::mt19937& rng, const CochainComplex& cx, std::size_t n, int parity,
                       bool exact = false);

} // namespace testing_support
