#pragma once

#include "supercohom/graded.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supercohom {

/// Bilinear table left x right -> target on basis vectors, stored densely (row = left index).
struct StructureTable {
    FieldSpec field;
    BasisPtr left;
    BasisPtr right;
    BasisPtr target;
    std::vector<Vector> entries;

    StructureTable() = default;
    StructureTable(FieldSpec f, BasisPtr l, BasisPtr r, BasisPtr t);

    const Vector& operator()(std::size_t i, std::size_t j) const
    {
        return entries[i * right->dim() + j];
    }
    Vector& operator()(std::size_t i, std::size_t j) { return entries[i * right->dim() + j]; }

    Vector apply(const Vector& x, const Vector& y) const;
};

struct Counterexample {
    std::string axiom;
    IndexTuple indices;
    Vector lhs;
    Vector rhs;
};

struct AxiomReport {
    bool homogeneity_ok = true;
    bool antisymmetry_ok = true;
    bool jacobi_ok = true;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return homogeneity_ok && antisymmetry_ok && jacobi_ok; }
};

/// Cap on recorded counterexamples per axiom; the verdict flags are exact regardless.
inline constexpr std::size_t kMaxCounterexamples = 8;

AxiomReport validate_superalgebra(const StructureTable& bracket);

std::string describe(const Counterexample& c, const GradedBasis& left, const GradedBasis& target);

/// Lie superalgebra given by structure constants; the axioms are checked at construction.
class LieSuperalgebra {
public:
    explicit LieSuperalgebra(StructureTable bracket);

    static LieSuperalgebra from_map(const MultilinearMap& bracket);

    const BasisPtr& basis() const { return table_.left; }
    FieldSpec field() const { return table_.field; }
    std::size_t dim() const { return table_.left->dim(); }
    const StructureTable& table() const { return table_; }

    const Vector& bracket(std::size_t i, std::size_t j) const { return table_(i, j); }
    Vector bracket(const Vector& x, const Vector& y) const { return table_.apply(x, y); }

    /// The bracket as an arity-2, parity-0 map on the full tuple table.
    MultilinearMap to_map() const;

    bool operator==(const LieSuperalgebra& other) const;

private:
    StructureTable table_;
};

Vector bracket_eval(const LieSuperalgebra& l, const Vector& x, const Vector& y);

/// Dense table of an arity-2 map with source = target.
StructureTable table_from_map(const MultilinearMap& bracket);

/// Report for the module axiom [a,[b,m]] = [[a,b],m] + (-1)^{ab}[b,[a,m]] and homogeneity.
AxiomReport validate_module(const LieSuperalgebra& l, const StructureTable& action);

/// A graded module over a Lie superalgebra; the action is validated at construction.
class LModule {
public:
    LModule(const LieSuperalgebra& algebra, StructureTable action);

    static LModule adjoint(const LieSuperalgebra& algebra);
    /// The zero action of `algebra` on `space`.
    static LModule trivial(const LieSuperalgebra& algebra, BasisPtr space);

    const BasisPtr& space() const { return action_.target; }
    const BasisPtr& algebra_basis() const { return action_.left; }
    FieldSpec field() const { return action_.field; }
    std::size_t dim() const { return action_.target->dim(); }
    const StructureTable& table() const { return action_; }

    const Vector& act(std::size_t x, std::size_t m) const { return action_(x, m); }
    Vector act(const Vector& x, const Vector& m) const { return action_.apply(x, m); }

    bool operator==(const LModule& other) const;

private:
    StructureTable action_;
};

/// Restriction of the adjoint module to the span of the named basis vectors, which must be
/// stable under the bracket with all of L.
LModule adjoint_submodule(const LieSuperalgebra& l, const std::vector<std::string>& labels);

/// Subalgebra spanned by the given vectors (names/parities describe the new basis, evens first).
/// Throws ValidationError("subalgebra closure", ...) when the span is not closed.
LieSuperalgebra subalgebra(const LieSuperalgebra& l, std::vector<std::string> names,
                           std::vector<int> parities, const std::vector<Vector>& spanning);

/// Abelian superalgebra on the given basis.
LieSuperalgebra make_abelian(BasisPtr basis, FieldSpec field = FieldSpec::rational());

/// L1 + L2 with basis evens(L1), evens(L2), odds(L1), odds(L2); labels of L2 get `suffix`
/// appended when they collide with L1.
LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b,
                           const std::string& suffix = "'");

/// Basis of a direct sum; labels of b that clash get `suffix` appended.
BasisPtr direct_sum_basis(const GradedBasis& a, const GradedBasis& b,
                          const std::string& suffix = "'");

/// Index maps of direct_sum: position of each basis vector of a and b in the sum.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
direct_sum_positions(const GradedBasis& a, const GradedBasis& b);

/// gl(m|n) on basis e_ij; evens (both indices in one block) first, then odds, row-major.
LieSuperalgebra make_gl(std::size_t m, std::size_t n, FieldSpec field = FieldSpec::rational());

/// Matrix position (i, j), 0-based, of each make_gl basis vector.
std::vector<std::pair<std::size_t, std::size_t>> gl_positions(std::size_t m, std::size_t n);

std::string gl_label(std::size_t m, std::size_t n, std::size_t i, std::size_t j);

/// tr(alpha) - tr(delta) for `a` in make_gl(m, n) coordinates.
Scalar supertrace(std::size_t m, std::size_t n, const Vector& a);

/// sl(m|n): off-diagonal e_ij plus diagonal generators h_k = e_kk -+ e_{k+1,k+1} of zero supertrace.
LieSuperalgebra make_sl(std::size_t m, std::size_t n, FieldSpec field = FieldSpec::rational());

/// Coordinates of sl(m|n) basis vectors inside gl(m|n), matching make_sl's basis order.
std::vector<Vector> sl_in_gl(std::size_t m, std::size_t n, FieldSpec field);

/// Metric signature of the Minkowski form used by make_super_poincare.
struct Metric {
    int diag[4] = {1, -1, -1, -1};
};

/// N=1 super-Poincare algebra over Q(zeta_4): J01..J23, P0..P3 even; Q1, Q2, Qb1, Qb2 odd.
LieSuperalgebra make_super_poincare(Metric eta = {});

} // namespace supercohom
