#pragma once

#include "supercohom/cochain_space.hpp"
#include "supercohom/matrix.hpp"
#include "supercohom/superalgebra.hpp"

#include <string>
#include <vector>

namespace supercohom {

/// Finite group given by its Cayley table; table[a][b] is the index of a*b.
class FiniteGroup {
public:
    /// Validates the Latin-square property, the identity and associativity (ValidationError).
    /// `parities` tags elements as even (0) or odd (1); empty means all even.
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
                std::vector<int> parities = {});

    std::size_t order() const { return names_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverses_[a]; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    int parity(std::size_t a) const { return parities_[a]; }
    const std::vector<int>& parities() const { return parities_; }
    std::size_t index(const std::string& name) const;

    bool operator==(const FiniteGroup& other) const
    {
        return names_ == other.names_ && table_ == other.table_ && parities_ == other.parities_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<int> parities_;
    std::vector<std::size_t> inverses_;
    std::size_t identity_ = 0;
};

/// Z_m with elements named "0", ..., "m-1" and addition mod m.
FiniteGroup cyclic_group(std::size_t m);
FiniteGroup klein_group();
FiniteGroup trivial_group();

/// A linear action of a finite group on a graded space: column j of matrix(g) is g . e_j.
class ActionRep {
public:
    ActionRep(FiniteGroup group, BasisPtr space, FieldSpec field, std::vector<Matrix> matrices);

    static ActionRep trivial(FiniteGroup group, BasisPtr space, FieldSpec field);

    const FiniteGroup& group() const { return group_; }
    const BasisPtr& space() const { return space_; }
    FieldSpec field() const { return field_; }
    const Matrix& matrix(std::size_t g) const { return matrices_[g]; }
    const std::vector<Matrix>& matrices() const { return matrices_; }

    Vector apply(std::size_t g, const Vector& v) const;

    bool operator==(const ActionRep& other) const;

private:
    FiniteGroup group_;
    BasisPtr space_;
    FieldSpec field_;
    std::vector<Matrix> matrices_;
};

struct ActionReport {
    bool group_even_ok = true;
    bool identity_ok = true;
    bool homomorphism_ok = true;
    bool degree_ok = true;
    bool bracket_ok = true;
    std::vector<std::string> failures;

    bool ok() const
    {
        return group_even_ok && identity_ok && homomorphism_ok && degree_ok && bracket_ok;
    }
};

/// Action axioms on a graded vector space: e acts trivially, g(hx) = (gh)x, degree 0.
ActionReport validate_action(const ActionRep& rep);
/// The above plus [gx, gy] = g[x, y] on all basis pairs.
ActionReport validate_action(const ActionRep& rep, const LieSuperalgebra& l);
/// Module action axioms on M plus g[x, m] = [gx, gm].
ActionReport validate_module_action(const ActionRep& on_l, const ActionRep& on_m,
                                    const LModule& m);

/// Throws ValidationError for the first failure in a report.
void require_ok(const ActionReport& report);

/// Matrix of f -> g o f o (g^-1 x ... x g^-1) on the coordinates of `space`.
Matrix induced_cochain_matrix(const CochainSpace& space, const Matrix& source_inverse,
                              const Matrix& target);

/// One induced matrix per group element.
std::vector<Matrix> induced_action_on_cochains(const ActionRep& on_l, const ActionRep& on_m,
                                               const CochainSpace& space);

/// Basis (columns) of the common fixed vectors of the given representation. Computed by the
/// Reynolds projector and, independently, as the nullspace of the stacked rho(g) - I; the spans
/// must agree and the dimension must match the character formula, else OracleDisagreement.
Matrix equivariant_subspace(const FiniteGroup& group, const std::vector<Matrix>& rep);

Matrix reynolds_projector(const FiniteGroup& group, const std::vector<Matrix>& rep);

} // namespace supercohom
