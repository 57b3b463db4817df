#pragma once

#include "supercohom/cochain_space.hpp"
#include "supercohom/group.hpp"
#include "supercohom/matrix.hpp"
#include "supercohom/superalgebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace supercohom {

using SpacePtr = std::shared_ptr<const CochainSpace>;

/// Homogeneous super-alternating cochain in canonical coordinates.
class Cochain {
public:
    Cochain(SpacePtr space, int parity, FieldSpec field);
    /// Rejects nonzero coordinates of the other parity.
    Cochain(SpacePtr space, int parity, FieldSpec field, std::vector<Scalar> coords);

    const SpacePtr& space() const { return space_; }
    std::size_t arity() const { return space_->arity(); }
    int parity() const { return parity_; }
    FieldSpec field() const { return field_; }
    const std::vector<Scalar>& coords() const { return coords_; }
    bool is_zero() const;

    /// Value on the canonical tuple at position `tuple_pos`.
    Vector value(std::size_t tuple_pos) const;
    void set_value(std::size_t tuple_pos, const Vector& v);
    /// Value on an arbitrary index tuple, via the super-alternating sign rule.
    Vector at(const IndexTuple& tuple) const;
    /// Multilinear evaluation on arbitrary vectors.
    Vector evaluate(const std::vector<Vector>& args) const;

    MultilinearMap to_map() const;
    /// Restriction of a super-alternating map to canonical tuples.
    static Cochain from_map(SpacePtr space, const MultilinearMap& f);

    Cochain& operator+=(const Cochain& other);
    Cochain& operator-=(const Cochain& other);
    Cochain scaled(const Scalar& s) const;
    Cochain operator-() const { return scaled(Scalar(field_, -1L)); }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

    bool operator==(const Cochain& other) const;

private:
    void check_compatible(const Cochain& other) const;

    SpacePtr space_;
    int parity_;
    FieldSpec field_;
    std::vector<Scalar> coords_;
};

struct CohomologyReport {
    std::size_t n = 0;
    std::size_t cochains[2] = {0, 0};
    std::size_t cocycles[2] = {0, 0};
    std::size_t coboundaries[2] = {0, 0};
    std::size_t cohomology[2] = {0, 0};
    /// Cocycles completing a basis of B to a basis of Z, per parity (only when requested).
    std::optional<std::vector<Cochain>> representatives[2];
};

/// The cochain complex C*(L; M), optionally restricted to G-equivariant cochains.
///
/// Equivariant bases are cached per (n, parity); the cache is guarded so a complex can be shared
/// between threads.
class CochainComplex {
public:
    CochainComplex(LieSuperalgebra l, LModule m);
    /// Validates both actions and the compatibility of the module action.
    CochainComplex(LieSuperalgebra l, LModule m, ActionRep on_l, ActionRep on_m);

    const LieSuperalgebra& algebra() const { return l_; }
    const LModule& module() const { return m_; }
    const ActionRep& action_on_algebra() const { return on_l_; }
    const ActionRep& action_on_module() const { return on_m_; }
    FieldSpec field() const { return l_.field(); }

    SpacePtr space(std::size_t n) const;
    Cochain zero(std::size_t n, int parity) const;

    /// The two-sum coboundary evaluated directly on each canonical tuple.
    Cochain coboundary(const Cochain& f) const;

    /// Matrix of the full coboundary C^n_parity -> C^{n+1}_parity in canonical coordinates.
    Matrix coboundary_matrix(std::size_t n, int parity) const;
    /// Same map restricted to equivariant cochains, in equivariant-basis coordinates on both sides.
    Matrix equivariant_coboundary_matrix(std::size_t n, int parity) const;

    /// Columns span the equivariant parity-block of C^n, in parity-block coordinates.
    const Matrix& equivariant_basis(std::size_t n, int parity) const;
    /// Induced representation on the parity-block coordinates of C^n.
    std::vector<Matrix> induced_block_action(std::size_t n, int parity) const;

    /// Lift block coordinates (parity_coordinates order) to a Cochain, and back.
    Cochain from_block(std::size_t n, int parity, const std::vector<Scalar>& block) const;
    std::vector<Scalar> to_block(const Cochain& f) const;

    CohomologyReport cohomology(std::size_t n, bool with_representatives = false) const;

    /// f(g x_1, ..., g x_n) = g f(x_1, ..., x_n) on every canonical tuple and group element.
    bool is_equivariant(const Cochain& f) const;

    /// Equivariant (n-1)-cochain f of the same parity with delta f = h, if one exists.
    std::optional<Cochain> preimage(const Cochain& h) const;

    /// Cochain from a dense vector of equivariant-basis coefficients.
    Cochain equivariant_combination(std::size_t n, int parity, const std::vector<Scalar>& c) const;

private:
    Matrix assemble(std::size_t n, int parity) const;

    LieSuperalgebra l_;
    LModule m_;
    ActionRep on_l_;
    ActionRep on_m_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::size_t, SpacePtr> spaces_;
    mutable std::map<std::pair<std::size_t, int>, std::shared_ptr<const Matrix>> equivariant_;
};

/// Even annihilator {m in M_0 : [x, m] = 0 for all x} intersected with the fixed points,
/// by a direct solve. Columns are vectors in M coordinates.
Matrix annihilator(const CochainComplex& cx);

struct DerivationSpaces {
    /// Equivariant even derivations L -> M, as columns of C^1 coordinates.
    Matrix derivations;
    /// Independent inner derivations x -> [x, m], m in M_0 fixed by G.
    Matrix inner;
};

/// Derivations from the constraints f([x,y]) = [x,f(y)] - (-1)^{xy}[y,f(x)] and f(gx) = g f(x),
/// assembled without the coboundary machinery.
DerivationSpaces derivations(const CochainComplex& cx);

} // namespace supercohom
