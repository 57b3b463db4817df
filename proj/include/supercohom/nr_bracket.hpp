#pragma once

#include "supercohom/cochain.hpp"
#include "supercohom/group.hpp"
#include "supercohom/superalgebra.hpp"

#include <map>
#include <optional>

namespace supercohom {

/// Element of E_{n,f}: a super-alternating (n+1)-linear map V^{n+1} -> V of parity f.
/// Degree -1 is a vector of V, held as a 0-ary cochain.
class NRElement {
public:
    explicit NRElement(Cochain payload);

    static NRElement zero(BasisPtr basis, FieldSpec field, int degree, int parity);
    static NRElement from_vector(BasisPtr basis, const Vector& v, int parity);

    int degree() const { return static_cast<int>(payload_.arity()) - 1; }
    std::size_t arity() const { return payload_.arity(); }
    int parity() const { return payload_.parity(); }
    const BasisPtr& basis() const { return payload_.space()->source(); }
    FieldSpec field() const { return payload_.field(); }
    const Cochain& cochain() const { return payload_; }
    bool is_zero() const { return payload_.is_zero(); }

    NRElement& operator+=(const NRElement& other);
    NRElement scaled(const Scalar& s) const { return NRElement(payload_.scaled(s)); }
    friend NRElement operator+(NRElement a, const NRElement& b) { return a += b; }
    friend NRElement operator-(NRElement a, const NRElement& b)
    {
        return a += b.scaled(Scalar(b.field(), -1L));
    }
    bool operator==(const NRElement& other) const { return payload_ == other.payload_; }

private:
    Cochain payload_;
};

/// Canonical cochain space of super-alternating maps V^arity -> V.
SpacePtr nr_space(const BasisPtr& basis, std::size_t arity);

/// (F*F')(X) = (-1)^{f'(x_1+...+x_n)} F(X_1, ..., X_n, F'(X_{n+1}, ...)), on all index tuples.
/// The result is in general not super-alternating.
MultilinearMap star(const NRElement& a, const NRElement& b);

/// Sum over (n, n'+1)-shuffles of sigma.(F*F'), evaluated on canonical tuples only.
NRElement circ(const NRElement& a, const NRElement& b);

/// [F, F'] = F o F' - (-1)^{nn' + ff'} F' o F.
NRElement nr_bracket(const NRElement& a, const NRElement& b);

/// Structure constants as an element of E_{1,0}, and back.
NRElement bracket_to_element(const LieSuperalgebra& l);
NRElement table_to_element(const StructureTable& t);
/// Candidate bracket encoded by F0; not validated, so a non-MC element gives a table failing
/// validate_superalgebra.
StructureTable element_to_table(const NRElement& f0);

/// F(g x_1, ..., g x_k) = g F(x_1, ..., x_k) for every group element and canonical tuple.
bool is_equivariant(const NRElement& f, const ActionRep& rep);

struct MCReport {
    bool is_mc = false;
    /// Verdict of the super Jacobi loop on the encoded bracket.
    bool jacobi_ok = false;
    NRElement residual;
};

/// [F0, F0] = 0, cross-checked against the Jacobi loop (OracleDisagreement if they differ).
/// With `rep` given, F0 must be equivariant (PreconditionError).
MCReport mc_check(const NRElement& f0, const ActionRep* rep = nullptr);

/// Sign s with delta f = s [F0, f] on the adjoint complex, per (arity n, parity), found on random
/// cochains of arity 0..max_arity. 0 records that neither sign fits.
using SignTable = std::map<std::pair<std::size_t, int>, int>;
SignTable delta_sign_table(const CochainComplex& adjoint, std::size_t max_arity,
                           unsigned seed = 1);

} // namespace supercohom
