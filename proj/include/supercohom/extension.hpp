#pragma once

#include "supercohom/cochain.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace supercohom {

/// L, an abelian G-module M (through the complex) and an even equivariant 2-cochain h.
struct ExtensionDatum {
    std::shared_ptr<const CochainComplex> complex;
    Cochain h;
};

/// E_h on L + M with [(x,m),(y,n)] = ([x,y], [x,n] - (-1)^{my}[y,m] + h(x,y)).
struct Extension {
    StructureTable table;
    /// Position of each basis vector of L and of M in the basis of E_h.
    std::vector<std::size_t> l_positions;
    std::vector<std::size_t> m_positions;
    /// rho_L + rho_M.
    ActionRep action;

    /// Validated algebra (ValidationError when h is not a cocycle).
    LieSuperalgebra algebra() const { return LieSuperalgebra(table); }
};

/// Checks that h is even, equivariant and lives on the complex (ValidationError otherwise).
Extension build_extension(const ExtensionDatum& x);
Extension build_extension(const CochainComplex& cx, const Cochain& h);

struct JacobiCocycle {
    bool jacobi = false;
    bool is_cocycle = false;
};

/// Jacobi on E_h and delta^2 h = 0, computed independently (OracleDisagreement if they differ).
JacobiCocycle jacobi_iff_cocycle(const ExtensionDatum& x);

struct ExtensionStructure {
    bool m_abelian = false;
    bool m_ideal = false;
    bool projection_homomorphism = false;
    bool ok() const { return m_abelian && m_ideal && projection_homomorphism; }
};

/// i(M) is an abelian ideal and pi: E_h -> L preserves brackets.
ExtensionStructure extension_structure(const ExtensionDatum& x, const Extension& e);

/// Equivariant even f with delta^1 f = h1 - h2, or none. NotCocycle unless both are cocycles.
std::optional<Cochain> extensions_equivalent(const CochainComplex& cx, const Cochain& h1,
                                             const Cochain& h2);

/// psi(x, m) = (x, m + f(x)) as a matrix on the basis of the extensions.
Matrix equivalence_map(const Extension& e, const Cochain& f);

/// psi is invertible, G-equivariant and maps the bracket of E_{h1} to that of E_{h2}.
bool verify_equivalence(const Extension& e1, const Extension& e2, const Cochain& f);

/// Cocycles representing a basis of (H^2_G)_0; each extension is checked to be a Lie superalgebra.
std::vector<Cochain> classify_extensions(const CochainComplex& cx);

} // namespace supercohom
