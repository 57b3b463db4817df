#pragma once

#include "supercohom/cochain.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace supercohom {

using ComplexPtr = std::shared_ptr<const CochainComplex>;

/// Adjoint complex C*(L; L) with the same action on source and coefficients.
ComplexPtr adjoint_complex(const LieSuperalgebra& l, const ActionRep& rep);

/// Truncated formal deformation mu_t = mu_0 + mu_1 t + ... + mu_N t^N.
class Deformation {
public:
    /// `terms` is mu_0..mu_N on the adjoint complex. mu_0 must be the bracket; every term must be
    /// an even equivariant 2-cochain (ValidationError otherwise).
    Deformation(ComplexPtr adjoint, std::vector<Cochain> terms);
    /// mu_0 taken from the bracket, followed by the given mu_1..mu_N.
    static Deformation from_higher_terms(ComplexPtr adjoint, std::vector<Cochain> higher);

    const ComplexPtr& complex() const { return cx_; }
    const LieSuperalgebra& base() const { return cx_->algebra(); }
    std::size_t order() const { return terms_.size() - 1; }
    const std::vector<Cochain>& terms() const { return terms_; }
    /// mu_i, or zero for i > N.
    Cochain term(std::size_t i) const;

    bool operator==(const Deformation& other) const { return terms_ == other.terms_; }

private:
    ComplexPtr cx_;
    std::vector<Cochain> terms_;
};

/// Bracket of L as an even 2-cochain of the adjoint complex.
Cochain bracket_cochain(const CochainComplex& adjoint);

struct OrderReport {
    std::size_t r = 0;
    bool ok = false;
    /// sum_{i+j=r} mu_i(a,mu_j(b,c)) - mu_i(mu_j(a,b),c) - (-1)^{ab} mu_i(b,mu_j(a,c)).
    Cochain residual;
};

OrderReport check_order(const Deformation& d, std::size_t r);

enum class DeformationMode { Truncated, Strict };
const char* to_string(DeformationMode mode);

struct DeformationReport {
    DeformationMode mode = DeformationMode::Truncated;
    std::vector<OrderReport> orders;
    bool antisymmetry_ok = true;
    bool equivariance_ok = true;
    bool ok() const;
};

/// Truncated mode checks r = 0..N, strict mode r = 0..2N.
DeformationReport validate(const Deformation& d, DeformationMode mode = DeformationMode::Truncated);

struct Infinitesimal {
    std::size_t k = 0;
    Cochain term;
    /// delta^2 mu_k = 0.
    bool is_cocycle = false;
};

/// Lowest nonzero mu_k with k >= 1 (AllZero if there is none).
Infinitesimal infinitesimal(const Deformation& d);

struct ObstructionReport {
    /// The r = N+1 residual of the order identity with mu_{N+1} = 0.
    Cochain obstruction;
    /// Whether some equivariant mu_{N+1} cancels it. The residual changes by +delta^2 mu_{N+1}
    /// when mu_{N+1} is added, so this is "obstruction in image(delta^2)" and the suggested
    /// next term is minus a preimage.
    bool extendable = false;
    std::optional<Cochain> next_term;
};

/// NotValidated unless d passes truncated validation.
ObstructionReport obstruction(const Deformation& d);

/// Psi_t = psi_0 + psi_1 t + ... with psi_0 = id; each psi_i even and commuting with the action.
class GaugeTransform {
public:
    GaugeTransform(const ActionRep& rep, std::vector<Matrix> maps);
    static GaugeTransform identity(const ActionRep& rep, std::size_t order);

    std::size_t order() const { return maps_.size() - 1; }
    const std::vector<Matrix>& maps() const { return maps_; }
    /// psi_i, or zero for i > N.
    Matrix map(std::size_t i) const;
    /// Series inverse truncated at the same order.
    GaugeTransform inverse(const ActionRep& rep) const;

private:
    std::vector<Matrix> maps_;
};

/// mu~_t = Psi_t o mu_t o (Psi_t^{-1} x Psi_t^{-1}), truncated at the order of d.
Deformation gauge_transform(const Deformation& d, const GaugeTransform& g);

/// Linear map L -> L as an even 1-cochain (column j is the image of e_j).
Cochain linear_map_cochain(const CochainComplex& adjoint, const Matrix& psi);

/// mu_1(d1) - mu_1(d2) is delta^1 of some equivariant 1-cochain.
bool infinitesimals_cohomologous(const Deformation& d1, const Deformation& d2);

} // namespace supercohom
