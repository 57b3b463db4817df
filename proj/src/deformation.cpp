#include "supercohom/deformation.hpp"

#include "supercohom/error.hpp"
#include "supercohom/parallel.hpp"

namespace supercohom {

namespace {

Vector apply(const Matrix& m, const Vector& v)
{
    Vector out(m.field());
    for (const auto& [j, c] : v.terms())
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero())
                out.add(i, m(i, j) * c);
    return out;
}

Vector column_vector(const Matrix& m, std::size_t j)
{
    Vector out(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.add(i, m(i, j));
    return out;
}

} // namespace

ComplexPtr adjoint_complex(const LieSuperalgebra& l, const ActionRep& rep)
{
    return std::make_shared<const CochainComplex>(l, LModule::adjoint(l), rep, rep);
}

Cochain bracket_cochain(const CochainComplex& adjoint)
{
    const auto sp = adjoint.space(2);
    Cochain c(sp, 0, adjoint.field());
    for (std::size_t t = 0; t < sp->tuples().size(); ++t)
        c.set_value(t, adjoint.algebra().bracket(sp->tuples()[t][0], sp->tuples()[t][1]));
    return c;
}

Deformation::Deformation(ComplexPtr adjoint, std::vector<Cochain> terms)
    : cx_(std::move(adjoint)), terms_(std::move(terms))
{
    if (terms_.empty())
        throw ValidationError("deformation order", "no terms given");
    if (!(*cx_->module().space() == *cx_->algebra().basis()) ||
        !(cx_->module() == LModule::adjoint(cx_->algebra())))
        throw PreconditionError("deformations live on the adjoint complex");
    const auto sp = cx_->space(2);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (!(*t.space() == *sp))
            throw DimensionError("mu_" + std::to_string(i) + " is not a 2-cochain on L with values in L");
        if (t.parity() != 0 && !t.is_zero())
            throw ValidationError("degree", "mu_" + std::to_string(i) + " is odd");
        if (!cx_->is_equivariant(t))
            throw ValidationError("equivariance", "mu_" + std::to_string(i));
    }
    if (!(terms_[0] == bracket_cochain(*cx_)))
        throw ValidationError("base bracket", "mu_0 differs from the bracket of L");
}

Deformation Deformation::from_higher_terms(ComplexPtr adjoint, std::vector<Cochain> higher)
{
    std::vector<Cochain> terms{bracket_cochain(*adjoint)};
    for (auto& h : higher)
        terms.push_back(std::move(h));
    return Deformation(std::move(adjoint), std::move(terms));
}

Cochain Deformation::term(std::size_t i) const
{
    if (i < terms_.size())
        return terms_[i];
    return cx_->zero(2, 0);
}

OrderReport check_order(const Deformation& d, std::size_t r)
{
    const auto& cx = *d.complex();
    const auto& basis = *d.base().basis();
    const FieldSpec fs = cx.field();
    const auto sp = cx.space(3);
    const auto& tuples = sp->tuples();

    std::vector<std::pair<const Cochain*, const Cochain*>> pairs;
    for (std::size_t i = 0; i <= r; ++i) {
        if (i > d.order() || r - i > d.order())
            continue;
        pairs.emplace_back(&d.terms()[i], &d.terms()[r - i]);
    }

    std::vector<Vector> values(tuples.size(), Vector(fs));
    parallel_for(tuples.size(), [&](std::size_t t) {
        const std::size_t a = tuples[t][0], b = tuples[t][1], c = tuples[t][2];
        const Vector ea = Vector::unit(fs, a), eb = Vector::unit(fs, b), ec = Vector::unit(fs, c);
        const bool odd_ab = basis.parity(a) && basis.parity(b);
        Vector acc(fs);
        for (const auto& [mi, mj] : pairs) {
            acc += mi->evaluate({ea, mj->at({b, c})});
            acc -= mi->evaluate({mj->at({a, b}), ec});
            const Vector last = mi->evaluate({eb, mj->at({a, c})});
            if (odd_ab)
                acc += last;
            else
                acc -= last;
        }
        values[t] = std::move(acc);
    });
    Cochain residual(sp, 0, fs);
    for (std::size_t t = 0; t < tuples.size(); ++t)
        residual.set_value(t, values[t]);
    const bool ok = residual.is_zero();
    return {r, ok, std::move(residual)};
}

const char* to_string(DeformationMode mode)
{
    return mode == DeformationMode::Strict ? "strict" : "truncated";
}

bool DeformationReport::ok() const
{
    if (!antisymmetry_ok || !equivariance_ok)
        return false;
    for (const auto& o : orders)
        if (!o.ok)
            return false;
    return true;
}

DeformationReport validate(const Deformation& d, DeformationMode mode)
{
    const std::size_t top = mode == DeformationMode::Strict ? 2 * d.order() : d.order();
    std::vector<std::optional<OrderReport>> reports(top + 1);
    parallel_for(top + 1, [&](std::size_t r) { reports[r] = check_order(d, r); });

    DeformationReport rep;
    rep.mode = mode;
    for (auto& r : reports)
        rep.orders.push_back(std::move(*r));
    for (const auto& t : d.terms()) {
        if (!is_super_alternating(t.to_map()))
            rep.antisymmetry_ok = false;
        if (!d.complex()->is_equivariant(t))
            rep.equivariance_ok = false;
    }
    return rep;
}

Infinitesimal infinitesimal(const Deformation& d)
{
    for (std::size_t k = 1; k <= d.order(); ++k) {
        const Cochain& mu = d.terms()[k];
        if (mu.is_zero())
            continue;
        const bool cocycle = d.complex()->coboundary(mu).is_zero();
        return {k, mu, cocycle};
    }
    throw AllZero("deformation has no nonzero term beyond the bracket");
}

ObstructionReport obstruction(const Deformation& d)
{
    const auto report = validate(d, DeformationMode::Truncated);
    if (!report.ok()) {
        std::size_t bad = 0;
        while (bad < report.orders.size() && report.orders[bad].ok)
            ++bad;
        throw NotValidated(bad < report.orders.size()
                               ? "deformation fails the order identity at r = " + std::to_string(bad)
                               : std::string("deformation terms fail validation"));
    }
    Cochain ob = check_order(d, d.order() + 1).residual;
    const auto pre = d.complex()->preimage(ob);
    ObstructionReport out{std::move(ob), pre.has_value(), std::nullopt};
    if (pre)
        out.next_term = -*pre;
    return out;
}

GaugeTransform::GaugeTransform(const ActionRep& rep, std::vector<Matrix> maps)
    : maps_(std::move(maps))
{
    const auto& basis = *rep.space();
    const FieldSpec fs = rep.field();
    const std::size_t d = basis.dim();
    if (maps_.empty() || !(maps_[0] == Matrix::identity(fs, d)))
        throw ValidationError("gauge normalization", "psi_0 must be the identity");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
        const Matrix& m = maps_[k];
        if (m.rows() != d || m.cols() != d)
            throw DimensionError("psi_" + std::to_string(k) + " has the wrong shape");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (basis.parity(i) != basis.parity(j) && !m(i, j).is_zero())
                    throw ValidationError("degree", "psi_" + std::to_string(k) + " is not even");
        for (const auto& g : rep.matrices())
            if (!(g * m == m * g))
                throw ValidationError("equivariance", "psi_" + std::to_string(k));
    }
}

GaugeTransform GaugeTransform::identity(const ActionRep& rep, std::size_t order)
{
    const std::size_t d = rep.space()->dim();
    std::vector<Matrix> maps{Matrix::identity(rep.field(), d)};
    for (std::size_t k = 1; k <= order; ++k)
        maps.emplace_back(rep.field(), d, d);
    return GaugeTransform(rep, std::move(maps));
}

Matrix GaugeTransform::map(std::size_t i) const
{
    if (i < maps_.size())
        return maps_[i];
    return Matrix(maps_[0].field(), maps_[0].rows(), maps_[0].cols());
}

GaugeTransform GaugeTransform::inverse(const ActionRep& rep) const
{
    std::vector<Matrix> phi{maps_[0]};
    for (std::size_t k = 1; k < maps_.size(); ++k) {
        Matrix acc(maps_[0].field(), maps_[0].rows(), maps_[0].cols());
        for (std::size_t i = 1; i <= k; ++i)
            acc = acc - maps_[i] * phi[k - i];
        phi.push_back(std::move(acc));
    }
    return GaugeTransform(rep, std::move(phi));
}

Deformation gauge_transform(const Deformation& d, const GaugeTransform& g)
{
    const auto& cx = *d.complex();
    const auto& rep = cx.action_on_algebra();
    const std::size_t n = d.order();
    const FieldSpec fs = cx.field();
    const auto sp = cx.space(2);
    const auto& tuples = sp->tuples();
    const GaugeTransform inv = g.inverse(rep);

    std::vector<Matrix> psi, phi;
    for (std::size_t k = 0; k <= n; ++k) {
        psi.push_back(g.map(k));
        phi.push_back(inv.map(k));
    }

    std::vector<Cochain> terms;
    for (std::size_t r = 0; r <= n; ++r) {
        std::vector<Vector> values(tuples.size(), Vector(fs));
        parallel_for(tuples.size(), [&](std::size_t t) {
            const std::size_t a = tuples[t][0], b = tuples[t][1];
            Vector acc(fs);
            // sum over i + j + k + l = r of psi_i mu_j(phi_k a, phi_l b)
            for (std::size_t i = 0; i <= r; ++i)
                for (std::size_t j = 0; i + j <= r; ++j)
                    for (std::size_t k = 0; i + j + k <= r; ++k) {
                        const std::size_t l = r - i - j - k;
                        const Vector x = column_vector(phi[k], a);
                        const Vector y = column_vector(phi[l], b);
                        if (x.is_zero() || y.is_zero())
                            continue;
                        acc += apply(psi[i], d.terms()[j].evaluate({x, y}));
                    }
            values[t] = std::move(acc);
        });
        Cochain mu(sp, 0, fs);
        for (std::size_t t = 0; t < tuples.size(); ++t)
            mu.set_value(t, values[t]);
        terms.push_back(std::move(mu));
    }
    return Deformation(d.complex(), std::move(terms));
}

Cochain linear_map_cochain(const CochainComplex& adjoint, const Matrix& psi)
{
    const auto sp = adjoint.space(1);
    Cochain c(sp, 0, adjoint.field());
    for (std::size_t t = 0; t < sp->tuples().size(); ++t)
        c.set_value(t, column_vector(psi, sp->tuples()[t][0]));
    return c;
}

bool infinitesimals_cohomologous(const Deformation& d1, const Deformation& d2)
{
    if (!(*d1.complex()->space(2) == *d2.complex()->space(2)))
        throw DimensionError("deformations of different algebras");
    return d1.complex()->preimage(d1.term(1) - d2.term(1)).has_value();
}

} // namespace supercohom
