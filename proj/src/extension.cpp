#include "supercohom/extension.hpp"

#include "supercohom/error.hpp"

namespace supercohom {

namespace {

Vector embed(const Vector& v, const std::vector<std::size_t>& pos)
{
    Vector out(v.field());
    for (const auto& [k, c] : v.terms())
        out.add(pos[k], c);
    return out;
}

Vector apply(const Matrix& m, const Vector& v)
{
    Vector out(m.field());
    for (const auto& [j, c] : v.terms())
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero())
                out.add(i, m(i, j) * c);
    return out;
}

void require_datum(const CochainComplex& cx, const Cochain& h)
{
    if (!(*h.space() == *cx.space(2)))
        throw DimensionError("h is not a 2-cochain of the complex");
    if (h.parity() != 0 && !h.is_zero())
        throw ValidationError("degree", "h must be even");
    if (!cx.is_equivariant(h))
        throw ValidationError("equivariance", "h");
}

} // namespace

Extension build_extension(const ExtensionDatum& x) { return build_extension(*x.complex, x.h); }

Extension build_extension(const CochainComplex& cx, const Cochain& h)
{
    require_datum(cx, h);
    const auto& l = cx.algebra();
    const auto& m = cx.module();
    const auto& bl = *l.basis();
    const auto& bm = *m.space();
    const FieldSpec fs = cx.field();
    const auto [pl, pm] = direct_sum_positions(bl, bm);
    const auto basis = direct_sum_basis(bl, bm);

    StructureTable t(fs, basis, basis, basis);
    for (std::size_t i = 0; i < bl.dim(); ++i)
        for (std::size_t j = 0; j < bl.dim(); ++j)
            t(pl[i], pl[j]) = embed(l.bracket(i, j), pl) + embed(h.at({i, j}), pm);
    for (std::size_t i = 0; i < bl.dim(); ++i)
        for (std::size_t k = 0; k < bm.dim(); ++k) {
            const Vector v = embed(m.act(i, k), pm);
            t(pl[i], pm[k]) = v;
            // [m, y] = -(-1)^{my} [y, m]
            const bool both_odd = bl.parity(i) && bm.parity(k);
            t(pm[k], pl[i]) = both_odd ? v : -v;
        }

    const auto& on_l = cx.action_on_algebra();
    const auto& on_m = cx.action_on_module();
    std::vector<Matrix> mats;
    for (std::size_t g = 0; g < on_l.group().order(); ++g) {
        Matrix r(fs, basis->dim(), basis->dim());
        for (std::size_t i = 0; i < bl.dim(); ++i)
            for (std::size_t j = 0; j < bl.dim(); ++j)
                r(pl[i], pl[j]) = on_l.matrix(g)(i, j);
        for (std::size_t i = 0; i < bm.dim(); ++i)
            for (std::size_t j = 0; j < bm.dim(); ++j)
                r(pm[i], pm[j]) = on_m.matrix(g)(i, j);
        mats.push_back(std::move(r));
    }
    ActionRep action(on_l.group(), basis, fs, std::move(mats));
    return {std::move(t), pl, pm, std::move(action)};
}

JacobiCocycle jacobi_iff_cocycle(const ExtensionDatum& x)
{
    const Extension e = build_extension(x);
    const bool jacobi = validate_superalgebra(e.table).jacobi_ok;
    const bool cocycle = x.complex->coboundary(x.h).is_zero();
    if (jacobi != cocycle)
        throw OracleDisagreement(std::string("extension Jacobi ") + (jacobi ? "holds" : "fails") +
                                 " but delta^2 h " + (cocycle ? "vanishes" : "does not vanish"));
    return {jacobi, cocycle};
}

ExtensionStructure extension_structure(const ExtensionDatum& x, const Extension& e)
{
    const auto& l = x.complex->algebra();
    const std::size_t d = e.table.left->dim();
    std::vector<bool> in_m(d, false);
    for (auto p : e.m_positions)
        in_m[p] = true;
    // pi sends position pl[i] to i and kills M.
    std::vector<long> to_l(d, -1);
    for (std::size_t i = 0; i < e.l_positions.size(); ++i)
        to_l[e.l_positions[i]] = static_cast<long>(i);
    auto project = [&](const Vector& v) {
        Vector out(v.field());
        for (const auto& [k, c] : v.terms())
            if (to_l[k] >= 0)
                out.add(static_cast<std::size_t>(to_l[k]), c);
        return out;
    };

    ExtensionStructure s{true, true, true};
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            const Vector& b = e.table(u, v);
            if (in_m[u] && in_m[v] && !b.is_zero())
                s.m_abelian = false;
            if (in_m[u] || in_m[v])
                for (const auto& [k, c] : b.terms())
                    if (!in_m[k])
                        s.m_ideal = false;
            const Vector lhs = project(b);
            Vector rhs(b.field());
            if (to_l[u] >= 0 && to_l[v] >= 0)
                rhs = l.bracket(static_cast<std::size_t>(to_l[u]), static_cast<std::size_t>(to_l[v]));
            if (!(lhs == rhs))
                s.projection_homomorphism = false;
        }
    return s;
}

std::optional<Cochain> extensions_equivalent(const CochainComplex& cx, const Cochain& h1,
                                             const Cochain& h2)
{
    if (!cx.coboundary(h1).is_zero())
        throw NotCocycle("h1 is not a cocycle");
    if (!cx.coboundary(h2).is_zero())
        throw NotCocycle("h2 is not a cocycle");
    return cx.preimage(h1 - h2);
}

Matrix equivalence_map(const Extension& e, const Cochain& f)
{
    const std::size_t d = e.table.left->dim();
    Matrix psi = Matrix::identity(e.table.field, d);
    for (std::size_t i = 0; i < e.l_positions.size(); ++i) {
        const Vector image = f.at({i});
        for (const auto& [k, c] : image.terms())
            psi(e.m_positions[k], e.l_positions[i]) += c;
    }
    return psi;
}

bool verify_equivalence(const Extension& e1, const Extension& e2, const Cochain& f)
{
    const Matrix psi = equivalence_map(e1, f);
    const std::size_t d = psi.rows();
    if (linalg::rank(psi) != d)
        return false;
    for (std::size_t g = 0; g < e1.action.matrices().size(); ++g)
        if (!(psi * e1.action.matrix(g) == e2.action.matrix(g) * psi))
            return false;
    const FieldSpec fs = psi.field();
    for (std::size_t u = 0; u < d; ++u)
        for (std::size_t v = 0; v < d; ++v) {
            const Vector lhs = apply(psi, e1.table(u, v));
            const Vector rhs = e2.table.apply(apply(psi, Vector::unit(fs, u)),
                                              apply(psi, Vector::unit(fs, v)));
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

std::vector<Cochain> classify_extensions(const CochainComplex& cx)
{
    auto report = cx.cohomology(2, true);
    std::vector<Cochain> reps = std::move(*report.representatives[0]);
    for (const auto& h : reps)
        if (!validate_superalgebra(build_extension(cx, h).table).ok())
            throw OracleDisagreement("a cohomology representative does not give a Lie superalgebra");
    return reps;
}

} // namespace supercohom
