#include "supercohom/fixtures.hpp"

#include "supercohom/error.hpp"

namespace supercohom {

ActionRep super_poincare_action(const LieSuperalgebra& sp, std::size_t m)
{
    if (m != 1 && m != 2 && m != 4)
        throw PreconditionError("super-Poincare Z_m action needs m in {1, 2, 4}");
    const FieldSpec f = sp.field();
    const auto& b = *sp.basis();
    const long step = static_cast<long>(4 / m);
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < m; ++k) {
        Matrix g = Matrix::identity(f, b.dim());
        const long e = step * static_cast<long>(k);
        for (const char* q : {"Q1", "Q2"})
            g(b.index(q), b.index(q)) = root_of_unity(f, e);
        for (const char* q : {"Qb1", "Qb2"})
            g(b.index(q), b.index(q)) = root_of_unity(f, -e);
        mats.push_back(std::move(g));
    }
    return ActionRep(cyclic_group(m), sp.basis(), f, std::move(mats));
}

ActionRep gl11_swap(const LieSuperalgebra& gl11)
{
    const FieldSpec f = gl11.field();
    const auto& b = *gl11.basis();
    Matrix s(f, 4, 4);
    for (auto [x, y] : {std::pair{"e11", "e22"}, std::pair{"e12", "e21"}}) {
        s(b.index(x), b.index(y)) = Scalar::one(f);
        s(b.index(y), b.index(x)) = Scalar::one(f);
    }
    return ActionRep(cyclic_group(2), gl11.basis(), f, {Matrix::identity(f, 4), s});
}

Cochain matrix_unit_cochain(const CochainComplex& adjoint, std::size_t m, std::size_t n)
{
    const FieldSpec f = adjoint.field();
    const auto pos = gl_positions(m, n);
    const auto& b = *adjoint.algebra().basis();
    auto product = [&](std::size_t x, std::size_t y) {
        Vector out(f);
        if (pos[x].second != pos[y].first)
            return out;
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (pos[k] == std::pair{pos[y].second, pos[x].first})
                out.add(k, Scalar::one(f));
        return out;
    };
    const auto sp = adjoint.space(2);
    Cochain mu(sp, 0, f);
    for (std::size_t t = 0; t < sp->tuples().size(); ++t) {
        const std::size_t x = sp->tuples()[t][0], y = sp->tuples()[t][1];
        Vector v = product(x, y);
        v.add_scaled(product(y, x), Scalar(f, (b.parity(x) && b.parity(y)) ? 1L : -1L));
        mu.set_value(t, v);
    }
    return mu;
}

namespace {

Workspace gl11_z2()
{
    const auto gl = make_gl(1, 1);
    Workspace w = make_workspace(gl, gl11_swap(gl));
    const auto& cx = w.complex(kAdjoint);
    w.cochains.emplace("mu1", NamedCochain{kAdjoint, matrix_unit_cochain(cx, 1, 1)});
    w.deformations.emplace("mu_paper", std::vector<std::string>{"mu1"});

    const auto& b = *gl.basis();
    w.candidates.emplace("bracket", gl.table());
    StructureTable perturbed = gl.table();
    const FieldSpec f = gl.field();
    // Adds e12 to [e11, e12] and, to stay Z2-equivariant, e21 to [e22, e21].
    for (auto [x, y] : {std::pair{"e11", "e12"}, std::pair{"e22", "e21"}}) {
        const std::size_t i = b.index(x), j = b.index(y);
        perturbed(i, j).add(j, Scalar::one(f));
        perturbed(j, i).add(j, Scalar(f, -1L));
    }
    w.candidates.emplace("perturbed", std::move(perturbed));
    return w;
}

Workspace gl21()
{
    const auto gl = make_gl(2, 1);
    const FieldSpec f = gl.field();
    Matrix p = Matrix::identity(f, gl.dim());
    for (std::size_t i = 0; i < gl.dim(); ++i)
        if (gl.basis()->parity(i))
            p(i, i) = Scalar(f, -1L);
    return make_workspace(gl, ActionRep(cyclic_group(2), gl.basis(), f,
                                        {Matrix::identity(f, gl.dim()), p}));
}

Workspace sl11()
{
    const auto sl = make_sl(1, 1);
    const FieldSpec f = sl.field();
    const auto& b = *sl.basis();
    Matrix s = Matrix::identity(f, 3);
    const std::size_t i = b.index("e12"), j = b.index("e21");
    s(i, i) = s(j, j) = Scalar(f);
    s(i, j) = s(j, i) = Scalar::one(f);
    return make_workspace(sl, ActionRep(cyclic_group(2), sl.basis(), f,
                                        {Matrix::identity(f, 3), s}));
}

Workspace super_poincare_z4()
{
    const auto sp = make_super_poincare();
    const auto rep = super_poincare_action(sp, 4);
    Workspace w = make_workspace(sp, rep);
    const std::vector<std::string> labels = {"P0", "P1", "P2", "P3", "Q1", "Q2", "Qb1", "Qb2"};
    LModule m = adjoint_submodule(sp, labels);
    std::vector<std::size_t> idx;
    for (const auto& l : labels)
        idx.push_back(sp.basis()->index(l));
    std::vector<Matrix> mats;
    for (const auto& g : rep.matrices())
        mats.push_back(g.submatrix(idx, idx));
    ActionRep on_m(rep.group(), m.space(), sp.field(), std::move(mats));
    add_module(w, "M", std::move(m), std::move(on_m));
    return w;
}

Workspace heisenberg_z2()
{
    const FieldSpec f = FieldSpec::rational();
    const auto basis = make_basis({"p", "q"}, {0, 0});
    const auto l = make_abelian(basis, f);
    const Matrix minus = Matrix::identity(f, 2).scaled(Scalar(f, -1L));
    Workspace w = make_workspace(l, ActionRep(cyclic_group(2), basis, f,
                                              {Matrix::identity(f, 2), minus}));
    const auto z = make_basis({"z"}, {0});
    add_module(w, "Z", LModule::trivial(l, z), ActionRep::trivial(cyclic_group(2), z, f));
    const auto& cx = w.complex("Z");
    Cochain h = cx.zero(2, 0);
    h.set_value(0, Vector::unit(f, 0));
    w.cochains.emplace("h", NamedCochain{"Z", h});
    w.cochains.emplace("split", NamedCochain{"Z", cx.zero(2, 0)});
    return w;
}

} // namespace

std::vector<std::string> fixture_names()
{
    return {"gl11_z2", "gl21", "heisenberg_z2", "sl11", "super_poincare_z4"};
}

Workspace fixture(const std::string& name)
{
    if (name == "gl11_z2")
        return gl11_z2();
    if (name == "gl21")
        return gl21();
    if (name == "sl11")
        return sl11();
    if (name == "super_poincare_z4")
        return super_poincare_z4();
    if (name == "heisenberg_z2")
        return heisenberg_z2();
    throw PreconditionError("unknown fixture '" + name + "'");
}

} // namespace supercohom
