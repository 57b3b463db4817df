#include "supercohom/error.hpp"
#include "supercohom/matrix.hpp"
#include "supercohom/superalgebra.hpp"

#include <doctest.h>

using namespace supercohom;

namespace {

const FieldSpec Q = FieldSpec::rational();

Vector vec(const LieSuperalgebra& l, std::initializer_list<std::pair<const char*, long>> terms)
{
    Vector v(l.field());
    for (const auto& [name, c] : terms)
        v.add(l.basis()->index(name), Scalar(l.field(), c));
    return v;
}

Vector e(const LieSuperalgebra& l, const char* name) { return vec(l, {{name, 1}}); }

// Matrix of a gl(m|n) basis vector, for the product-commutator oracle.
Matrix unit_matrix(std::size_t d, std::size_t i, std::size_t j)
{
    Matrix m(Q, d, d);
    m(i, j) = Scalar::one(Q);
    return m;
}

} // namespace

TEST_CASE("gl(1|1) structure constants")
{
    const auto gl = make_gl(1, 1);
    CHECK(gl.basis()->even_dim() == 2);
    CHECK(gl.basis()->odd_dim() == 2);
    CHECK(gl.basis()->names() == std::vector<std::string>{"e11", "e22", "e12", "e21"});
    CHECK(bracket_eval(gl, e(gl, "e12"), e(gl, "e21")) == vec(gl, {{"e11", 1}, {"e22", 1}}));
    CHECK(bracket_eval(gl, e(gl, "e11"), e(gl, "e12")) == e(gl, "e12"));
    CHECK(bracket_eval(gl, e(gl, "e11"), e(gl, "e11")).is_zero());
    CHECK(validate_superalgebra(gl.table()).ok());
}

TEST_CASE("gl(m|n) agrees with matrix commutators")
{
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        const auto gl = make_gl(m, n);
        const auto pos = gl_positions(m, n);
        const std::size_t d = m + n;
        for (std::size_t a = 0; a < pos.size(); ++a)
            for (std::size_t b = 0; b < pos.size(); ++b) {
                const Matrix x = unit_matrix(d, pos[a].first, pos[a].second);
                const Matrix y = unit_matrix(d, pos[b].first, pos[b].second);
                const int pa = gl.basis()->parity(a), pb = gl.basis()->parity(b);
                const Matrix expected = (pa && pb) ? x * y + y * x : x * y - y * x;
                Matrix got(Q, d, d);
                for (const auto& [k, c] : gl.bracket(a, b).terms())
                    got(pos[k].first, pos[k].second) += c;
                CHECK(got == expected);
            }
    }
}

TEST_CASE("supertrace")
{
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        const auto gl = make_gl(m, n);
        const auto pos = gl_positions(m, n);
        Vector identity(Q);
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (pos[k].first == pos[k].second)
                identity.add(k, Scalar::one(Q));
        CHECK(supertrace(m, n, identity) ==
              Scalar(Q, static_cast<long>(m) - static_cast<long>(n)));
    }
    const auto gl22 = make_gl(2, 2);
    CHECK(supertrace(2, 2, e(gl22, "e12")).is_zero());
    // Block form diag(alpha) = (3, 5), diag(delta) = (7, -2).
    const auto v = vec(gl22, {{"e11", 3}, {"e22", 5}, {"e33", 7}, {"e44", -2}, {"e13", 9}});
    CHECK(supertrace(2, 2, v) == Scalar(Q, 3L + 5 - 7 + 2));
    for (std::size_t a = 0; a < gl22.dim(); ++a)
        for (std::size_t b = 0; b < gl22.dim(); ++b)
            CHECK(supertrace(2, 2, gl22.bracket(a, b)).is_zero());
    CHECK_THROWS_AS(supertrace(1, 1, Vector::unit(Q, 7)), DimensionError);
}

TEST_CASE("validation detects broken structure constants")
{
    CHECK(validate_superalgebra(make_gl(2, 1).table()).ok());
    const auto abelian = make_basis({"a", "b", "u"}, {0, 0, 1});
    CHECK(validate_superalgebra(StructureTable(Q, abelian, abelian, abelian)).ok());

    const auto gl = make_gl(1, 1);
    auto t = gl.table();
    const auto i = gl.basis()->index("e12"), j = gl.basis()->index("e21");
    // Negate one constant on both orders so only Jacobi can fail.
    t(i, j) = -t(i, j);
    t(j, i) = -t(j, i);
    // {e12,e21} = -(e11 + e22) still satisfies Jacobi for gl(1|1); also flip [e11, e12].
    const auto a = gl.basis()->index("e11");
    t(a, i) = -t(a, i);
    t(i, a) = -t(i, a);
    const auto r = validate_superalgebra(t);
    CHECK(r.antisymmetry_ok);
    CHECK_FALSE(r.jacobi_ok);
    REQUIRE_FALSE(r.counterexamples.empty());
    CHECK_FALSE(r.counterexamples.front().lhs == r.counterexamples.front().rhs);
    CHECK_THROWS_AS(LieSuperalgebra{t}, ValidationError);

    auto t2 = gl.table();
    t2(i, j) = Vector(Q);
    CHECK_FALSE(validate_superalgebra(t2).antisymmetry_ok);

    auto t3 = gl.table();
    t3(a, i) = e(gl, "e11");
    t3(i, a) = -e(gl, "e11");
    CHECK_FALSE(validate_superalgebra(t3).homogeneity_ok);
}

TEST_CASE("sl(m|n)")
{
    const auto sl21 = make_sl(2, 1);
    CHECK(sl21.dim() == 8);
    const auto sl11 = make_sl(1, 1);
    CHECK(sl11.dim() == 3);
    CHECK(sl11.basis()->names() == std::vector<std::string>{"h1", "e12", "e21"});
    CHECK(validate_superalgebra(sl11.table()).ok());
    // e11 + e22 is the identity of gl(1|1): supertrace zero and central.
    const auto embed = sl_in_gl(1, 1, Q);
    CHECK(supertrace(1, 1, embed[0]).is_zero());
    for (std::size_t k = 0; k < sl11.dim(); ++k)
        CHECK(sl11.bracket(0, k).is_zero());
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {1, 3}}) {
        const auto gl = make_gl(m, n);
        const auto vs = sl_in_gl(m, n, Q);
        CHECK(vs.size() == (m + n) * (m + n) - 1);
        for (const auto& v : vs)
            CHECK(supertrace(m, n, v).is_zero());
        CHECK_NOTHROW(make_sl(m, n));
    }
    const auto gl = make_gl(2, 1);
    CHECK_THROWS_AS(subalgebra(gl, {"e12", "e21"}, {0, 0}, {e(gl, "e12"), e(gl, "e21")}),
                    ValidationError);
}

TEST_CASE("modules")
{
    const auto gl = make_gl(2, 1);
    CHECK(validate_module(gl, LModule::adjoint(gl).table()).ok());
    const auto space = make_basis({"m0", "m1"}, {0, 1});
    CHECK_NOTHROW(LModule::trivial(gl, space));

    // A bogus action: e11 acts as the identity on m0 while everything else is zero.
    StructureTable t(Q, gl.basis(), space, space);
    t(gl.basis()->index("e12"), 0) = Vector::unit(Q, 0);
    t(gl.basis()->index("e12"), 0) = Vector::unit(Q, 1);
    t(gl.basis()->index("e21"), 1) = Vector::unit(Q, 0);
    CHECK_FALSE(validate_module(gl, t).ok());
    CHECK_THROWS_AS(LModule(gl, t), ValidationError);
}

TEST_CASE("super-Poincare algebra")
{
    const auto sp = make_super_poincare();
    CHECK(sp.dim() == 14);
    CHECK(sp.basis()->even_dim() == 10);
    CHECK(sp.field() == FieldSpec::cyclotomic(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const std::string pa = "P" + std::to_string(a), pb = "P" + std::to_string(b);
            CHECK(sp.bracket(sp.basis()->index(pa), sp.basis()->index(pb)).is_zero());
        }
    for (const char* x : {"Q1", "Q2"})
        for (const char* y : {"Q1", "Q2"})
            CHECK(sp.bracket(sp.basis()->index(x), sp.basis()->index(y)).is_zero());
    // With the spinor index of Qb raised by epsilon, {Q1, Qb1} = 2 sigma^mu_{12} P_mu
    // = 2 (sigma^1_{12} P_1 + sigma^2_{12} P_2) = -2 P1 + 2i P2 for eta = diag(+,-,-,-).
    const FieldSpec f = sp.field();
    const Scalar i = root_of_unity(f, 1);
    Vector expected(f);
    expected.add(sp.basis()->index("P1"), Scalar(f, -2L));
    expected.add(sp.basis()->index("P2"), i * Scalar(f, 2L));
    CHECK(sp.bracket(sp.basis()->index("Q1"), sp.basis()->index("Qb1")) == expected);

    const auto m = adjoint_submodule(sp, {"P0", "P1", "P2", "P3", "Q1", "Q2", "Qb1", "Qb2"});
    CHECK(m.dim() == 8);
    CHECK(validate_module(sp, m.table()).ok());
    CHECK_THROWS_AS(adjoint_submodule(sp, {"J01"}), ValidationError);
}
