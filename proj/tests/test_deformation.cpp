#include "doctest.h"

#include "support/instances.hpp"
#include "supercohom/deformation.hpp"
#include "supercohom/error.hpp"

#include <random>

using namespace supercohom;
using namespace testing_support;

namespace {

const FieldSpec Q = FieldSpec::rational();

ComplexPtr gl11_z2()
{
    const auto gl = make_gl(1, 1);
    return adjoint_complex(gl, gl11_swap_action(gl));
}

Vector v(const GradedBasis& b, std::initializer_list<std::pair<const char*, long>> terms)
{
    Vector out(Q);
    for (const auto& [name, c] : terms)
        out.add(b.index(name), Scalar(Q, c));
    return out;
}

Matrix random_gauge_map(std::mt19937& rng, const ActionRep& rep)
{
    // Average a random even matrix over the group so it commutes with the action.
    const auto& b = *rep.space();
    const std::size_t d = b.dim();
    Matrix m(Q, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (b.parity(i) == b.parity(j))
                m(i, j) = random_scalar(rng, Q);
    Matrix avg(Q, d, d);
    const auto& g = rep.group();
    for (std::size_t a = 0; a < g.order(); ++a)
        avg = avg + rep.matrix(a) * m * rep.matrix(g.inverse(a));
    return avg;
}

GaugeTransform random_gauge(std::mt19937& rng, const ActionRep& rep, std::size_t order)
{
    std::vector<Matrix> maps{Matrix::identity(Q, rep.space()->dim())};
    for (std::size_t k = 1; k <= order; ++k)
        maps.push_back(random_gauge_map(rng, rep));
    return GaugeTransform(rep, maps);
}

} // namespace

TEST_CASE("trivial deformation is valid in both modes")
{
    const auto cx = gl11_z2();
    const auto d = Deformation::from_higher_terms(cx, {cx->zero(2, 0), cx->zero(2, 0)});
    CHECK(validate(d).ok());
    CHECK(validate(d, DeformationMode::Strict).ok());
    CHECK(check_order(d, 0).ok);
    CHECK_THROWS_AS(infinitesimal(d), AllZero);
    const auto ob = obstruction(d);
    CHECK(ob.obstruction.is_zero());
    CHECK(ob.extendable);
}

TEST_CASE("construction rejects bad terms")
{
    const auto cx = gl11_z2();
    const auto& b = *cx->algebra().basis();
    CHECK_THROWS_AS(Deformation(cx, {cx->zero(2, 0)}), ValidationError);
    Cochain skew = cx->zero(2, 0);
    // e11 x e22 -> e11 is not fixed by the swap.
    skew.set_value(*cx->space(2)->position({b.index("e11"), b.index("e22")}),
                   Vector::unit(Q, b.index("e11")));
    CHECK_THROWS_AS(Deformation::from_higher_terms(cx, {skew}), ValidationError);
    CHECK_THROWS_AS(Deformation::from_higher_terms(cx, {cx->zero(2, 1).scaled(Scalar(Q, 1L)),
                                                        cx->zero(1, 0)}),
                    DimensionError);
}

TEST_CASE("paper's mu_1 on gl(1|1)")
{
    const auto cx = gl11_z2();
    const auto& b = *cx->algebra().basis();
    const Cochain mu = paper_mu1(*cx);
    CHECK(cx->is_equivariant(mu));
    CHECK(mu.at({b.index("e12"), b.index("e21")}) == v(b, {{"e11", 1}, {"e22", 1}}));
    CHECK(mu.at({b.index("e11"), b.index("e12")}) == v(b, {{"e21", 1}}));
    CHECK(mu.at({b.index("e22"), b.index("e12")}) == v(b, {{"e21", -1}}));

    const auto d = Deformation::from_higher_terms(cx, {mu});
    CHECK(check_order(d, 0).ok);
    const auto r1 = check_order(d, 1);
    // The order-one residual is the coboundary of mu_1.
    CHECK(r1.residual == cx->coboundary(mu));

    // The eight evaluations displayed for this example all vanish ...
    const char* displayed[8][3] = {
        {"e11", "e12", "e21"}, {"e11", "e21", "e12"}, {"e11", "e12", "e22"},
        {"e11", "e22", "e12"}, {"e11", "e22", "e21"}, {"e11", "e21", "e22"},
        {"e22", "e12", "e21"}, {"e22", "e21", "e12"}};
    for (const auto& t : displayed)
        CHECK(r1.residual.at({b.index(t[0]), b.index(t[1]), b.index(t[2])}).is_zero());
    // ... but mu_1 is not a cocycle: -[e21, e12] - [e12, e21] = -2(e11 + e22) on (e11, e12, e12).
    CHECK(r1.residual.at({b.index("e11"), b.index("e12"), b.index("e12")}) ==
          v(b, {{"e11", -2}, {"e22", -2}}));
    CHECK(r1.residual.at({b.index("e22"), b.index("e12"), b.index("e12")}) ==
          v(b, {{"e11", 2}, {"e22", 2}}));
    CHECK(!r1.ok);
    CHECK(!validate(d).ok());
    const auto inf = infinitesimal(d);
    CHECK(inf.k == 1);
    CHECK(!inf.is_cocycle);
    CHECK_THROWS_AS(obstruction(d), NotValidated);
}

TEST_CASE("order-one residual equals the coboundary on random instances")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 6; ++trial) {
        const auto a = random_galgebra(rng, trial % 2 == 0);
        const auto cx = adjoint_complex(*a.algebra, *a.action);
        const Cochain mu = random_cochain(rng, *cx, 2, 0, true);
        const auto d = Deformation::from_higher_terms(cx, {mu});
        INFO(a.name);
        CHECK(check_order(d, 1).residual == cx->coboundary(mu));
    }
}

TEST_CASE("cocycle infinitesimals give valid order-one deformations")
{
    std::mt19937 rng(9);
    const auto cx = gl11_z2();
    for (int trial = 0; trial < 5; ++trial) {
        const Cochain mu = random_cocycle(rng, *cx, 2, 0);
        const auto d = Deformation::from_higher_terms(cx, {mu});
        CHECK(validate(d).ok());
        const auto ob = obstruction(d);
        CHECK(cx->coboundary(ob.obstruction).is_zero());
        // The order-two identity with mu_2 = 0 is exactly the obstruction.
        CHECK(ob.obstruction == check_order(d, 2).residual);
        if (ob.extendable) {
            REQUIRE(ob.next_term);
            const auto d2 = Deformation::from_higher_terms(cx, {mu, *ob.next_term});
            CHECK(validate(d2).ok());
        }
    }
}

TEST_CASE("non-cocycle infinitesimal fails at order one")
{
    std::mt19937 rng(10);
    const auto cx = gl11_z2();
    for (int trial = 0; trial < 5; ++trial) {
        const Cochain mu = random_cochain(rng, *cx, 2, 0, true);
        if (cx->coboundary(mu).is_zero())
            continue;
        const auto d = Deformation::from_higher_terms(cx, {mu});
        const auto rep = validate(d);
        CHECK(!rep.ok());
        CHECK(rep.orders[0].ok);
        CHECK(!rep.orders[1].ok);
        CHECK(!infinitesimal(d).is_cocycle);
    }
}

TEST_CASE("infinitesimal skips zero terms")
{
    std::mt19937 rng(11);
    const auto cx = gl11_z2();
    const Cochain mu2 = random_cocycle(rng, *cx, 2, 0);
    REQUIRE(!mu2.is_zero());
    const auto d = Deformation::from_higher_terms(cx, {cx->zero(2, 0), mu2});
    const auto inf = infinitesimal(d);
    CHECK(inf.k == 2);
    CHECK(inf.term == mu2);
    CHECK(inf.is_cocycle);
}

TEST_CASE("gauge transforms")
{
    std::mt19937 rng(12);
    const auto cx = gl11_z2();
    const auto& rep = cx->action_on_algebra();
    for (int trial = 0; trial < 5; ++trial) {
        const Cochain mu1 = random_cocycle(rng, *cx, 2, 0);
        const Cochain mu2 = random_cochain(rng, *cx, 2, 0, true);
        const auto d = Deformation::from_higher_terms(cx, {mu1, mu2});

        CHECK(gauge_transform(d, GaugeTransform::identity(rep, 2)) == d);

        const auto g = random_gauge(rng, rep, 2);
        const auto dt = gauge_transform(d, g);
        CHECK(dt.terms()[0] == d.terms()[0]);
        CHECK(d.terms()[1] - dt.terms()[1] == cx->coboundary(linear_map_cochain(*cx, g.map(1))));
        CHECK(infinitesimals_cohomologous(d, dt));
        CHECK(gauge_transform(dt, g.inverse(rep)) == d);

        // Validity is gauge invariant.
        const auto valid = Deformation::from_higher_terms(cx, {mu1});
        CHECK(validate(gauge_transform(valid, random_gauge(rng, rep, 1))).ok());
    }
}

TEST_CASE("gauge transforms must be normalized, even and equivariant")
{
    const auto cx = gl11_z2();
    const auto& rep = cx->action_on_algebra();
    const auto& b = *cx->algebra().basis();
    Matrix id = Matrix::identity(Q, 4);
    CHECK_THROWS_AS(GaugeTransform(rep, {id.scaled(Scalar(Q, 2L))}), ValidationError);
    Matrix odd(Q, 4, 4);
    odd(b.index("e12"), b.index("e11")) = Scalar::one(Q);
    CHECK_THROWS_AS(GaugeTransform(rep, {id, odd}), ValidationError);
    Matrix skew(Q, 4, 4);
    skew(b.index("e11"), b.index("e11")) = Scalar::one(Q);
    CHECK_THROWS_AS(GaugeTransform(rep, {id, skew}), ValidationError);
}

TEST_CASE("infinitesimals in different classes are not cohomologous")
{
    // Abelian (2|0): every 2-cochain is a cocycle and nothing is a coboundary.
    const auto l = make_abelian(make_basis({"p", "q"}, {0, 0}));
    const auto cx = adjoint_complex(l, ActionRep::trivial(trivial_group(), l.basis(), Q));
    const auto rep = cx->cohomology(2, true);
    REQUIRE(rep.cohomology[0] >= 1);
    const auto& reps = *rep.representatives[0];
    const auto d1 = Deformation::from_higher_terms(cx, {reps[0]});
    const auto d2 = Deformation::from_higher_terms(cx, {cx->zero(2, 0)});
    CHECK(!infinitesimals_cohomologous(d1, d2));
    CHECK(infinitesimals_cohomologous(d1, d1));
}
