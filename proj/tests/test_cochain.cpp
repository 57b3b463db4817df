#include "doctest.h"

#include "support/instances.hpp"
#include "supercohom/error.hpp"

#include <random>

using namespace supercohom;
using namespace testing_support;

namespace {

const FieldSpec Q = FieldSpec::rational();

int sgn(std::size_t e) { return e % 2 ? -1 : 1; }

/// Coboundary evaluated on an arbitrary (not necessarily canonical) tuple, written
/// independently of the library: positions are 1-based as in the textbook formula.
Vector naive_coboundary(const CochainComplex& cx, const Cochain& f, const IndexTuple& x)
{
    const auto& l = cx.algebra();
    const auto& b = *l.basis();
    const std::size_t n1 = x.size();
    Vector acc(Q);
    auto par = [&](std::size_t k) { return static_cast<std::size_t>(b.parity(x[k - 1])); };
    for (std::size_t i = 1; i <= n1; ++i) {
        std::size_t before_i = 0;
        for (std::size_t k = 1; k < i; ++k)
            before_i += par(k);
        for (std::size_t j = i + 1; j <= n1; ++j) {
            std::size_t before_j = 0;
            for (std::size_t k = 1; k < j; ++k)
                if (k != i)
                    before_j += par(k);
            // Move x_i then x_j to the front.
            const std::size_t e = i + j + par(i) * before_i + par(j) * before_j;
            const Vector br = l.bracket(x[i - 1], x[j - 1]);
            std::vector<Vector> args{br};
            for (std::size_t k = 1; k <= n1; ++k)
                if (k != i && k != j)
                    args.push_back(Vector::unit(Q, x[k - 1]));
            acc.add_scaled(f.evaluate(args), Scalar(Q, long(sgn(e))));
        }
        std::vector<Vector> rest;
        for (std::size_t k = 1; k <= n1; ++k)
            if (k != i)
                rest.push_back(Vector::unit(Q, x[k - 1]));
        const std::size_t e = i + 1 + par(i) * (f.parity() + before_i);
        acc.add_scaled(cx.module().act(Vector::unit(Q, x[i - 1]), f.evaluate(rest)),
                       Scalar(Q, long(sgn(e))));
    }
    return acc;
}

CochainComplex gl11_complex(bool with_swap)
{
    const auto gl = make_gl(1, 1);
    const auto ad = LModule::adjoint(gl);
    if (!with_swap)
        return CochainComplex(gl, ad);
    const auto swap = gl11_swap_action(gl);
    return CochainComplex(gl, ad, swap, swap);
}

} // namespace

TEST_CASE("osp(1|2), sl(2) and the free nilpotent algebras satisfy the axioms")
{
    CHECK(make_osp12().dim() == 5);
    CHECK(make_sl2().dim() == 3);
    const auto n = make_free_nilpotent(0, 2);
    CHECK(n.basis()->even_dim() == 3);
    CHECK(n.basis()->odd_dim() == 2);
    CHECK(make_free_nilpotent(1, 1).basis()->even_dim() == 2);
}

TEST_CASE("degree zero coboundary is the signed module action")
{
    const auto cx = gl11_complex(false);
    const auto& b = *cx.algebra().basis();
    for (int parity = 0; parity <= 1; ++parity)
        for (std::size_t m = 0; m < 4; ++m) {
            if (b.parity(m) != parity)
                continue;
            Cochain f = cx.zero(0, parity);
            f.set_value(0, Vector::unit(Q, m));
            const Cochain df = cx.coboundary(f);
            for (std::size_t x = 0; x < 4; ++x)
                CHECK(df.at({x}) == cx.algebra().bracket(x, m).scaled(
                                        Scalar(Q, long(sgn(b.parity(x) * parity)))));
        }
}

TEST_CASE("degree one coboundary matches the closed form")
{
    std::mt19937 rng(11);
    const auto cx = gl11_complex(false);
    const auto& l = cx.algebra();
    const auto& b = *l.basis();
    for (int parity = 0; parity <= 1; ++parity) {
        const Cochain f = random_cochain(rng, cx, 1, parity, false);
        const Cochain df = cx.coboundary(f);
        for (std::size_t x = 0; x < 4; ++x)
            for (std::size_t y = 0; y < 4; ++y) {
                // (-1)^{xf} [x, f(y)] - (-1)^{y(f+x)} [y, f(x)] - f([x, y])
                Vector expect = l.bracket(Vector::unit(Q, x), f.at({y}))
                                    .scaled(Scalar(Q, long(sgn(b.parity(x) * parity))));
                const int s = sgn(b.parity(y) * (parity + b.parity(x)));
                expect.add_scaled(l.bracket(Vector::unit(Q, y), f.at({x})), Scalar(Q, long(-s)));
                expect -= f.evaluate({l.bracket(x, y)});
                CHECK(df.at({x, y}) == expect);
            }
    }
}

TEST_CASE("coboundary agrees with the naive formula on all tuples")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const auto inst = random_instance(rng, trial % 2 == 1);
        const auto& cx = *inst.complex;
        const std::size_t d = cx.algebra().dim();
        for (std::size_t n = 0; n <= 2; ++n)
            for (int parity = 0; parity <= 1; ++parity) {
                const Cochain f = random_cochain(rng, cx, n, parity, false);
                const Cochain df = cx.coboundary(f);
                std::size_t checked = 0;
                for_each_tuple(d, n + 1, [&](const IndexTuple& x) {
                    if (checked++ % 3 != 0)
                        return;
                    INFO(inst.name << " n=" << n << " parity=" << parity);
                    CHECK(df.at(x) == naive_coboundary(cx, f, x));
                });
            }
    }
}

TEST_CASE("matrix coboundary agrees with direct evaluation")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        const auto inst = random_instance(rng, trial % 2 == 0);
        const auto& cx = *inst.complex;
        for (std::size_t n = 0; n <= 2; ++n)
            for (int parity = 0; parity <= 1; ++parity) {
                INFO(inst.name << " n=" << n << " parity=" << parity);
                const Cochain f = random_cochain(rng, cx, n, parity, false);
                const auto via_matrix = cx.coboundary_matrix(n, parity) * cx.to_block(f);
                CHECK(cx.from_block(n + 1, parity, via_matrix) == cx.coboundary(f));
            }
    }
}

TEST_CASE("coboundary squares to zero")
{
    const auto cx = gl11_complex(false);
    for (std::size_t n = 0; n <= 2; ++n)
        for (int parity = 0; parity <= 1; ++parity) {
            const Matrix dd = cx.coboundary_matrix(n + 1, parity) * cx.coboundary_matrix(n, parity);
            CHECK(dd.is_zero());
        }

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const auto inst = random_instance(rng, trial % 2 == 0);
        const auto& cx2 = *inst.complex;
        for (std::size_t n = 0; n <= 1; ++n)
            for (int parity = 0; parity <= 1; ++parity) {
                INFO(inst.name << " n=" << n << " parity=" << parity);
                const Cochain f = random_cochain(rng, cx2, n, parity, false);
                CHECK(cx2.coboundary(cx2.coboundary(f)).is_zero());
            }
    }
}

TEST_CASE("coboundary of a super-alternating cochain is super-alternating")
{
    std::mt19937 rng(3);
    const auto cx = gl11_complex(false);
    for (int parity = 0; parity <= 1; ++parity) {
        const Cochain f = random_cochain(rng, cx, 1, parity, false);
        const Cochain df = cx.coboundary(f);
        MultilinearMap full(cx.algebra().basis(), cx.module().space(), 2, parity, Q);
        for_each_tuple(4, 2, [&](const IndexTuple& x) {
            const Vector v = naive_coboundary(cx, f, x);
            full.set(x, v);
        });
        CHECK(is_super_alternating(full));
        CHECK(Cochain::from_map(cx.space(2), full) == df);
    }
}

TEST_CASE("abelian algebra with a trivial module has zero coboundary")
{
    const auto b = make_basis({"a", "b", "u"}, {0, 0, 1});
    const auto l = make_abelian(b);
    const auto cx = CochainComplex(l, LModule::trivial(l, make_basis({"m", "n"}, {0, 1})));
    for (std::size_t n = 0; n <= 3; ++n)
        for (int parity = 0; parity <= 1; ++parity) {
            CHECK(cx.coboundary_matrix(n, parity).is_zero());
            const auto rep = cx.cohomology(n);
            CHECK(rep.cohomology[parity] == rep.cochains[parity]);
        }
}

TEST_CASE("equivariant coboundary commutes with the inclusion")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        const auto inst = random_instance(rng, true);
        const auto& cx = *inst.complex;
        for (std::size_t n = 0; n <= 2; ++n)
            for (int parity = 0; parity <= 1; ++parity) {
                INFO(inst.name << " n=" << n << " parity=" << parity);
                const Matrix& e_n = cx.equivariant_basis(n, parity);
                const Matrix& e_n1 = cx.equivariant_basis(n + 1, parity);
                const Matrix dg = cx.equivariant_coboundary_matrix(n, parity);
                CHECK(cx.coboundary_matrix(n, parity) * e_n == e_n1 * dg);
                const Cochain f = random_cochain(rng, cx, n, parity, true);
                CHECK(cx.is_equivariant(f));
                CHECK(cx.is_equivariant(cx.coboundary(f)));
            }
    }
}

TEST_CASE("induced action on cochains is a representation")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const auto inst = random_instance(rng, true);
        const auto& cx = *inst.complex;
        const auto& g = cx.action_on_algebra().group();
        for (std::size_t n = 0; n <= 2; ++n) {
            INFO(inst.name << " n=" << n);
            const auto sp = cx.space(n);
            const auto rho = induced_action_on_cochains(cx.action_on_algebra(),
                                                        cx.action_on_module(), *sp);
            CHECK(rho[g.identity()] == Matrix::identity(Q, sp->dim()));
            for (std::size_t a = 0; a < g.order(); ++a)
                for (std::size_t c = 0; c < g.order(); ++c)
                    CHECK(rho[a] * rho[c] == rho[g.mul(a, c)]);
            const Matrix p = reynolds_projector(g, rho);
            CHECK(p * p == p);
        }
    }
}

TEST_CASE("fixed subspace of the regular representation of Z2")
{
    const auto g = cyclic_group(2);
    Matrix swap(Q, 2, 2);
    swap(0, 1) = swap(1, 0) = Scalar::one(Q);
    const Matrix fixed = equivariant_subspace(g, {Matrix::identity(Q, 2), swap});
    REQUIRE(fixed.cols() == 1);
    CHECK(fixed(0, 0) == fixed(1, 0));
    CHECK(!fixed(0, 0).is_zero());
}

TEST_CASE("equivariant dimensions for gl(1|1) with the swap")
{
    const auto cx = gl11_complex(true);
    // C^0: fixed vectors of M; the swap fixes e11+e22 and e12+e21.
    CHECK(cx.equivariant_basis(0, 0).cols() == 1);
    CHECK(cx.equivariant_basis(0, 1).cols() == 1);
    // The swap acts freely on a basis of each parity block of C^n up to sign, so the fixed
    // dimension is the character average; compare to a brute count.
    for (std::size_t n = 1; n <= 2; ++n)
        for (int parity = 0; parity <= 1; ++parity) {
            const auto rho = cx.induced_block_action(n, parity);
            const Scalar avg = (rho[0].trace() + rho[1].trace()) * Scalar(Q, Rational(1, 2));
            CHECK(Scalar(Q, long(cx.equivariant_basis(n, parity).cols())) == avg);
        }
}

TEST_CASE("degree zero cohomology is the even annihilator")
{
    std::mt19937 rng(31);
    const auto gl = gl11_complex(false);
    const Matrix ann = annihilator(gl);
    REQUIRE(ann.cols() == 1);
    const auto& b = *gl.algebra().basis();
    CHECK(ann(b.index("e11"), 0) == ann(b.index("e22"), 0));
    CHECK(gl.cohomology(0).cohomology[0] == 1);

    for (int trial = 0; trial < 10; ++trial) {
        const auto inst = random_instance(rng, trial % 2 == 0);
        INFO(inst.name);
        CHECK(inst.complex->cohomology(0).cohomology[0] == annihilator(*inst.complex).cols());
    }
}

TEST_CASE("degree one even cohomology is derivations modulo inner derivations")
{
    std::mt19937 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const auto inst = random_instance(rng, trial % 2 == 1);
        const auto& cx = *inst.complex;
        INFO(inst.name);
        const auto der = derivations(cx);
        const auto rep = cx.cohomology(1);
        CHECK(rep.cocycles[0] == der.derivations.cols());
        CHECK(rep.cohomology[0] == der.derivations.cols() - der.inner.cols());
    }
}

TEST_CASE("gl(1|1) low-degree cohomology")
{
    const auto cx = gl11_complex(false);
    const auto r1 = cx.cohomology(1, true);
    CHECK(r1.cochains[0] == 8);
    CHECK(r1.cochains[1] == 8);
    for (int parity = 0; parity <= 1; ++parity) {
        REQUIRE(r1.representatives[parity]);
        CHECK(r1.representatives[parity]->size() == r1.cohomology[parity]);
        for (const auto& c : *r1.representatives[parity])
            CHECK(cx.coboundary(c).is_zero());
    }
}

TEST_CASE("Heisenberg-type cocycle gives nonzero even second cohomology")
{
    const auto b = make_basis({"p", "q"}, {0, 0});
    const auto l = make_abelian(b);
    const auto cx = CochainComplex(l, LModule::trivial(l, make_basis({"z"}, {0})));
    const auto r = cx.cohomology(2);
    CHECK(r.cohomology[0] == 1);
}

TEST_CASE("cochain parity is enforced")
{
    const auto cx = gl11_complex(false);
    Cochain f = cx.zero(1, 0);
    const auto& b = *cx.algebra().basis();
    // e11 -> e12 is odd.
    const auto t = cx.space(1)->position({b.index("e11")});
    REQUIRE(t);
    CHECK_THROWS_AS(f.set_value(*t, Vector::unit(Q, b.index("e12"))), ValidationError);
    CHECK_THROWS_AS(CochainComplex(make_gl(1, 1), LModule::adjoint(make_sl(1, 1))), DimensionError);
}
