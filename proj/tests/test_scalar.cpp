#include "supercohom/error.hpp"
#include "supercohom/matrix.hpp"
#include "supercohom/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace supercohom;

namespace {

// Polynomial helpers kept separate from the library so the Moebius product below is independent.
RationalPoly mul(const RationalPoly& a, const RationalPoly& b)
{
    RationalPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact division by a monic polynomial; asserts zero remainder.
RationalPoly div_exact(RationalPoly a, const RationalPoly& b)
{
    RationalPoly q(a.size() - b.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[k + j] -= c * b[j];
    }
    for (const auto& x : a)
        REQUIRE(x == 0);
    return q;
}

int moebius(unsigned n)
{
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

RationalPoly moebius_cyclotomic(unsigned m)
{
    RationalPoly num{1}, den{1};
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d)
            continue;
        RationalPoly xd(d + 1, 0);
        xd[0] = -1;
        xd[d] = 1;
        int mu = moebius(m / d);
        if (mu == 1)
            num = mul(num, xd);
        else if (mu == -1)
            den = mul(den, xd);
    }
    return div_exact(num, den);
}

Scalar random_scalar(std::mt19937& rng, FieldSpec f)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    RationalPoly c;
    for (std::size_t k = 0; k < f.degree(); ++k) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return Scalar::from_polynomial(f, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_poly(1) == RationalPoly{-1, 1});
    CHECK(cyclotomic_poly(4) == RationalPoly{1, 0, 1});
    CHECK(cyclotomic_poly(6) == RationalPoly{1, -1, 1});
    for (unsigned m = 1; m <= 30; ++m)
        CHECK(cyclotomic_poly(m) == moebius_cyclotomic(m));
}

TEST_CASE("basic arithmetic")
{
    const auto q = FieldSpec::rational();
    CHECK(arith(Scalar(q, Rational(1, 2)), Scalar(q, Rational(1, 3)), ArithOp::Add) ==
          Scalar(q, Rational(5, 6)));
    const auto f4 = FieldSpec::cyclotomic(4);
    const Scalar i = root_of_unity(f4, 1);
    CHECK(i * i == Scalar(f4, -1L));

    const auto f5 = FieldSpec::cyclotomic(5);
    Scalar sum(f5);
    for (long k = 0; k < 5; ++k)
        sum += root_of_unity(f5, k);
    CHECK(sum.is_zero());

    CHECK_THROWS_AS(Scalar(q, 1L) / Scalar(q), DivisionByZero);
    CHECK_THROWS_AS(Scalar(q, 1L) + Scalar(f4, 1L), FieldMismatch);
}

TEST_CASE("roots of unity")
{
    const auto f4 = FieldSpec::cyclotomic(4);
    CHECK(root_of_unity(f4, 2) == Scalar(f4, -1L));
    CHECK(root_of_unity(f4, 5) == root_of_unity(f4, 1));
    CHECK(root_of_unity(f4, -1) == root_of_unity(f4, 3));
    const auto f3 = FieldSpec::cyclotomic(3);
    CHECK(root_of_unity(f3, 2).to_string() == "-1 - z");
    CHECK(root_of_unity(FieldSpec::rational(), 0).is_one());
    CHECK_THROWS_AS(root_of_unity(FieldSpec::rational(), 1), NotCyclotomic);

    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        const auto f = FieldSpec::cyclotomic(m);
        for (long k = 0; k < static_cast<long>(m); ++k) {
            Scalar p = Scalar::one(f);
            const Scalar z = root_of_unity(f, k);
            for (unsigned e = 0; e < m; ++e)
                p *= z;
            CHECK(p.is_one());
        }
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937 rng(20240611);
    for (unsigned m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        const auto f = m == 1 ? FieldSpec::rational() : FieldSpec::cyclotomic(m);
        for (int trial = 0; trial < 25; ++trial) {
            const Scalar a = random_scalar(rng, f), b = random_scalar(rng, f),
                         c = random_scalar(rng, f);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK((b / a) * a == b);
            }
            CHECK(Scalar::from_polynomial(f, a.coefficients()) == a);
        }
    }
}

TEST_CASE("text round trip")
{
    std::mt19937 rng(7);
    for (unsigned m : {1u, 3u, 4u, 8u, 12u}) {
        const auto f = m == 1 ? FieldSpec::rational() : FieldSpec::cyclotomic(m);
        for (int trial = 0; trial < 40; ++trial) {
            const Scalar a = random_scalar(rng, f);
            CHECK(Scalar::parse(a.to_string(), f) == a);
        }
    }
    const auto f4 = FieldSpec::cyclotomic(4);
    CHECK(Scalar::parse(" 2 z ", f4) == Scalar(f4, 2L) * root_of_unity(f4, 1));
    CHECK(Scalar::parse("z^3", f4) == -root_of_unity(f4, 1));
    CHECK(Scalar::parse("-3/6", FieldSpec::rational()).to_string() == "-1/2");
    CHECK_THROWS_AS(Scalar::parse("z", FieldSpec::rational()), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/", FieldSpec::rational()), ParseError);
}

TEST_CASE("exact linear algebra")
{
    const auto q = FieldSpec::rational();
    auto s = [&](long v) { return Scalar(q, v); };
    Matrix a(q, 3, 4);
    const long vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c)
            a(r, c) = s(vals[r][c]);
    CHECK(linalg::rank(a) == 2);
    const Matrix n = linalg::nullspace(a);
    CHECK(n.cols() == 2);
    CHECK((a * n).is_zero());

    Matrix b(q, 3, 1);
    b(0, 0) = s(1);
    b(1, 0) = s(2);
    b(2, 0) = s(5);
    auto x = linalg::solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
    b(1, 0) = s(3);
    CHECK_FALSE(linalg::solve(a, b).has_value());

    // Rank agrees between the fraction-free path and Gauss-Jordan on random cyclotomic matrices.
    std::mt19937 rng(3);
    const auto f = FieldSpec::cyclotomic(12);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(f, 4, 5);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 5; ++c)
                m(r, c) = random_scalar(rng, f);
        for (int c = 0; c < 5; ++c)
            m(3, c) = m(0, c) * m(1, 0) - m(2, c);
        CHECK(linalg::rank(m) == linalg::rref(m).pivots.size());
        CHECK(linalg::rank(m) <= 3);
    }
}
