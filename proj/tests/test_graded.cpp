#include "supercohom/error.hpp"
#include "supercohom/graded.hpp"

#include <doctest.h>

#include <random>

using namespace supercohom;

namespace {

std::vector<std::vector<int>> parity_tuples(std::size_t n)
{
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> p(n);
        for (std::size_t k = 0; k < n; ++k)
            p[k] = (mask >> k) & 1;
        out.push_back(p);
    }
    return out;
}

BasisPtr basis22() { return make_basis({"a", "b", "u", "v"}, {0, 0, 1, 1}); }

MultilinearMap random_map(std::mt19937& rng, const BasisPtr& b, std::size_t arity, int parity)
{
    const auto q = FieldSpec::rational();
    std::uniform_int_distribution<long> coef(-3, 3);
    MultilinearMap f(b, b, arity, parity, q);
    for_each_tuple(b->dim(), arity, [&](const IndexTuple& t) {
        int target = parity;
        for (auto i : t)
            target ^= b->parity(i);
        Vector v(q);
        for (std::size_t k = 0; k < b->dim(); ++k)
            if (b->parity(k) == target)
                v.add(k, Scalar(q, coef(rng)));
        f.set(t, v);
    });
    return f;
}

} // namespace

TEST_CASE("graded basis construction")
{
    CHECK_THROWS_AS(make_basis({"a", "a"}, {0, 0}), DimensionError);
    CHECK_THROWS_AS(make_basis({"u", "a"}, {1, 0}), DimensionError);
    auto b = basis22();
    CHECK(b->even_dim() == 2);
    CHECK(b->odd_dim() == 2);
    CHECK(b->index("u") == 2);
}

TEST_CASE("koszul counts and signs")
{
    CHECK(koszul_count({0, 1, 2}, std::vector<int>{1, 1, 1}) == 0);
    CHECK(koszul_count({1, 0}, std::vector<int>{1, 1}) == 1);
    CHECK(koszul_count({1, 0}, std::vector<int>{0, 1}) == 0);
    CHECK(koszul_sign({1, 0}, std::vector<int>{1, 1}) == 1);
    CHECK(koszul_sign({1, 0}, std::vector<int>{0, 1}) == -1);
    CHECK_THROWS_AS(koszul_count({1, 0}, std::vector<int>{1}), DimensionError);
    auto ps = perm_signs({2, 0, 1}, std::vector<int>{1, 1, 0});
    CHECK(ps.eps == permutation_sign(ps.sigma) * (ps.k_count % 2 ? -1 : 1));
}

TEST_CASE("koszul sign cocycle identity")
{
    // eps(s t, X) = eps(s, X) eps(t, s^-1 X), exhaustively for n <= 4.
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& x : parity_tuples(n))
            for (const auto& s : perms)
                for (const auto& t : perms) {
                    const auto sx = act_on_tuple(inverse(s), x);
                    CHECK(koszul_sign(compose(s, t), x) == koszul_sign(s, x) * koszul_sign(t, sx));
                }
    }
}

TEST_CASE("symmetric group action on multilinear maps")
{
    std::mt19937 rng(11);
    auto b = basis22();
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto f = random_map(rng, b, n, static_cast<int>(n % 2));
        const auto perms = all_permutations(n);
        CHECK(act_permutation(identity_permutation(n), f) == f);
        for (const auto& s : perms)
            for (const auto& t : perms)
                CHECK(act_permutation(compose(s, t), f) ==
                      act_permutation(s, act_permutation(t, f)));
        if (n >= 2) {
            Permutation tau = identity_permutation(n);
            std::swap(tau[0], tau[1]);
            CHECK(act_permutation(tau, act_permutation(tau, f)) == f);
        }
    }
}

TEST_CASE("canonical super-alternating basis")
{
    auto b = basis22();
    CHECK(superalt_basis(*b, 1).size() == 4);
    CHECK(superalt_basis(*b, 2).size() == 8);
    CHECK(superalt_basis(*make_basis({"x"}, {0}), 2).empty());
    for (std::size_t d0 = 0; d0 <= 3; ++d0)
        for (std::size_t d1 = 0; d1 <= 3; ++d1) {
            std::vector<std::string> names;
            std::vector<int> par;
            for (std::size_t k = 0; k < d0 + d1; ++k) {
                names.push_back("e" + std::to_string(k));
                par.push_back(k < d0 ? 0 : 1);
            }
            auto bb = make_basis(names, par);
            for (std::size_t n = 1; n <= 4; ++n) {
                // Brute force: count sorted tuples with no repeated even entry.
                std::size_t brute = 0;
                for_each_tuple(d0 + d1, n, [&](const IndexTuple& t) {
                    if (!std::is_sorted(t.begin(), t.end()))
                        return;
                    for (std::size_t k = 1; k < n; ++k)
                        if (t[k] == t[k - 1] && par[t[k]] == 0)
                            return;
                    ++brute;
                });
                CHECK(superalt_basis(*bb, n).size() == brute);
                CHECK(superalt_count(d0, d1, n) == brute);
            }
        }
}

TEST_CASE("superalt expansion")
{
    const auto q = FieldSpec::rational();
    auto b = basis22();
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int parity = 0; parity <= 1; ++parity) {
            const auto tuples = superalt_basis(*b, n);
            std::vector<Vector> coords;
            for (const auto& t : tuples) {
                int target = parity;
                for (auto i : t)
                    target ^= b->parity(i);
                Vector v(q);
                for (std::size_t k = 0; k < b->dim(); ++k)
                    if (b->parity(k) == target)
                        v.add(k, Scalar(q, coef(rng)));
                coords.push_back(v);
            }
            const auto f = superalt_expand(b, b, n, parity, q, coords);
            CHECK(restrict_to_canonical(f) == coords);
            CHECK(is_super_alternating(f));
            for (const auto& s : all_permutations(n))
                CHECK(act_permutation(s, f) == f);
        }

    // Odd-odd diagonal is symmetric under the swap.
    std::vector<Vector> coords(8, Vector(q));
    const auto tuples = superalt_basis(*b, 2);
    const auto pos = std::find(tuples.begin(), tuples.end(), IndexTuple{2, 2}) - tuples.begin();
    coords[pos] = Vector::unit(q, 0);
    const auto f = superalt_expand(b, b, 2, 0, q, coords);
    CHECK(f.at({2, 2}) == Vector::unit(q, 0));

    CHECK_THROWS_AS(superalt_expand(b, b, 2, 0, q, std::vector<Vector>(3, Vector(q))),
                    DimensionError);

    // A random non-alternating map is detected; its alternation is accepted.
    const auto g = random_map(rng, b, 2, 0);
    CHECK_FALSE(is_super_alternating(g));
}

TEST_CASE("homogeneity is enforced")
{
    const auto q = FieldSpec::rational();
    auto b = basis22();
    MultilinearMap f(b, b, 2, 0, q);
    CHECK_THROWS_AS(f.set({0, 2}, Vector::unit(q, 0)), ValidationError);
    CHECK_NOTHROW(f.set({0, 2}, Vector::unit(q, 3)));
}
