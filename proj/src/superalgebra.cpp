#include "supercohom/superalgebra.hpp"

#include "supercohom/error.hpp"
#include "supercohom/matrix.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace supercohom {

StructureTable::StructureTable(FieldSpec f, BasisPtr l, BasisPtr r, BasisPtr t)
    : field(f), left(std::move(l)), right(std::move(r)), target(std::move(t)),
      entries(left->dim() * right->dim(), Vector(f))
{
}

Vector StructureTable::apply(const Vector& x, const Vector& y) const
{
    Vector out(field);
    for (const auto& [i, a] : x.terms())
        for (const auto& [j, b] : y.terms())
            out.add_scaled((*this)(i, j), a * b);
    return out;
}

namespace {

int sign_of(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

void note(AxiomReport& report, std::size_t& count, Counterexample c)
{
    if (count++ < kMaxCounterexamples)
        report.counterexamples.push_back(std::move(c));
}

void check_homogeneity(const StructureTable& t, AxiomReport& report)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.left->dim(); ++i)
        for (std::size_t j = 0; j < t.right->dim(); ++j) {
            const Vector& v = t(i, j);
            const int expected = t.left->parity(i) ^ t.right->parity(j);
            for (const auto& [k, _] : v.terms())
                if (t.target->parity(k) != expected) {
                    report.homogeneity_ok = false;
                    note(report, count, {"homogeneity", {i, j}, v, Vector(t.field)});
                    break;
                }
        }
}

} // namespace

AxiomReport validate_superalgebra(const StructureTable& t)
{
    AxiomReport report;
    if (!(*t.left == *t.right) || !(*t.left == *t.target))
        throw DimensionError("bracket table must map L x L -> L");
    const auto& b = *t.left;
    const std::size_t d = b.dim();
    check_homogeneity(t, report);

    std::size_t count = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const Vector expected = t(i, j).scaled(
                Scalar(t.field, static_cast<long>(-sign_of(b.parity(i) * b.parity(j)))));
            if (!(t(j, i) == expected)) {
                report.antisymmetry_ok = false;
                note(report, count, {"super-antisymmetry", {j, i}, t(j, i), expected});
            }
        }

    // With super-antisymmetry the Jacobiator is super-alternating, so canonical triples suffice.
    std::vector<IndexTuple> triples;
    if (report.antisymmetry_ok)
        triples = superalt_basis(b, 3);
    else
        for_each_tuple(d, 3, [&](const IndexTuple& x) { triples.push_back(x); });

    count = 0;
    for (const auto& x : triples) {
        const std::size_t a = x[0], bb = x[1], c = x[2];
        const Vector lhs = t.apply(Vector::unit(t.field, a), t(bb, c));
        Vector rhs = t.apply(t(a, bb), Vector::unit(t.field, c));
        rhs.add_scaled(t.apply(Vector::unit(t.field, bb), t(a, c)),
                       Scalar(t.field, static_cast<long>(sign_of(b.parity(a) * b.parity(bb)))));
        if (!(lhs == rhs)) {
            report.jacobi_ok = false;
            note(report, count, {"super Jacobi", x, lhs, rhs});
        }
    }
    return report;
}

std::string describe(const Counterexample& c, const GradedBasis& left, const GradedBasis& target)
{
    std::string s = c.axiom + " at (";
    for (std::size_t k = 0; k < c.indices.size(); ++k)
        s += (k ? ", " : "") + left.name(c.indices[k]);
    s += "): " + c.lhs.to_string(target) + " vs " + c.rhs.to_string(target);
    return s;
}

namespace {

void throw_if_failed(const AxiomReport& r, const GradedBasis& left, const GradedBasis& target)
{
    if (r.ok())
        return;
    const auto& c = r.counterexamples.front();
    throw ValidationError(c.axiom, describe(c, left, target));
}

} // namespace

LieSuperalgebra::LieSuperalgebra(StructureTable bracket) : table_(std::move(bracket))
{
    throw_if_failed(validate_superalgebra(table_), *table_.left, *table_.target);
}

StructureTable table_from_map(const MultilinearMap& bracket)
{
    if (bracket.arity() != 2 || bracket.parity() != 0)
        throw DimensionError("a bracket is an arity-2 map of parity 0");
    StructureTable t(bracket.field(), bracket.source(), bracket.source(), bracket.target());
    for (const auto& [idx, v] : bracket.components())
        t(idx[0], idx[1]) = v;
    return t;
}

LieSuperalgebra LieSuperalgebra::from_map(const MultilinearMap& bracket)
{
    return LieSuperalgebra(table_from_map(bracket));
}

MultilinearMap LieSuperalgebra::to_map() const
{
    MultilinearMap f(basis(), basis(), 2, 0, field());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (!bracket(i, j).is_zero())
                f.set({i, j}, bracket(i, j));
    return f;
}

bool LieSuperalgebra::operator==(const LieSuperalgebra& other) const
{
    return field() == other.field() && *basis() == *other.basis() &&
           table_.entries == other.table_.entries;
}

Vector bracket_eval(const LieSuperalgebra& l, const Vector& x, const Vector& y)
{
    for (const auto* v : {&x, &y})
        if (!v->terms().empty() && v->terms().rbegin()->first >= l.dim())
            throw DimensionError("vector does not live on the algebra basis");
    return l.bracket(x, y);
}

AxiomReport validate_module(const LieSuperalgebra& l, const StructureTable& t)
{
    if (!(*t.left == *l.basis()) || !(*t.right == *t.target))
        throw DimensionError("module action must map L x M -> M");
    AxiomReport report;
    check_homogeneity(t, report);
    const auto& b = *l.basis();
    std::size_t count = 0;
    const FieldSpec f = l.field();
    for (std::size_t a = 0; a < l.dim(); ++a)
        for (std::size_t c = 0; c < l.dim(); ++c)
            for (std::size_t m = 0; m < t.target->dim(); ++m) {
                const Vector lhs = t.apply(Vector::unit(f, a), t(c, m));
                Vector rhs = t.apply(l.bracket(a, c), Vector::unit(f, m));
                rhs.add_scaled(t.apply(Vector::unit(f, c), t(a, m)),
                               Scalar(f, static_cast<long>(sign_of(b.parity(a) * b.parity(c)))));
                if (!(lhs == rhs)) {
                    report.jacobi_ok = false;
                    Counterexample ce{"module axiom", {a, c, m}, lhs, rhs};
                    note(report, count, std::move(ce));
                }
            }
    return report;
}

LModule::LModule(const LieSuperalgebra& algebra, StructureTable action) : action_(std::move(action))
{
    if (!(action_.field == algebra.field()))
        throw FieldMismatch("module and algebra live over different fields");
    const auto r = validate_module(algebra, action_);
    if (!r.ok()) {
        const auto& c = r.counterexamples.front();
        std::string where = "(";
        for (std::size_t k = 0; k < c.indices.size(); ++k) {
            const bool in_module = k + 1 == c.indices.size();
            where += (k ? ", " : "") +
                     (in_module ? action_.target->name(c.indices[k])
                                : action_.left->name(c.indices[k]));
        }
        throw ValidationError(c.axiom, where + "): " + c.lhs.to_string(*action_.target) + " vs " +
                                           c.rhs.to_string(*action_.target));
    }
}

LModule LModule::adjoint(const LieSuperalgebra& algebra) { return {algebra, algebra.table()}; }

LModule LModule::trivial(const LieSuperalgebra& algebra, BasisPtr space)
{
    return {algebra, StructureTable(algebra.field(), algebra.basis(), space, space)};
}

bool LModule::operator==(const LModule& other) const
{
    return action_.field == other.action_.field && *action_.left == *other.action_.left &&
           *action_.target == *other.action_.target && action_.entries == other.action_.entries;
}

LModule adjoint_submodule(const LieSuperalgebra& l, const std::vector<std::string>& labels)
{
    std::vector<std::size_t> idx;
    std::vector<int> parities;
    for (const auto& name : labels)
        idx.push_back(l.basis()->index(name));
    // Keep evens first as GradedBasis requires.
    std::stable_partition(idx.begin(), idx.end(),
                          [&](std::size_t i) { return l.basis()->parity(i) == 0; });
    std::vector<std::string> names;
    std::vector<std::size_t> position(l.dim(), SIZE_MAX);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        names.push_back(l.basis()->name(idx[k]));
        parities.push_back(l.basis()->parity(idx[k]));
        position[idx[k]] = k;
    }
    auto space = make_basis(names, parities);
    StructureTable t(l.field(), l.basis(), space, space);
    for (std::size_t x = 0; x < l.dim(); ++x)
        for (std::size_t m = 0; m < idx.size(); ++m) {
            Vector v(l.field());
            for (const auto& [k, c] : l.bracket(x, idx[m]).terms()) {
                if (position[k] == SIZE_MAX)
                    throw ValidationError("submodule closure",
                                          "[" + l.basis()->name(x) + ", " + names[m] +
                                              "] leaves the span");
                v.add(position[k], c);
            }
            t(x, m) = std::move(v);
        }
    return {l, std::move(t)};
}

namespace {

std::vector<Scalar> dense(const Vector& v, std::size_t d)
{
    std::vector<Scalar> out(d, Scalar(v.field()));
    for (const auto& [i, c] : v.terms())
        out[i] = c;
    return out;
}

} // namespace

LieSuperalgebra subalgebra(const LieSuperalgebra& l, std::vector<std::string> names,
                           std::vector<int> parities, const std::vector<Vector>& spanning)
{
    const FieldSpec f = l.field();
    auto basis = make_basis(std::move(names), std::move(parities));
    if (spanning.size() != basis->dim())
        throw DimensionError("subalgebra: one spanning vector per basis label expected");
    std::vector<std::vector<Scalar>> cols;
    for (const auto& v : spanning)
        cols.push_back(dense(v, l.dim()));
    const Matrix span = Matrix::from_columns(f, l.dim(), cols);
    if (linalg::rank(span) != spanning.size())
        throw DimensionError("subalgebra: spanning vectors are linearly dependent");

    const std::size_t k = spanning.size();
    Matrix rhs(f, l.dim(), k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto col = dense(l.bracket(spanning[i], spanning[j]), l.dim());
            for (std::size_t r = 0; r < l.dim(); ++r)
                rhs(r, i * k + j) = col[r];
        }
    auto sol = linalg::solve(span, rhs);
    if (!sol)
        throw ValidationError("subalgebra closure", "a bracket of spanning vectors leaves the span");
    StructureTable t(f, basis, basis, basis);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Vector v(f);
            for (std::size_t r = 0; r < k; ++r)
                v.add(r, (*sol)(r, i * k + j));
            t(i, j) = std::move(v);
        }
    return LieSuperalgebra(std::move(t));
}

LieSuperalgebra make_abelian(BasisPtr basis, FieldSpec field)
{
    return LieSuperalgebra(StructureTable(field, basis, basis, basis));
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
direct_sum_positions(const GradedBasis& a, const GradedBasis& b)
{
    std::vector<std::size_t> pa(a.dim()), pb(b.dim());
    std::size_t next = 0;
    for (std::size_t i = 0; i < a.even_dim(); ++i)
        pa[i] = next++;
    for (std::size_t i = 0; i < b.even_dim(); ++i)
        pb[i] = next++;
    for (std::size_t i = a.even_dim(); i < a.dim(); ++i)
        pa[i] = next++;
    for (std::size_t i = b.even_dim(); i < b.dim(); ++i)
        pb[i] = next++;
    return {pa, pb};
}

BasisPtr direct_sum_basis(const GradedBasis& ba, const GradedBasis& bb, const std::string& suffix)
{
    const auto [pa, pb] = direct_sum_positions(ba, bb);
    const std::size_t d = ba.dim() + bb.dim();
    std::vector<std::string> names(d);
    std::vector<int> parities(d);
    for (std::size_t i = 0; i < ba.dim(); ++i) {
        names[pa[i]] = ba.name(i);
        parities[pa[i]] = ba.parity(i);
    }
    for (std::size_t i = 0; i < bb.dim(); ++i) {
        std::string name = bb.name(i);
        while (ba.find(name) || bb.find(name).value_or(i) != i)
            name += suffix;
        names[pb[i]] = name;
        parities[pb[i]] = bb.parity(i);
    }
    return make_basis(names, parities);
}

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b,
                           const std::string& suffix)
{
    if (!(a.field() == b.field()))
        throw FieldMismatch("direct sum of algebras over different fields");
    const auto [pa, pb] = direct_sum_positions(*a.basis(), *b.basis());
    const auto basis = direct_sum_basis(*a.basis(), *b.basis(), suffix);
    StructureTable t(a.field(), basis, basis, basis);
    auto copy = [&](const LieSuperalgebra& src, const std::vector<std::size_t>& pos) {
        for (std::size_t i = 0; i < src.dim(); ++i)
            for (std::size_t j = 0; j < src.dim(); ++j) {
                Vector v(src.field());
                for (const auto& [k, c] : src.bracket(i, j).terms())
                    v.add(pos[k], c);
                t(pos[i], pos[j]) = std::move(v);
            }
    };
    copy(a, pa);
    copy(b, pb);
    return LieSuperalgebra(std::move(t));
}

std::string gl_label(std::size_t m, std::size_t n, std::size_t i, std::size_t j)
{
    if (m + n <= 9)
        return "e" + std::to_string(i + 1) + std::to_string(j + 1);
    return "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

std::vector<std::pair<std::size_t, std::size_t>> gl_positions(std::size_t m, std::size_t n)
{
    const std::size_t d = m + n;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (int parity = 0; parity <= 1; ++parity)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (static_cast<int>((i >= m) ^ (j >= m)) == parity)
                    out.emplace_back(i, j);
    return out;
}

LieSuperalgebra make_gl(std::size_t m, std::size_t n, FieldSpec field)
{
    if (m + n == 0)
        throw DimensionError("gl(m|n) needs m + n >= 1");
    const auto pos = gl_positions(m, n);
    const std::size_t d = m + n;
    std::vector<std::size_t> index_of(d * d);
    std::vector<std::string> names;
    std::vector<int> parities;
    for (std::size_t k = 0; k < pos.size(); ++k) {
        const auto [i, j] = pos[k];
        index_of[i * d + j] = k;
        names.push_back(gl_label(m, n, i, j));
        parities.push_back((i >= m) ^ (j >= m));
    }
    auto basis = make_basis(names, parities);
    StructureTable t(field, basis, basis, basis);
    const Scalar one = Scalar::one(field);
    for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = 0; b < pos.size(); ++b) {
            // [e_ij, e_kl] = delta_jk e_il - (-1)^{|a||b|} delta_li e_kj
            const auto [i, j] = pos[a];
            const auto [k, l] = pos[b];
            Vector v(field);
            if (j == k)
                v.add(index_of[i * d + l], one);
            if (l == i)
                v.add(index_of[k * d + j], one.signed_by(-sign_of(parities[a] * parities[b])));
            t(a, b) = std::move(v);
        }
    return LieSuperalgebra(std::move(t));
}

Scalar supertrace(std::size_t m, std::size_t n, const Vector& a)
{
    const auto pos = gl_positions(m, n);
    Scalar s(a.field());
    for (const auto& [k, c] : a.terms()) {
        if (k >= pos.size())
            throw DimensionError("vector does not live on the gl(m|n) basis");
        const auto [i, j] = pos[k];
        if (i == j)
            s += i < m ? c : -c;
    }
    return s;
}

std::vector<Vector> sl_in_gl(std::size_t m, std::size_t n, FieldSpec field)
{
    const auto pos = gl_positions(m, n);
    const std::size_t d = m + n;
    auto idx = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (pos[k] == std::pair{i, j})
                return k;
        throw DimensionError("gl position out of range");
    };
    std::vector<Vector> even, odd;
    const Scalar one = Scalar::one(field);
    for (std::size_t k = 0; k + 1 < d; ++k) {
        // e_kk and e_{k+1,k+1} carry opposite supertrace signs only across the block boundary.
        Vector h(field);
        h.add(idx(k, k), one);
        h.add(idx(k + 1, k + 1), k + 1 == m ? one : -one);
        even.push_back(std::move(h));
    }
    for (const auto& [i, j] : pos) {
        if (i == j)
            continue;
        ((i >= m) == (j >= m) ? even : odd).push_back(Vector::unit(field, idx(i, j)));
    }
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
}

LieSuperalgebra make_sl(std::size_t m, std::size_t n, FieldSpec field)
{
    if (m + n < 2)
        throw DimensionError("sl(m|n) needs m + n >= 2");
    const auto gl = make_gl(m, n, field);
    const auto vectors = sl_in_gl(m, n, field);
    std::vector<std::string> names;
    std::vector<int> parities;
    for (const auto& v : vectors) {
        const std::size_t k = v.terms().begin()->first;
        const bool diagonal = v.terms().size() == 2;
        names.push_back(diagonal ? "h" + std::to_string(names.size() + 1) : gl.basis()->name(k));
        parities.push_back(gl.basis()->parity(k));
    }
    return subalgebra(gl, std::move(names), std::move(parities), vectors);
}

namespace {

using Mat2 = std::array<std::array<Scalar, 2>, 2>;

Mat2 mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d)
{
    return {{{a, b}, {c, d}}};
}

Mat2 mul2(const Mat2& x, const Mat2& y)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

Mat2 sub2(const Mat2& x, const Mat2& y)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][j] - y[i][j];
    return r;
}

Mat2 scale2(const Mat2& x, const Scalar& s)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = x[i][j] * s;
    return r;
}

} // namespace

LieSuperalgebra make_super_poincare(Metric eta)
{
    const FieldSpec f = FieldSpec::cyclotomic(4);
    const Scalar zero(f), one = Scalar::one(f), i = root_of_unity(f, 1);

    std::vector<std::pair<int, int>> jpairs;
    std::vector<std::string> names;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            jpairs.emplace_back(a, b);
            names.push_back("J" + std::to_string(a) + std::to_string(b));
        }
    for (int mu = 0; mu < 4; ++mu)
        names.push_back("P" + std::to_string(mu));
    for (const char* q : {"Q1", "Q2", "Qb1", "Qb2"})
        names.push_back(q);
    std::vector<int> parities(10, 0);
    parities.resize(14, 1);
    auto basis = make_basis(names, parities);

    auto j_index = [&](int a, int b) -> std::size_t {
        for (std::size_t k = 0; k < jpairs.size(); ++k)
            if (jpairs[k] == std::pair{std::min(a, b), std::max(a, b)})
                return k;
        throw DimensionError("J index");
    };
    // J^{ab} as a vector, using J^{ba} = -J^{ab} and J^{aa} = 0.
    auto jvec = [&](int a, int b) {
        Vector v(f);
        if (a != b)
            v.add(j_index(a, b), a < b ? one : -one);
        return v;
    };
    auto p_index = [](int mu) -> std::size_t { return 6 + mu; };
    auto g = [&](int a, int b) { return a == b ? Scalar(f, static_cast<long>(eta.diag[a])) : zero; };

    const Mat2 id = mat2(one, zero, zero, one);
    const std::array<Mat2, 4> sigma = {id, mat2(zero, one, one, zero),
                                       mat2(zero, -i, i, zero), mat2(one, zero, zero, -one)};
    std::array<Mat2, 4> sigma_bar = sigma;
    for (int k = 1; k < 4; ++k)
        sigma_bar[k] = scale2(sigma[k], -one);
    const Scalar quarter_i = i * Scalar(f, Rational(-1, 4));
    auto sigma_mn = [&](int a, int b) {
        return scale2(sub2(mul2(sigma[a], sigma_bar[b]), mul2(sigma[b], sigma_bar[a])), quarter_i);
    };
    auto sigma_bar_mn = [&](int a, int b) {
        return scale2(sub2(mul2(sigma_bar[a], sigma[b]), mul2(sigma_bar[b], sigma[a])), quarter_i);
    };

    StructureTable t(f, basis, basis, basis);
    auto set_pair = [&](std::size_t a, std::size_t b, const Vector& v) {
        t(a, b) = v;
        const int s = (parities[a] & parities[b]) ? 1 : -1;
        t(b, a) = v.scaled(Scalar(f, static_cast<long>(s)));
    };

    // i[J^{mn}, J^{rs}] = g^{nr} J^{ms} - g^{mr} J^{ns} - g^{sm} J^{rn} + g^{sn} J^{rm}
    for (std::size_t x = 0; x < jpairs.size(); ++x)
        for (std::size_t y = 0; y < jpairs.size(); ++y) {
            const auto [m, n] = jpairs[x];
            const auto [r, s] = jpairs[y];
            Vector v(f);
            v.add_scaled(jvec(m, s), g(n, r));
            v.add_scaled(jvec(n, s), -g(m, r));
            v.add_scaled(jvec(r, n), -g(s, m));
            v.add_scaled(jvec(r, m), g(s, n));
            t(x, y) = v.scaled(-i);
        }
    // i[P^mu, J^{rs}] = g^{mu r} P^s - g^{mu s} P^r
    for (int mu = 0; mu < 4; ++mu)
        for (std::size_t y = 0; y < jpairs.size(); ++y) {
            const auto [r, s] = jpairs[y];
            Vector v(f);
            v.add(p_index(s), g(mu, r));
            v.add(p_index(r), -g(mu, s));
            set_pair(p_index(mu), y, v.scaled(-i));
        }
    // [Q_a, J^{mn}] = (sigma^{mn})_a^b Q_b, and likewise for Qb with sigma-bar^{mn}.
    for (std::size_t y = 0; y < jpairs.size(); ++y) {
        const auto [m, n] = jpairs[y];
        const Mat2 s = sigma_mn(m, n), sb = sigma_bar_mn(m, n);
        for (int a = 0; a < 2; ++a) {
            Vector q(f), qb(f);
            for (int b = 0; b < 2; ++b) {
                q.add(10 + b, s[a][b]);
                qb.add(12 + b, sb[a][b]);
            }
            set_pair(10 + a, y, q);
            set_pair(12 + a, y, qb);
        }
    }
    // {Q_a, Qb^bd} = 2 sigma^mu_{a c} eps^{bd c} P_mu with eps^{12} = +1 and P_mu = g_{mu mu} P^mu.
    const int eps[2][2] = {{0, 1}, {-1, 0}};
    for (int a = 0; a < 2; ++a)
        for (int bd = 0; bd < 2; ++bd) {
            Vector v(f);
            for (int mu = 0; mu < 4; ++mu) {
                Scalar c(f);
                for (int k = 0; k < 2; ++k)
                    if (eps[bd][k] != 0)
                        c += sigma[mu][a][k] * Scalar(f, static_cast<long>(2 * eps[bd][k]));
                v.add(p_index(mu), c * g(mu, mu));
            }
            set_pair(10 + a, 12 + bd, v);
        }
    return LieSuperalgebra(std::move(t));
}

} // namespace supercohom
