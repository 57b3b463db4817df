#include "supercohom/group.hpp"

#include "supercohom/error.hpp"
#include "supercohom/parallel.hpp"

#include <functional>
#include <map>
#include <set>

namespace supercohom {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<std::size_t>> table, std::vector<int> parities)
    : names_(std::move(names)), table_(std::move(table)), parities_(std::move(parities))
{
    const std::size_t n = names_.size();
    if (n == 0)
        throw ValidationError("group order", "a group needs at least one element");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
        throw ValidationError("group elements", "duplicate element name");
    if (parities_.empty())
        parities_.assign(n, 0);
    if (parities_.size() != n)
        throw DimensionError("group parity tags do not match the element count");
    if (table_.size() != n)
        throw DimensionError("Cayley table must have one row per element");
    for (std::size_t a = 0; a < n; ++a) {
        if (table_[a].size() != n)
            throw DimensionError("Cayley table row " + names_[a] + " has the wrong length");
        std::vector<bool> seen_row(n, false);
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t c = table_[a][b];
            if (c >= n)
                throw ValidationError("group closure", names_[a] + "*" + names_[b] + " out of range");
            if (seen_row[c])
                throw ValidationError("group Latin square", "row " + names_[a] + " repeats " + names_[c]);
            seen_row[c] = true;
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<bool> seen_col(n, false);
        for (std::size_t a = 0; a < n; ++a) {
            if (seen_col[table_[a][b]])
                throw ValidationError("group Latin square",
                                      "column " + names_[b] + " repeats " + names_[table_[a][b]]);
            seen_col[table_[a][b]] = true;
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool is_identity = true;
        for (std::size_t a = 0; a < n && is_identity; ++a)
            is_identity = table_[e][a] == a && table_[a][e] == a;
        if (is_identity) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw ValidationError("group identity", "no two-sided identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw ValidationError("group associativity",
                                          "(" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
    inverses_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_)
                inverses_[a] = b;
}

std::size_t FiniteGroup::index(const std::string& name) const
{
    for (std::size_t a = 0; a < names_.size(); ++a)
        if (names_[a] == name)
            return a;
    throw DimensionError("unknown group element '" + name + "'");
}

FiniteGroup cyclic_group(std::size_t m)
{
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < m; ++b)
            table[a][b] = (a + b) % m;
    }
    return {names, table};
}

FiniteGroup klein_group()
{
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            table[a][b] = a ^ b;
    return {{"e", "a", "b", "c"}, table};
}

FiniteGroup trivial_group() { return cyclic_group(1); }

ActionRep::ActionRep(FiniteGroup group, BasisPtr space, FieldSpec field,
                     std::vector<Matrix> matrices)
    : group_(std::move(group)), space_(std::move(space)), field_(field),
      matrices_(std::move(matrices))
{
    if (matrices_.size() != group_.order())
        throw DimensionError("action needs one matrix per group element");
    for (const auto& m : matrices_) {
        if (m.rows() != space_->dim() || m.cols() != space_->dim())
            throw DimensionError("action matrix has the wrong size");
        if (!(m.field() == field_))
            throw FieldMismatch("action matrix over the wrong field");
    }
}

ActionRep ActionRep::trivial(FiniteGroup group, BasisPtr space, FieldSpec field)
{
    std::vector<Matrix> mats(group.order(), Matrix::identity(field, space->dim()));
    return {std::move(group), std::move(space), field, std::move(mats)};
}

Vector ActionRep::apply(std::size_t g, const Vector& v) const
{
    const Matrix& m = matrices_[g];
    Vector out(field_);
    for (const auto& [j, c] : v.terms())
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero())
                out.add(i, m(i, j) * c);
    return out;
}

bool ActionRep::operator==(const ActionRep& other) const
{
    return group_ == other.group_ && *space_ == *other.space_ && field_ == other.field_ &&
           matrices_ == other.matrices_;
}

namespace {

void fail(bool& flag, ActionReport& r, std::string message)
{
    flag = false;
    if (r.failures.size() < kMaxCounterexamples)
        r.failures.push_back(std::move(message));
}

} // namespace

ActionReport validate_action(const ActionRep& rep)
{
    ActionReport r;
    const auto& g = rep.group();
    const auto& b = *rep.space();
    for (std::size_t a = 0; a < g.order(); ++a)
        if (g.parity(a) != 0)
            fail(r.group_even_ok, r,
                 "group element " + g.name(a) +
                     " is odd; only groups with empty odd part (G1 = {}) are supported");
    if (!(rep.matrix(g.identity()) == Matrix::identity(rep.field(), b.dim())))
        fail(r.identity_ok, r, "the identity element does not act as the identity");
    for (std::size_t a = 0; a < g.order(); ++a) {
        const Matrix& m = rep.matrix(a);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                if (b.parity(i) != b.parity(j) && !m(i, j).is_zero())
                    fail(r.degree_ok, r,
                         "element " + g.name(a) + " maps " + b.name(j) + " onto " + b.name(i) +
                             " of the other parity");
    }
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = 0; y < g.order(); ++y)
            if (!(rep.matrix(x) * rep.matrix(y) == rep.matrix(g.mul(x, y))))
                fail(r.homomorphism_ok, r,
                     "rho(" + g.name(x) + ") rho(" + g.name(y) + ") != rho(" +
                         g.name(g.mul(x, y)) + ")");
    return r;
}

ActionReport validate_action(const ActionRep& rep, const LieSuperalgebra& l)
{
    if (!(*rep.space() == *l.basis()))
        throw DimensionError("action and algebra bases differ");
    ActionReport r = validate_action(rep);
    const FieldSpec f = l.field();
    for (std::size_t a = 0; a < rep.group().order(); ++a) {
        std::vector<Vector> images;
        for (std::size_t i = 0; i < l.dim(); ++i)
            images.push_back(rep.apply(a, Vector::unit(f, i)));
        for (std::size_t i = 0; i < l.dim(); ++i)
            for (std::size_t j = 0; j < l.dim(); ++j)
                if (!(l.bracket(images[i], images[j]) == rep.apply(a, l.bracket(i, j))))
                    fail(r.bracket_ok, r,
                         "[g" + l.basis()->name(i) + ", g" + l.basis()->name(j) + "] != g[" +
                             l.basis()->name(i) + ", " + l.basis()->name(j) +
                             "] for g = " + rep.group().name(a));
    }
    return r;
}

ActionReport validate_module_action(const ActionRep& on_l, const ActionRep& on_m, const LModule& m)
{
    if (!(on_l.group() == on_m.group()))
        throw DimensionError("algebra and module actions use different groups");
    if (!(*on_m.space() == *m.space()) || !(*on_l.space() == *m.algebra_basis()))
        throw DimensionError("action bases do not match the module");
    ActionReport r = validate_action(on_m);
    const FieldSpec f = m.field();
    for (std::size_t a = 0; a < on_l.group().order(); ++a)
        for (std::size_t x = 0; x < m.algebra_basis()->dim(); ++x) {
            const Vector gx = on_l.apply(a, Vector::unit(f, x));
            for (std::size_t k = 0; k < m.dim(); ++k)
                if (!(m.act(gx, on_m.apply(a, Vector::unit(f, k))) == on_m.apply(a, m.act(x, k))))
                    fail(r.bracket_ok, r,
                         "[g" + m.algebra_basis()->name(x) + ", g" + m.space()->name(k) +
                             "] != g[" + m.algebra_basis()->name(x) + ", " + m.space()->name(k) +
                             "] for g = " + on_l.group().name(a));
        }
    return r;
}

void require_ok(const ActionReport& report)
{
    if (report.ok())
        return;
    const char* axiom = !report.group_even_ok   ? "group parity"
                        : !report.identity_ok   ? "action identity"
                        : !report.degree_ok     ? "action degree"
                        : !report.homomorphism_ok ? "action homomorphism"
                                                  : "action equivariance";
    throw ValidationError(axiom, report.failures.empty() ? "" : report.failures.front());
}

Matrix induced_cochain_matrix(const CochainSpace& space, const Matrix& source_inverse,
                              const Matrix& target)
{
    const FieldSpec f = target.field();
    const auto& src = *space.source();
    const std::size_t nt = space.tuples().size();
    const std::size_t dm = space.target()->dim();

    // c[s][t]: coefficient of f(t) in f(A e_{s_1}, ..., A e_{s_n}), A = source_inverse.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(src.dim());
    for (std::size_t j = 0; j < src.dim(); ++j)
        for (std::size_t i = 0; i < src.dim(); ++i)
            if (!source_inverse(i, j).is_zero())
                columns[j].emplace_back(i, source_inverse(i, j));

    Matrix out(f, space.dim(), space.dim());
    IndexTuple j(space.arity());
    for (std::size_t s = 0; s < nt; ++s) {
        const IndexTuple& tuple = space.tuples()[s];
        std::map<std::size_t, Scalar> c;
        std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& coef) {
            if (k == tuple.size()) {
                auto canon = canonicalize(src, j);
                if (!canon)
                    return;
                const std::size_t t = *space.position(canon->tuple);
                auto [it, inserted] = c.try_emplace(t, f);
                it->second += coef.signed_by(canon->sign);
                return;
            }
            for (const auto& [i, a] : columns[tuple[k]]) {
                j[k] = i;
                rec(k + 1, coef * a);
            }
        };
        rec(0, Scalar::one(f));
        for (const auto& [t, coef] : c) {
            if (coef.is_zero())
                continue;
            for (std::size_t mr = 0; mr < dm; ++mr)
                for (std::size_t mc = 0; mc < dm; ++mc)
                    if (!target(mr, mc).is_zero())
                        out(space.coordinate(s, mr), space.coordinate(t, mc)) = coef * target(mr, mc);
        }
    }
    return out;
}

std::vector<Matrix> induced_action_on_cochains(const ActionRep& on_l, const ActionRep& on_m,
                                               const CochainSpace& space)
{
    if (!(on_l.group() == on_m.group()))
        throw DimensionError("algebra and module actions use different groups");
    const auto& g = on_l.group();
    std::vector<Matrix> out(g.order());
    parallel_for(g.order(), [&](std::size_t a) {
        out[a] = induced_cochain_matrix(space, on_l.matrix(g.inverse(a)), on_m.matrix(a));
    });
    return out;
}

Matrix reynolds_projector(const FiniteGroup& group, const std::vector<Matrix>& rep)
{
    Matrix p = rep.at(0);
    for (std::size_t a = 1; a < rep.size(); ++a)
        p = p + rep[a];
    return p.scaled(Scalar(p.field(), Rational(1, static_cast<long>(group.order()))));
}

Matrix equivariant_subspace(const FiniteGroup& group, const std::vector<Matrix>& rep)
{
    if (rep.size() != group.order())
        throw DimensionError("one matrix per group element expected");
    const FieldSpec f = rep.front().field();
    const std::size_t n = rep.front().rows();
    if (group.order() == 1)
        return Matrix::identity(f, n);

    const Matrix p = reynolds_projector(group, rep);
    const Matrix by_average = linalg::column_space(p);

    Matrix stacked(f, 0, n);
    const Matrix id = Matrix::identity(f, n);
    for (std::size_t a = 0; a < group.order(); ++a)
        if (a != group.identity())
            stacked = Matrix::vstack(stacked, rep[a] - id);
    const Matrix by_kernel = linalg::nullspace(stacked);

    // Both are bases, so equal spans means equal sizes and no growth in rank when joined.
    if (by_average.cols() != by_kernel.cols() ||
        linalg::rank(Matrix::hstack(by_average, by_kernel)) != by_average.cols())
        throw OracleDisagreement("fixed subspace: Reynolds image (dim " +
                                 std::to_string(by_average.cols()) + ") and kernel (dim " +
                                 std::to_string(by_kernel.cols()) + ") differ");
    if (!(p.trace() == Scalar(f, static_cast<long>(by_average.cols()))))
        throw OracleDisagreement("fixed subspace dimension " + std::to_string(by_average.cols()) +
                                 " contradicts the character formula " + p.trace().to_string());
    return by_average;
}

} // namespace supercohom
