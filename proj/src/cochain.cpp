#include "supercohom/cochain.hpp"

#include "supercohom/error.hpp"
#include "supercohom/parallel.hpp"

#include <functional>

namespace supercohom {

namespace {

int sign_of(std::size_t exponent) { return exponent % 2 == 0 ? 1 : -1; }

IndexTuple without(const IndexTuple& x, std::size_t a)
{
    IndexTuple r;
    r.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (k != a)
            r.push_back(x[k]);
    return r;
}

IndexTuple without(const IndexTuple& x, std::size_t a, std::size_t b)
{
    IndexTuple r;
    r.reserve(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        if (k != a && k != b)
            r.push_back(x[k]);
    return r;
}

} // namespace

Cochain::Cochain(SpacePtr space, int parity, FieldSpec field)
    : space_(std::move(space)), parity_(parity & 1), field_(field),
      coords_(space_->dim(), Scalar(field))
{
}

Cochain::Cochain(SpacePtr space, int parity, FieldSpec field, std::vector<Scalar> coords)
    : space_(std::move(space)), parity_(parity & 1), field_(field), coords_(std::move(coords))
{
    if (coords_.size() != space_->dim())
        throw DimensionError("cochain has " + std::to_string(coords_.size()) +
                             " coordinates, space has " + std::to_string(space_->dim()));
    for (std::size_t c = 0; c < coords_.size(); ++c)
        if (!coords_[c].is_zero() && space_->coordinate_parity(c) != parity_)
            throw ValidationError("homogeneity", "cochain coordinate " + std::to_string(c) +
                                                     " has the wrong parity");
}

bool Cochain::is_zero() const
{
    for (const auto& s : coords_)
        if (!s.is_zero())
            return false;
    return true;
}

Vector Cochain::value(std::size_t tuple_pos) const
{
    Vector v(field_);
    const std::size_t dm = space_->target()->dim();
    for (std::size_t m = 0; m < dm; ++m)
        v.add(m, coords_[space_->coordinate(tuple_pos, m)]);
    return v;
}

void Cochain::set_value(std::size_t tuple_pos, const Vector& v)
{
    const std::size_t dm = space_->target()->dim();
    for (std::size_t m = 0; m < dm; ++m) {
        const Scalar c = v.coeff(m);
        const std::size_t coord = space_->coordinate(tuple_pos, m);
        if (!c.is_zero() && space_->coordinate_parity(coord) != parity_)
            throw ValidationError("homogeneity", "value of the wrong parity on tuple " +
                                                     std::to_string(tuple_pos));
        coords_[coord] = c;
    }
}

Vector Cochain::at(const IndexTuple& tuple) const
{
    if (tuple.size() != arity())
        throw DimensionError("cochain evaluated on a tuple of the wrong length");
    auto c = canonicalize(*space_->source(), tuple);
    if (!c)
        return Vector(field_);
    const Vector v = value(*space_->position(c->tuple));
    return c->sign > 0 ? v : -v;
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const
{
    if (args.size() != arity())
        throw DimensionError("cochain evaluated with the wrong number of arguments");
    Vector out(field_);
    IndexTuple idx(arity());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t k, const Scalar& c) {
        if (k == idx.size()) {
            out.add_scaled(at(idx), c);
            return;
        }
        for (const auto& [i, a] : args[k].terms()) {
            idx[k] = i;
            rec(k + 1, c * a);
        }
    };
    rec(0, Scalar::one(field_));
    return out;
}

MultilinearMap Cochain::to_map() const
{
    std::vector<Vector> values;
    for (std::size_t t = 0; t < space_->tuples().size(); ++t)
        values.push_back(value(t));
    return superalt_expand(space_->source(), space_->target(), arity(), parity_, field_, values);
}

Cochain Cochain::from_map(SpacePtr space, const MultilinearMap& f)
{
    if (!(*f.source() == *space->source()) || !(*f.target() == *space->target()) ||
        f.arity() != space->arity())
        throw DimensionError("map does not match the cochain space");
    if (!is_super_alternating(f))
        throw ValidationError("super-alternation", "map is not super-alternating");
    Cochain c(space, f.parity(), f.field());
    const auto values = restrict_to_canonical(f);
    for (std::size_t t = 0; t < values.size(); ++t)
        c.set_value(t, values[t]);
    return c;
}

void Cochain::check_compatible(const Cochain& other) const
{
    if (!(*space_ == *other.space_))
        throw DimensionError("cochains live in different spaces");
    if (parity_ != other.parity_ && !is_zero() && !other.is_zero())
        throw ValidationError("homogeneity", "adding cochains of different parity");
}

Cochain& Cochain::operator+=(const Cochain& other)
{
    check_compatible(other);
    if (is_zero())
        parity_ = other.parity_;
    for (std::size_t c = 0; c < coords_.size(); ++c)
        if (!other.coords_[c].is_zero())
            coords_[c] += other.coords_[c];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& other)
{
    check_compatible(other);
    if (is_zero())
        parity_ = other.parity_;
    for (std::size_t c = 0; c < coords_.size(); ++c)
        if (!other.coords_[c].is_zero())
            coords_[c] -= other.coords_[c];
    return *this;
}

Cochain Cochain::scaled(const Scalar& s) const
{
    Cochain r = *this;
    for (auto& c : r.coords_)
        if (!c.is_zero())
            c *= s;
    return r;
}

bool Cochain::operator==(const Cochain& other) const
{
    return *space_ == *other.space_ && coords_ == other.coords_ &&
           (parity_ == other.parity_ || is_zero());
}

CochainComplex::CochainComplex(LieSuperalgebra l, LModule m)
    : CochainComplex(l, m, ActionRep::trivial(trivial_group(), l.basis(), l.field()),
                     ActionRep::trivial(trivial_group(), m.space(), l.field()))
{
}

CochainComplex::CochainComplex(LieSuperalgebra l, LModule m, ActionRep on_l, ActionRep on_m)
    : l_(std::move(l)), m_(std::move(m)), on_l_(std::move(on_l)), on_m_(std::move(on_m))
{
    if (!(*m_.algebra_basis() == *l_.basis()))
        throw DimensionError("module is over a different algebra basis");
    require_ok(validate_action(on_l_, l_));
    require_ok(validate_module_action(on_l_, on_m_, m_));
}

SpacePtr CochainComplex::space(std::size_t n) const
{
    std::lock_guard lock(cache_mutex_);
    auto& slot = spaces_[n];
    if (!slot)
        slot = std::make_shared<const CochainSpace>(l_.basis(), m_.space(), n);
    return slot;
}

Cochain CochainComplex::zero(std::size_t n, int parity) const
{
    return Cochain(space(n), parity, field());
}

Cochain CochainComplex::coboundary(const Cochain& f) const
{
    const std::size_t n = f.arity();
    if (!(*f.space() == *space(n)))
        throw DimensionError("cochain does not belong to this complex");
    const auto out_space = space(n + 1);
    Cochain out(out_space, f.parity(), field());
    const auto& b = *l_.basis();
    const FieldSpec fs = field();
    for (std::size_t px = 0; px < out_space->tuples().size(); ++px) {
        const IndexTuple& x = out_space->tuples()[px];
        std::vector<int> p(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            p[k] = b.parity(x[k]);
        Vector acc(fs);
        // Positions below are 0-based, so i + j keeps the parity of the 1-based sum.
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::size_t prefix = 0;
            for (std::size_t k = 0; k < i; ++k)
                prefix += p[k];
            std::size_t between = 0;
            for (std::size_t j = i + 1; j < x.size(); between += p[j], ++j) {
                const std::size_t e = i + j + (p[i] + p[j]) * prefix + p[j] * between;
                const IndexTuple rest = without(x, i, j);
                for (const auto& [k, c] : l_.bracket(x[i], x[j]).terms()) {
                    IndexTuple arg{k};
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    acc.add_scaled(f.at(arg), c.signed_by(sign_of(e)));
                }
            }
            const std::size_t e = i + p[i] * (f.parity() + prefix);
            const Vector inner = f.at(without(x, i));
            acc.add_scaled(m_.act(Vector::unit(fs, x[i]), inner), Scalar(fs, long(sign_of(e))));
        }
        out.set_value(px, acc);
    }
    return out;
}

Matrix CochainComplex::assemble(std::size_t n, int parity) const
{
    const auto src = space(n);
    const auto dst = space(n + 1);
    const auto rows = dst->parity_coordinates(parity);
    const auto cols = src->parity_coordinates(parity);
    std::vector<long> row_of(dst->dim(), -1), col_of(src->dim(), -1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of[rows[r]] = static_cast<long>(r);
    for (std::size_t c = 0; c < cols.size(); ++c)
        col_of[cols[c]] = static_cast<long>(c);

    const FieldSpec fs = field();
    const auto& b = *l_.basis();
    const std::size_t dm = m_.dim();
    Matrix d(fs, rows.size(), cols.size());

    for (std::size_t px = 0; px < dst->tuples().size(); ++px) {
        const IndexTuple& x = dst->tuples()[px];
        std::vector<std::size_t> p(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            p[k] = static_cast<std::size_t>(b.parity(x[k]));

        // Bracket terms: the coefficient of f(t) is the same for every module index m.
        std::map<std::size_t, Scalar> coef;
        std::size_t prefix = 0;
        for (std::size_t i = 0; i < x.size(); prefix += p[i], ++i) {
            std::size_t between = 0;
            for (std::size_t j = i + 1; j < x.size(); between += p[j], ++j) {
                const int s = sign_of(i + j + (p[i] + p[j]) * prefix + p[j] * between);
                const IndexTuple rest = without(x, i, j);
                for (const auto& [k, c] : l_.bracket(x[i], x[j]).terms()) {
                    IndexTuple arg{k};
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    auto canon = canonicalize(b, arg);
                    if (!canon)
                        continue;
                    auto [it, _] = coef.try_emplace(*src->position(canon->tuple), fs);
                    it->second += c.signed_by(s * canon->sign);
                }
            }
        }
        for (const auto& [t, c] : coef) {
            if (c.is_zero())
                continue;
            for (std::size_t m = 0; m < dm; ++m) {
                const long r = row_of[dst->coordinate(px, m)];
                const long cc = col_of[src->coordinate(t, m)];
                if (r >= 0 && cc >= 0)
                    d(r, cc) += c;
            }
        }

        // Action terms: [x_i, f(x without x_i)], the sign depending on the cochain parity.
        prefix = 0;
        for (std::size_t i = 0; i < x.size(); prefix += p[i], ++i) {
            const std::size_t t = *src->position(without(x, i));
            const int s = sign_of(i + p[i] * (static_cast<std::size_t>(parity) + prefix));
            for (std::size_t m = 0; m < dm; ++m) {
                const long cc = col_of[src->coordinate(t, m)];
                if (cc < 0)
                    continue;
                for (const auto& [mo, c] : m_.act(x[i], m).terms()) {
                    const long r = row_of[dst->coordinate(px, mo)];
                    if (r >= 0)
                        d(r, cc) += c.signed_by(s);
                }
            }
        }
    }
    return d;
}

Matrix CochainComplex::coboundary_matrix(std::size_t n, int parity) const
{
    return assemble(n, parity & 1);
}

std::vector<Matrix> CochainComplex::induced_block_action(std::size_t n, int parity) const
{
    const auto sp = space(n);
    const auto block = sp->parity_coordinates(parity);
    auto full = induced_action_on_cochains(on_l_, on_m_, *sp);
    std::vector<Matrix> out;
    for (const auto& m : full)
        out.push_back(m.submatrix(block, block));
    return out;
}

const Matrix& CochainComplex::equivariant_basis(std::size_t n, int parity) const
{
    const auto key = std::pair{n, parity & 1};
    {
        std::lock_guard lock(cache_mutex_);
        auto it = equivariant_.find(key);
        if (it != equivariant_.end())
            return *it->second;
    }
    Matrix basis;
    if (on_l_.group().order() == 1)
        basis = Matrix::identity(field(), space(n)->parity_coordinates(parity & 1).size());
    else
        basis = equivariant_subspace(on_l_.group(), induced_block_action(n, parity & 1));
    std::lock_guard lock(cache_mutex_);
    auto [it, _] = equivariant_.try_emplace(key, std::make_shared<const Matrix>(std::move(basis)));
    return *it->second;
}

Matrix CochainComplex::equivariant_coboundary_matrix(std::size_t n, int parity) const
{
    const Matrix& src = equivariant_basis(n, parity);
    const Matrix& dst = equivariant_basis(n + 1, parity);
    const Matrix image = coboundary_matrix(n, parity) * src;
    auto coords = linalg::solve(dst, image);
    if (!coords)
        throw OracleDisagreement("coboundary of an equivariant cochain is not equivariant");
    return *coords;
}

Cochain CochainComplex::from_block(std::size_t n, int parity,
                                   const std::vector<Scalar>& block) const
{
    const auto sp = space(n);
    const auto coords = sp->parity_coordinates(parity);
    if (block.size() != coords.size())
        throw DimensionError("block vector has the wrong length");
    std::vector<Scalar> full(sp->dim(), Scalar(field()));
    for (std::size_t k = 0; k < coords.size(); ++k)
        full[coords[k]] = block[k];
    return Cochain(sp, parity, field(), std::move(full));
}

std::vector<Scalar> CochainComplex::to_block(const Cochain& f) const
{
    const auto coords = f.space()->parity_coordinates(f.parity());
    std::vector<Scalar> out;
    out.reserve(coords.size());
    for (auto c : coords)
        out.push_back(f.coords()[c]);
    return out;
}

Cochain CochainComplex::equivariant_combination(std::size_t n, int parity,
                                                const std::vector<Scalar>& c) const
{
    const Matrix& e = equivariant_basis(n, parity);
    if (c.size() != e.cols())
        throw DimensionError("wrong number of equivariant-basis coefficients");
    return from_block(n, parity, e * c);
}

CohomologyReport CochainComplex::cohomology(std::size_t n, bool with_representatives) const
{
    CohomologyReport rep;
    rep.n = n;
    parallel_for(2, [&](std::size_t parity_index) {
        const int parity = static_cast<int>(parity_index);
        const Matrix& e = equivariant_basis(n, parity);
        const Matrix image = coboundary_matrix(n, parity) * e;
        const std::size_t rank_out = linalg::rank(image);
        rep.cochains[parity] = e.cols();
        rep.cocycles[parity] = e.cols() - rank_out;

        Matrix boundaries(field(), e.rows(), 0);
        if (n > 0)
            boundaries = coboundary_matrix(n - 1, parity) * equivariant_basis(n - 1, parity);
        const std::size_t rank_in = n > 0 ? linalg::rank(boundaries) : 0;
        rep.coboundaries[parity] = rank_in;
        if (rank_in > rep.cocycles[parity])
            throw OracleDisagreement("more coboundaries than cocycles: the coboundary does not square to zero");
        rep.cohomology[parity] = rep.cocycles[parity] - rank_in;

        if (with_representatives) {
            const Matrix cocycles = e * linalg::nullspace(image);
            const Matrix extra = linalg::extend_basis(linalg::column_space(boundaries), cocycles);
            std::vector<Cochain> reps;
            for (std::size_t k = 0; k < extra.cols(); ++k)
                reps.push_back(from_block(n, parity, extra.column(k)));
            rep.representatives[parity] = std::move(reps);
        }
    });
    return rep;
}

std::optional<Cochain> CochainComplex::preimage(const Cochain& h) const
{
    const std::size_t n = h.arity();
    if (n == 0)
        throw PreconditionError("a 0-cochain has no preimage under the coboundary");
    if (!(*h.space() == *space(n)))
        throw DimensionError("cochain does not belong to this complex");
    const Matrix& e = equivariant_basis(n - 1, h.parity());
    const Matrix a = coboundary_matrix(n - 1, h.parity()) * e;
    const auto block = to_block(h);
    const auto x = linalg::solve(a, Matrix::from_columns(field(), block.size(), {block}));
    if (!x)
        return std::nullopt;
    return from_block(n - 1, h.parity(), e * x->column(0));
}

bool CochainComplex::is_equivariant(const Cochain& f) const
{
    const auto& g = on_l_.group();
    const FieldSpec fs = field();
    const auto& tuples = f.space()->tuples();
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (a == g.identity())
            continue;
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            std::vector<Vector> args;
            for (auto i : tuples[t])
                args.push_back(on_l_.apply(a, Vector::unit(fs, i)));
            if (!(f.evaluate(args) == on_m_.apply(a, f.value(t))))
                return false;
        }
    }
    return true;
}

namespace {

/// Nullspace of the fixed-point equations (rho(g) - I) v = 0 on the even coordinates of a space.
Matrix fixed_even_vectors(const ActionRep& rep)
{
    const auto& b = *rep.space();
    const FieldSpec fs = rep.field();
    std::vector<std::size_t> evens;
    for (std::size_t i = 0; i < b.even_dim(); ++i)
        evens.push_back(i);
    Matrix constraints(fs, 0, evens.size());
    const Matrix id = Matrix::identity(fs, b.dim());
    for (std::size_t a = 0; a < rep.group().order(); ++a) {
        if (a == rep.group().identity())
            continue;
        const Matrix diff = rep.matrix(a) - id;
        std::vector<std::size_t> all_rows(b.dim());
        for (std::size_t r = 0; r < b.dim(); ++r)
            all_rows[r] = r;
        constraints = Matrix::vstack(constraints, diff.submatrix(all_rows, evens));
    }
    const Matrix kernel = linalg::nullspace(constraints);
    // Pad the even-coordinate kernel back to full M coordinates.
    Matrix out(fs, b.dim(), kernel.cols());
    for (std::size_t k = 0; k < kernel.cols(); ++k)
        for (std::size_t r = 0; r < evens.size(); ++r)
            out(evens[r], k) = kernel(r, k);
    return out;
}

} // namespace

Matrix annihilator(const CochainComplex& cx)
{
    const auto& m = cx.module();
    const auto& l = cx.algebra();
    const FieldSpec fs = cx.field();
    const std::size_t d0 = m.space()->even_dim();
    const std::size_t dm = m.dim();

    // Unknowns: coordinates of m on the even basis vectors of M.
    Matrix constraints(fs, 0, d0);
    for (std::size_t x = 0; x < l.dim(); ++x) {
        Matrix block(fs, dm, d0);
        for (std::size_t k = 0; k < d0; ++k)
            for (const auto& [r, c] : m.act(x, k).terms())
                block(r, k) = c;
        constraints = Matrix::vstack(constraints, block);
    }
    const auto& rep = cx.action_on_module();
    for (std::size_t a = 0; a < rep.group().order(); ++a) {
        if (a == rep.group().identity())
            continue;
        Matrix block(fs, dm, d0);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t k = 0; k < d0; ++k)
                block(r, k) = rep.matrix(a)(r, k) - (r == k ? Scalar::one(fs) : Scalar(fs));
        constraints = Matrix::vstack(constraints, block);
    }
    const Matrix kernel = linalg::nullspace(constraints);
    Matrix out(fs, dm, kernel.cols());
    for (std::size_t k = 0; k < kernel.cols(); ++k)
        for (std::size_t r = 0; r < d0; ++r)
            out(r, k) = kernel(r, k);
    return out;
}

DerivationSpaces derivations(const CochainComplex& cx)
{
    const auto& l = cx.algebra();
    const auto& m = cx.module();
    const FieldSpec fs = cx.field();
    const std::size_t dl = l.dim(), dm = m.dim();
    const auto& bl = *l.basis();
    const auto& bm = *m.space();
    const Scalar one = Scalar::one(fs);

    // Unknown f(e_i)_k, laid out as C^1 coordinates i * dm + k; odd-to-even entries are pinned.
    const std::size_t unknowns = dl * dm;
    auto var = [&](std::size_t i, std::size_t k) { return i * dm + k; };
    std::vector<std::vector<Scalar>> rows;
    auto new_row = [&] { return std::vector<Scalar>(unknowns, Scalar(fs)); };

    for (std::size_t i = 0; i < dl; ++i)
        for (std::size_t k = 0; k < dm; ++k)
            if (bl.parity(i) != bm.parity(k)) {
                auto row = new_row();
                row[var(i, k)] = one;
                rows.push_back(std::move(row));
            }

    // f([x,y]) - [x, f(y)] + (-1)^{xy} [y, f(x)] = 0, one row per output coordinate.
    for (std::size_t x = 0; x < dl; ++x)
        for (std::size_t y = 0; y < dl; ++y) {
            const int s = (bl.parity(x) & bl.parity(y)) ? -1 : 1;
            std::vector<std::vector<Scalar>> block(dm, new_row());
            for (const auto& [z, c] : l.bracket(x, y).terms())
                for (std::size_t k = 0; k < dm; ++k)
                    block[k][var(z, k)] += c;
            for (std::size_t k = 0; k < dm; ++k) {
                for (const auto& [r, c] : m.act(x, k).terms())
                    block[r][var(y, k)] -= c;
                for (const auto& [r, c] : m.act(y, k).terms())
                    block[r][var(x, k)] += c.signed_by(s);
            }
            for (auto& row : block)
                rows.push_back(std::move(row));
        }

    // f(g e_i) = g f(e_i).
    const auto& on_l = cx.action_on_algebra();
    const auto& on_m = cx.action_on_module();
    for (std::size_t a = 0; a < on_l.group().order(); ++a) {
        if (a == on_l.group().identity())
            continue;
        const Matrix& gl = on_l.matrix(a);
        const Matrix& gm = on_m.matrix(a);
        for (std::size_t i = 0; i < dl; ++i) {
            std::vector<std::vector<Scalar>> block(dm, new_row());
            for (std::size_t j = 0; j < dl; ++j)
                if (!gl(j, i).is_zero())
                    for (std::size_t k = 0; k < dm; ++k)
                        block[k][var(j, k)] += gl(j, i);
            for (std::size_t r = 0; r < dm; ++r)
                for (std::size_t k = 0; k < dm; ++k)
                    if (!gm(r, k).is_zero())
                        block[r][var(i, k)] -= gm(r, k);
            for (auto& row : block)
                rows.push_back(std::move(row));
        }
    }

    Matrix system(fs, rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns; ++c)
            system(r, c) = rows[r][c];
    DerivationSpaces out;
    out.derivations = linalg::nullspace(system);

    const Matrix fixed = fixed_even_vectors(on_m);
    std::vector<std::vector<Scalar>> inner;
    for (std::size_t k = 0; k < fixed.cols(); ++k) {
        Vector mv(fs);
        for (std::size_t r = 0; r < dm; ++r)
            mv.add(r, fixed(r, k));
        std::vector<Scalar> col(unknowns, Scalar(fs));
        for (std::size_t x = 0; x < dl; ++x) {
            const Vector image = m.act(Vector::unit(fs, x), mv);
            for (const auto& [r, c] : image.terms())
                col[var(x, r)] = c;
        }
        inner.push_back(std::move(col));
    }
    out.inner = linalg::column_space(Matrix::from_columns(fs, unknowns, inner));
    return out;
}

} // namespace supercohom
