#include "supercohom/graded.hpp"

#include "supercohom/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace supercohom {

GradedBasis::GradedBasis(std::vector<std::string> names, std::vector<int> parities)
    : names_(std::move(names)), parities_(std::move(parities))
{
    if (names_.size() != parities_.size())
        throw DimensionError("basis names and parities differ in length");
    std::set<std::string> seen;
    bool odd_seen = false;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (parities_[i] != 0 && parities_[i] != 1)
            throw DimensionError("parity must be 0 or 1 for '" + names_[i] + "'");
        if (!seen.insert(names_[i]).second)
            throw DimensionError("duplicate basis label '" + names_[i] + "'");
        if (parities_[i] == 1)
            odd_seen = true;
        else if (odd_seen)
            throw DimensionError("even basis vector '" + names_[i] + "' listed after an odd one");
        else
            ++even_dim_;
    }
}

std::optional<std::size_t> GradedBasis::find(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t GradedBasis::index(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw DimensionError("unknown basis label '" + std::string(name) + "'");
}

BasisPtr make_basis(std::vector<std::string> names, std::vector<int> parities)
{
    return std::make_shared<const GradedBasis>(std::move(names), std::move(parities));
}

Vector Vector::unit(FieldSpec field, std::size_t index)
{
    Vector v(field);
    v.terms_.emplace(index, Scalar::one(field));
    return v;
}

Scalar Vector::coeff(std::size_t index) const
{
    auto it = terms_.find(index);
    return it == terms_.end() ? Scalar(field_) : it->second;
}

void Vector::add(std::size_t index, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void Vector::add_scaled(const Vector& other, const Scalar& factor)
{
    if (factor.is_zero())
        return;
    for (const auto& [i, c] : other.terms_)
        add(i, c * factor);
}

Vector& Vector::operator+=(const Vector& other)
{
    for (const auto& [i, c] : other.terms_)
        add(i, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& other)
{
    for (const auto& [i, c] : other.terms_)
        add(i, -c);
    return *this;
}

Vector Vector::operator-() const
{
    Vector r = *this;
    for (auto& [_, c] : r.terms_)
        c = -c;
    return r;
}

Vector Vector::scaled(const Scalar& factor) const
{
    Vector r(field_);
    if (factor.is_zero())
        return r;
    for (const auto& [i, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), i, c * factor);
    return r;
}

std::optional<int> Vector::parity(const GradedBasis& basis) const
{
    std::optional<int> p;
    for (const auto& [i, _] : terms_) {
        int q = basis.parity(i);
        if (p && *p != q)
            return std::nullopt;
        p = q;
    }
    return p.value_or(0);
}

std::string Vector::to_string(const GradedBasis& basis) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : terms_) {
        std::string coef = c.to_string();
        const bool compound = coef.find_first_of("+ ") != std::string::npos ||
                              coef.find('-', 1) != std::string::npos;
        if (compound) {
            out += first ? "" : " + ";
            out += "(" + coef + ")*" + basis.name(i);
        }
        else {
            const bool negative = coef.front() == '-';
            std::string mag = negative ? coef.substr(1) : coef;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            out += (mag == "1" ? "" : mag + "*") + basis.name(i);
        }
        first = false;
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw DimensionError("composing permutations of different degree");
    Permutation r(a.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Permutation inverse(const Permutation& p)
{
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i]] = i;
    return r;
}

Permutation identity_permutation(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

int permutation_sign(const Permutation& p)
{
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

std::vector<Permutation> all_permutations(std::size_t n)
{
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::size_t koszul_count(const Permutation& sigma, std::span<const int> parities)
{
    if (sigma.size() != parities.size())
        throw DimensionError("koszul_count: permutation degree " + std::to_string(sigma.size()) +
                             " vs " + std::to_string(parities.size()) + " parities");
    std::size_t count = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (parities[sigma[i]] == 0)
            continue;
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (parities[sigma[j]] == 1 && sigma[j] < sigma[i])
                ++count;
    }
    return count;
}

int koszul_sign(const Permutation& sigma, std::span<const int> parities)
{
    const std::size_t k = koszul_count(sigma, parities);
    return permutation_sign(sigma) * (k % 2 == 0 ? 1 : -1);
}

PermSigns perm_signs(const Permutation& sigma, std::span<const int> parities)
{
    PermSigns ps;
    ps.sigma = sigma;
    ps.k_count = koszul_count(sigma, parities);
    ps.eps = permutation_sign(sigma) * (ps.k_count % 2 == 0 ? 1 : -1);
    return ps;
}

MultilinearMap::MultilinearMap(BasisPtr source, BasisPtr target, std::size_t arity, int parity,
                               FieldSpec field)
    : source_(std::move(source)), target_(std::move(target)), arity_(arity), parity_(parity & 1),
      field_(field)
{
}

void MultilinearMap::check_tuple(const IndexTuple& idx) const
{
    if (idx.size() != arity_)
        throw DimensionError("component tuple has length " + std::to_string(idx.size()) +
                             ", map arity is " + std::to_string(arity_));
    for (auto i : idx)
        if (i >= source_->dim())
            throw DimensionError("component index out of range");
}

Vector MultilinearMap::at(const IndexTuple& idx) const
{
    check_tuple(idx);
    auto it = components_.find(idx);
    return it == components_.end() ? Vector(field_) : it->second;
}

void MultilinearMap::set(const IndexTuple& idx, Vector value)
{
    check_tuple(idx);
    if (value.is_zero()) {
        components_.erase(idx);
        return;
    }
    int expected = parity_;
    for (auto i : idx)
        expected ^= source_->parity(i);
    for (const auto& [k, _] : value.terms())
        if (target_->parity(k) != expected)
            throw ValidationError("homogeneity", "component value has a term '" +
                                                     target_->name(k) + "' of the wrong parity");
    components_[idx] = std::move(value);
}

void MultilinearMap::add(const IndexTuple& idx, const Vector& value)
{
    Vector v = at(idx);
    v += value;
    set(idx, std::move(v));
}

Vector MultilinearMap::evaluate(const std::vector<Vector>& args) const
{
    if (args.size() != arity_)
        throw DimensionError("wrong number of arguments");
    Vector out(field_);
    for (const auto& [idx, value] : components_) {
        Scalar c = Scalar::one(field_);
        for (std::size_t k = 0; k < arity_ && !c.is_zero(); ++k)
            c *= args[k].coeff(idx[k]);
        out.add_scaled(value, c);
    }
    return out;
}

bool MultilinearMap::operator==(const MultilinearMap& other) const
{
    return arity_ == other.arity_ && parity_ == other.parity_ && *source_ == *other.source_ &&
           *target_ == *other.target_ && components_ == other.components_;
}

MultilinearMap act_permutation(const Permutation& sigma, const MultilinearMap& f)
{
    if (sigma.size() != f.arity())
        throw DimensionError("act_permutation: permutation degree does not match arity");
    MultilinearMap out(f.source(), f.target(), f.arity(), f.parity(), f.field());
    std::vector<int> parities(f.arity());
    for (const auto& [y, value] : f.components()) {
        // Y = sigma^-1 X, so X = sigma . Y.
        IndexTuple x = act_on_tuple(sigma, y);
        for (std::size_t k = 0; k < x.size(); ++k)
            parities[k] = f.source()->parity(x[k]);
        out.set(x, value.scaled(Scalar(f.field(), static_cast<long>(koszul_sign(sigma, parities)))));
    }
    return out;
}

void for_each_tuple(std::size_t d, std::size_t n, const std::function<void(const IndexTuple&)>& fn)
{
    IndexTuple t(n, 0);
    if (n == 0) {
        fn(t);
        return;
    }
    if (d == 0)
        return;
    while (true) {
        fn(t);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++t[k] < d)
                break;
            t[k] = 0;
            if (k == 0)
                return;
        }
    }
}

std::vector<IndexTuple> superalt_basis(const GradedBasis& basis, std::size_t n)
{
    std::vector<IndexTuple> out;
    IndexTuple cur;
    const std::size_t d = basis.dim();
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < d; ++i) {
            cur.push_back(i);
            // Evens may not repeat; odds may.
            rec(basis.parity(i) == 0 ? i + 1 : i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

std::size_t superalt_count(std::size_t even_dim, std::size_t odd_dim, std::size_t n)
{
    mpz_class total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        const long rest = static_cast<long>(n - k);
        mpz_class odd_part = rest == 0 ? mpz_class(1)
                                       : binomial(static_cast<long>(odd_dim) + rest - 1, rest);
        total += binomial(static_cast<long>(even_dim), static_cast<long>(k)) * odd_part;
    }
    return total.get_ui();
}

std::optional<CanonicalTuple> canonicalize(const GradedBasis& basis, IndexTuple tuple)
{
    // Insertion sort; each adjacent swap of (a, b) contributes -(-1)^{|a||b|}.
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
            if (!(basis.parity(tuple[j - 1]) == 1 && basis.parity(tuple[j]) == 1))
                sign = -sign;
            std::swap(tuple[j - 1], tuple[j]);
        }
    }
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (tuple[i] == tuple[i - 1] && basis.parity(tuple[i]) == 0)
            return std::nullopt;
    return CanonicalTuple{sign, std::move(tuple)};
}

MultilinearMap superalt_expand(BasisPtr source, BasisPtr target, std::size_t arity, int parity,
                               FieldSpec field, const std::vector<Vector>& canonical_values)
{
    const auto tuples = superalt_basis(*source, arity);
    if (tuples.size() != canonical_values.size())
        throw DimensionError("superalt_expand: expected " + std::to_string(tuples.size()) +
                             " canonical values, got " + std::to_string(canonical_values.size()));
    std::map<IndexTuple, std::size_t> position;
    for (std::size_t k = 0; k < tuples.size(); ++k)
        position.emplace(tuples[k], k);

    MultilinearMap out(source, target, arity, parity, field);
    for_each_tuple(source->dim(), arity, [&](const IndexTuple& t) {
        auto c = canonicalize(*source, t);
        if (!c)
            return;
        const Vector& v = canonical_values[position.at(c->tuple)];
        if (!v.is_zero())
            out.set(t, v.scaled(Scalar(field, static_cast<long>(c->sign))));
    });
    return out;
}

std::vector<Vector> restrict_to_canonical(const MultilinearMap& f)
{
    std::vector<Vector> out;
    for (const auto& t : superalt_basis(*f.source(), f.arity()))
        out.push_back(f.at(t));
    return out;
}

bool is_super_alternating(const MultilinearMap& f)
{
    for (std::size_t i = 0; i + 1 < f.arity(); ++i) {
        Permutation tau = identity_permutation(f.arity());
        std::swap(tau[i], tau[i + 1]);
        if (!(act_permutation(tau, f) == f))
            return false;
    }
    return true;
}

} // namespace supercohom
