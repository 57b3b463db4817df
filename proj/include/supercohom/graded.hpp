#pragma once

#include "supercohom/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace supercohom {

/// Basis of a Z2-graded space V = V0 + V1; all even vectors come before all odd vectors.
class GradedBasis {
public:
    GradedBasis(std::vector<std::string> names, std::vector<int> parities);

    std::size_t dim() const { return names_.size(); }
    std::size_t even_dim() const { return even_dim_; }
    std::size_t odd_dim() const { return names_.size() - even_dim_; }
    int parity(std::size_t i) const { return parities_[i]; }
    const std::vector<int>& parities() const { return parities_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Index of a label; throws DimensionError when absent.
    std::size_t index(std::string_view name) const;

    bool operator==(const GradedBasis& other) const
    {
        return names_ == other.names_ && parities_ == other.parities_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> parities_;
    std::size_t even_dim_ = 0;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(std::vector<std::string> names, std::vector<int> parities);

using IndexTuple = std::vector<std::size_t>;

/// Sparse vector: basis index -> nonzero coefficient.
class Vector {
public:
    explicit Vector(FieldSpec field = {}) : field_(field) {}

    static Vector unit(FieldSpec field, std::size_t index);

    FieldSpec field() const { return field_; }
    const std::map<std::size_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(std::size_t index) const;

    void add(std::size_t index, const Scalar& c);
    /// this += factor * other
    void add_scaled(const Vector& other, const Scalar& factor);

    Vector& operator+=(const Vector& other);
    Vector& operator-=(const Vector& other);
    Vector operator-() const;
    Vector scaled(const Scalar& factor) const;

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }

    /// Common parity of the support, nullopt if mixed; zero counts as parity 0.
    std::optional<int> parity(const GradedBasis& basis) const;

    std::string to_string(const GradedBasis& basis) const;

    bool operator==(const Vector& other) const { return terms_ == other.terms_; }

private:
    FieldSpec field_;
    std::map<std::size_t, Scalar> terms_;
};

using Permutation = std::vector<std::size_t>;

/// (a b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t n);
int permutation_sign(const Permutation& p);
std::vector<Permutation> all_permutations(std::size_t n);

/// sigma . X = (X_{sigma^-1(1)}, ..., X_{sigma^-1(n)})
template <typename T>
std::vector<T> act_on_tuple(const Permutation& sigma, const std::vector<T>& x)
{
    std::vector<T> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[sigma[i]] = x[i];
    return out;
}

/// Number of pairs i < j with X_sigma(i), X_sigma(j) odd and sigma(j) < sigma(i).
std::size_t koszul_count(const Permutation& sigma, std::span<const int> parities);
/// sign(sigma) * (-1)^koszul_count
int koszul_sign(const Permutation& sigma, std::span<const int> parities);

struct PermSigns {
    Permutation sigma;
    std::size_t k_count = 0;
    int eps = 1;
};

PermSigns perm_signs(const Permutation& sigma, std::span<const int> parities);

/// Homogeneous n-linear map V x ... x V -> W with sparse component table over index tuples.
class MultilinearMap {
public:
    MultilinearMap(BasisPtr source, BasisPtr target, std::size_t arity, int parity,
                   FieldSpec field);

    std::size_t arity() const { return arity_; }
    int parity() const { return parity_; }
    const BasisPtr& source() const { return source_; }
    const BasisPtr& target() const { return target_; }
    FieldSpec field() const { return field_; }
    const std::map<IndexTuple, Vector>& components() const { return components_; }

    Vector at(const IndexTuple& idx) const;
    /// Sets a component; rejects values outside target parity parity + sum(parity(i_k)).
    void set(const IndexTuple& idx, Vector value);
    void add(const IndexTuple& idx, const Vector& value);

    Vector evaluate(const std::vector<Vector>& args) const;

    bool operator==(const MultilinearMap& other) const;

private:
    void check_tuple(const IndexTuple& idx) const;

    BasisPtr source_;
    BasisPtr target_;
    std::size_t arity_;
    int parity_;
    FieldSpec field_;
    std::map<IndexTuple, Vector> components_;
};

/// (sigma . F)(X) = eps(sigma, X) F(sigma^-1 X)
MultilinearMap act_permutation(const Permutation& sigma, const MultilinearMap& f);

/// Calls fn on every tuple in {0..d-1}^n in lexicographic order.
void for_each_tuple(std::size_t d, std::size_t n, const std::function<void(const IndexTuple&)>& fn);

/// Canonical tuples: even indices strictly increasing, then odd indices weakly increasing.
std::vector<IndexTuple> superalt_basis(const GradedBasis& basis, std::size_t n);
std::size_t superalt_count(std::size_t even_dim, std::size_t odd_dim, std::size_t n);

struct CanonicalTuple {
    int sign = 1;
    IndexTuple tuple;
};

/// Sorts a tuple into canonical order tracking the super-alternating sign; nullopt when a
/// super-alternating map must vanish on it (a repeated even index).
std::optional<CanonicalTuple> canonicalize(const GradedBasis& basis, IndexTuple tuple);

/// Expands values on canonical tuples into the full super-alternating component table.
MultilinearMap superalt_expand(BasisPtr source, BasisPtr target, std::size_t arity, int parity,
                               FieldSpec field, const std::vector<Vector>& canonical_values);

/// Values of f on superalt_basis(source, arity), in order.
std::vector<Vector> restrict_to_canonical(const MultilinearMap& f);

/// sigma . F == F for every adjacent transposition sigma.
bool is_super_alternating(const MultilinearMap& f);

} // namespace supercohom
