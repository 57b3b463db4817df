#include "supercohom/scalar.hpp"

#include "supercohom/error.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace supercohom {

namespace {

void trim_poly(RationalPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0)
        p.pop_back();
}

RationalPoly poly_mul(const RationalPoly& a, const RationalPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    RationalPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim_poly(r);
    return r;
}

RationalPoly poly_sub(RationalPoly a, const RationalPoly& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim_poly(a);
    return a;
}

/// Quotient and remainder of a by a nonzero b.
std::pair<RationalPoly, RationalPoly> poly_divmod(RationalPoly a, const RationalPoly& b)
{
    trim_poly(a);
    if (a.size() < b.size())
        return {{}, a};
    RationalPoly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (std::size_t k = a.size() - 1;; --k) {
        Rational c = a[k] / lead;
        std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        if (sgn(c) != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] -= c * b[j];
        if (k == b.size() - 1)
            break;
    }
    trim_poly(a);
    trim_poly(q);
    return {q, a};
}

struct CyclotomicData {
    RationalPoly phi;
    std::size_t degree = 0;
    /// powers[k] = x^k mod phi, for 0 <= k < table size.
    std::vector<RationalPoly> powers;
};

class FieldRegistry {
public:
    static FieldRegistry& instance()
    {
        static FieldRegistry registry;
        return registry;
    }

    const CyclotomicData& get(unsigned m)
    {
        std::lock_guard lock(mutex_);
        return get_locked(m);
    }

private:
    const CyclotomicData& get_locked(unsigned m)
    {
        auto it = data_.find(m);
        if (it != data_.end())
            return *it->second;

        // x^m - 1
        RationalPoly p(m + 1);
        p[0] = -1;
        p[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0)
                continue;
            auto [q, r] = poly_divmod(p, get_locked(d).phi);
            if (!r.empty())
                throw Error("cyclotomic division left a remainder");
            p = std::move(q);
        }
        auto entry = std::make_unique<CyclotomicData>();
        entry->phi = p;
        entry->degree = p.size() - 1;

        const std::size_t deg = entry->degree;
        const std::size_t table = std::max<std::size_t>(m + 1, 2 * deg);
        entry->powers.reserve(table);
        for (std::size_t k = 0; k < table; ++k) {
            RationalPoly xk;
            if (k < deg) {
                xk.assign(k + 1, Rational(0));
                xk[k] = 1;
            }
            else {
                // x * (x^{k-1} mod phi), then eliminate the x^deg term.
                const RationalPoly& prev = entry->powers[k - 1];
                xk.assign(deg + 1, Rational(0));
                for (std::size_t i = 0; i < prev.size(); ++i)
                    xk[i + 1] = prev[i];
                Rational top = xk[deg];
                if (sgn(top) != 0)
                    for (std::size_t i = 0; i <= deg; ++i)
                        xk[i] -= top * p[i];
                trim_poly(xk);
            }
            entry->powers.push_back(std::move(xk));
        }
        auto [pos, _] = data_.emplace(m, std::move(entry));
        return *pos->second;
    }

    std::mutex mutex_;
    std::map<unsigned, std::unique_ptr<CyclotomicData>> data_;
};

const CyclotomicData& cyclo(unsigned m) { return FieldRegistry::instance().get(m); }

/// Reduce a polynomial in zeta_m into canonical form.
RationalPoly reduce(const FieldSpec& field, RationalPoly p)
{
    trim_poly(p);
    if (field.is_rational()) {
        if (p.size() > 1)
            throw FieldMismatch("non-constant element in the rational field");
        return p;
    }
    const CyclotomicData& data = cyclo(field.conductor);
    if (p.size() <= data.degree)
        return p;
    // zeta^m = 1: fold exponents first so the power table always covers them.
    if (p.size() > field.conductor) {
        RationalPoly folded(field.conductor);
        for (std::size_t k = 0; k < p.size(); ++k)
            folded[k % field.conductor] += p[k];
        p = std::move(folded);
        trim_poly(p);
        if (p.size() <= data.degree)
            return p;
    }
    RationalPoly r(data.degree);
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (sgn(p[k]) == 0)
            continue;
        if (k < data.degree) {
            r[k] += p[k];
            continue;
        }
        const RationalPoly& xk = data.powers[k];
        for (std::size_t i = 0; i < xk.size(); ++i)
            r[i] += p[k] * xk[i];
    }
    trim_poly(r);
    return r;
}

} // namespace

FieldSpec FieldSpec::cyclotomic(unsigned m)
{
    if (m == 0)
        throw DimensionError("cyclotomic conductor must be positive");
    return FieldSpec{Kind::Cyclotomic, m};
}

std::size_t FieldSpec::degree() const
{
    if (is_rational())
        return 1;
    return cyclo(conductor).degree;
}

std::string FieldSpec::to_string() const
{
    if (is_rational())
        return "rational";
    return "cyclotomic(" + std::to_string(conductor) + ")";
}

RationalPoly cyclotomic_poly(unsigned m)
{
    if (m == 0)
        throw DimensionError("cyclotomic_poly needs m >= 1");
    return cyclo(m).phi;
}

std::string rational_to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(FieldSpec field, Rational value) : field_(field)
{
    value.canonicalize();
    if (sgn(value) != 0)
        coeffs_.push_back(std::move(value));
}

Scalar Scalar::from_polynomial(FieldSpec field, RationalPoly coefficients)
{
    for (auto& c : coefficients)
        c.canonicalize();
    Scalar s(field);
    s.coeffs_ = reduce(field, std::move(coefficients));
    return s;
}

Rational Scalar::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::optional<Rational> Scalar::as_rational() const
{
    if (coeffs_.size() > 1)
        return std::nullopt;
    return coefficient(0);
}

void Scalar::check_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " +
                            other.field_.to_string());
}

void Scalar::trim() { trim_poly(coeffs_); }

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    check_same_field(other);
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    check_same_field(other);
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    a.check_same_field(b);
    Scalar r(a.field_);
    if (a.is_zero() || b.is_zero())
        return r;
    if (a.coeffs_.size() == 1 && b.coeffs_.size() == 1) {
        r.coeffs_.push_back(a.coeffs_[0] * b.coeffs_[0]);
        return r;
    }
    r.coeffs_ = reduce(a.field_, poly_mul(a.coeffs_, b.coeffs_));
    return r;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    *this = *this * other;
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Scalar r(field_);
    if (coeffs_.size() == 1) {
        r.coeffs_.push_back(1 / coeffs_[0]);
        return r;
    }
    // Extended Euclid: find u with u * a = 1 mod phi.
    const RationalPoly& phi = cyclo(field_.conductor).phi;
    RationalPoly r0 = phi, r1 = coeffs_;
    RationalPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(r0, r1);
        RationalPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because phi is irreducible.
    if (r0.size() != 1)
        throw Error("element shares a factor with the cyclotomic polynomial");
    Rational c = 1 / r0[0];
    for (auto& x : s0)
        x *= c;
    r.coeffs_ = reduce(field_, std::move(s0));
    return r;
}

Scalar& Scalar::operator/=(const Scalar& other)
{
    check_same_field(other);
    *this = *this * other.inverse();
    return *this;
}

Scalar Scalar::scaled(const Rational& factor) const
{
    if (sgn(factor) == 0)
        return Scalar(field_);
    Scalar r = *this;
    for (auto& c : r.coeffs_)
        c *= factor;
    return r;
}

bool Scalar::operator==(const Scalar& other) const
{
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

std::string Scalar::to_string() const
{
    if (coeffs_.empty())
        return "0";
    if (field_.is_rational())
        return rational_to_string(coeffs_[0]);
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += rational_to_string(mag);
            continue;
        }
        if (mag != 1)
            out += rational_to_string(mag) + "*";
        out += "z";
        if (k > 1)
            out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, FieldSpec field) : field_(field)
    {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                text_.push_back(ch);
        original_ = std::string(text);
    }

    Scalar parse()
    {
        if (text_.empty())
            fail("empty scalar");
        RationalPoly poly;
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            }
            else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, power] = term();
            if (power >= poly.size())
                poly.resize(power + 1);
            poly[power] += sign > 0 ? coef : Rational(-coef);
        }
        return Scalar::from_polynomial(field_, std::move(poly));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("cannot parse scalar '" + original_ + "': " + why);
    }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    std::pair<Rational, std::size_t> term()
    {
        Rational coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = integer();
            mpz_class den = 1;
            if (peek() == '/') {
                ++pos_;
                den = integer();
                if (den == 0)
                    fail("zero denominator");
            }
            coef = Rational(num, den);
            coef.canonicalize();
            have_coef = true;
            if (peek() == '*')
                ++pos_;
            else if (peek() != 'z')
                return {coef, 0};
        }
        if (peek() != 'z')
            fail(have_coef ? "expected 'z' after '*'" : "expected a number or 'z'");
        ++pos_;
        if (field_.is_rational())
            fail("'z' is not an element of the rational field");
        std::size_t power = 1;
        if (peek() == '^') {
            ++pos_;
            mpz_class e = integer();
            power = static_cast<std::size_t>(mpz_class(e % field_.conductor).get_ui());
        }
        return {coef, power % field_.conductor};
    }

    FieldSpec field_;
    std::string text_;
    std::string original_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar Scalar::parse(std::string_view text, FieldSpec field)
{
    return ScalarParser(text, field).parse();
}

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add:
        return a + b;
    case ArithOp::Sub:
        return a - b;
    case ArithOp::Mul:
        return a * b;
    case ArithOp::Div:
        return a / b;
    }
    throw Error("unknown arithmetic operation");
}

Scalar root_of_unity(FieldSpec field, long k)
{
    if (field.is_rational()) {
        if (k != 0)
            throw NotCyclotomic("rational field has no primitive root of unity for k = " +
                                std::to_string(k));
        return Scalar::one(field);
    }
    const long m = static_cast<long>(field.conductor);
    const long e = ((k % m) + m) % m;
    RationalPoly p(static_cast<std::size_t>(e) + 1);
    p[static_cast<std::size_t>(e)] = 1;
    return Scalar::from_polynomial(field, std::move(p));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace supercohom
