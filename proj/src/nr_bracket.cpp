#include "supercohom/nr_bracket.hpp"

#include "supercohom/error.hpp"
#include "supercohom/parallel.hpp"

#include <algorithm>
#include <random>

namespace supercohom {

namespace {

/// Shuffles of type (p, q), as sigma with sigma(0..p-1) the chosen positions in increasing order.
std::vector<Permutation> shuffles(std::size_t p, std::size_t q)
{
    const std::size_t n = p + q;
    std::vector<Permutation> out;
    std::vector<bool> chosen(n, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<long>(p), true);
    // prev_permutation on a sorted-descending mask enumerates combinations in lexicographic order.
    do {
        Permutation s;
        for (std::size_t k = 0; k < n; ++k)
            if (chosen[k])
                s.push_back(k);
        for (std::size_t k = 0; k < n; ++k)
            if (!chosen[k])
                s.push_back(k);
        out.push_back(std::move(s));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

void require_same_space(const NRElement& a, const NRElement& b)
{
    if (!(*a.basis() == *b.basis()))
        throw DimensionError("NR elements live on different spaces");
    if (a.field() != b.field())
        throw FieldMismatch("NR elements over different fields");
}

/// (F*F')(y) with y of length n + n' + 1.
Vector star_value(const NRElement& a, const NRElement& b, const IndexTuple& y)
{
    const auto& basis = *a.basis();
    const std::size_t n = a.arity() - 1;
    std::size_t head = 0;
    for (std::size_t k = 0; k < n; ++k)
        head += static_cast<std::size_t>(basis.parity(y[k]));
    const Vector inner = b.cochain().at(IndexTuple(y.begin() + static_cast<long>(n), y.end()));
    Vector out(a.field());
    IndexTuple arg(y.begin(), y.begin() + static_cast<long>(n));
    arg.push_back(0);
    for (const auto& [k, c] : inner.terms()) {
        arg.back() = k;
        out.add_scaled(a.cochain().at(arg), c);
    }
    if ((b.parity() * head) % 2 == 1)
        out = -out;
    return out;
}

} // namespace

NRElement::NRElement(Cochain payload) : payload_(std::move(payload))
{
    if (!(*payload_.space()->source() == *payload_.space()->target()))
        throw DimensionError("NR element must map V^k to V");
}

NRElement NRElement::zero(BasisPtr basis, FieldSpec field, int degree, int parity)
{
    if (degree < -1)
        throw DegreeOutOfRange("degree " + std::to_string(degree) + " is below -1");
    return NRElement(Cochain(nr_space(basis, static_cast<std::size_t>(degree + 1)), parity, field));
}

NRElement NRElement::from_vector(BasisPtr basis, const Vector& v, int parity)
{
    Cochain c(nr_space(basis, 0), parity, v.field());
    c.set_value(0, v);
    return NRElement(std::move(c));
}

NRElement& NRElement::operator+=(const NRElement& other)
{
    payload_ += other.payload_;
    return *this;
}

SpacePtr nr_space(const BasisPtr& basis, std::size_t arity)
{
    return std::make_shared<const CochainSpace>(basis, basis, arity);
}

MultilinearMap star(const NRElement& a, const NRElement& b)
{
    require_same_space(a, b);
    if (a.degree() < 0)
        throw DegreeOutOfRange("left operand of * must have degree at least 0");
    const std::size_t arity = a.arity() + b.arity() - 1;
    MultilinearMap out(a.basis(), a.basis(), arity, (a.parity() + b.parity()) % 2, a.field());
    for_each_tuple(a.basis()->dim(), arity, [&](const IndexTuple& y) {
        Vector v = star_value(a, b, y);
        if (!v.is_zero())
            out.set(y, std::move(v));
    });
    return out;
}

NRElement circ(const NRElement& a, const NRElement& b)
{
    require_same_space(a, b);
    const int degree = a.degree() + b.degree();
    const int parity = (a.parity() + b.parity()) % 2;
    if (degree < -1)
        throw DegreeOutOfRange("circ lands in degree " + std::to_string(degree));
    // E_{-1} has no slot for F' to be plugged into.
    if (a.degree() < 0)
        return NRElement::zero(a.basis(), a.field(), degree, parity);

    const std::size_t n = a.arity() - 1;
    const auto space = nr_space(a.basis(), static_cast<std::size_t>(degree + 1));
    const auto sh = shuffles(n, b.arity());
    const auto& basis = *a.basis();
    Cochain out(space, parity, a.field());
    const auto& tuples = space->tuples();
    std::vector<Vector> values(tuples.size(), Vector(a.field()));
    parallel_for(tuples.size(), [&](std::size_t t) {
        const IndexTuple& x = tuples[t];
        std::vector<int> p(x.size());
        for (std::size_t k = 0; k < x.size(); ++k)
            p[k] = basis.parity(x[k]);
        Vector acc(a.field());
        for (const auto& sigma : sh) {
            // sigma^{-1}.X lists X at the chosen positions first.
            IndexTuple y(x.size());
            for (std::size_t k = 0; k < x.size(); ++k)
                y[k] = x[sigma[k]];
            const Vector v = star_value(a, b, y);
            if (!v.is_zero())
                acc.add_scaled(v, Scalar(a.field(), long(koszul_sign(sigma, p))));
        }
        values[t] = std::move(acc);
    });
    for (std::size_t t = 0; t < tuples.size(); ++t)
        out.set_value(t, values[t]);
    return NRElement(std::move(out));
}

NRElement nr_bracket(const NRElement& a, const NRElement& b)
{
    const int e = a.degree() * b.degree() + a.parity() * b.parity();
    NRElement ab = circ(a, b);
    const NRElement ba = circ(b, a);
    // F o F' - (-1)^e F' o F
    return ab + ba.scaled(Scalar(a.field(), e % 2 == 0 ? -1L : 1L));
}

NRElement table_to_element(const StructureTable& t)
{
    if (!(*t.left == *t.right) || !(*t.left == *t.target))
        throw DimensionError("structure table must map V x V to V");
    Cochain c(nr_space(t.left, 2), 0, t.field);
    const auto& tuples = c.space()->tuples();
    for (std::size_t k = 0; k < tuples.size(); ++k)
        c.set_value(k, t(tuples[k][0], tuples[k][1]));
    return NRElement(std::move(c));
}

NRElement bracket_to_element(const LieSuperalgebra& l) { return table_to_element(l.table()); }

StructureTable element_to_table(const NRElement& f0)
{
    if (f0.degree() != 1 || f0.parity() != 0)
        throw WrongBidegree("a bracket is an element of bidegree (1, 0)");
    StructureTable t(f0.field(), f0.basis(), f0.basis(), f0.basis());
    const std::size_t d = f0.basis()->dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            t(i, j) = f0.cochain().at({i, j});
    return t;
}

bool is_equivariant(const NRElement& f, const ActionRep& rep)
{
    if (!(*rep.space() == *f.basis()))
        throw DimensionError("action is on a different space");
    const auto& g = rep.group();
    const auto& tuples = f.cochain().space()->tuples();
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (a == g.identity())
            continue;
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            std::vector<Vector> args;
            for (auto i : tuples[t])
                args.push_back(rep.apply(a, Vector::unit(f.field(), i)));
            if (!(f.cochain().evaluate(args) == rep.apply(a, f.cochain().value(t))))
                return false;
        }
    }
    return true;
}

MCReport mc_check(const NRElement& f0, const ActionRep* rep)
{
    if (f0.degree() != 1 || f0.parity() != 0)
        throw WrongBidegree("MC candidate must have bidegree (1, 0), got (" +
                            std::to_string(f0.degree()) + ", " + std::to_string(f0.parity()) + ")");
    if (rep && !is_equivariant(f0, *rep))
        throw PreconditionError("MC candidate is not equivariant");
    NRElement residual = nr_bracket(f0, f0);
    const bool jacobi = validate_superalgebra(element_to_table(f0)).jacobi_ok;
    const bool mc = residual.is_zero();
    if (mc != jacobi)
        throw OracleDisagreement(std::string("[F0, F0] ") + (mc ? "vanishes" : "does not vanish") +
                                 " but the Jacobi loop " + (jacobi ? "passes" : "fails"));
    return {mc, jacobi, std::move(residual)};
}

SignTable delta_sign_table(const CochainComplex& adjoint, std::size_t max_arity, unsigned seed)
{
    const auto& l = adjoint.algebra();
    if (!(*adjoint.module().space() == *l.basis()) || !(adjoint.module() == LModule::adjoint(l)))
        throw PreconditionError("sign table needs the adjoint complex");
    const NRElement f0 = bracket_to_element(l);
    const FieldSpec fs = adjoint.field();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coef(-3, 3);
    SignTable table;
    for (std::size_t n = 0; n <= max_arity; ++n)
        for (int parity = 0; parity <= 1; ++parity) {
            const std::size_t width = adjoint.space(n)->parity_coordinates(parity).size();
            int sign = 0;
            bool consistent = true;
            for (int trial = 0; trial < 3 && consistent; ++trial) {
                std::vector<Scalar> block;
                for (std::size_t k = 0; k < width; ++k)
                    block.push_back(Scalar(fs, coef(rng)));
                const Cochain f = adjoint.from_block(n, parity, block);
                const auto d = adjoint.coboundary(f).coords();
                const auto b = nr_bracket(f0, NRElement(f)).cochain().coords();
                const bool zero = std::all_of(d.begin(), d.end(), [](const Scalar& s) {
                    return s.is_zero();
                }) && std::all_of(b.begin(), b.end(), [](const Scalar& s) { return s.is_zero(); });
                if (zero)
                    continue;
                std::vector<Scalar> neg;
                for (const auto& s : b)
                    neg.push_back(-s);
                const int s = d == b ? 1 : d == neg ? -1 : 0;
                if (s == 0 || (sign != 0 && s != sign))
                    consistent = false;
                sign = s;
            }
            if (!consistent)
                table[{n, parity}] = 0;
            else if (sign != 0)
                table[{n, parity}] = sign;
        }
    return table;
}

} // namespace supercohom
