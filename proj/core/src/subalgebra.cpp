#include "ggt/subalgebra.hpp"

#include <algorithm>
#include <limits>

#include "ggt/error.hpp"

namespace ggt {

RingElement Subalgebra::basis_element(std::size_t i) const
{
    return from_prime_vector(*ambient_, basis_.at(i));
}

std::vector<RingElement> Subalgebra::basis_elements() const
{
    std::vector<RingElement> out;
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(basis_element(i));
    return out;
}

std::optional<Vector> Subalgebra::coordinates(const RingElement& x) const
{
    const FieldSpec& Fp = ambient_->prime_field();
    const Vector v = to_prime_vector(*ambient_, x);
    // In reduced echelon form the coefficient of row i is the pivot entry.
    Vector coeffs;
    Vector rest = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar c = v[pivots_[i]];
        coeffs.push_back(c);
        for (std::size_t col = 0; col < rest.size(); ++col)
            rest[col] = Fp.sub(rest[col], Fp.mul(c, basis_[i][col]));
    }
    for (Scalar s : rest)
        if (s.code != 0)
            return std::nullopt;
    return coeffs;
}

RingElement Subalgebra::combine(const Vector& coeffs) const
{
    if (coeffs.size() != dim())
        throw Error(ErrorKind::BlockMismatch, "coefficient vector has the wrong length");
    const FieldSpec& Fp = ambient_->prime_field();
    Vector v(ambient_->prime_dimension(), Fp.zero());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t col = 0; col < v.size(); ++col)
            v[col] = Fp.add(v[col], Fp.mul(coeffs[i], basis_[i][col]));
    return from_prime_vector(*ambient_, v);
}

std::uint64_t Subalgebra::cardinality() const noexcept
{
    std::uint64_t out = 1;
    const std::uint64_t p = ambient_->field().characteristic();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / p)
            return std::numeric_limits<std::uint64_t>::max();
        out *= p;
    }
    return out;
}

std::vector<RingElement> Subalgebra::elements(const Limits& limits) const
{
    const std::uint64_t count = cardinality();
    if (count > limits.max_elements)
        throw Error(ErrorKind::SizeBoundExceeded,
                    "subalgebra has more than " + std::to_string(limits.max_elements) +
                        " elements");
    const std::uint32_t p = ambient_->field().characteristic();
    std::vector<RingElement> out;
    out.reserve(count);
    Vector c(dim(), Scalar{0});
    for (std::uint64_t n = 0; n < count; ++n) {
        out.push_back(combine(c));
        for (auto& s : c) {
            if (++s.code < p)
                break;
            s.code = 0;
        }
    }
    return out;
}

bool Subalgebra::operator==(const Subalgebra& other) const
{
    return ambient_->same_as(*other.ambient_) && basis_ == other.basis_;
}

Subalgebra span_of(std::shared_ptr<const BlockRing> ambient, const std::vector<RingElement>& gens)
{
    Subalgebra t;
    Matrix m;
    for (const auto& x : gens)
        m.push_back(to_prime_vector(*ambient, x));
    t.pivots_ = row_reduce(ambient->prime_field(), m, ambient->prime_dimension());
    t.basis_ = std::move(m);
    t.ambient_ = std::move(ambient);
    return t;
}

Subalgebra closure(std::shared_ptr<const BlockRing> ambient, const std::vector<RingElement>& gens)
{
    const BlockRing& R = *ambient;
    std::vector<RingElement> current = gens;
    current.push_back(R.one());
    Subalgebra t = span_of(ambient, current);
    for (;;) {
        const std::vector<RingElement> b = t.basis_elements();
        std::vector<RingElement> next = b;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i; j < b.size(); ++j)
                next.push_back(mul(R, b[i], b[j]));
        Subalgebra grown = span_of(ambient, next);
        if (grown.dim() == t.dim())
            return t;
        t = std::move(grown);
    }
}

std::vector<RingElement> embedded_basis(const Subalgebra& k, const BlockRing& ambient)
{
    std::vector<RingElement> out = k.basis_elements();
    if (k.ambient().same_as(ambient))
        return out;
    for (auto& x : out)
        x = embed_base(ambient, x);
    return out;
}

Subalgebra k_closure(const Subalgebra& k, std::shared_ptr<const BlockRing> ambient,
                     const std::vector<RingElement>& gens)
{
    std::vector<RingElement> all = embedded_basis(k, *ambient);
    all.insert(all.end(), gens.begin(), gens.end());
    return closure(std::move(ambient), all);
}

bool is_unital_subring(const Subalgebra& t)
{
    const BlockRing& R = t.ambient();
    if (!t.contains(R.one()))
        return false;
    const std::vector<RingElement> b = t.basis_elements();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i; j < b.size(); ++j)
            if (!t.contains(mul(R, b[i], b[j])))
                return false;
    return true;
}

bool is_k_subalgebra(const Subalgebra& t, const Subalgebra& k)
{
    if (!is_unital_subring(t))
        return false;
    for (const auto& c : embedded_basis(k, t.ambient()))
        if (!t.contains(c))
            return false;
    return true;
}

bool is_subset(const Subalgebra& a, const Subalgebra& b)
{
    for (const auto& x : a.basis_elements())
        if (!b.contains(x))
            return false;
    return true;
}

std::string format_subalgebra(const Subalgebra& t)
{
    std::string out = "span{";
    const auto b = t.basis_elements();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i)
            out += ", ";
        out += format_element(t.ambient(), b[i]);
    }
    return out + "}";
}

} // namespace ggt

namespace ggt {

namespace {

/// Basis of {c : sum_l c_l b_l[block] = 0} over F_p, reduced.
Matrix vanishing_space(const Subalgebra& k, std::size_t block)
{
    const BlockRing& R = k.ambient();
    const FieldSpec& F = R.field();
    const FieldSpec& Fp = R.prime_field();
    LinearSystem sys;
    sys.cols = k.dim();
    sys.matrix.assign(F.degree(), Vector(k.dim(), Fp.zero()));
    sys.rhs.assign(F.degree(), Fp.zero());
    for (std::size_t l = 0; l < k.dim(); ++l) {
        const auto c = F.coeffs(k.basis_element(l).coords[block]);
        for (std::size_t row = 0; row < c.size(); ++row)
            sys.matrix[row][l] = Scalar{c[row]};
    }
    Matrix ns = solve_linear(Fp, sys).nullspace;
    row_reduce(Fp, ns, k.dim());
    return ns;
}

} // namespace

std::vector<Idempotent> primitive_idempotents(const Subalgebra& k)
{
    const BlockRing& R = k.ambient();
    std::vector<Matrix> spaces;
    for (std::size_t j = 0; j < R.size(); ++j)
        spaces.push_back(vanishing_space(k, j));
    std::vector<Idempotent> out;
    std::vector<bool> placed(R.size(), false);
    for (std::size_t i = 0; i < R.size(); ++i) {
        if (placed[i])
            continue;
        Idempotent u;
        for (std::size_t j = i; j < R.size(); ++j)
            if (!placed[j] && spaces[j] == spaces[i]) {
                placed[j] = true;
                u.support.push_back(j);
            }
        if (!k.contains(idempotent_element(R, u)))
            throw Error(ErrorKind::KBlockNotField,
                        "the unit of block class " + format_ideal(R, IdealRef{u.support}) +
                            " is not in the subalgebra");
        out.push_back(std::move(u));
    }
    return out;
}

Subalgebra component(const Subalgebra& t, const Idempotent& u)
{
    const BlockRing& S = t.ambient();
    // u names blocks of the underlying ring; S may be a function algebra.
    RingElement unit = S.zero();
    for (std::size_t j = 0; j < S.size(); ++j)
        if (std::binary_search(u.support.begin(), u.support.end(), S.base(j)))
            unit.coords[j] = S.field().one();
    std::vector<RingElement> gens;
    for (const auto& b : t.basis_elements())
        gens.push_back(mul(S, b, unit));
    return span_of(t.ambient_ptr(), gens);
}

} // namespace ggt
