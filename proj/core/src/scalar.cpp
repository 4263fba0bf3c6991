#include "ggt/scalar.hpp"

#include <sstream>

#include "ggt/error.hpp"

namespace ggt {

namespace {

constexpr std::uint32_t kTableOrder = 256;
constexpr std::uint64_t kMaxOrder = 1u << 20;

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    // p is prime, so a^(p-2) is the inverse.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial d over F_p.
Poly poly_mod(Poly a, Poly d, std::uint32_t p)
{
    trim(a);
    trim(d);
    const std::uint32_t lead_inv = inv_mod(d.back(), p);
    while (a.size() >= d.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            const std::uint64_t sub = factor * d[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Enumerates monic polynomials of the given degree and reports whether one
// of them divides f.
bool has_monic_factor_of_degree(const Poly& f, std::uint32_t degree, std::uint32_t p)
{
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i)
        count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly d(degree + 1, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t i = 0; i < degree; ++i) {
            d[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        d[degree] = 1;
        if (poly_mod(f, d, p).empty())
            return true;
    }
    return false;
}

} // namespace

FieldSpec make_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error(ErrorKind::DegreeMismatch, "extension degree must be at least 1");

    FieldSpec f;
    f.p_ = p;
    f.k_ = k;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        f.pow_p_.push_back(static_cast<std::uint32_t>(q));
        q *= p;
        if (q > kMaxOrder)
            throw Error(ErrorKind::SizeBoundExceeded, "field order exceeds 2^20");
    }
    f.q_ = static_cast<std::uint32_t>(q);

    if (k == 1) {
        f.modulus_ = {0, 1};
    } else {
        if (modulus.size() != k + 1)
            throw Error(ErrorKind::DegreeMismatch,
                        "modulus must have " + std::to_string(k + 1) + " coefficients");
        for (auto& c : modulus)
            c %= p;
        if (modulus.back() != 1)
            throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree k");
        for (std::uint32_t deg = 1; deg <= k / 2; ++deg)
            if (has_monic_factor_of_degree(modulus, deg, p))
                throw Error(ErrorKind::ReducibleModulus,
                            "modulus has a factor of degree " + std::to_string(deg));
        f.modulus_ = std::move(modulus);
    }

    if (f.q_ <= kTableOrder) {
        const std::uint32_t n = f.q_;
        f.add_table_.resize(static_cast<std::size_t>(n) * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                std::uint32_t code = 0;
                for (std::uint32_t i = 0; i < k; ++i) {
                    const std::uint32_t ca = a / f.pow_p_[i] % p;
                    const std::uint32_t cb = b / f.pow_p_[i] % p;
                    code += (ca + cb) % p * f.pow_p_[i];
                }
                f.add_table_[static_cast<std::size_t>(a) * n + b] = code;
            }
        f.mul_table_.resize(static_cast<std::size_t>(n) * n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                f.mul_table_[static_cast<std::size_t>(a) * n + b] = f.mul_slow(Scalar{a}, Scalar{b}).code;
    }
    return f;
}

Scalar FieldSpec::generator() const noexcept
{
    return k_ == 1 ? one() : Scalar{p_};
}

Scalar FieldSpec::from_int(std::int64_t value) const
{
    const std::int64_t p = p_;
    return Scalar{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Scalar FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() > k_)
        throw Error(ErrorKind::DegreeMismatch, "too many coefficients for F_" + std::to_string(q_));
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        code += coeffs[i] % p_ * pow_p_[i];
    return Scalar{code};
}

std::vector<std::uint32_t> FieldSpec::coeffs(Scalar x) const
{
    std::vector<std::uint32_t> out(k_);
    for (std::uint32_t i = 0; i < k_; ++i)
        out[i] = x.code / pow_p_[i] % p_;
    return out;
}

Scalar FieldSpec::add(Scalar a, Scalar b) const
{
    if (!add_table_.empty())
        return Scalar{add_table_[static_cast<std::size_t>(a.code) * q_ + b.code]};
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t ca = a.code / pow_p_[i] % p_;
        const std::uint32_t cb = b.code / pow_p_[i] % p_;
        code += (ca + cb) % p_ * pow_p_[i];
    }
    return Scalar{code};
}

Scalar FieldSpec::neg(Scalar a) const
{
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        const std::uint32_t ca = a.code / pow_p_[i] % p_;
        code += (p_ - ca) % p_ * pow_p_[i];
    }
    return Scalar{code};
}

Scalar FieldSpec::sub(Scalar a, Scalar b) const
{
    return add(a, neg(b));
}

Scalar FieldSpec::mul_slow(Scalar a, Scalar b) const
{
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    Poly prod(2 * k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    Poly r = k_ == 1 ? Poly{prod[0]} : poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return from_coeffs(r);
}

Scalar FieldSpec::mul(Scalar a, Scalar b) const
{
    if (!mul_table_.empty())
        return Scalar{mul_table_[static_cast<std::size_t>(a.code) * q_ + b.code]};
    return mul_slow(a, b);
}

Scalar FieldSpec::pow(Scalar a, std::uint64_t e) const
{
    Scalar result = one();
    Scalar base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Scalar FieldSpec::inv(Scalar a) const
{
    if (a.code == 0)
        throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

std::string FieldSpec::format(Scalar x) const
{
    if (k_ == 1)
        return std::to_string(x.code);
    const auto c = coeffs(x);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1)
            os << c[i] << '*';
        os << 't';
        if (i > 1)
            os << '^' << i;
    }
    if (first)
        os << '0';
    return os.str();
}

Scalar frobenius(const FieldSpec& field, Scalar x, std::uint32_t e)
{
    if (e >= field.degree())
        throw Error(ErrorKind::ExponentOutOfRange,
                    "frobenius exponent " + std::to_string(e) + " not below k = " +
                        std::to_string(field.degree()));
    for (std::uint32_t i = 0; i < e; ++i)
        x = field.pow(x, field.characteristic());
    return x;
}

std::vector<std::size_t> row_reduce(const FieldSpec& field, Matrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].code == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        const Scalar scale = field.inv(m[row][col]);
        for (auto& v : m[row])
            v = field.mul(v, scale);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].code == 0)
                continue;
            const Scalar factor = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] = field.sub(m[r][c], field.mul(factor, m[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

std::size_t rank_of(const FieldSpec& field, Matrix m, std::size_t cols)
{
    return row_reduce(field, m, cols).size();
}

LinearSolution solve_linear(const FieldSpec& field, const LinearSystem& sys)
{
    const std::size_t cols = sys.cols;
    Matrix aug;
    aug.reserve(sys.matrix.size());
    for (std::size_t r = 0; r < sys.matrix.size(); ++r) {
        if (sys.matrix[r].size() != cols)
            throw std::invalid_argument("linear system row has wrong width");
        Vector row = sys.matrix[r];
        row.push_back(r < sys.rhs.size() ? sys.rhs[r] : field.zero());
        aug.push_back(std::move(row));
    }
    const auto pivots = row_reduce(field, aug, cols + 1);

    LinearSolution out;
    const bool inconsistent = !pivots.empty() && pivots.back() == cols;
    out.rank = inconsistent ? pivots.size() - 1 : pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < out.rank; ++i)
        is_pivot[pivots[i]] = true;

    if (!inconsistent) {
        Vector x(cols, field.zero());
        for (std::size_t i = 0; i < out.rank; ++i)
            x[pivots[i]] = aug[i][cols];
        out.particular = std::move(x);
    }
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v(cols, field.zero());
        v[free] = field.one();
        for (std::size_t i = 0; i < out.rank; ++i)
            v[pivots[i]] = field.neg(aug[i][free]);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

} // namespace ggt
