#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ggt {

/// An element of F_{p^k}.  The code packs the polynomial coefficients
/// c_0 + c_1 t + ... + c_{k-1} t^{k-1} as the base-p integer sum c_i p^i.
struct Scalar {
    std::uint32_t code = 0;

    auto operator<=>(const Scalar&) const = default;
};

/// A validated finite field F_{p^k} = F_p[t]/(modulus).
///
/// Arithmetic is table driven for small orders and falls back to polynomial
/// arithmetic otherwise.  Instances are immutable and cheap to copy for the
/// orders used here.
class FieldSpec {
public:
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Scalar zero() const noexcept { return Scalar{0}; }
    Scalar one() const noexcept { return Scalar{1}; }
    /// The class of t, i.e. a root of the modulus.  Equals one() when k = 1.
    Scalar generator() const noexcept;

    Scalar from_int(std::int64_t value) const;
    Scalar from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(Scalar x) const;
    bool contains(Scalar x) const noexcept { return x.code < q_; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    /// Multiplicative inverse; a must be nonzero.
    Scalar inv(Scalar a) const;
    Scalar pow(Scalar a, std::uint64_t e) const;

    std::string format(Scalar x) const;

    bool operator==(const FieldSpec& other) const noexcept
    {
        return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
    }

private:
    friend FieldSpec make_field(std::uint32_t, std::uint32_t, std::vector<std::uint32_t>);

    Scalar mul_slow(Scalar a, Scalar b) const;

    std::uint32_t p_ = 2;
    std::uint32_t k_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_; // p^i for i < k
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> mul_table_;
};

/// Builds F_{p^k}.  The modulus is a length-(k+1) coefficient vector,
/// constant term first, and must be monic and irreducible; it is ignored
/// when k = 1.
FieldSpec make_field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus = {});

inline FieldSpec prime_field(std::uint32_t p) { return make_field(p, 1); }

/// x^(p^e) for 0 <= e < k.
Scalar frobenius(const FieldSpec& field, Scalar x, std::uint32_t e);

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

struct LinearSystem {
    Matrix matrix;
    Vector rhs;
    std::size_t cols = 0;
};

struct LinearSolution {
    std::optional<Vector> particular;
    std::vector<Vector> nullspace;
    std::size_t rank = 0;

    bool consistent() const noexcept { return particular.has_value(); }
};

/// Reduces m to reduced row echelon form in place, choosing the leftmost
/// pivot column and the smallest row index.  Returns the pivot columns;
/// zero rows are dropped.
std::vector<std::size_t> row_reduce(const FieldSpec& field, Matrix& m, std::size_t cols);

std::size_t rank_of(const FieldSpec& field, Matrix m, std::size_t cols);

/// Gaussian elimination.  The particular solution sets every free variable
/// to zero; the nullspace basis has one vector per free column, in column
/// order, with that column set to one.
LinearSolution solve_linear(const FieldSpec& field, const LinearSystem& sys);

} // namespace ggt
