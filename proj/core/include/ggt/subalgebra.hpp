#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ggt/blockring.hpp"
#include "ggt/limits.hpp"
#include "ggt/scalar.hpp"

namespace ggt {

/// An F_p-subspace of a block ring, stored as a reduced row echelon basis of
/// prime-field coordinate vectors.  Rings of invariants, K-subalgebras and
/// invariant function algebras are all values of this type.
class Subalgebra {
public:
    const BlockRing& ambient() const noexcept { return *ambient_; }
    const std::shared_ptr<const BlockRing>& ambient_ptr() const noexcept { return ambient_; }

    /// Dimension over F_p.
    std::size_t dim() const noexcept { return basis_.size(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    RingElement basis_element(std::size_t i) const;
    std::vector<RingElement> basis_elements() const;

    /// Coefficients over the basis, or nullopt when x lies outside.
    std::optional<Vector> coordinates(const RingElement& x) const;
    bool contains(const RingElement& x) const { return coordinates(x).has_value(); }
    RingElement combine(const Vector& coeffs) const;

    /// p^dim, saturated.
    std::uint64_t cardinality() const noexcept;
    /// All elements in counter order over the basis (first coefficient
    /// fastest); throws SizeBoundExceeded above limits.max_elements.
    std::vector<RingElement> elements(const Limits& limits = {}) const;

    bool operator==(const Subalgebra& other) const;

private:
    friend Subalgebra span_of(std::shared_ptr<const BlockRing>, const std::vector<RingElement>&);

    std::shared_ptr<const BlockRing> ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// F_p-linear span, without any closure.
Subalgebra span_of(std::shared_ptr<const BlockRing> ambient, const std::vector<RingElement>& gens);

/// The unital subring generated by gens.
Subalgebra closure(std::shared_ptr<const BlockRing> ambient, const std::vector<RingElement>& gens);

/// The unital subring generated by gens and the constants of K.  K may live
/// in the ambient ring itself or in the underlying ring of a function
/// algebra; its elements are embedded via embed_base.
Subalgebra k_closure(const Subalgebra& k, std::shared_ptr<const BlockRing> ambient,
                     const std::vector<RingElement>& gens);

/// K embedded into the ambient ring of T (identity when they share one).
std::vector<RingElement> embedded_basis(const Subalgebra& k, const BlockRing& ambient);

/// Contains 1 and is closed under products of basis elements.
bool is_unital_subring(const Subalgebra& t);
/// t is a unital subring that contains K and is closed under K-multiplication.
bool is_k_subalgebra(const Subalgebra& t, const Subalgebra& k);
bool is_subset(const Subalgebra& a, const Subalgebra& b);

/// "span{v1+v3, v2+v4}"
std::string format_subalgebra(const Subalgebra& t);

/// The primitive idempotents of K, which is a product of fields because it
/// is a reduced subring of one.  Blocks i and j of the ambient ring fall
/// into the same factor exactly when {k in K : k[i] = 0} = {k in K : k[j] = 0}.
/// Ordered by smallest block.  Throws KBlockNotField if a class unit is
/// missing from K.
std::vector<Idempotent> primitive_idempotents(const Subalgebra& k);

/// T u = span{t u}.  u names blocks of the underlying ring, so T may also
/// live in a function algebra.
Subalgebra component(const Subalgebra& t, const Idempotent& u);

} // namespace ggt
