#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggt/groupoid.hpp"
#include "ggt/limits.hpp"
#include "ggt/scalar.hpp"

namespace ggt {

class Subalgebra;

/// One scalar per block.
struct RingElement {
    std::vector<Scalar> coords;

    auto operator<=>(const RingElement&) const = default;
};

/// An ideal of a block ring, identified with its block support (sorted).
struct IdealRef {
    std::vector<std::size_t> support;

    bool contains(std::size_t block) const;
    bool operator==(const IdealRef&) const = default;
};

/// A 0/1 block vector; the only idempotents of a product of fields.
struct Idempotent {
    std::vector<std::size_t> support;

    bool operator==(const Idempotent&) const = default;
};

/// A finite product of copies of one finite field, with each block owned by
/// an identity of a groupoid: R = (+)_{e in G0} E_e.
///
/// A block ring may be built over another ring (as the function algebra
/// Map(X,R) is); base(j) then names the block of the underlying ring whose
/// scalar block j carries, which is how elements of the underlying ring
/// embed as constants.  For an ordinary ring base(j) = j.
class BlockRing {
public:
    const FieldSpec& field() const noexcept { return field_; }
    /// F_p, the prime subfield; all subalgebra linear algebra happens here.
    const FieldSpec& prime_field() const noexcept { return prime_; }
    const Groupoid& groupoid() const noexcept { return *groupoid_; }
    const std::shared_ptr<const Groupoid>& groupoid_ptr() const noexcept { return groupoid_; }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t block) const { return labels_.at(block); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> find(const std::string& label) const;
    /// Throws UnknownLabel.
    std::size_t index(const std::string& label) const;

    /// The identity e with block in E_e.
    std::size_t owner(std::size_t block) const { return owner_[block]; }
    std::size_t base(std::size_t block) const { return base_[block]; }
    std::size_t base_size() const noexcept { return base_size_; }

    /// E_e = R 1_e as a block support.
    IdealRef ideal(std::size_t identity) const;

    /// Dimension of R over F_p.
    std::size_t prime_dimension() const noexcept { return size() * field_.degree(); }
    /// q^n, saturated at UINT64_MAX.
    std::uint64_t cardinality() const noexcept;

    RingElement zero() const;
    RingElement one() const;
    RingElement block_unit(std::size_t block) const;
    RingElement unit_of(const IdealRef& ideal) const;

    bool same_as(const BlockRing& other) const noexcept;

private:
    friend BlockRing make_block_ring(std::shared_ptr<const Groupoid>, FieldSpec,
                                     std::vector<std::string>, std::vector<std::size_t>,
                                     std::vector<std::size_t>, std::size_t, bool);

    FieldSpec field_;
    FieldSpec prime_;
    std::shared_ptr<const Groupoid> groupoid_;
    std::vector<std::string> labels_;
    std::vector<std::size_t> owner_;
    std::vector<std::size_t> base_;
    std::size_t base_size_ = 0;
};

/// Index-level constructor.  owner[j] must be an identity of the groupoid.
/// An empty base means base(j) = j.  When every_identity_owns is set, an
/// identity owning no block is rejected with BlockMismatch.
BlockRing make_block_ring(std::shared_ptr<const Groupoid> g, FieldSpec field,
                          std::vector<std::string> labels, std::vector<std::size_t> owner,
                          std::vector<std::size_t> base = {}, std::size_t base_size = 0,
                          bool every_identity_owns = true);

/// Builds R from the identity -> blocks table; every block must appear in
/// exactly one ideal.
BlockRing make_block_ring(std::shared_ptr<const Groupoid> g, FieldSpec field,
                          const std::vector<std::string>& blocks,
                          const std::map<std::string, std::vector<std::string>>& ideals);

enum class RingOp { Add, Sub, Mul, Neg };

/// Blockwise arithmetic; throws BlockMismatch when an operand has the wrong
/// number of blocks or an invalid scalar.  y is ignored for Neg.
RingElement ring_arith(const BlockRing& r, RingOp op, const RingElement& x, const RingElement& y);

RingElement add(const BlockRing& r, const RingElement& x, const RingElement& y);
RingElement sub(const BlockRing& r, const RingElement& x, const RingElement& y);
RingElement mul(const BlockRing& r, const RingElement& x, const RingElement& y);
RingElement neg(const BlockRing& r, const RingElement& x);
RingElement scale(const BlockRing& r, Scalar c, const RingElement& x);
bool is_zero(const RingElement& x);
void check_element(const BlockRing& r, const RingElement& x);

/// Element of the underlying ring viewed as a constant: s[j] = x[base(j)].
RingElement embed_base(const BlockRing& s, const RingElement& x);

/// Coordinates over F_p, block-major; inverse of from_prime_vector.
Vector to_prime_vector(const BlockRing& r, const RingElement& x);
RingElement from_prime_vector(const BlockRing& r, const Vector& v);

/// c v_i for c running over the F_p basis 1, t, ..., t^{k-1} of the field,
/// for each block of the support in order.
std::vector<RingElement> prime_basis(const BlockRing& r, const IdealRef& support);

/// Every element of r, in base-q counter order with block 0 fastest.
std::vector<RingElement> all_elements(const BlockRing& r, const Limits& limits = {});

/// "v1+v3", "t*v1+(t+1)*v2", "0".
std::string format_element(const BlockRing& r, const RingElement& x);
std::string format_ideal(const BlockRing& r, const IdealRef& e);

/// Inverse of format_element.  Also accepts "1" for the unit, integer
/// coefficients, "t^k" and repeated labels, which add up.  Throws ParseError.
RingElement parse_element(const BlockRing& r, std::string_view text);

RingElement idempotent_element(const BlockRing& r, const Idempotent& pi);

/// All nonzero idempotents of E, as nonempty subsets of its support in
/// binary counter order (lowest block fastest).
std::vector<Idempotent> idempotents_of(const BlockRing& r, const IdealRef& e,
                                       const Limits& limits = {});

struct FaithfulVerdict {
    bool faithful = false;
    std::optional<RingElement> witness;

    explicit operator bool() const noexcept { return faithful; }
};

/// True iff x 1_E = 0 forces x = 0 for x in K.  The witness is the first
/// kernel basis vector of x -> x 1_E in K's basis coordinates.
FaithfulVerdict is_faithful_ideal(const Subalgebra& k, const IdealRef& e);

/// For every h: d(h) or d(h^-1) is one of d(g), r(g).
bool lemma61_criterion(const Groupoid& g, const std::string& label);
bool lemma61_criterion(const Groupoid& g, std::size_t element);

} // namespace ggt
