#include "ggt/blockring.hpp"

#include <algorithm>
#include <limits>

#include "ggt/error.hpp"
#include "ggt/subalgebra.hpp"

namespace ggt {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        out *= base;
    }
    return out;
}

} // namespace

bool IdealRef::contains(std::size_t block) const
{
    return std::binary_search(support.begin(), support.end(), block);
}

std::optional<std::size_t> BlockRing::find(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t BlockRing::index(const std::string& label) const
{
    if (auto i = find(label))
        return *i;
    throw Error(ErrorKind::UnknownLabel, "ring has no block '" + label + "'");
}

IdealRef BlockRing::ideal(std::size_t identity) const
{
    IdealRef e;
    for (std::size_t j = 0; j < size(); ++j)
        if (owner_[j] == identity)
            e.support.push_back(j);
    return e;
}

std::uint64_t BlockRing::cardinality() const noexcept
{
    return saturating_pow(field_.order(), size());
}

RingElement BlockRing::zero() const
{
    return RingElement{Vector(size(), field_.zero())};
}

RingElement BlockRing::one() const
{
    return RingElement{Vector(size(), field_.one())};
}

RingElement BlockRing::block_unit(std::size_t block) const
{
    RingElement x = zero();
    x.coords.at(block) = field_.one();
    return x;
}

RingElement BlockRing::unit_of(const IdealRef& ideal) const
{
    RingElement x = zero();
    for (std::size_t j : ideal.support)
        x.coords.at(j) = field_.one();
    return x;
}

bool BlockRing::same_as(const BlockRing& other) const noexcept
{
    return this == &other || (field_ == other.field_ && labels_ == other.labels_ &&
                              owner_ == other.owner_ && base_ == other.base_);
}

BlockRing make_block_ring(std::shared_ptr<const Groupoid> g, FieldSpec field,
                          std::vector<std::string> labels, std::vector<std::size_t> owner,
                          std::vector<std::size_t> base, std::size_t base_size,
                          bool every_identity_owns)
{
    const Groupoid& G = *g;
    if (owner.size() != labels.size())
        throw Error(ErrorKind::BlockMismatch, "owner table does not cover the blocks");
    for (std::size_t j = 0; j < labels.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i)
            if (labels[i] == labels[j])
                throw Error(ErrorKind::BlockMismatch, "block '" + labels[j] + "' listed twice");
        if (owner[j] >= G.size() || !G.is_identity(owner[j]))
            throw Error(ErrorKind::BlockMismatch,
                        "block '" + labels[j] + "' is not owned by an identity");
    }
    if (every_identity_owns)
        for (std::size_t e : G.identities())
            if (std::find(owner.begin(), owner.end(), e) == owner.end())
                throw Error(ErrorKind::BlockMismatch, "identity " + G.label(e) + " owns no block");
    if (base.empty()) {
        for (std::size_t j = 0; j < labels.size(); ++j)
            base.push_back(j);
        base_size = labels.size();
    }
    if (base.size() != labels.size())
        throw Error(ErrorKind::BlockMismatch, "base table does not cover the blocks");
    for (std::size_t b : base)
        if (b >= base_size)
            throw Error(ErrorKind::BlockMismatch, "base block out of range");

    BlockRing r;
    r.prime_ = prime_field(field.characteristic());
    r.field_ = std::move(field);
    r.groupoid_ = std::move(g);
    r.labels_ = std::move(labels);
    r.owner_ = std::move(owner);
    r.base_ = std::move(base);
    r.base_size_ = base_size;
    return r;
}

BlockRing make_block_ring(std::shared_ptr<const Groupoid> g, FieldSpec field,
                          const std::vector<std::string>& blocks,
                          const std::map<std::string, std::vector<std::string>>& ideals)
{
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(blocks.size(), unset);
    for (const auto& [e, members] : ideals) {
        const std::size_t ie = g->index(e);
        if (!g->is_identity(ie))
            throw Error(ErrorKind::BlockMismatch, e + " is not an identity");
        for (const auto& b : members) {
            auto it = std::find(blocks.begin(), blocks.end(), b);
            if (it == blocks.end())
                throw Error(ErrorKind::UnknownLabel, "ideal of " + e + " names unknown block '" + b + "'");
            std::size_t& slot = owner[static_cast<std::size_t>(it - blocks.begin())];
            if (slot != unset)
                throw Error(ErrorKind::BlockMismatch, "block '" + b + "' lies in two ideals");
            slot = ie;
        }
    }
    for (std::size_t j = 0; j < blocks.size(); ++j)
        if (owner[j] == unset)
            throw Error(ErrorKind::BlockMismatch, "block '" + blocks[j] + "' lies in no ideal");
    return make_block_ring(std::move(g), std::move(field), blocks, std::move(owner));
}

void check_element(const BlockRing& r, const RingElement& x)
{
    if (x.coords.size() != r.size())
        throw Error(ErrorKind::BlockMismatch, "element has " + std::to_string(x.coords.size()) +
                                                  " coordinates, ring has " +
                                                  std::to_string(r.size()) + " blocks");
    for (Scalar c : x.coords)
        if (!r.field().contains(c))
            throw Error(ErrorKind::BlockMismatch, "coordinate outside the field");
}

RingElement ring_arith(const BlockRing& r, RingOp op, const RingElement& x, const RingElement& y)
{
    check_element(r, x);
    if (op != RingOp::Neg)
        check_element(r, y);
    const FieldSpec& F = r.field();
    RingElement out = r.zero();
    for (std::size_t j = 0; j < r.size(); ++j) {
        switch (op) {
        case RingOp::Add: out.coords[j] = F.add(x.coords[j], y.coords[j]); break;
        case RingOp::Sub: out.coords[j] = F.sub(x.coords[j], y.coords[j]); break;
        case RingOp::Mul: out.coords[j] = F.mul(x.coords[j], y.coords[j]); break;
        case RingOp::Neg: out.coords[j] = F.neg(x.coords[j]); break;
        }
    }
    return out;
}

RingElement add(const BlockRing& r, const RingElement& x, const RingElement& y)
{
    return ring_arith(r, RingOp::Add, x, y);
}

RingElement sub(const BlockRing& r, const RingElement& x, const RingElement& y)
{
    return ring_arith(r, RingOp::Sub, x, y);
}

RingElement mul(const BlockRing& r, const RingElement& x, const RingElement& y)
{
    return ring_arith(r, RingOp::Mul, x, y);
}

RingElement neg(const BlockRing& r, const RingElement& x)
{
    return ring_arith(r, RingOp::Neg, x, x);
}

RingElement scale(const BlockRing& r, Scalar c, const RingElement& x)
{
    check_element(r, x);
    RingElement out = x;
    for (auto& v : out.coords)
        v = r.field().mul(c, v);
    return out;
}

bool is_zero(const RingElement& x)
{
    return std::all_of(x.coords.begin(), x.coords.end(), [](Scalar c) { return c.code == 0; });
}

RingElement embed_base(const BlockRing& s, const RingElement& x)
{
    if (x.coords.size() != s.base_size())
        throw Error(ErrorKind::BlockMismatch, "element does not belong to the underlying ring");
    RingElement out = s.zero();
    for (std::size_t j = 0; j < s.size(); ++j)
        out.coords[j] = x.coords[s.base(j)];
    return out;
}

Vector to_prime_vector(const BlockRing& r, const RingElement& x)
{
    check_element(r, x);
    const std::size_t k = r.field().degree();
    Vector v;
    v.reserve(r.size() * k);
    for (Scalar c : x.coords)
        for (std::uint32_t a : r.field().coeffs(c))
            v.push_back(Scalar{a});
    return v;
}

RingElement from_prime_vector(const BlockRing& r, const Vector& v)
{
    const std::size_t k = r.field().degree();
    if (v.size() != r.size() * k)
        throw Error(ErrorKind::BlockMismatch, "prime vector has the wrong length");
    RingElement x = r.zero();
    std::vector<std::uint32_t> c(k);
    for (std::size_t j = 0; j < r.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i)
            c[i] = v[j * k + i].code;
        x.coords[j] = r.field().from_coeffs(c);
    }
    return x;
}

std::vector<RingElement> prime_basis(const BlockRing& r, const IdealRef& support)
{
    std::vector<RingElement> out;
    const FieldSpec& F = r.field();
    for (std::size_t j : support.support) {
        Scalar power = F.one();
        for (std::uint32_t i = 0; i < F.degree(); ++i) {
            RingElement x = r.zero();
            x.coords.at(j) = power;
            out.push_back(std::move(x));
            power = F.mul(power, F.generator());
        }
    }
    return out;
}

std::vector<RingElement> all_elements(const BlockRing& r, const Limits& limits)
{
    const std::uint64_t count = r.cardinality();
    if (count > limits.max_elements)
        throw Error(ErrorKind::SizeBoundExceeded,
                    "ring has more than " + std::to_string(limits.max_elements) + " elements");
    std::vector<RingElement> out;
    out.reserve(count);
    RingElement x = r.zero();
    const std::uint32_t q = r.field().order();
    for (std::uint64_t n = 0; n < count; ++n) {
        out.push_back(x);
        for (auto& c : x.coords) {
            if (++c.code < q)
                break;
            c.code = 0;
        }
    }
    return out;
}

std::string format_element(const BlockRing& r, const RingElement& x)
{
    check_element(r, x);
    std::string out;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const Scalar c = x.coords[j];
        if (c.code == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (c != r.field().one()) {
            const std::string s = r.field().format(c);
            out += s.find('+') == std::string::npos ? s : "(" + s + ")";
            out += "*";
        }
        out += r.label(j);
    }
    return out.empty() ? "0" : out;
}

namespace {

/// Splits at top-level occurrences of sep.
std::vector<std::string_view> split_top(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(')
            ++depth;
        else if (text[i] == ')')
            --depth;
        else if (text[i] == sep && depth == 0) {
            out.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    out.push_back(text.substr(start));
    return out;
}

[[noreturn]] void bad_element(std::string_view text, const std::string& why)
{
    throw Error(ErrorKind::ParseError, "element \"" + std::string(text) + "\": " + why);
}

std::optional<std::uint64_t> parse_uint(std::string_view s)
{
    if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) {
            return c >= '0' && c <= '9';
        }))
        return std::nullopt;
    return std::stoull(std::string(s));
}

/// A polynomial in t: terms c, t, t^k, c*t, c*t^k, parenthesized sums.
Scalar parse_scalar(const FieldSpec& F, std::string_view s, std::string_view whole)
{
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    Scalar total = F.zero();
    for (std::string_view term : split_top(s, '+')) {
        Scalar value = F.one();
        for (std::string_view factor : split_top(term, '*')) {
            if (auto n = parse_uint(factor)) {
                value = F.mul(value, F.from_int(static_cast<std::int64_t>(*n % F.characteristic())));
            } else if (factor == "t") {
                value = F.mul(value, F.generator());
            } else if (factor.size() > 2 && factor.substr(0, 2) == "t^") {
                auto e = parse_uint(factor.substr(2));
                if (!e)
                    bad_element(whole, "bad exponent in " + std::string(factor));
                value = F.mul(value, F.pow(F.generator(), *e));
            } else if (factor.size() >= 2 && factor.front() == '(') {
                value = F.mul(value, parse_scalar(F, factor, whole));
            } else {
                bad_element(whole, "bad coefficient " + std::string(factor));
            }
        }
        total = F.add(total, value);
    }
    return total;
}

} // namespace

RingElement parse_element(const BlockRing& r, std::string_view text)
{
    std::string compact;
    for (char c : text)
        if (c != ' ')
            compact += c;
    const std::string_view s = compact;
    if (s.empty())
        bad_element(text, "empty");
    if (s == "0")
        return r.zero();
    if (s == "1")
        return r.one();
    RingElement out = r.zero();
    for (std::string_view term : split_top(s, '+')) {
        const auto factors = split_top(term, '*');
        const auto block = r.find(std::string(factors.back()));
        if (!block)
            bad_element(text, "unknown block " + std::string(factors.back()));
        Scalar c = r.field().one();
        if (factors.size() > 1) {
            const std::string_view coeff = term.substr(0, term.size() - factors.back().size() - 1);
            c = parse_scalar(r.field(), coeff, text);
        }
        out.coords[*block] = r.field().add(out.coords[*block], c);
    }
    return out;
}

std::string format_ideal(const BlockRing& r, const IdealRef& e)
{
    std::string out = "{";
    for (std::size_t i = 0; i < e.support.size(); ++i) {
        if (i)
            out += ",";
        out += r.label(e.support[i]);
    }
    return out + "}";
}

RingElement idempotent_element(const BlockRing& r, const Idempotent& pi)
{
    return r.unit_of(IdealRef{pi.support});
}

std::vector<Idempotent> idempotents_of(const BlockRing& r, const IdealRef& e, const Limits& limits)
{
    for (std::size_t j : e.support)
        if (j >= r.size())
            throw Error(ErrorKind::BlockMismatch, "ideal support outside the ring");
    const std::size_t n = e.support.size();
    if (n > limits.max_idempotent_support || n >= 63)
        throw Error(ErrorKind::SizeBoundExceeded,
                    "ideal " + format_ideal(r, e) + " has " + std::to_string(n) +
                        " blocks, bound is " + std::to_string(limits.max_idempotent_support));
    std::vector<Idempotent> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Idempotent pi;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                pi.support.push_back(e.support[i]);
        out.push_back(std::move(pi));
    }
    return out;
}

FaithfulVerdict is_faithful_ideal(const Subalgebra& k, const IdealRef& e)
{
    const BlockRing& R = k.ambient();
    const FieldSpec& Fp = R.prime_field();
    const RingElement unit = R.unit_of(e);
    // Columns: K basis coefficients; rows: F_p coordinates of x 1_E.
    const std::vector<RingElement> basis = k.basis_elements();
    std::vector<Vector> images;
    for (const auto& b : basis)
        images.push_back(to_prime_vector(R, mul(R, b, unit)));
    LinearSystem sys;
    sys.cols = basis.size();
    for (std::size_t row = 0; row < R.prime_dimension(); ++row) {
        Vector line;
        for (const auto& img : images)
            line.push_back(img[row]);
        sys.matrix.push_back(std::move(line));
        sys.rhs.push_back(Fp.zero());
    }
    const LinearSolution sol = solve_linear(Fp, sys);
    if (sol.nullspace.empty())
        return {true, std::nullopt};
    return {false, k.combine(sol.nullspace.front())};
}

bool lemma61_criterion(const Groupoid& g, std::size_t element)
{
    if (element >= g.size())
        throw Error(ErrorKind::UnknownLabel, "element index out of range");
    const std::size_t dg = g.source(element), rg = g.target(element);
    for (std::size_t h = 0; h < g.size(); ++h) {
        const std::size_t a = g.source(h), b = g.source(g.inverse(h));
        if (a != dg && a != rg && b != dg && b != rg)
            return false;
    }
    return true;
}

bool lemma61_criterion(const Groupoid& g, const std::string& label)
{
    return lemma61_criterion(g, g.index(label));
}

} // namespace ggt
