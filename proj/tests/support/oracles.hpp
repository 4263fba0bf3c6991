#pragma once

// Brute-force oracles and seeded generators shared by the test suites.  The
// oracles avoid the library's structural code paths: they enumerate
// coordinates directly and apply definitions literally.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ggt/action.hpp"
#include "ggt/blockring.hpp"
#include "ggt/scalar.hpp"

namespace ggt::oracle {

/// Every coordinate vector of length n over F_q, first coordinate fastest.
inline void each_vector(std::uint32_t q, std::size_t n, const std::function<void(const Vector&)>& f)
{
    Vector v(n, Scalar{0});
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < n && ++v[i].code == q) {
            v[i].code = 0;
            ++i;
        }
        if (i == n)
            return;
    }
}

/// Every element of R, by coordinates.
inline std::vector<RingElement> ring_elements(const BlockRing& r)
{
    std::vector<RingElement> out;
    each_vector(r.field().order(), r.size(), [&](const Vector& v) { out.push_back({v}); });
    return out;
}

/// Every element of R supported on the given blocks.
inline std::vector<RingElement> elements_on(const BlockRing& r, const std::vector<std::size_t>& blocks)
{
    std::vector<RingElement> out;
    each_vector(r.field().order(), blocks.size(), [&](const Vector& v) {
        RingElement x = r.zero();
        for (std::size_t i = 0; i < blocks.size(); ++i)
            x.coords[blocks[i]] = v[i];
        out.push_back(x);
    });
    return out;
}

/// x 1_E.
inline RingElement restrict_to(const BlockRing& r, const RingElement& x, const IdealRef& e)
{
    RingElement y = r.zero();
    for (std::size_t b : e.support)
        y.coords[b] = x.coords[b];
    return y;
}

/// beta_g(x 1_{g^-1}) from the defining tables: block b of E_{g^-1} goes to
/// sigma_g(b) with its coordinate raised to p^frob.
inline RingElement beta(const AlgebraAction& a, std::size_t g, const RingElement& x)
{
    const BlockRing& r = a.ring();
    const FieldSpec& f = r.field();
    RingElement y = r.zero();
    const std::size_t gi = a.groupoid().inverse(g);
    for (std::size_t b : a.support(gi).support) {
        Scalar c = x.coords[b];
        for (std::uint32_t i = 0; i < a.frob(g, b); ++i)
            c = f.pow(c, f.characteristic());
        y.coords[a.sigma(g, b)] = c;
    }
    return y;
}

/// Fixed-seed source for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    Scalar scalar(const FieldSpec& f) { return Scalar{static_cast<std::uint32_t>(index(f.order()))}; }

    RingElement element(const BlockRing& r)
    {
        RingElement x = r.zero();
        for (auto& c : x.coords)
            c = scalar(r.field());
        return x;
    }

    Matrix matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    {
        Matrix m(rows, Vector(cols));
        for (auto& row : m)
            for (auto& c : row)
                c = scalar(f);
        return m;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace ggt::oracle
