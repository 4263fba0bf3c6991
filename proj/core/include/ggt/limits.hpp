#pragma once

#include <cstddef>
#include <cstdint>

namespace ggt {

/// Bounds on the exponential enumerations.
struct Limits {
    /// Largest groupoid or G-set handled by subset/bijection searches.
    std::size_t max_size = 20;
    /// Largest ideal support whose idempotents are listed.
    std::size_t max_idempotent_support = 16;
    /// Largest explicit element set (rings, subalgebras, function spaces).
    std::uint64_t max_elements = std::uint64_t{1} << 16;
};

} // namespace ggt
