#pragma once

#include <functional>

#include <gtest/gtest.h>

#include "ggt/error.hpp"

namespace ggt::testing {

/// The kind of the ggt::Error raised by f; records a failure if none is.
inline ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::ParseError;
}

/// The witness carried by the ggt::Error raised by f.
inline std::string witness_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.witness();
    }
    ADD_FAILURE() << "no error raised";
    return {};
}

} // namespace ggt::testing
