#pragma once

#include <cstdint>

#include "ternary/errors.hpp"

namespace ternary {

using Natural = std::uint64_t;

namespace checked {

inline Natural add(Natural a, Natural b)
{
    Natural r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("natural addition overflows 64 bits");
    return r;
}

inline Natural sub(Natural a, Natural b)
{
    if (b > a)
        throw OverflowError("natural subtraction underflows");
    return a - b;
}

inline Natural mul(Natural a, Natural b)
{
    Natural r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("natural multiplication overflows 64 bits");
    return r;
}

} // namespace checked
} // namespace ternary
