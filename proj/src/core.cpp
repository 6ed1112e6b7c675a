#include "ternary/core.hpp"

#include <algorithm>
#include <array>

namespace ternary {

Triple Triple::canonicalize(Natural x, Natural y, Natural z)
{
    if (x == 0 || y == 0 || z == 0)
        throw DomainError("ternary product arguments must be >= 1");
    std::array<Natural, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return Triple(v[0], v[1], v[2]);
}

std::string Triple::to_string() const
{
    return "(" + std::to_string(x_) + "," + std::to_string(y_) + "," + std::to_string(z_) + ")";
}

Natural triangular(Natural k)
{
    const Natural next = checked::add(k, 1);
    if (k % 2 == 0)
        return checked::mul(k / 2, next);
    return checked::mul(k, next / 2);
}

Natural product_symmetric(const Triple& t)
{
    using namespace checked;
    const Natural x = t.x(), y = t.y(), z = t.z();
    const Natural e2 = add(add(mul(x, y), mul(y, z)), mul(z, x));
    const Natural e1 = add(add(x, y), z);
    // e2 - e1 + 1 >= 1 for x, y, z >= 1, so add the unit before subtracting.
    return sub(add(e2, 1), e1);
}

Natural product_strip(const Triple& t)
{
    using namespace checked;
    const Natural x = t.x(), y = t.y(), z = t.z();
    const Natural strip = add(x, y) - 1;
    return add(mul(x, y), mul(z - 1, strip));
}

Natural product_inclusion(const Triple& t)
{
    using namespace checked;
    const Natural x = t.x(), y = t.y(), z = t.z();
    const Natural outer = mul(mul(x, y), z);
    const Natural inner = (x - 1) * (y - 1) * (z - 1); // < outer, cannot wrap
    return outer - inner;
}

Natural product(const Triple& t) { return product_strip(t); }

} // namespace ternary
