#include "ternary/primality.hpp"

#include <algorithm>

#include "ternary/core.hpp"

namespace ternary {
namespace {

__extension__ using u128 = unsigned __int128;

Natural mul_mod(Natural a, Natural b, Natural m) { return static_cast<Natural>(static_cast<u128>(a) * b % m); }

Natural pow_mod(Natural base, Natural exp, Natural m)
{
    Natural result = 1;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Bases 2..37 are a proven witness set for n < 3.3e24.
constexpr std::array<Natural, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(Natural n, Natural d, unsigned s, Natural a)
{
    Natural x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool HeegnerConstants::is_heegner(Natural n) noexcept
{
    return std::find(heegner.begin(), heegner.end(), n) != heegner.end();
}

bool HeegnerConstants::is_augmented_lucky(Natural n) noexcept
{
    return std::find(augmented_lucky.begin(), augmented_lucky.end(), n) != augmented_lucky.end();
}

bool is_2prime(Natural n)
{
    if (n < 2)
        return false;
    for (Natural p : kWitnesses) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 41 * 41)
        return true;

    Natural d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (Natural a : kWitnesses) {
        if (!strong_probable_prime(n, d, s, a))
            return false;
    }
    return true;
}

bool is_3prime_direct(Natural n, Convention convention)
{
    if (n == 0)
        throw DomainError("3-primality is defined for n >= 1");
    if (n == 1)
        return convention.one_is_3prime;
    // Largest value tested is n + 2T_{n-2} = n + (n-1)(n-2).
    checked::add(n, checked::mul(n - 1, n - 2));

    Natural value = n; // n + 2T_k, advanced by 2(k+1) per step
    for (Natural k = 0; k + 2 <= n; ++k) {
        if (!is_2prime(value))
            return false;
        value += 2 * (k + 1);
    }
    return true;
}

std::vector<Natural> three_primes_direct(Natural limit, Convention convention)
{
    std::vector<Natural> out;
    for (Natural n = 1; n <= limit; ++n) {
        if (is_3prime_direct(n, convention))
            out.push_back(n);
    }
    return out;
}

bool euler_lucky_check(Natural p)
{
    if (p == 0)
        throw DomainError("lucky-number check is defined for p >= 1");
    checked::add(checked::mul(p - 1, p - 1), p);
    for (Natural n = 1; n < p; ++n) {
        if (!is_2prime(n * n - n + p))
            return false;
    }
    return true;
}

bool rabinowitsch_check(std::int64_t discriminant)
{
    if (discriminant >= 0 || ((discriminant % 4) + 4) % 4 != 1)
        throw DomainError("discriminant must be negative and congruent to 1 mod 4");
    const Natural abs_d = static_cast<Natural>(-(discriminant + 1)) + 1;
    const Natural constant = (1 + abs_d) / 4;
    const Natural last = (abs_d - 3) / 4;
    for (Natural x = 1; x <= last; ++x) {
        if (!is_2prime(checked::add(checked::mul(x, x - 1), constant)))
            return false;
    }
    return true;
}

std::vector<Natural> lucky_numbers(Natural limit)
{
    std::vector<Natural> out;
    for (Natural p = 1; p <= limit; ++p) {
        if (euler_lucky_check(p))
            out.push_back(p);
    }
    return out;
}

std::vector<std::int64_t> rabinowitsch_discriminants(std::int64_t limit)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = -3; d > -limit; d -= 4) {
        if (rabinowitsch_check(d))
            out.push_back(d);
    }
    return out;
}

} // namespace ternary
