#include "ternary/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ternary/core.hpp"

namespace ternary {
namespace {

Natural isqrt(Natural n)
{
    auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > n / r || r * r > n))
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

std::size_t estimated_bytes(Natural limit)
{
    // Bits for 2..N plus the prime list, sized from pi(N) < 1.26 N / ln N.
    const double n = static_cast<double>(limit);
    const double primes = n < 17 ? 8.0 : 1.26 * n / std::log(n);
    return static_cast<std::size_t>(n / 8.0 + 8.0 * primes + 64.0);
}

void check_limit(Natural limit, const SieveOptions& options)
{
    if (limit < 2)
        throw DomainError("sieve limit must be at least 2");
    if (limit >= std::numeric_limits<std::size_t>::max() / 2 || estimated_bytes(limit) > options.memory_budget)
        throw LimitError("sieve limit " + std::to_string(limit) + " exceeds the memory budget");
}

} // namespace

void SieveTable::for_each_survivor(const std::function<void(Natural)>& fn) const
{
    for (Natural n = 2; n <= limit_; ++n) {
        if (status_.test(n))
            fn(n);
    }
}

std::vector<Natural> SieveTable::survivors() const
{
    std::vector<Natural> out;
    for_each_survivor([&](Natural n) { out.push_back(n); });
    return out;
}

Natural max_stage(Natural n)
{
    if (n < 7)
        return 0;
    // 3k^2 + 3k + 1 <= n  <=>  k(k+1) <= (n-1)/3
    const Natural bound = (n - 1) / 3;
    Natural k = isqrt(bound);
    while (k * (k + 1) > bound)
        --k;
    return k;
}

std::vector<Progression> elimination_progressions(Natural limit, const std::vector<Natural>& primes)
{
    std::vector<Progression> out;
    const Natural stages = max_stage(limit);
    for (Natural k = 1; k <= stages; ++k) {
        const Natural twice_tk = k * (k + 1);
        const Natural reach = checked::add(limit, twice_tk);
        for (Natural p : primes) {
            if (p > reach / p)
                break;
            // Footnote guard: beyond p = 2k+1 the pair (k+1, p-k) repeats in reverse.
            if (p < 2 * k + 1)
                continue;
            out.push_back({k, p, p * p - twice_tk});
        }
    }
    return out;
}

SieveTable sieve2(Natural limit, const SieveOptions& options)
{
    check_limit(limit, options);

    SieveTable t;
    t.limit_ = limit;
    t.status_ = BitArray(static_cast<std::size_t>(limit) + 1);
    t.status_.clear(0);
    t.status_.clear(1);
    for (Natural p = 2; p <= limit / p; ++p) {
        if (!t.status_.test(p))
            continue;
        for (Natural m = p * p; m <= limit; m += p) {
            t.status_.clear(m);
            if (m > limit - p)
                break;
        }
    }
    for (Natural n = 2; n <= limit; ++n) {
        if (t.status_.test(n))
            t.primes2_.push_back(n);
    }
    t.stages_run_ = 1;
    return t;
}

SieveTable ternary_sieve(Natural limit, const SieveOptions& options)
{
    SieveTable t = sieve2(limit, options);
    const auto progressions = elimination_progressions(limit, t.primes2_);

    // Workers own whole 64-bit words, so clears never race.
    const unsigned workers = std::max(1U, options.threads);
    const Natural words = (limit + 64) / 64;
    const Natural chunk = (words + workers - 1) / workers;
    auto run = [&](Natural lo, Natural hi) {
        for (const auto& pr : progressions) {
            Natural n = pr.start;
            if (n < lo)
                n += (lo - n + pr.step - 1) / pr.step * pr.step;
            for (; n <= hi; n += pr.step) {
                t.status_.clear(n);
                if (n > hi - pr.step)
                    break;
            }
        }
    };

    if (workers == 1) {
        run(0, limit);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) {
            const Natural lo = i * chunk * 64;
            if (lo > limit)
                break;
            const Natural hi = std::min(limit, (i + 1) * chunk * 64 - 1);
            pool.emplace_back(run, lo, hi);
        }
    }

    t.stages_run_ = max_stage(limit) + 1;
    return t;
}

std::vector<Natural> three_primes(Natural limit, bool include_one, const SieveOptions& options)
{
    std::vector<Natural> out;
    if (include_one)
        out.push_back(1);
    ternary_sieve(limit, options).for_each_survivor([&](Natural n) { out.push_back(n); });
    return out;
}

} // namespace ternary
