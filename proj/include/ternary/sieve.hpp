#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ternary/checked.hpp"

namespace ternary {

/// One bit per integer; bits start set and are only ever cleared.
class BitArray {
public:
    BitArray() = default;
    explicit BitArray(std::size_t size) : size_(size), words_((size + 63) / 64, ~std::uint64_t{0}) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void clear(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct SieveOptions {
    /// Upper bound on bytes for the status bits plus the 2-prime list.
    std::size_t memory_budget = std::size_t{1} << 31;
    /// Workers for the elimination stages; each owns a disjoint range of bits.
    unsigned threads = 1;
};

/// Status of 2..N after sieving. Immutable once returned.
class SieveTable {
public:
    Natural limit() const noexcept { return limit_; }
    /// False for 0 and 1 and for anything outside [2, limit].
    bool survives(Natural n) const noexcept { return n >= 2 && n <= limit_ && status_.test(n); }
    /// All 2-primes <= limit, ascending.
    const std::vector<Natural>& primes2() const noexcept { return primes2_; }
    /// Stages executed, counting the Eratosthenes stage.
    Natural stages_run() const noexcept { return stages_run_; }

    /// Visits survivors in increasing order without materializing them.
    void for_each_survivor(const std::function<void(Natural)>& fn) const;
    std::vector<Natural> survivors() const;

private:
    friend SieveTable sieve2(Natural, const SieveOptions&);
    friend SieveTable ternary_sieve(Natural, const SieveOptions&);

    Natural limit_ = 0;
    BitArray status_;
    std::vector<Natural> primes2_;
    Natural stages_run_ = 0;
};

/// Arithmetic progression start, start + step, ... <= limit removed by the sieve.
struct Progression {
    Natural stage;  ///< k; the base product is <k+1, p-k, p-k>
    Natural step;   ///< the 2-prime p
    Natural start;  ///< p^2 - 2 T_k
};

/// Largest k with 3k^2 + 3k + 1 <= n, i.e. <k+1,k+1,k+1> <= n (0 when n < 7).
Natural max_stage(Natural n);

/// Progressions eliminated by stages 1.. of the ternary sieve, outer k, inner p
/// ascending: for each k <= max_stage(limit) and 2-prime p >= 2k+1 with
/// p^2 <= limit + 2T_k, the class of <k+1, p-k, p-k> modulo p upward.
/// `primes` must hold every 2-prime up to sqrt(2 * limit) in order.
std::vector<Progression> elimination_progressions(Natural limit, const std::vector<Natural>& primes);

/// Sieve of Eratosthenes on 2..N. Throws DomainError for N < 2 and
/// LimitError when the table would not fit the memory budget.
SieveTable sieve2(Natural limit, const SieveOptions& options = {});

/// Eratosthenes followed by every elimination stage; survivors are the
/// 3-primes in [2, N].
SieveTable ternary_sieve(Natural limit, const SieveOptions& options = {});

/// Survivors of ternary_sieve, ascending, with 1 prepended if `include_one`.
std::vector<Natural> three_primes(Natural limit, bool include_one = false, const SieveOptions& options = {});

} // namespace ternary
