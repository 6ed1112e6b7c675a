#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ternary/checked.hpp"

namespace ternary {

/// Class-number-one data used to check the 3-prime classification.
struct HeegnerConstants {
    static constexpr std::array<Natural, 9> heegner{1, 2, 3, 7, 11, 19, 43, 67, 163};
    static constexpr std::array<std::int64_t, 9> discriminants{-3, -4, -7, -8, -11, -19, -43, -67, -163};
    /// Euler's lucky numbers with 1 prepended: exactly the k with 4k-1 Heegner.
    static constexpr std::array<Natural, 7> augmented_lucky{1, 2, 3, 5, 11, 17, 41};

    static bool is_heegner(Natural n) noexcept;
    static bool is_augmented_lucky(Natural n) noexcept;
};

/// Whether 1 counts as 3-prime. On by default: 1 has no representation by a
/// nondegenerate hexagon or parallelogram.
struct Convention {
    bool one_is_3prime = true;
};

/// Ordinary primality, exact for every 64-bit n (deterministic Miller-Rabin
/// with the first twelve prime bases).
bool is_2prime(Natural n);

/// n is 3-prime iff n + 2T_k is 2-prime for k = 0 .. n-2, i.e. no corner
/// completion of a hexagon for n yields a 2-composite parallelogram.
/// Throws OverflowError when n + 2T_{n-2} exceeds 64 bits.
bool is_3prime_direct(Natural n, Convention convention = {});

/// 3-primes in [1, limit] by testing each value directly.
std::vector<Natural> three_primes_direct(Natural limit, Convention convention = {});

/// n^2 - n + p is 2-prime for every n in [1, p-1]; vacuously true for p = 1.
bool euler_lucky_check(Natural p);

/// For D < 0 with D = 1 mod 4: x^2 - x + (1 + |D|)/4 is 2-prime for every
/// x in [1, (|D|-3)/4]. Throws DomainError for any other D.
bool rabinowitsch_check(std::int64_t discriminant);

/// All p in [1, limit] passing euler_lucky_check, ascending.
std::vector<Natural> lucky_numbers(Natural limit);

/// All D = 1 mod 4 with -limit < D < 0 passing rabinowitsch_check, by decreasing D.
std::vector<std::int64_t> rabinowitsch_discriminants(std::int64_t limit);

} // namespace ternary
