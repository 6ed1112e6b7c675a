#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ternary/core.hpp"

namespace ternary {

/// Every canonical triple whose ternary product is n, including <1,1,n>
/// and the binary-reducible <1,a,b>.
struct TernaryFactorizationSet {
    Natural n = 0;
    std::vector<Triple> triples; ///< ascending, no duplicates
};

/// Reads each factorization n + 2T_k = ab with k < a <= b as the hexagon
/// <a-k, b-k, k+1>, for every k with <k+1,k+1,k+1> <= n. Factors by trial
/// division. Throws DomainError for n = 0, OverflowError past 64 bits.
TernaryFactorizationSet enumerate_3factorizations(Natural n);

Natural count_3factorizations(Natural n);

/// First indices k < l with r_k == r_l.
struct Repetition {
    Natural k = 0;
    Natural l = 0;

    friend bool operator==(const Repetition&, const Repetition&) = default;
};

/// Residues r_k = -2T_k mod n, equivalently (k+1)(n-k) mod n.
struct CongruenceTrace {
    Natural modulus = 0;
    std::vector<Natural> residues; ///< r_0 .. r_last; r_last is the repeat if one was found
    std::optional<Repetition> repetition;
};

/// Default cap on trace length; longer traces raise LimitError.
inline constexpr Natural kDefaultTraceSteps = Natural{1} << 24;

/// Builds r_k = r_{k-1} - 2k (mod n) from r_0 = 0 and stops at the first
/// repeated residue or after k = (n-1)/2. Throws DomainError unless n is odd
/// and >= 3.
CongruenceTrace congruence_trace(Natural n, Natural max_steps = kDefaultTraceSteps);

/// n is 2-prime iff x(n+1-x) mod n is distinct for 1 <= x <= (n+1)/2,
/// i.e. the congruence trace never repeats. n odd, >= 3.
bool two_primality_test(Natural n);

enum class GcdRoute {
    IndexDifference, ///< gcd(l - k, n)
    IndexSum,        ///< gcd(l + k + 1, n)
};

struct DivisorWitness {
    Repetition repetition;
    Natural gcd_difference = 0; ///< gcd(l - k, n)
    Natural gcd_sum = 0;        ///< gcd(l + k + 1, n)
    GcdRoute route = GcdRoute::IndexDifference;
    Natural divisor = 0;
};

/// Since (l-k)(l+k+1) = 2(T_l - T_k) is a multiple of n, both gcds are
/// proper divisors of a composite odd n > 3. Prefers gcd(l-k, n). Throws
/// DomainError when neither gcd is a proper divisor.
DivisorWitness divisor_from_repetition(Natural n, Repetition repetition);

struct FactorizationReport {
    Natural n = 0;
    std::optional<Natural> divisor; ///< 1 < d < n, absent when n is 2-prime
    std::optional<Natural> cofactor;
    std::optional<DivisorWitness> witness;
    std::map<Natural, Natural> factors; ///< 2-prime -> multiplicity

    bool is_prime() const noexcept { return !divisor.has_value(); }
};

/// One split of an odd n >= 3 from its first trace repetition. A 2-prime n
/// comes back with no divisor and factors {n: 1}; otherwise factors is left
/// empty. Throws DomainError for even or too small n.
FactorizationReport factor2_step(Natural n, Natural max_steps = kDefaultTraceSteps);

/// Complete 2-factorization of n >= 2. Powers of two are stripped first;
/// odd composites are split with factor2_step until every part is 2-prime.
/// The divisor and witness describe the first split.
FactorizationReport factor2_full(Natural n, Natural max_steps = kDefaultTraceSteps);

} // namespace ternary
