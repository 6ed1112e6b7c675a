#include "ternary/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "ternary/primality.hpp"

namespace ternary {
namespace {

void require_odd_modulus(Natural n)
{
    if (n < 3 || n % 2 == 0)
        throw DomainError("modulus must be odd and at least 3, got " + std::to_string(n));
}

} // namespace

TernaryFactorizationSet enumerate_3factorizations(Natural n)
{
    if (n == 0)
        throw DomainError("3-factorizations are defined for n >= 1");

    TernaryFactorizationSet out{n, {}};
    for (Natural k = 0;; ++k) {
        // Smallest side z = k+1 must satisfy <z,z,z> = 3z^2 - 3z + 1 <= n.
        const Natural z = k + 1;
        if (checked::add(checked::mul(3, checked::mul(z, z - 1)), 1) > n)
            break;
        const Natural completed = checked::add(n, checked::mul(k, k + 1));
        for (Natural a = k + 1; a <= completed / a; ++a) {
            if (completed % a == 0)
                out.triples.push_back(canonicalize(a - k, completed / a - k, z));
        }
    }
    std::sort(out.triples.begin(), out.triples.end());
    out.triples.erase(std::unique(out.triples.begin(), out.triples.end()), out.triples.end());
    return out;
}

Natural count_3factorizations(Natural n) { return enumerate_3factorizations(n).triples.size(); }

CongruenceTrace congruence_trace(Natural n, Natural max_steps)
{
    require_odd_modulus(n);
    const Natural last = (n - 1) / 2;
    if (last + 1 > max_steps)
        throw LimitError("congruence trace for " + std::to_string(n) + " exceeds the step limit");

    CongruenceTrace trace;
    trace.modulus = n;
    std::unordered_map<Natural, Natural> first_seen;
    first_seen.reserve(static_cast<std::size_t>(std::min<Natural>(last + 1, Natural{1} << 16)));

    Natural r = 0;
    for (Natural k = 0; k <= last; ++k) {
        if (k > 0) {
            const Natural step = (2 * k) % n;
            r = r >= step ? r - step : r + n - step;
        }
        trace.residues.push_back(r);
        auto [it, inserted] = first_seen.try_emplace(r, k);
        if (!inserted) {
            trace.repetition = Repetition{it->second, k};
            break;
        }
    }
    return trace;
}

bool two_primality_test(Natural n) { return !congruence_trace(n).repetition.has_value(); }

DivisorWitness divisor_from_repetition(Natural n, Repetition rep)
{
    if (rep.k >= rep.l)
        throw DomainError("repetition indices must satisfy k < l");
    DivisorWitness w;
    w.repetition = rep;
    w.gcd_difference = std::gcd(rep.l - rep.k, n);
    w.gcd_sum = std::gcd(checked::add(rep.l + rep.k, 1), n);
    auto proper = [n](Natural d) { return d > 1 && d < n; };
    if (proper(w.gcd_difference)) {
        w.route = GcdRoute::IndexDifference;
        w.divisor = w.gcd_difference;
    } else if (proper(w.gcd_sum)) {
        w.route = GcdRoute::IndexSum;
        w.divisor = w.gcd_sum;
    } else {
        throw DomainError("repetition yields no proper divisor of " + std::to_string(n));
    }
    return w;
}

FactorizationReport factor2_step(Natural n, Natural max_steps)
{
    require_odd_modulus(n);
    FactorizationReport report;
    report.n = n;

    const CongruenceTrace trace = congruence_trace(n, max_steps);
    if (!trace.repetition) {
        report.factors.emplace(n, 1);
        return report;
    }
    report.witness = divisor_from_repetition(n, *trace.repetition);
    report.divisor = report.witness->divisor;
    report.cofactor = n / report.witness->divisor;
    return report;
}

FactorizationReport factor2_full(Natural n, Natural max_steps)
{
    if (n < 2)
        throw DomainError("2-factorization needs n >= 2");

    FactorizationReport report;
    report.n = n;

    Natural odd = n;
    while (odd % 2 == 0) {
        odd /= 2;
        ++report.factors[2];
    }
    if (odd != n && n != 2) {
        report.divisor = 2;
        report.cofactor = n / 2;
    }

    std::vector<Natural> pending;
    if (odd > 1)
        pending.push_back(odd);
    while (!pending.empty()) {
        const Natural m = pending.back();
        pending.pop_back();
        // A 2-prime would need the full (m-1)/2-step trace to confirm.
        if (is_2prime(m)) {
            ++report.factors[m];
            continue;
        }
        const FactorizationReport step = factor2_step(m, max_steps);
        if (!report.divisor) {
            report.divisor = step.divisor;
            report.cofactor = step.cofactor;
            report.witness = step.witness;
        }
        pending.push_back(*step.divisor);
        pending.push_back(*step.cofactor);
    }
    return report;
}

} // namespace ternary
