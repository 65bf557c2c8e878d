#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace defk {

enum class SieveRule { bruck_ryser, thm_3_1, lemma_5_1, thm_5_3, prop_4_2 };
enum class SieveVerdict { excluded, not_excluded, inapplicable };

std::string_view rule_name(SieveRule rule);
std::string_view verdict_name(SieveVerdict verdict);

// Outcome of one nonexistence rule at one parameter pair. The rules are
// necessary conditions only, so not-excluded never claims existence; the
// tested quantities are recorded as key/value witnesses.
struct ParameterVerdict {
    int n = 0;
    int k = 0;
    SieveRule rule = SieveRule::thm_3_1;
    SieveVerdict verdict = SieveVerdict::inapplicable;
    std::vector<std::pair<std::string, std::string>> witnesses;
};

// Deficiency-2 square test: a symmetric configuration of order n with k = 2
// needs n+1 square when (n^2+n)/2 is even, n-1 square when it is odd.
ParameterVerdict sieve_k2(int n);

// Deficiency-k pipeline for configurations with transitive parallels:
// k <= n+1, then k | n^2+n, then (even k only) the square test on n+1 or
// n-(k-1) depending on the parity of (n^2+n)/k. Odd k is reported
// inapplicable for the square step.
ParameterVerdict sieve_tops(int n, int k);

// Projective-plane test at order n (k = 1): n congruent 1 or 2 mod 4
// requires n to be a sum of two squares.
ParameterVerdict sieve_bruck_ryser(int n);

// All applicable rules over the half-open range [n_min, n_end) and the given
// deficiencies: k = 1 routes to bruck-ryser, k = 2 to the dedicated square
// test, k >= 3 to the transitive-parallels pipeline. Rows ordered by n, then k.
std::vector<ParameterVerdict> scan(int n_min, int n_end, std::vector<int> ks);

}  // namespace defk
