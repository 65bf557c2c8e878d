#include "defk/sieve.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "defk/bigint.hpp"

namespace defk {

namespace {

std::string str(const BigInt& x) { return x.str(); }

std::string str(int x) { return std::to_string(x); }

void find_two_square_decomposition(int n, std::string& out) {
    for (BigInt a = 0; a * a <= n; ++a) {
        const BigInt rest = n - a * a;
        if (is_perfect_square(rest)) {
            std::ostringstream s;
            s << n << " = " << a << "^2 + " << isqrt_floor(rest) << "^2";
            out = s.str();
            return;
        }
    }
}

}  // namespace

std::string_view rule_name(SieveRule rule) {
    switch (rule) {
        case SieveRule::bruck_ryser: return "bruck-ryser";
        case SieveRule::thm_3_1: return "thm-3.1";
        case SieveRule::lemma_5_1: return "lemma-5.1";
        case SieveRule::thm_5_3: return "thm-5.3";
        case SieveRule::prop_4_2: return "prop-4.2";
    }
    return "unknown";
}

std::string_view verdict_name(SieveVerdict verdict) {
    switch (verdict) {
        case SieveVerdict::excluded: return "excluded";
        case SieveVerdict::not_excluded: return "not-excluded";
        case SieveVerdict::inapplicable: return "inapplicable";
    }
    return "unknown";
}

ParameterVerdict sieve_k2(int n) {
    if (n < 1) throw std::invalid_argument("sieve_k2 needs n >= 1");
    ParameterVerdict out;
    out.n = n;
    out.k = 2;
    out.rule = SieveRule::thm_3_1;

    const int h = n * (n + 1) / 2;
    const bool h_even = h % 2 == 0;
    const BigInt candidate = h_even ? BigInt(n + 1) : BigInt(n - 1);
    const bool square = is_perfect_square(candidate);

    out.witnesses.emplace_back("h", str(h));
    out.witnesses.emplace_back("h_parity", h_even ? "even" : "odd");
    out.witnesses.emplace_back("square_candidate", h_even ? "n+1" : "n-1");
    out.witnesses.emplace_back("candidate_value", str(candidate));
    out.witnesses.emplace_back("candidate_is_square", square ? "true" : "false");
    out.verdict = square ? SieveVerdict::not_excluded : SieveVerdict::excluded;
    return out;
}

ParameterVerdict sieve_tops(int n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("sieve_tops needs n >= 1, k >= 2");
    ParameterVerdict out;
    out.n = n;
    out.k = k;
    out.witnesses.emplace_back("scope", "tops-only");

    if (k > n + 1) {
        out.rule = SieveRule::prop_4_2;
        out.verdict = SieveVerdict::excluded;
        out.witnesses.emplace_back("k", str(k));
        out.witnesses.emplace_back("n_plus_1", str(n + 1));
        return out;
    }

    const int pairs = n * n + n;
    if (pairs % k != 0) {
        out.rule = SieveRule::lemma_5_1;
        out.verdict = SieveVerdict::excluded;
        out.witnesses.emplace_back("n2_plus_n", str(pairs));
        out.witnesses.emplace_back("remainder_mod_k", str(pairs % k));
        return out;
    }
    out.witnesses.emplace_back("n2_plus_n", str(pairs));
    out.witnesses.emplace_back("divides", "true");
    out.witnesses.emplace_back("n_mod_k", str(n % k));

    out.rule = SieveRule::thm_5_3;
    if (k % 2 == 1) {
        out.verdict = SieveVerdict::inapplicable;
        out.witnesses.emplace_back("square_test", "skipped: k odd");
        return out;
    }

    const int h = pairs / k;
    const bool h_even = h % 2 == 0;
    const BigInt candidate = h_even ? BigInt(n + 1) : BigInt(n - (k - 1));
    const bool square = candidate >= 0 && is_perfect_square(candidate);

    out.witnesses.emplace_back("h", str(h));
    out.witnesses.emplace_back("h_parity", h_even ? "even" : "odd");
    out.witnesses.emplace_back("square_candidate", h_even ? "n+1" : "n-(k-1)");
    out.witnesses.emplace_back("candidate_value", str(candidate));
    out.witnesses.emplace_back("candidate_is_square", square ? "true" : "false");
    out.verdict = square ? SieveVerdict::not_excluded : SieveVerdict::excluded;
    return out;
}

ParameterVerdict sieve_bruck_ryser(int n) {
    if (n < 1) throw std::invalid_argument("sieve_bruck_ryser needs n >= 1");
    ParameterVerdict out;
    out.n = n;
    out.k = 1;
    out.rule = SieveRule::bruck_ryser;
    out.witnesses.emplace_back("n_mod_4", str(n % 4));

    if (n % 4 != 1 && n % 4 != 2) {
        out.verdict = SieveVerdict::not_excluded;
        out.witnesses.emplace_back("hypothesis", "residue outside {1,2}, test silent");
        return out;
    }
    const bool representable = is_sum_of_two_squares(n);
    out.witnesses.emplace_back("sum_of_two_squares", representable ? "true" : "false");
    if (representable) {
        std::string decomposition;
        find_two_square_decomposition(n, decomposition);
        out.witnesses.emplace_back("decomposition", decomposition);
    }
    out.verdict = representable ? SieveVerdict::not_excluded : SieveVerdict::excluded;
    return out;
}

std::vector<ParameterVerdict> scan(int n_min, int n_end, std::vector<int> ks) {
    if (n_min < 1 || n_min >= n_end) {
        throw std::invalid_argument("scan needs a nonempty range with n_min >= 1");
    }
    if (ks.empty()) throw std::invalid_argument("scan needs at least one deficiency");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) {
        if (k < 1) throw std::invalid_argument("deficiencies must be >= 1");
    }

    std::vector<ParameterVerdict> rows;
    for (int n = n_min; n < n_end; ++n) {
        for (int k : ks) {
            if (k == 1) {
                rows.push_back(sieve_bruck_ryser(n));
            } else if (k == 2) {
                rows.push_back(sieve_k2(n));
            } else {
                rows.push_back(sieve_tops(n, k));
            }
        }
    }
    return rows;
}

}  // namespace defk
