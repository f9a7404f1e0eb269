#pragma once

#include <optional>
#include <vector>

#include "blockwords/word.hpp"

namespace blockwords {

// Factor counts p(n) for n = 1..nmax over a finite window. A value is flagged
// stabilized when recomputing it on the half-length prefix gives the same
// count, i.e. the window stopped contributing new factors of that length.
struct ComplexityProfile {
    std::size_t prefix_length = 0;
    std::vector<std::size_t> p;          // p[i] = p(i+1)
    std::vector<bool> stabilized;

    std::size_t at(std::size_t n) const { return p.at(n - 1); }
    bool stable_at(std::size_t n) const { return stabilized.at(n - 1); }
};

struct QuadraticCheck {
    bool holds = false;
    std::optional<std::size_t> first_violation;  // smallest stabilized n with p(n) < c*n^2
};

// A factor whose transform is absent from the window.
struct ClosureGap {
    Word factor;
    Word transformed;
    std::size_t factor_first_pos = 0;
};

enum class Transform { Reverse, Mirror };

struct PowerOccurrence {
    std::size_t position = 0;
    Word base;
};

struct FrequencyEstimate {
    Word word;
    std::size_t count = 0;
    std::size_t window_length = 0;
    double estimate = 0.0;  // count / (window_length - |word| + 1)
};

struct PeriodicityVerdict {
    bool found = false;
    std::size_t preperiod = 0;
    Word period;
};

struct FactorGap {
    Word factor;
    std::size_t count = 0;
    std::size_t max_gap = 0;  // 0 when the factor occurs once
};

struct RecurrenceReport {
    std::size_t n = 0;
    std::vector<FactorGap> gaps;          // factors in first-occurrence order
    std::size_t overall_max_gap = 0;      // over factors occurring at least twice
    std::size_t singleton_count = 0;
};

struct LanguageCompareRow {
    std::size_t n = 0;
    bool equal = false;
    std::vector<Word> only_x;
    std::vector<Word> only_y;
};

// Requires |x| >= 2*nmax.
ComplexityProfile subword_complexity(const Word& x, std::size_t nmax);

// p(n) >= (num/den) * n^2 for every stabilized n of the profile.
QuadraticCheck quadratic_lower_check(const ComplexityProfile& profile, long long num,
                                     long long den);

// Factors of x of length 1..nmax whose transform does not occur in x, with the
// factor's first occurrence as witness. Requires |x| >= 2*nmax.
std::vector<ClosureGap> closure_report(const Word& x, std::size_t nmax, Transform t);

// All positions where u^e occurs for some base u with 1 <= |u| <= max_base.
std::vector<PowerOccurrence> find_powers(const Word& x, std::size_t e, std::size_t max_base);

FrequencyEstimate frequency(const Word& x, const Word& w);

// Smallest (preperiod, period length), in that lexicographic order, such that
// x[preperiod..] is periodic across the whole window; bounds are inclusive.
// Requires |x| >= max_preperiod + 3*max_period.
PeriodicityVerdict eventually_periodic_search(const Word& x, std::size_t max_preperiod,
                                              std::size_t max_period);

// Maximal gap between consecutive occurrence starts of each length-n factor.
// Requires |x| >= 2*n.
RecurrenceReport recurrence_gap(const Word& x, std::size_t n);

// Per-n set equality of factor languages with symmetric-difference witnesses.
// Requires both windows >= 2*nmax.
std::vector<LanguageCompareRow> language_compare(const Word& x, const Word& y, std::size_t nmax);

}  // namespace blockwords
