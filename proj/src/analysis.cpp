#include "blockwords/analysis.hpp"

#include <algorithm>
#include <cstring>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace blockwords {

namespace {

const char* raw(const Word& w) { return reinterpret_cast<const char*>(w.symbols().data()); }

}  // namespace

ComplexityProfile subword_complexity(const Word& x, std::size_t nmax) {
    if (x.size() < 2 * nmax) throw PrefixTooShort(x.size(), 2 * nmax);
    ComplexityProfile out;
    out.prefix_length = x.size();
    const std::size_t half = x.size() / 2;
    const char* base = raw(x);
    for (std::size_t n = 1; n <= nmax; ++n) {
        std::unordered_set<std::string_view> seen;
        std::size_t half_count = 0;
        const std::size_t last = x.size() - n;
        for (std::size_t i = 0; i <= last; ++i) {
            seen.insert(std::string_view(base + i, n));
            if (half >= n && i == half - n) half_count = seen.size();
        }
        out.p.push_back(seen.size());
        out.stabilized.push_back(half >= n && half_count == seen.size());
    }
    return out;
}

QuadraticCheck quadratic_lower_check(const ComplexityProfile& profile, long long num,
                                     long long den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("coefficient must be a nonnegative rational");
    QuadraticCheck out;
    out.holds = true;
    for (std::size_t i = 0; i < profile.p.size(); ++i) {
        if (!profile.stabilized[i]) continue;
        const long long n = static_cast<long long>(i) + 1;
        if (den * static_cast<long long>(profile.p[i]) < num * n * n) {
            out.holds = false;
            out.first_violation = static_cast<std::size_t>(n);
            return out;
        }
    }
    return out;
}

std::vector<ClosureGap> closure_report(const Word& x, std::size_t nmax, Transform t) {
    if (x.size() < 2 * nmax) throw PrefixTooShort(x.size(), 2 * nmax);
    std::vector<ClosureGap> out;
    const char* base = raw(x);
    for (std::size_t n = 1; n <= nmax; ++n) {
        if (n > x.size()) break;
        std::unordered_map<std::string_view, std::size_t> first_pos;
        std::vector<std::string_view> order;
        for (std::size_t i = 0; i + n <= x.size(); ++i) {
            std::string_view v(base + i, n);
            if (first_pos.emplace(v, i).second) order.push_back(v);
        }
        for (std::string_view v : order) {
            Word f = x.subword(first_pos[v], n);
            Word tf = (t == Transform::Reverse) ? reversed(f) : mirror(f);
            std::string_view tv(reinterpret_cast<const char*>(tf.symbols().data()), n);
            if (!first_pos.count(tv)) out.push_back({f, tf, first_pos[v]});
        }
    }
    return out;
}

std::vector<PowerOccurrence> find_powers(const Word& x, std::size_t e, std::size_t max_base) {
    if (e < 2) throw std::invalid_argument("exponent must be at least 2");
    std::vector<PowerOccurrence> out;
    auto s = x.symbols();
    for (std::size_t b = 1; b <= max_base; ++b) {
        if (e * b > x.size()) break;
        const std::size_t need = (e - 1) * b;  // consecutive positions with x[j] == x[j+b]
        std::size_t streak = 0;
        for (std::size_t j = 0; j + b < x.size(); ++j) {
            streak = (s[j] == s[j + b]) ? streak + 1 : 0;
            if (streak >= need) out.push_back({j + 1 - need, x.subword(j + 1 - need, b)});
        }
    }
    std::sort(out.begin(), out.end(), [](const PowerOccurrence& a, const PowerOccurrence& b) {
        if (a.position != b.position) return a.position < b.position;
        return a.base.size() < b.base.size();
    });
    return out;
}

FrequencyEstimate frequency(const Word& x, const Word& w) {
    if (w.size() > x.size()) throw PrefixTooShort(x.size(), w.size());
    FrequencyEstimate out;
    out.word = w;
    out.window_length = x.size();
    const std::size_t windows = x.size() - w.size() + 1;
    if (w.empty()) {
        out.count = windows;
        out.estimate = 1.0;
        return out;
    }
    const char* hay = raw(x);
    const char* pat = raw(w);
    for (std::size_t i = 0; i < windows; ++i) {
        if (std::memcmp(hay + i, pat, w.size()) == 0) ++out.count;
    }
    out.estimate = static_cast<double>(out.count) / static_cast<double>(windows);
    return out;
}

PeriodicityVerdict eventually_periodic_search(const Word& x, std::size_t max_preperiod,
                                              std::size_t max_period) {
    if (max_period == 0) throw std::invalid_argument("max period must be positive");
    if (x.size() < max_preperiod + 3 * max_period)
        throw PrefixTooShort(x.size(), max_preperiod + 3 * max_period);
    auto s = x.symbols();
    PeriodicityVerdict best;
    std::size_t best_p = 0, best_q = 0;
    for (std::size_t q = 1; q <= max_period; ++q) {
        // Minimal feasible preperiod for period q = one past the last mismatch.
        std::size_t p = 0;
        for (std::size_t i = x.size() - q; i-- > 0;) {
            if (s[i] != s[i + q]) {
                p = i + 1;
                break;
            }
        }
        if (p > max_preperiod) continue;
        if (!best.found || p < best_p || (p == best_p && q < best_q)) {
            best.found = true;
            best_p = p;
            best_q = q;
        }
    }
    if (best.found) {
        best.preperiod = best_p;
        best.period = x.subword(best_p, best_q);
    }
    return best;
}

RecurrenceReport recurrence_gap(const Word& x, std::size_t n) {
    if (n == 0 || x.size() < 2 * n) throw PrefixTooShort(x.size(), 2 * n);
    RecurrenceReport out;
    out.n = n;
    const char* base = raw(x);
    struct Info {
        std::size_t first = 0, last = 0, count = 0, max_gap = 0;
    };
    std::unordered_map<std::string_view, Info> info;
    std::vector<std::string_view> order;
    for (std::size_t i = 0; i + n <= x.size(); ++i) {
        std::string_view v(base + i, n);
        auto [it, fresh] = info.try_emplace(v);
        if (fresh) {
            it->second.first = i;
            order.push_back(v);
        } else {
            it->second.max_gap = std::max(it->second.max_gap, i - it->second.last);
        }
        it->second.last = i;
        ++it->second.count;
    }
    for (std::string_view v : order) {
        const Info& fi = info[v];
        out.gaps.push_back({x.subword(fi.first, n), fi.count, fi.max_gap});
        if (fi.count >= 2)
            out.overall_max_gap = std::max(out.overall_max_gap, fi.max_gap);
        else
            ++out.singleton_count;
    }
    return out;
}

std::vector<LanguageCompareRow> language_compare(const Word& x, const Word& y, std::size_t nmax) {
    if (x.size() < 2 * nmax) throw PrefixTooShort(x.size(), 2 * nmax);
    if (y.size() < 2 * nmax) throw PrefixTooShort(y.size(), 2 * nmax);
    std::vector<LanguageCompareRow> out;
    for (std::size_t n = 1; n <= nmax; ++n) {
        LanguageCompareRow row;
        row.n = n;
        FactorSet fx = factors(x, n);
        FactorSet fy = factors(y, n);
        std::set_difference(fx.factors.begin(), fx.factors.end(), fy.factors.begin(),
                            fy.factors.end(), std::back_inserter(row.only_x));
        std::set_difference(fy.factors.begin(), fy.factors.end(), fx.factors.begin(),
                            fx.factors.end(), std::back_inserter(row.only_y));
        row.equal = row.only_x.empty() && row.only_y.empty();
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace blockwords
