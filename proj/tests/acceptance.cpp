// Acceptance suite: one line per criterion, nonzero exit when any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "blockwords/analysis.hpp"
#include "blockwords/catalog.hpp"
#include "blockwords/cli.hpp"
#include "blockwords/conjugacy.hpp"
#include "blockwords/generation.hpp"
#include "blockwords/wordeq.hpp"

using namespace blockwords;

namespace {

Word bw(const std::string& s) { return Word::parse(s, Alphabet::binary()); }

std::vector<Word> blocks(std::initializer_list<const char*> bs) {
    std::vector<Word> out;
    for (const char* b : bs) out.push_back(bw(b));
    return out;
}

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Word x00_1e6;
Word kol_1e6;

bool close_to(double got, double want, double tol) { return std::fabs(got - want) < tol; }

// criterion 1
void complexity_table(Check& c) {
    const std::vector<std::size_t> expected = {2,   4,   8,   14,  26,  44,  68,
                                               104, 150, 204, 276, 358, 450, 558};
    ComplexityProfile prof = subword_complexity(x00_1e6, 14);
    for (std::size_t n = 1; n <= 14; ++n) {
        c.expect(prof.at(n) == expected[n - 1],
                 "p(" + std::to_string(n) + ") = " + std::to_string(prof.at(n)));
        c.expect(prof.stable_at(n), "p(" + std::to_string(n) + ") not stabilized");
    }
}

// criterion 2
void pell_commutation(Check& c) {
    CommutationReport rep = check_commute(lookup("pell-kappa").block_substitution(),
                                          lookup("pell-morphism").morphism(),
                                          blocks({"00", "01", "10"}));
    c.expect(rep.verdict, "verdict false");
    c.expect(rep.per_generator.size() == 3, "wrong generator count");
    const char* expected[3] = {"0010010001", "0010010", "0010001"};
    for (std::size_t i = 0; i < 3; ++i) {
        c.expect(rep.per_generator[i].lhs.str() == expected[i], "lhs mismatch");
        c.expect(rep.per_generator[i].rhs.str() == expected[i], "rhs mismatch");
    }
}

// criterion 3
void pell_transfer(Check& c) {
    const std::size_t n = 100000;
    Word via_pi = generate_prefix(MorphismIteration{lookup("pell-morphism").morphism(), 0}, n);
    Word via_kappa = generate_prefix(
        TruncatedBlockIteration{lookup("pell-kappa").block_substitution(), bw("0010")}, n);
    c.expect(via_pi == via_kappa, "prefixes differ");
}

// criterion 4
void wordeq_bound(Check& c) {
    WordEquationSystem sys =
        derive_system(lookup("ex3-sigma").morphism(), 2, blocks({"01", "11"}));
    std::vector<Assignment> sols = enumerate_solutions(sys, 19);
    c.expect(sols.size() == 2, "expected exactly 2 solutions, got " + std::to_string(sols.size()));
    if (sols.size() == 2) {
        c.expect(sols[0].values[0] == bw("01") && sols[0].values[1] == bw("11"),
                 "first solution wrong");
        c.expect(sols[1].values[0] == bw("010111") && sols[1].values[1] == bw("01110111"),
                 "second solution wrong");
    }
}

// criterion 5
void parikh_arithmetic(Check& c) {
    WordEquationSystem sys =
        derive_system(lookup("ex3-sigma").morphism(), 2, blocks({"01", "11"}));
    ParikhSystem ps = abelianize(sys);
    c.expect(ps.satisfied({{6, 14}, {8, 20}}), "(6,8,14,20) rejected");
    c.expect(!ps.satisfied({{6, 14}, {8, 19}}), "(6,8,14,19) admitted");
    auto completions = parikh_completions(ps, {{6, -1}, {8, -1}}, 100);
    c.expect(completions.size() == 1, "completion not unique");
    if (completions.size() == 1)
        c.expect(completions[0][1][0] + completions[0][1][1] == 28, "d-length not 28");
}

// criterion 6
void displayed_prefixes(Check& c) {
    auto out_of = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        run_cli(args, out, err);
        return out.str();
    };
    c.expect(out_of({"generate", "tm-kappa", "--seed", "001110", "-n", "33"}) ==
                 "001110101101110010110001101110001\n",
             "x00 33-prefix");
    c.expect(out_of({"generate", "pell-morphism", "--seed", "0", "-n", "13"}) ==
                 "0010010001001\n",
             "pell 13-prefix");
    c.expect(out_of({"generate", "kolakoski-selfread", "--start", "2", "-n", "6", "--coding",
                     "12"}) == "221121\n",
             "kolakoski 1/2 coding");
    c.expect(out_of({"generate", "kolakoski-selfread", "--start", "2", "-n", "6"}) == "110010\n",
             "kolakoski 0/1 coding");
    c.expect(out_of({"generate", "tm-kappa", "--seed", "001110", "-n", "9"}) == "001110101\n",
             "first truncated image");
    c.expect(out_of({"generate", "tm-kappa", "--seed", "001110", "-n", "12"}) == "001110101101\n",
             "second truncated image");
}

// criterion 7
void oracle_triangulation(Check& c) {
    const std::size_t n = 100000;
    Word tm_iter = generate_prefix(lookup("tm-kappa-fixed-point").scheme(), n);
    Word tm_rec = tm_blockfix_recurrence(n);
    c.expect(tm_iter == tm_rec, "tm iterate vs recurrence");

    Word kol_iter = generate_prefix(lookup("kolakoski-kappa-fixed-point").scheme(), n);
    Word kol_self = kolakoski_selfread(n, 1).recoded(Alphabet::binary());
    c.expect(kol_iter == kol_self, "kolakoski iterate vs self-reading");
}

// criterion 8
void invariance_facts(Check& c) {
    c.expect(find(x00_1e6, bw("001000")).has_value(), "001000 missing");
    c.expect(!find(x00_1e6, bw("000100")).has_value(), "000100 present");

    c.expect(mirror(bw("0011101011")) == bw("1100010100"), "mirror image wrong");
    const BlockSubstitution& tm = lookup("tm-kappa").block_substitution();
    Word w = bw("001110");
    for (int i = 0; i < 12; ++i) w = apply_truncated(tm, w);
    c.expect(!find(w, bw("1100010100")).has_value(), "mirror present in 12th iterate");
    w = apply_truncated(tm, w);
    c.expect(find(w, bw("1100010100")).has_value(), "mirror absent from 13th iterate");
}

// criterion 9
void power_content(Check& c) {
    Word x = x00_1e6.prefix(10000);
    bool fourth = false;
    for (const PowerOccurrence& o : find_powers(x, 4, 8)) fourth = fourth || o.base == bw("01");
    c.expect(fourth, "01010101 not found");

    c.expect(find_powers(kol_1e6, 3, 1000).empty(), "cube found in kolakoski window");
}

// criterion 10
void periodicity(Check& c) {
    Word x = x00_1e6.prefix(100000);
    c.expect(!eventually_periodic_search(x, 1000, 1000).found, "x00 reported periodic");
    Word k = kol_1e6.prefix(100000);
    c.expect(!eventually_periodic_search(k, 1000, 1000).found, "kolakoski reported periodic");

    std::mt19937 rng(53);
    std::uniform_int_distribution<std::size_t> len(20, 200);
    std::uniform_int_distribution<int> sym(0, 1);
    std::uniform_int_distribution<std::size_t> plen(1, 5);
    for (int t = 0; t < 200; ++t) {
        std::vector<Symbol> v(len(rng));
        for (Symbol& s : v) s = static_cast<Symbol>(sym(rng));
        Word w(std::move(v), Alphabet::binary());
        if (t % 2 == 0) {
            std::vector<Symbol> p(plen(rng));
            for (Symbol& s : p) s = static_cast<Symbol>(sym(rng));
            Word period(std::move(p), Alphabet::binary());
            Word tail(Alphabet::binary());
            while (tail.size() < 60) tail = tail + period;
            w = w.prefix(std::min<std::size_t>(10, w.size())) + tail;
        }
        std::size_t max_per = w.size() / 4;
        std::size_t max_pre = w.size() - 3 * max_per;
        PeriodicityVerdict fast = eventually_periodic_search(w, max_pre, max_per);

        PeriodicityVerdict slow;
        for (std::size_t p = 0; p <= max_pre && !slow.found; ++p) {
            for (std::size_t q = 1; q <= max_per && !slow.found; ++q) {
                bool ok = true;
                for (std::size_t i = p; i + q < w.size(); ++i) {
                    if (w[i] != w[i + q]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) slow = {true, p, w.subword(p, q)};
            }
        }
        c.expect(fast.found == slow.found, "oracle disagreement (found)");
        if (fast.found && slow.found) {
            c.expect(fast.preperiod == slow.preperiod && fast.period == slow.period,
                     "oracle disagreement (witness)");
        }
    }
}

// criterion 11
void period_word_expansion(Check& c) {
    Word runs = Word::parse("2122121221", Alphabet::runs());
    c.expect(run_length_expand(runs, 1) == Word::parse("2212211211211221", Alphabet::runs()),
             "expansion mismatch");
}

// criterion 12
void frequency_probes(Check& c) {
    auto probe = [&](const Word& x, const char* w, double target) {
        double got = frequency(x, bw(w)).estimate;
        std::ostringstream msg;
        msg << "freq(" << w << ") = " << got << ", stated target " << target;
        c.expect(close_to(got, target, 0.01), msg.str());
    };
    probe(x00_1e6, "1", 0.5);
    // The stated 000 target is 1/12; the measured frequency converges to 1/24
    // (cross-checked against the recurrence route and stable from 1e5 to 3e7),
    // so this probe reports the discrepancy rather than hiding it.
    probe(x00_1e6, "000", 1.0 / 12.0);
    probe(x00_1e6, "001", 1.0 / 8.0);
    probe(x00_1e6, "010", 5.0 / 24.0);

    Word t = thue_morse(1000000);
    c.expect(frequency(t, bw("000")).count == 0, "thue-morse contains 000");
    probe(t, "001", 1.0 / 6.0);
}

// criterion 13
void stability_induction(Check& c) {
    c.expect(!is_block_stable(lookup("kolakoski-kappa").block_substitution()),
             "kolakoski-kappa stable");
    c.expect(!is_block_stable(lookup("pell-kappa").block_substitution()), "pell-kappa stable");

    const Morphism& tau = lookup("tm-morphism").morphism();
    auto dom = blocks({"00", "01", "10", "11"});
    BlockSubstitution kappa_tau = induced_block_sub(tau, 2, dom);
    c.expect(is_block_stable(kappa_tau), "kappa_tau not stable");
    c.expect(block_compose(kappa_tau, kappa_tau) == induced_block_sub(power(tau, 2), 2, dom),
             "composition differs from induced square");
}

// criterion 14
void admissibility_instances(Check& c) {
    const Morphism& phi = lookup("fibonacci").morphism();
    const Morphism& sigma = lookup("ex2-sigma").morphism();
    c.expect(!conjugation_admissible(phi), "phi admissible");
    c.expect(conjugation_admissible(power(phi, 3)), "phi^3 not admissible");
    c.expect(!conjugation_admissible(sigma), "sigma admissible");
    c.expect(conjugation_admissible(power(sigma, 3)), "sigma^3 not admissible");

    for (const Morphism* m : {&phi, &sigma}) {
        Morphism cube = power(*m, 3);
        Word fp = generate_prefix(MorphismIteration{cube, 0}, 20000);
        std::vector<Word> gens;
        for (std::size_t i = 0; i + 2 <= fp.size(); i += 2) {
            Word b = fp.subword(i, 2);
            if (std::find(gens.begin(), gens.end(), b) == gens.end()) gens.push_back(b);
        }
        BlockSubstitution induced = induced_block_sub(cube, 2, gens);
        CommutationReport rep = check_commute(induced, cube, gens);
        c.expect(rep.verdict, "induced cube map does not commute with the cube");
    }
}

struct Criterion {
    int number;
    std::string description;
    double time_limit_s;
    std::function<void(Check&)> fn;
};

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    {
        auto t0 = clock::now();
        x00_1e6 = generate_prefix(lookup("tm-kappa-fixed-point").scheme(), 1000000);
        kol_1e6 = kolakoski_selfread(1000000, 1).recoded(Alphabet::binary());
        std::chrono::duration<double> dt = clock::now() - t0;
        std::cout << "setup: generated 1e6-prefixes in " << dt.count() << "s\n";
    }

    const std::vector<Criterion> criteria = {
        {1, "complexity table of x00 at 1e6, n=1..14", 30, complexity_table},
        {2, "pell commutation identities on 00,01,10", 1, pell_commutation},
        {3, "pell fixed-point transfer to 1e5", 5, pell_transfer},
        {4, "ex3 word-equation solutions up to |b|=19", 60, wordeq_bound},
        {5, "ex3 parikh admits (6,8,14,20), rejects (6,8,14,19), |d|=28", 1, parikh_arithmetic},
        {6, "displayed prefixes, byte-exact through the cli", 0, displayed_prefixes},
        {7, "oracle triangulation at 1e5", 0, oracle_triangulation},
        {8, "reversal and mirror facts in the stated windows", 0, invariance_facts},
        {9, "fourth power present in x00, no cube in kolakoski 1e6 (bases <= 1000)", 60,
         power_content},
        {10, "no eventual period within 1e3/1e3 bounds; oracle agreement on 200 words", 0,
         periodicity},
        {11, "run-length expansion of the period word", 0, period_word_expansion},
        {12, "frequency probes within 0.01", 0, frequency_probes},
        {13, "stability verdicts and composition law", 0, stability_induction},
        {14, "parity admissibility and commuting cubes", 0, admissibility_instances},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        std::string error;
        auto t0 = clock::now();
        try {
            cr.fn(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail = std::string("exception: ") + e.what();
        }
        std::chrono::duration<double> dt = clock::now() - t0;
        if (cr.time_limit_s > 0 && dt.count() > cr.time_limit_s) {
            check.ok = false;
            check.detail = "time limit " + std::to_string(cr.time_limit_s) + "s exceeded";
        }
        std::ostringstream line;
        line << (check.ok ? "PASS" : "FAIL") << "  " << cr.number << "  " << cr.description
             << "  (" << dt.count() << "s)";
        if (!check.ok) line << "  [" << check.detail << "]";
        std::cout << line.str() << '\n';
        if (!check.ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
