#include "blockwords/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockwords/analysis.hpp"
#include "blockwords/catalog.hpp"
#include "blockwords/conjugacy.hpp"
#include "blockwords/errors.hpp"
#include "blockwords/generation.hpp"
#include "blockwords/wordeq.hpp"

namespace blockwords {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Word parse_word_guess(const std::string& text) {
    try {
        return Word::parse(text, Alphabet::binary());
    } catch (const InvalidSymbol&) {
        return Word::parse(text, Alphabet::runs());
    }
}

// --seed and --start refine a named or file-based source into a scheme.
struct SourceOptions {
    std::optional<std::string> seed;
    std::optional<std::string> start;
};

Symbol parse_start(const std::string& s) {
    if (s == "1") return 0;
    if (s == "2") return 1;
    throw Error("--start must be 1 or 2");
}

Symbol pick_prolongable_letter(const Morphism& m) {
    for (std::size_t l = 0; l < m.alphabet().size(); ++l) {
        const Word& img = m.image(static_cast<Symbol>(l));
        if (img.size() >= 2 && img[0] == static_cast<Symbol>(l)) return static_cast<Symbol>(l);
    }
    throw Error("morphism has no prolongable letter; pass --seed");
}

GenerationScheme scheme_for_morphism(const Morphism& m, const SourceOptions& opt) {
    if (opt.seed) {
        Word seed = Word::parse(*opt.seed, m.alphabet());
        if (seed.size() != 1) throw Error("morphism iteration takes a single-letter --seed");
        return MorphismIteration{m, seed[0]};
    }
    return MorphismIteration{m, pick_prolongable_letter(m)};
}

GenerationScheme scheme_for_block(const BlockSubstitution& bs, const SourceOptions& opt) {
    if (!opt.seed) throw Error("block substitution iteration needs --seed");
    return TruncatedBlockIteration{bs, Word::parse(*opt.seed, bs.alphabet())};
}

GenerationScheme resolve_scheme(const std::string& source, const SourceOptions& opt) {
    try {
        const NamedObject& obj = lookup(source);
        switch (obj.kind) {
            case ObjectKind::Morphism:
                return scheme_for_morphism(obj.morphism(), opt);
            case ObjectKind::BlockSubstitution:
                return scheme_for_block(obj.block_substitution(), opt);
            case ObjectKind::GenerationScheme: {
                GenerationScheme s = obj.scheme();
                if (opt.start) {
                    if (auto* sr = std::get_if<SelfReading>(&s))
                        sr->start_symbol = parse_start(*opt.start);
                    else
                        throw Error("--start applies to self-reading schemes only");
                }
                if (opt.seed) {
                    if (auto* tb = std::get_if<TruncatedBlockIteration>(&s))
                        tb->seed = Word::parse(*opt.seed, tb->kappa.alphabet());
                    else
                        throw Error("--seed does not apply to this scheme");
                }
                return s;
            }
        }
        throw Error("unreachable");
    } catch (const UnknownName&) {
        if (!std::filesystem::exists(source)) throw;
        Rules rules = parse_rules(read_file(source));
        if (auto* m = std::get_if<Morphism>(&rules)) return scheme_for_morphism(*m, opt);
        return scheme_for_block(std::get<BlockSubstitution>(rules), opt);
    }
}

// A word source for analysis: catalog name, rule file, word file or literal word.
Word resolve_word(const std::string& source, std::size_t prefix_len, const SourceOptions& opt) {
    bool is_name = true;
    try {
        lookup(source);
    } catch (const UnknownName&) {
        is_name = false;
    }
    if (is_name) return generate_prefix(resolve_scheme(source, opt), prefix_len);
    if (std::filesystem::exists(source)) {
        std::string text = read_file(source);
        if (text.find("->") != std::string::npos)
            return generate_prefix(resolve_scheme(source, opt), prefix_len);
        Word w = parse_word_guess(trim(text));
        return w.prefix(std::min(prefix_len, w.size()));
    }
    return parse_word_guess(source);
}

BlockSubstitution resolve_block_sub(const std::string& source) {
    try {
        const NamedObject& obj = lookup(source);
        if (obj.kind != ObjectKind::BlockSubstitution)
            throw Error("'" + source + "' is not a block substitution");
        return obj.block_substitution();
    } catch (const UnknownName&) {
        if (!std::filesystem::exists(source)) throw;
        return parse_block_rules(read_file(source));
    }
}

Morphism resolve_morphism(const std::string& source) {
    try {
        const NamedObject& obj = lookup(source);
        if (obj.kind != ObjectKind::Morphism) throw Error("'" + source + "' is not a morphism");
        return obj.morphism();
    } catch (const UnknownName&) {
        if (!std::filesystem::exists(source)) throw;
        return parse_morphism_rules(read_file(source));
    }
}

const Alphabet& coding_alphabet(const std::string& coding) {
    static const Alphabet bin = Alphabet::binary();
    static const Alphabet runs = Alphabet::runs();
    if (coding == "01") return bin;
    if (coding == "12") return runs;
    throw Error("--coding must be 01 or 12");
}

std::string kind_string(ObjectKind k) {
    switch (k) {
        case ObjectKind::Morphism: return "morphism";
        case ObjectKind::BlockSubstitution: return "block-substitution";
        case ObjectKind::GenerationScheme: return "generation-scheme";
    }
    return "?";
}

std::string rules_inline(const Morphism& m) {
    std::string s;
    for (std::size_t l = 0; l < m.alphabet().size(); ++l) {
        if (l > 0) s += ", ";
        s.push_back(m.alphabet().to_char(static_cast<Symbol>(l)));
        s += "->";
        s += m.image(static_cast<Symbol>(l)).str();
    }
    return s;
}

std::string rules_inline(const BlockSubstitution& bs) {
    std::string s;
    bool first = true;
    for (const auto& [block, img] : bs.images()) {
        if (!first) s += ", ";
        first = false;
        s += block.str() + "->" + img.str();
    }
    return s;
}

int cmd_list(std::ostream& out) {
    for (const NamedObject& obj : registry()) {
        out << obj.name << '\t' << kind_string(obj.kind) << '\t';
        if (obj.kind == ObjectKind::Morphism)
            out << rules_inline(obj.morphism());
        else if (obj.kind == ObjectKind::BlockSubstitution)
            out << rules_inline(obj.block_substitution());
        else
            out << obj.description;
        out << '\n';
    }
    return 0;
}

struct GenerateArgs {
    std::string source;
    std::size_t length = 0;
    std::string coding = "01";
    SourceOptions opt;
    std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    Word w = generate_prefix(resolve_scheme(a.source, a.opt), a.length);
    w = w.recoded(coding_alphabet(a.coding));
    if (a.output.empty()) {
        out << w.str() << '\n';
    } else {
        std::ofstream f(a.output, std::ios::binary);
        if (!f) throw Error("cannot open output file: " + a.output);
        f << w.str() << '\n';
    }
    return 0;
}

struct CommuteArgs {
    std::string kappa;
    std::string sigma;
    std::string gens;
};

int cmd_commute(const CommuteArgs& a, std::ostream& out) {
    BlockSubstitution kappa = resolve_block_sub(a.kappa);
    Morphism sigma = resolve_morphism(a.sigma);
    std::vector<Word> gens;
    if (a.gens.empty()) {
        gens = kappa.domain();
    } else {
        std::istringstream in(a.gens);
        std::string tok;
        while (std::getline(in, tok, ','))
            gens.push_back(Word::parse(trim(tok), kappa.alphabet()));
    }
    CommutationReport rep = check_commute(kappa, sigma, gens);
    for (const GeneratorIdentity& row : rep.per_generator) {
        out << row.generator.str() << '\t' << row.lhs.str() << '\t' << row.rhs.str() << '\t'
            << (row.equal ? "equal" : "unequal") << '\n';
    }
    out << "closed\t" << (rep.closed ? "yes" : "no") << '\n';
    out << "verdict\t" << (rep.verdict ? "commute" : "fail") << '\n';
    return rep.verdict ? 0 : 1;
}

struct SolveArgs {
    std::string file;
    std::size_t max_len = 0;
    std::optional<std::size_t> other_cap;
};

int cmd_solve_eq(const SolveArgs& a, std::ostream& out) {
    WordEquationSystem sys = parse_system_file(read_file(a.file));
    out << "# system\n" << format_system(sys);
    std::vector<Assignment> sols = enumerate_solutions(sys, a.max_len, a.other_cap);
    out << "# solutions (" << sols.size() << ")\n";
    for (const Assignment& s : sols) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (i > 0) out << ',';
            out << s.values[i].str();
        }
        out << '\n';
    }
    ParikhSystem ps = abelianize(sys);
    out << "# parikh identities\n";
    for (const std::string& id : ps.identities) out << id << '\n';
    return 0;
}

struct OeisArgs {
    std::string source;
    std::string bfile;
    long long offset = 0;
    std::string coding = "01";
    SourceOptions opt;
};

int cmd_oeis_check(const OeisArgs& a, std::ostream& out) {
    std::vector<std::pair<long long, long long>> terms;
    {
        std::istringstream in(read_file(a.bfile));
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            std::istringstream ls(t);
            long long idx = 0, val = 0;
            if (!(ls >> idx >> val)) throw ParseError(lineno, "expected 'index value'");
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing content '" + rest + "'");
            if (!terms.empty() && idx <= terms.back().first)
                throw ParseError(lineno, "indices must be increasing");
            terms.emplace_back(idx, val);
        }
    }

    long long max_pos = -1;
    for (const auto& [idx, val] : terms) {
        long long pos = idx - a.offset;
        if (pos >= 0) max_pos = std::max(max_pos, pos);
    }
    if (max_pos < 0) {
        out << "warning: no overlapping terms\n";
        return 0;
    }

    Word w = generate_prefix(resolve_scheme(a.source, a.opt),
                             static_cast<std::size_t>(max_pos) + 1);
    w = w.recoded(coding_alphabet(a.coding));

    std::size_t checked = 0;
    for (const auto& [idx, val] : terms) {
        long long pos = idx - a.offset;
        if (pos < 0) continue;
        long long ours = w.alphabet().to_char(w[static_cast<std::size_t>(pos)]) - '0';
        if (ours != val) {
            out << "mismatch at index " << idx << ": sequence has " << ours << ", b-file has "
                << val << '\n';
            return 1;
        }
        ++checked;
    }
    if (checked == 0) {
        out << "warning: no overlapping terms\n";
        return 0;
    }
    out << "checked " << checked << " terms: all match\n";
    return 0;
}

struct AnalyzeArgs {
    std::string source;
    std::string source2;
    std::size_t prefix_length = 1000000;
    SourceOptions opt;
    std::size_t nmax = 14;
    std::size_t inv_nmax = 6;
    std::size_t cmp_nmax = 10;
    std::string transform = "reverse";
    std::size_t exponent = 2;
    std::size_t max_base = 10;
    std::string word;
    std::size_t max_preperiod = 0;
    std::size_t max_period = 0;
    bool bounds_given = false;
    std::size_t n = 3;
};

json word_list(const std::vector<Word>& ws) {
    json arr = json::array();
    for (const Word& w : ws) arr.push_back(w.str());
    return arr;
}

int cmd_analyze_complexity(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, a.opt);
    ComplexityProfile prof = subword_complexity(x, a.nmax);
    out << "n\tp\tstabilized\n";
    for (std::size_t n = 1; n <= a.nmax; ++n)
        out << n << '\t' << prof.at(n) << '\t' << (prof.stable_at(n) ? "yes" : "no") << '\n';
    return 0;
}

int cmd_analyze_invariance(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, a.opt);
    Transform t = a.transform == "mirror" ? Transform::Mirror : Transform::Reverse;
    if (a.transform != "mirror" && a.transform != "reverse")
        throw Error("--transform must be reverse or mirror");
    std::vector<ClosureGap> gaps = closure_report(x, a.inv_nmax, t);
    json rep;
    rep["transform"] = a.transform;
    rep["nmax"] = a.inv_nmax;
    rep["window"] = x.size();
    rep["missing_count"] = gaps.size();
    json arr = json::array();
    for (const ClosureGap& g : gaps) {
        arr.push_back({{"factor", g.factor.str()},
                       {"transformed", g.transformed.str()},
                       {"factor_first_pos", g.factor_first_pos}});
    }
    rep["missing"] = arr;
    out << rep.dump(2) << '\n';
    return 0;
}

int cmd_analyze_powers(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, a.opt);
    std::vector<PowerOccurrence> occ = find_powers(x, a.exponent, a.max_base);
    json rep;
    rep["exponent"] = a.exponent;
    rep["max_base"] = a.max_base;
    rep["window"] = x.size();
    rep["count"] = occ.size();
    json arr = json::array();
    for (const PowerOccurrence& o : occ)
        arr.push_back({{"position", o.position}, {"base", o.base.str()}});
    rep["occurrences"] = arr;
    out << rep.dump(2) << '\n';
    return 0;
}

int cmd_analyze_frequency(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, a.opt);
    Word w = Word::parse(a.word, x.alphabet());
    FrequencyEstimate est = frequency(x, w);
    json rep;
    rep["word"] = w.str();
    rep["window"] = est.window_length;
    rep["count"] = est.count;
    rep["windows"] = est.window_length - w.size() + 1;
    rep["estimate"] = est.estimate;
    out << rep.dump(2) << '\n';
    return 0;
}

int cmd_analyze_periodicity(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, a.opt);
    std::size_t max_period = a.max_period;
    std::size_t max_preperiod = a.max_preperiod;
    if (!a.bounds_given) {
        max_period = std::min<std::size_t>(1000, x.size() / 3);
        max_preperiod = std::min<std::size_t>(1000, x.size() - 3 * max_period);
    }
    PeriodicityVerdict v = eventually_periodic_search(x, max_preperiod, max_period);
    json rep;
    rep["window"] = x.size();
    rep["max_preperiod"] = max_preperiod;
    rep["max_period"] = max_period;
    rep["found"] = v.found;
    if (v.found) {
        rep["preperiod"] = v.preperiod;
        rep["period"] = v.period.str();
    }
    out << rep.dump(2) << '\n';
    return 0;
}

int cmd_analyze_recurrence(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, a.opt);
    RecurrenceReport rec = recurrence_gap(x, a.n);
    json rep;
    rep["n"] = rec.n;
    rep["window"] = x.size();
    rep["overall_max_gap"] = rec.overall_max_gap;
    rep["singletons"] = rec.singleton_count;
    json arr = json::array();
    for (const FactorGap& g : rec.gaps)
        arr.push_back({{"factor", g.factor.str()}, {"count", g.count}, {"max_gap", g.max_gap}});
    rep["factors"] = arr;
    out << rep.dump(2) << '\n';
    return 0;
}

int cmd_analyze_compare(const AnalyzeArgs& a, std::ostream& out) {
    Word x = resolve_word(a.source, a.prefix_length, {});
    Word y = resolve_word(a.source2, a.prefix_length, {});
    std::vector<LanguageCompareRow> rows = language_compare(x, y, a.cmp_nmax);
    json rep;
    rep["nmax"] = a.cmp_nmax;
    rep["window_x"] = x.size();
    rep["window_y"] = y.size();
    json arr = json::array();
    for (const LanguageCompareRow& r : rows) {
        arr.push_back({{"n", r.n},
                       {"equal", r.equal},
                       {"only_x", word_list(r.only_x)},
                       {"only_y", word_list(r.only_y)}});
    }
    rep["rows"] = arr;
    out << rep.dump(2) << '\n';
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-block substitutions, morphic words and their combinatorics"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "print the registry of named objects");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate a fixed-point prefix");
    generate->add_option("source", gen.source, "catalog name or rule file")->required();
    generate->add_option("-n,--length", gen.length, "prefix length")->required();
    generate->add_option("--seed", gen.opt.seed, "seed word (block maps) or letter (morphisms)");
    generate->add_option("--start", gen.opt.start, "start value 1 or 2 for self-reading schemes");
    generate->add_option("--coding", gen.coding, "output display map, 01 or 12 (default 01)");
    generate->add_option("-o,--output", gen.output, "write to file instead of stdout");

    CommuteArgs com;
    auto* commute = app.add_subcommand("commute", "check kappa o sigma = sigma o kappa");
    commute->add_option("kappa", com.kappa, "block substitution name or rule file")->required();
    commute->add_option("sigma", com.sigma, "morphism name or rule file")->required();
    commute->add_option("--gens", com.gens, "comma-separated generator blocks (default: domain)");

    SolveArgs sol;
    std::size_t sol_cap = 0;
    auto* solve = app.add_subcommand("solve-eq", "enumerate solutions of a word-equation system");
    solve->add_option("file", sol.file, "system file")->required();
    solve->add_option("--max-len", sol.max_len, "length bound for the first unknown")->required();
    auto* cap_opt = solve->add_option("--other-cap", sol_cap, "length cap for other unknowns");

    OeisArgs oeis;
    auto* oeis_check = app.add_subcommand("oeis-check", "compare a sequence against a b-file");
    oeis_check->add_option("source", oeis.source, "catalog name or rule file")->required();
    oeis_check->add_option("bfile", oeis.bfile, "b-file path")->required();
    oeis_check->add_option("--offset", oeis.offset, "index of the sequence's first term");
    oeis_check->add_option("--seed", oeis.opt.seed, "seed word or letter");
    oeis_check->add_option("--start", oeis.opt.start, "start value for self-reading schemes");
    oeis_check->add_option("--coding", oeis.coding, "term display map, 01 or 12 (default 01)");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "combinatorial reports on a word");
    analyze->require_subcommand(1);

    auto add_source = [&](CLI::App* sub, bool two = false) {
        sub->add_option("source", an.source, "catalog name, file or literal word")->required();
        if (two) sub->add_option("source2", an.source2, "second source")->required();
        sub->add_option("--prefix-length", an.prefix_length,
                        "window length for generated sources (default 1000000)");
        sub->add_option("--seed", an.opt.seed, "seed word or letter");
        sub->add_option("--start", an.opt.start, "start value for self-reading schemes");
    };

    auto* a_complexity = analyze->add_subcommand("complexity", "factor counts p(n)");
    add_source(a_complexity);
    a_complexity->add_option("-n,--nmax", an.nmax, "largest factor length (default 14)");

    auto* a_invariance = analyze->add_subcommand("invariance", "reverse/mirror closure gaps");
    add_source(a_invariance);
    a_invariance->add_option("--transform", an.transform, "reverse or mirror")->required();
    a_invariance->add_option("--nmax", an.inv_nmax, "largest factor length (default 6)");

    auto* a_powers = analyze->add_subcommand("powers", "occurrences of e-th powers");
    add_source(a_powers);
    a_powers->add_option("-e,--exponent", an.exponent, "power exponent")->required();
    a_powers->add_option("--max-base", an.max_base, "largest base length (default 10)");

    auto* a_frequency = analyze->add_subcommand("frequency", "sliding-window frequency estimate");
    add_source(a_frequency);
    a_frequency->add_option("-w,--word", an.word, "factor to count")->required();

    auto* a_periodicity = analyze->add_subcommand("periodicity", "eventual-periodicity search");
    add_source(a_periodicity);
    auto* bp = a_periodicity->add_option("--max-preperiod", an.max_preperiod, "preperiod bound");
    auto* bq = a_periodicity->add_option("--max-period", an.max_period, "period bound");

    auto* a_recurrence = analyze->add_subcommand("recurrence", "occurrence gaps of length-n factors");
    add_source(a_recurrence);
    a_recurrence->add_option("-n", an.n, "factor length (default 3)");

    auto* a_compare = analyze->add_subcommand("compare", "factor-language comparison");
    add_source(a_compare, true);
    a_compare->add_option("--nmax", an.cmp_nmax, "largest factor length (default 10)");

    std::vector<const char*> argv;
    argv.push_back("blockwords");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (list->parsed()) return cmd_list(out);
        if (generate->parsed()) return cmd_generate(gen, out);
        if (commute->parsed()) return cmd_commute(com, out);
        if (solve->parsed()) {
            if (cap_opt->count() > 0) sol.other_cap = sol_cap;
            return cmd_solve_eq(sol, out);
        }
        if (oeis_check->parsed()) return cmd_oeis_check(oeis, out);
        if (analyze->parsed()) {
            an.bounds_given = bp->count() > 0 || bq->count() > 0;
            if (a_complexity->parsed()) return cmd_analyze_complexity(an, out);
            if (a_invariance->parsed()) return cmd_analyze_invariance(an, out);
            if (a_powers->parsed()) return cmd_analyze_powers(an, out);
            if (a_frequency->parsed()) return cmd_analyze_frequency(an, out);
            if (a_periodicity->parsed()) return cmd_analyze_periodicity(an, out);
            if (a_recurrence->parsed()) return cmd_analyze_recurrence(an, out);
            if (a_compare->parsed()) return cmd_analyze_compare(an, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace blockwords
