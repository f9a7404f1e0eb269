#include "blockwords/wordeq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blockwords {

std::optional<std::size_t> WordEquationSystem::index_of(char name) const {
    for (std::size_t i = 0; i < unknowns.size(); ++i)
        if (unknowns[i].name == name) return i;
    return std::nullopt;
}

std::string WordEquationSystem::equation_string(std::size_t i) const {
    std::string out = "sigma(";
    out.push_back(unknowns[i].name);
    out += ") = ";
    for (std::size_t f : rhs[i]) out.push_back(unknowns[f].name);
    return out;
}

namespace {

char default_name(std::size_t k, const Word& block, std::size_t index) {
    if (k == 2 && block.alphabet().size() == 2)
        return static_cast<char>('a' + 2 * block[0] + block[1]);
    return static_cast<char>('a' + index);
}

Word concat_values(const WordEquationSystem& sys, const Assignment& a,
                   const std::vector<std::size_t>& factors) {
    Word out(sys.sigma.alphabet());
    for (std::size_t f : factors) out = out + a.values[f];
    return out;
}

std::vector<Symbol> apply_raw(const Morphism& m, const std::vector<Symbol>& w) {
    std::vector<Symbol> out;
    for (Symbol s : w) {
        auto img = m.image(s).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

}  // namespace

WordEquationSystem derive_system(const Morphism& sigma, std::size_t k,
                                 const std::vector<Word>& blocks,
                                 const std::optional<std::string>& names) {
    if (names && names->size() != blocks.size())
        throw std::invalid_argument("need one name per block");
    WordEquationSystem sys{sigma, k, {}, {}};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].size() != k) throw std::invalid_argument("blocks must have length k");
        if (std::find(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(i),
                      blocks[i]) != blocks.begin() + static_cast<std::ptrdiff_t>(i))
            throw std::invalid_argument("duplicate block in block set");
        char name = names ? (*names)[i] : default_name(k, blocks[i], i);
        if (sys.index_of(name)) throw std::invalid_argument("duplicate unknown name");
        sys.unknowns.push_back({name, blocks[i]});
    }
    for (const Word& block : blocks) {
        Word img = apply(sigma, block);
        if (img.size() % k != 0) throw LengthNotDivisible(img.size(), k);
        std::vector<std::size_t> row;
        for (std::size_t pos = 0; pos < img.size(); pos += k) {
            Word sub = img.subword(pos, k);
            auto it = std::find(blocks.begin(), blocks.end(), sub);
            if (it == blocks.end()) throw BlockNotInSet(sub.str());
            row.push_back(static_cast<std::size_t>(it - blocks.begin()));
        }
        sys.rhs.push_back(std::move(row));
    }
    return sys;
}

bool check_solution(const WordEquationSystem& sys, const Assignment& a) {
    if (a.values.size() != sys.unknowns.size())
        throw std::invalid_argument("assignment must cover all unknowns");
    for (const Word& v : a.values)
        if (v.empty()) return false;
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
        if (apply(sys.sigma, a.values[i]) != concat_values(sys, a, sys.rhs[i])) return false;
    }
    return true;
}

namespace {

// Letter-level depth-first search with equation-prefix propagation: a partial
// word contributes a determined prefix sigma(partial) on the left and the
// right-hand side is determined up to the first incomplete factor; candidates
// are extended only while all determined overlaps match and the length bounds
// stay feasible.
struct SolutionSearch {
    const WordEquationSystem& sys;
    std::vector<std::size_t> caps;
    std::size_t max_image = 0;
    std::vector<std::vector<Symbol>> partial;
    std::vector<bool> complete;
    std::vector<Assignment> found;

    explicit SolutionSearch(const WordEquationSystem& s, std::size_t max_first_len,
                            std::size_t other_cap)
        : sys(s) {
        caps.assign(sys.unknowns.size(), other_cap);
        caps[0] = max_first_len;
        for (std::size_t l = 0; l < sys.sigma.alphabet().size(); ++l)
            max_image = std::max(max_image, sys.sigma.image(static_cast<Symbol>(l)).size());
        partial.assign(sys.unknowns.size(), {});
        complete.assign(sys.unknowns.size(), false);
    }

    bool consistent() const {
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            std::vector<Symbol> lhs = apply_raw(sys.sigma, partial[i]);
            std::vector<Symbol> det;
            bool determined = true;
            std::size_t rhs_min = 0, rhs_max = 0;
            for (std::size_t f : sys.rhs[i]) {
                if (determined) {
                    det.insert(det.end(), partial[f].begin(), partial[f].end());
                    if (!complete[f]) determined = false;
                }
                rhs_min += complete[f] ? partial[f].size()
                                       : std::max<std::size_t>(partial[f].size(), 1);
                rhs_max += complete[f] ? partial[f].size() : caps[f];
            }
            std::size_t overlap = std::min(lhs.size(), det.size());
            if (!std::equal(lhs.begin(), lhs.begin() + static_cast<std::ptrdiff_t>(overlap),
                            det.begin()))
                return false;
            if (complete[i]) {
                if (det.size() > lhs.size()) return false;
                if (rhs_min > lhs.size() || rhs_max < lhs.size()) return false;
            } else {
                std::size_t lhs_max = lhs.size() + (caps[i] - partial[i].size()) * max_image;
                if (det.size() > lhs_max || rhs_min > lhs_max) return false;
            }
        }
        return true;
    }

    // Prefer the first incomplete factor on the right-hand side of an equation
    // whose left-hand side is fully determined: its letters are forced, so the
    // subtree is near-linear. Fall back to declaration order.
    std::size_t pick_active() const {
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            if (!complete[i]) continue;
            for (std::size_t f : sys.rhs[i]) {
                if (!complete[f]) return f;
            }
        }
        for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
            if (!complete[i]) return i;
        }
        return sys.unknowns.size();
    }

    void dfs() {
        std::size_t active = pick_active();
        if (active == sys.unknowns.size()) {
            Assignment a;
            for (std::size_t i = 0; i < partial.size(); ++i)
                a.values.emplace_back(partial[i], sys.sigma.alphabet());
            if (check_solution(sys, a)) found.push_back(std::move(a));
            return;
        }
        if (!partial[active].empty()) {
            complete[active] = true;
            if (consistent()) dfs();
            complete[active] = false;
        }
        if (partial[active].size() < caps[active]) {
            for (std::size_t s = 0; s < sys.sigma.alphabet().size(); ++s) {
                partial[active].push_back(static_cast<Symbol>(s));
                if (consistent()) dfs();
                partial[active].pop_back();
            }
        }
    }
};

}  // namespace

std::vector<Assignment> enumerate_solutions(const WordEquationSystem& sys,
                                            std::size_t max_first_len,
                                            std::optional<std::size_t> other_cap) {
    if (sys.unknowns.empty() || max_first_len == 0) return {};
    std::size_t cap = other_cap.value_or(2 * max_first_len + sys.k);
    SolutionSearch search(sys, max_first_len, cap);
    search.dfs();

    auto key = [&](const Assignment& a) {
        std::vector<Symbol> cat;
        for (const Word& v : a.values) cat.insert(cat.end(), v.symbols().begin(), v.symbols().end());
        return cat;
    };
    std::sort(search.found.begin(), search.found.end(), [&](const Assignment& x, const Assignment& y) {
        auto kx = key(x), ky = key(y);
        if (kx.size() != ky.size()) return kx.size() < ky.size();
        if (kx != ky) return kx < ky;
        return x.values < y.values;
    });
    search.found.erase(std::unique(search.found.begin(), search.found.end()), search.found.end());
    return search.found;
}

ParikhSystem abelianize(const WordEquationSystem& sys) {
    const std::size_t A = sys.sigma.alphabet().size();
    const std::size_t U = sys.unknowns.size();
    ParikhSystem ps;
    ps.unknown_count = U;
    ps.alphabet_size = A;

    // incidence[l][j] = occurrences of letter l in sigma(j)
    std::vector<std::vector<long long>> incidence(A, std::vector<long long>(A, 0));
    for (std::size_t j = 0; j < A; ++j)
        for (Symbol s : sys.sigma.image(static_cast<Symbol>(j)).symbols()) ++incidence[s][j];

    auto var_name = [&](std::size_t u, std::size_t l) {
        std::string s = "N";
        s.push_back(sys.sigma.alphabet().to_char(static_cast<Symbol>(l)));
        s.push_back('(');
        s.push_back(sys.unknowns[u].name);
        s.push_back(')');
        return s;
    };

    for (std::size_t u = 0; u < U; ++u) {
        for (std::size_t l = 0; l < A; ++l) {
            std::vector<long long> row(U * A, 0);
            std::string lhs;
            for (std::size_t j = 0; j < A; ++j) {
                row[u * A + j] += incidence[l][j];
                if (incidence[l][j] != 0) {
                    if (!lhs.empty()) lhs += " + ";
                    if (incidence[l][j] != 1) lhs += std::to_string(incidence[l][j]) + "*";
                    lhs += var_name(u, j);
                }
            }
            std::string rhs_str;
            for (std::size_t f : sys.rhs[u]) {
                row[f * A + l] -= 1;
                if (!rhs_str.empty()) rhs_str += " + ";
                rhs_str += var_name(f, l);
            }
            ps.rows.push_back(std::move(row));
            ps.identities.push_back((lhs.empty() ? "0" : lhs) + " = " +
                                    (rhs_str.empty() ? "0" : rhs_str));
        }
    }
    return ps;
}

bool ParikhSystem::satisfied(const std::vector<std::vector<long long>>& counts) const {
    if (counts.size() != unknown_count) return false;
    for (const auto& c : counts)
        if (c.size() != alphabet_size) return false;
    for (const auto& row : rows) {
        long long acc = 0;
        for (std::size_t u = 0; u < unknown_count; ++u)
            for (std::size_t l = 0; l < alphabet_size; ++l)
                acc += row[u * alphabet_size + l] * counts[u][l];
        if (acc != 0) return false;
    }
    return true;
}

std::vector<std::vector<long long>> letter_counts(const WordEquationSystem& sys,
                                                  const Assignment& a) {
    const std::size_t A = sys.sigma.alphabet().size();
    std::vector<std::vector<long long>> counts(a.values.size(), std::vector<long long>(A, 0));
    for (std::size_t u = 0; u < a.values.size(); ++u)
        for (Symbol s : a.values[u].symbols()) ++counts[u][s];
    return counts;
}

bool check_parikh(const ParikhSystem& ps, const Assignment& a) {
    std::vector<std::vector<long long>> counts(a.values.size(),
                                               std::vector<long long>(ps.alphabet_size, 0));
    for (std::size_t u = 0; u < a.values.size(); ++u)
        for (Symbol s : a.values[u].symbols()) ++counts[u][s];
    return ps.satisfied(counts);
}

std::vector<std::vector<std::vector<long long>>> parikh_completions(
    const ParikhSystem& ps, std::vector<std::vector<long long>> partial, long long bound) {
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t u = 0; u < partial.size(); ++u)
        for (std::size_t l = 0; l < partial[u].size(); ++l)
            if (partial[u][l] < 0) free_slots.emplace_back(u, l);
    if (free_slots.size() > 6)
        throw std::invalid_argument("too many free entries for bounded enumeration");

    std::vector<std::vector<std::vector<long long>>> out;
    std::vector<long long> vals(free_slots.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_slots.size(); ++i)
            partial[free_slots[i].first][free_slots[i].second] = vals[i];
        if (ps.satisfied(partial)) out.push_back(partial);
        std::size_t i = 0;
        for (; i < vals.size(); ++i) {
            if (++vals[i] <= bound) break;
            vals[i] = 0;
        }
        if (i == vals.size()) break;
    }
    return out;
}

Assignment solution_family(const WordEquationSystem& sys, const BlockSubstitution& base,
                           const BlockSubstitution& stable, unsigned n) {
    if (!is_block_stable(stable)) throw NotStable();
    Assignment out;
    for (const Unknown& u : sys.unknowns) {
        Word w = u.block;
        for (unsigned t = 0; t < n; ++t) w = apply(stable, w);
        out.values.push_back(apply(base, w));
    }
    return out;
}

BlockSubstitution assignment_to_block_sub(const WordEquationSystem& sys, const Assignment& a) {
    std::map<Word, Word> images;
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i)
        images.emplace(sys.unknowns[i].block, a.values[i]);
    return BlockSubstitution(sys.k, sys.sigma.alphabet(), std::move(images));
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

WordEquationSystem parse_system_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;

    std::optional<Morphism> sigma;
    std::size_t k = 0;
    std::vector<std::string> block_texts;
    std::vector<std::pair<char, std::string>> equations;  // name, rhs names
    bool header_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            if (t.rfind("sigma:", 0) != 0) throw ParseError(lineno, "expected 'sigma:' header");
            for (const std::string& part : split(t, ';')) {
                std::string p = trim(part);
                if (p.rfind("sigma:", 0) == 0) {
                    std::string rule_text;
                    for (const std::string& r : split(p.substr(6), ','))
                        rule_text += trim(r) + "\n";
                    sigma = parse_morphism_rules(rule_text);
                } else if (p.rfind("k=", 0) == 0) {
                    k = static_cast<std::size_t>(std::stoul(p.substr(2)));
                } else if (p.rfind("blocks=", 0) == 0) {
                    for (const std::string& b : split(p.substr(7), ','))
                        block_texts.push_back(trim(b));
                } else if (!p.empty()) {
                    throw ParseError(lineno, "unrecognized header part '" + p + "'");
                }
            }
            if (!sigma || k == 0 || block_texts.empty())
                throw ParseError(lineno, "header must define sigma, k and blocks");
            header_seen = true;
            continue;
        }
        // equation line: sigma(a)=acb
        if (t.rfind("sigma(", 0) != 0 || t.size() < 9 || t[7] != ')')
            throw ParseError(lineno, "expected 'sigma(x)=...'");
        char name = t[6];
        auto eq = t.find('=', 7);
        if (eq == std::string::npos) throw ParseError(lineno, "expected '='");
        std::string rhs_names = trim(t.substr(eq + 1));
        if (rhs_names.empty()) throw ParseError(lineno, "empty right-hand side");
        equations.emplace_back(name, rhs_names);
    }
    if (!header_seen) throw ParseError(lineno, "missing 'sigma:' header");

    std::vector<Word> blocks;
    for (const std::string& b : block_texts) blocks.push_back(Word::parse(b, sigma->alphabet()));

    WordEquationSystem sys = derive_system(*sigma, k, blocks);
    if (equations.empty()) return sys;

    if (equations.size() != sys.unknowns.size())
        throw ParseError(0, "need exactly one equation per block");
    std::vector<std::vector<std::size_t>> rhs(sys.unknowns.size());
    std::vector<bool> covered(sys.unknowns.size(), false);
    for (const auto& [name, rhs_names] : equations) {
        auto idx = sys.index_of(name);
        if (!idx) throw ParseError(0, std::string("unknown name '") + name + "' in equation");
        if (covered[*idx]) throw ParseError(0, std::string("duplicate equation for '") + name + "'");
        covered[*idx] = true;
        std::vector<std::size_t> row;
        for (char c : rhs_names) {
            auto f = sys.index_of(c);
            if (!f) throw ParseError(0, std::string("unknown name '") + c + "' in equation");
            row.push_back(*f);
        }
        rhs[*idx] = std::move(row);
    }
    sys.rhs = std::move(rhs);
    return sys;
}

std::string format_system(const WordEquationSystem& sys) {
    std::string out = "sigma: ";
    const Alphabet& a = sys.sigma.alphabet();
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (s > 0) out += ", ";
        out.push_back(a.to_char(static_cast<Symbol>(s)));
        out += "->";
        out += sys.sigma.image(static_cast<Symbol>(s)).str();
    }
    out += "; k=" + std::to_string(sys.k) + "; blocks=";
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
        if (i > 0) out += ",";
        out += sys.unknowns[i].block.str();
    }
    out += "\n";
    for (std::size_t i = 0; i < sys.unknowns.size(); ++i) {
        std::string eq = sys.equation_string(i);
        eq.erase(std::remove(eq.begin(), eq.end(), ' '), eq.end());
        out += eq + "\n";
    }
    return out;
}

}  // namespace blockwords
