#include "blockwords/substitution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blockwords {

Morphism::Morphism(const Alphabet& a, std::vector<Word> images)
    : alphabet_(a), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
        throw std::invalid_argument("morphism needs one image per letter");
    for (const Word& img : images_) {
        if (img.empty()) throw std::invalid_argument("morphism images must be nonempty");
        if (!img.alphabet().compatible(alphabet_))
            throw std::invalid_argument("morphism images must be over the same alphabet");
    }
}

BlockSubstitution::BlockSubstitution(std::size_t k, const Alphabet& a, std::map<Word, Word> images)
    : k_(k), alphabet_(a), images_(std::move(images)) {
    if (k_ < 2) throw std::invalid_argument("block length must be at least 2");
    if (images_.empty()) throw std::invalid_argument("block substitution needs a nonempty domain");
    for (const auto& [block, img] : images_) {
        if (block.size() != k_)
            throw std::invalid_argument("every domain block must have length k");
        if (!block.alphabet().compatible(alphabet_) || !img.alphabet().compatible(alphabet_))
            throw std::invalid_argument("blocks and images must be over the same alphabet");
    }
}

std::vector<Word> BlockSubstitution::domain() const {
    std::vector<Word> out;
    out.reserve(images_.size());
    for (const auto& [block, img] : images_) out.push_back(block);
    return out;
}

const Word& BlockSubstitution::image(const Word& block) const {
    auto it = images_.find(block);
    if (it == images_.end()) throw BlockNotInDomain(block.str(), 0);
    return it->second;
}

Word apply(const Morphism& m, const Word& w) {
    std::size_t total = 0;
    for (Symbol s : w.symbols()) total += m.image(s).size();
    std::vector<Symbol> out;
    out.reserve(total);
    for (Symbol s : w.symbols()) {
        auto img = m.image(s).symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), m.alphabet());
}

Word apply(const BlockSubstitution& bs, const Word& w) {
    const std::size_t k = bs.block_length();
    if (w.size() % k != 0) throw LengthNotDivisible(w.size(), k);
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < w.size(); i += k) {
        Word block = w.subword(i, k);
        auto it = bs.images().find(block);
        if (it == bs.images().end()) throw BlockNotInDomain(block.str(), i);
        auto img = it->second.symbols();
        out.insert(out.end(), img.begin(), img.end());
    }
    return Word(std::move(out), bs.alphabet());
}

Word apply_truncated(const BlockSubstitution& bs, const Word& w) {
    const std::size_t k = bs.block_length();
    if (w.size() < k) throw WordTooShort(w.size(), k);
    return apply(bs, w.prefix((w.size() / k) * k));
}

bool is_block_stable(const BlockSubstitution& bs) {
    for (const auto& [block, img] : bs.images()) {
        if (img.size() % bs.block_length() != 0) return false;
    }
    return true;
}

BlockSubstitution induced_block_sub(const Morphism& m, std::size_t k,
                                    const std::vector<Word>& domain) {
    std::map<Word, Word> images;
    for (const Word& block : domain) {
        if (block.size() != k) throw std::invalid_argument("domain blocks must have length k");
        images.emplace(block, apply(m, block));
    }
    return BlockSubstitution(k, m.alphabet(), std::move(images));
}

BlockSubstitution identity_block_sub(const Alphabet& a, std::size_t k,
                                     const std::vector<Word>& domain) {
    std::map<Word, Word> images;
    for (const Word& block : domain) images.emplace(block, block);
    return BlockSubstitution(k, a, std::move(images));
}

Morphism power(const Morphism& m, unsigned n) {
    if (n < 1) throw std::invalid_argument("morphism power needs n >= 1");
    std::vector<Word> images = m.images();
    for (unsigned step = 1; step < n; ++step) {
        for (Word& img : images) img = apply(m, img);
    }
    return Morphism(m.alphabet(), std::move(images));
}

BlockSubstitution block_compose(const BlockSubstitution& outer, const BlockSubstitution& inner) {
    if (outer.block_length() != inner.block_length())
        throw std::invalid_argument("composition requires equal block lengths");
    if (!is_block_stable(inner)) throw NotStable();
    std::map<Word, Word> images;
    for (const auto& [block, img] : inner.images()) images.emplace(block, apply(outer, img));
    return BlockSubstitution(outer.block_length(), outer.alphabet(), std::move(images));
}

bool conjugation_admissible(const Morphism& m) {
    if (m.alphabet().size() != 2) throw NonBinaryAlphabet();
    return m.image(0).size() % 2 == m.image(1).size() % 2;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct RawRule {
    std::string pattern;
    std::string image;
    std::size_t line;
};

std::vector<RawRule> parse_raw_rules(const std::string& text) {
    std::vector<RawRule> rules;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto arrow = t.find("->");
        if (arrow == std::string::npos) throw ParseError(lineno, "expected 'pattern -> image'");
        std::string pat = trim(t.substr(0, arrow));
        std::string img = trim(t.substr(arrow + 2));
        if (pat.empty()) throw ParseError(lineno, "empty pattern");
        if (img.empty()) throw ParseError(lineno, "empty image");
        rules.push_back({pat, img, lineno});
    }
    if (rules.empty()) throw ParseError(0, "no rules found");
    return rules;
}

Alphabet infer_alphabet(const std::vector<RawRule>& rules) {
    bool all01 = true, all12 = true;
    for (const RawRule& r : rules) {
        for (char c : r.pattern + r.image) {
            if (c != '0' && c != '1') all01 = false;
            if (c != '1' && c != '2') all12 = false;
        }
    }
    if (all01) return Alphabet::binary();
    if (all12) return Alphabet::runs();
    throw ParseError(0, "cannot infer alphabet: expected characters 0/1 or 1/2");
}

}  // namespace

Morphism parse_morphism_rules(const std::string& text) {
    auto rules = parse_raw_rules(text);
    Alphabet a = infer_alphabet(rules);
    std::vector<Word> images(a.size(), Word(a));
    std::vector<bool> seen(a.size(), false);
    for (const RawRule& r : rules) {
        if (r.pattern.size() != 1) throw ParseError(r.line, "morphism patterns are single letters");
        Word pat = Word::parse(r.pattern, a);
        if (seen[pat[0]]) throw ParseError(r.line, "duplicate rule for letter " + r.pattern);
        seen[pat[0]] = true;
        images[pat[0]] = Word::parse(r.image, a);
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (!seen[s]) throw ParseError(0, std::string("missing image for letter ") + a.to_char(static_cast<Symbol>(s)));
    }
    return Morphism(a, std::move(images));
}

BlockSubstitution parse_block_rules(const std::string& text) {
    auto rules = parse_raw_rules(text);
    Alphabet a = infer_alphabet(rules);
    std::size_t k = rules.front().pattern.size();
    std::map<Word, Word> images;
    for (const RawRule& r : rules) {
        if (r.pattern.size() != k) throw ParseError(r.line, "all patterns must have the same length");
        Word pat = Word::parse(r.pattern, a);
        if (images.count(pat)) throw ParseError(r.line, "duplicate rule for block " + r.pattern);
        images.emplace(pat, Word::parse(r.image, a));
    }
    return BlockSubstitution(k, a, std::move(images));
}

Rules parse_rules(const std::string& text) {
    auto rules = parse_raw_rules(text);
    bool single = true;
    for (const RawRule& r : rules) single = single && r.pattern.size() == 1;
    if (single) return parse_morphism_rules(text);
    return parse_block_rules(text);
}

std::string format_rules(const Morphism& m) {
    std::string out;
    for (std::size_t s = 0; s < m.alphabet().size(); ++s) {
        out.push_back(m.alphabet().to_char(static_cast<Symbol>(s)));
        out += " -> ";
        out += m.image(static_cast<Symbol>(s)).str();
        out.push_back('\n');
    }
    return out;
}

std::string format_rules(const BlockSubstitution& bs) {
    std::string out;
    for (const auto& [block, img] : bs.images()) {
        out += block.str();
        out += " -> ";
        out += img.str();
        out.push_back('\n');
    }
    return out;
}

}  // namespace blockwords
