#include "blockwords/word.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace blockwords {

Alphabet::Alphabet(std::string display) : display_(std::move(display)) {
    if (display_.empty()) throw std::invalid_argument("alphabet must have at least one symbol");
    for (std::size_t i = 0; i < display_.size(); ++i) {
        if (display_.find(display_[i], i + 1) != std::string::npos)
            throw std::invalid_argument("alphabet display characters must be distinct");
    }
}

Word::Word(std::vector<Symbol> symbols, const Alphabet& a)
    : symbols_(std::move(symbols)), alphabet_(a) {
    for (Symbol s : symbols_) {
        if (s >= alphabet_.size())
            throw std::invalid_argument("symbol value out of range for alphabet");
    }
}

Word Word::parse(std::string_view text, const Alphabet& a) {
    std::vector<Symbol> syms;
    syms.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto s = a.from_char(text[i]);
        if (!s) throw InvalidSymbol(text[i], i);
        syms.push_back(*s);
    }
    return Word(std::move(syms), a);
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(alphabet_.to_char(s));
    return out;
}

Word Word::recoded(const Alphabet& other) const {
    if (!alphabet_.compatible(other))
        throw std::invalid_argument("recoding requires an alphabet of the same size");
    return Word(std::vector<Symbol>(symbols_.begin(), symbols_.end()), other);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || pos + len > size()) throw std::out_of_range("subword out of range");
    return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                alphabet_);
}

bool Word::starts_with(const Word& p) const {
    if (p.size() > size()) return false;
    return std::equal(p.symbols_.begin(), p.symbols_.end(), symbols_.begin());
}

Word Word::operator+(const Word& o) const {
    if (!alphabet_.compatible(o.alphabet_))
        throw std::invalid_argument("cannot concatenate words over different alphabets");
    std::vector<Symbol> syms;
    syms.reserve(size() + o.size());
    syms.insert(syms.end(), symbols_.begin(), symbols_.end());
    syms.insert(syms.end(), o.symbols_.begin(), o.symbols_.end());
    return Word(std::move(syms), alphabet_);
}

bool FactorSet::contains(const Word& w) const {
    return std::binary_search(factors.begin(), factors.end(), w);
}

Word mirror(const Word& w) {
    if (w.alphabet().size() != 2) throw NonBinaryAlphabet();
    std::vector<Symbol> syms(w.symbols().begin(), w.symbols().end());
    for (Symbol& s : syms) s = static_cast<Symbol>(1 - s);
    return Word(std::move(syms), w.alphabet());
}

Word reversed(const Word& w) {
    std::vector<Symbol> syms(w.symbols().rbegin(), w.symbols().rend());
    return Word(std::move(syms), w.alphabet());
}

FactorSet factors(const Word& w, std::size_t n) {
    FactorSet out;
    out.length = n;
    if (n == 0) {
        out.factors.push_back(Word(w.alphabet()));
        return out;
    }
    if (n > w.size()) return out;
    auto syms = w.symbols();
    const char* base = reinterpret_cast<const char*>(syms.data());
    std::unordered_set<std::string_view> seen;
    seen.reserve(w.size() - n + 1);
    for (std::size_t i = 0; i + n <= w.size(); ++i) {
        if (seen.insert(std::string_view(base + i, n)).second)
            out.factors.push_back(w.subword(i, n));
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

std::optional<std::size_t> find(const Word& haystack, const Word& needle) {
    if (needle.empty()) return 0;
    if (needle.size() > haystack.size()) return std::nullopt;
    auto h = haystack.symbols();
    auto n = needle.symbols();
    auto it = std::search(h.begin(), h.end(), n.begin(), n.end());
    if (it == h.end()) return std::nullopt;
    return static_cast<std::size_t>(it - h.begin());
}

Word run_length_expand(const Word& runs, Symbol start_symbol) {
    if (runs.alphabet().size() != 2) throw NonBinaryAlphabet();
    if (start_symbol >= 2) throw std::invalid_argument("start symbol must be 0 or 1");
    std::vector<Symbol> out;
    Symbol cur = start_symbol;
    for (Symbol s : runs.symbols()) {
        std::size_t len = static_cast<std::size_t>(s) + 1;
        out.insert(out.end(), len, cur);
        cur = static_cast<Symbol>(1 - cur);
    }
    return Word(std::move(out), runs.alphabet());
}

Word run_lengths(const Word& w) {
    std::vector<Symbol> out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        std::size_t len = j - i;
        if (len > 2) throw RunTooLong(i + 2);
        out.push_back(static_cast<Symbol>(len - 1));
        i = j;
    }
    return Word(std::move(out), Alphabet::runs());
}

}  // namespace blockwords
