#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockwords/errors.hpp"

namespace blockwords {

using Symbol = std::uint8_t;

// A small alphabet. Symbols are 0..size-1 internally; the display map gives
// one character per symbol (binary words render as 0/1, run-length words as 1/2).
class Alphabet {
public:
    static Alphabet binary() { return Alphabet("01"); }
    static Alphabet runs() { return Alphabet("12"); }
    static Alphabet make(std::string display) { return Alphabet(std::move(display)); }

    std::size_t size() const { return display_.size(); }
    char to_char(Symbol s) const { return display_.at(s); }
    std::optional<Symbol> from_char(char c) const {
        auto pos = display_.find(c);
        if (pos == std::string::npos) return std::nullopt;
        return static_cast<Symbol>(pos);
    }
    const std::string& display() const { return display_; }

    // Words over alphabets of equal size are interchangeable; display is cosmetic.
    bool operator==(const Alphabet& o) const { return display_ == o.display_; }
    bool compatible(const Alphabet& o) const { return size() == o.size(); }

private:
    explicit Alphabet(std::string display);
    std::string display_;
};

// A finite word over an alphabet. Immutable after construction.
class Word {
public:
    Word() : alphabet_(Alphabet::binary()) {}
    explicit Word(const Alphabet& a) : alphabet_(a) {}
    Word(std::vector<Symbol> symbols, const Alphabet& a);

    static Word parse(std::string_view text, const Alphabet& a);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const { return symbols_; }
    const Alphabet& alphabet() const { return alphabet_; }

    std::string str() const;

    // Same symbols read under another display map of equal size.
    Word recoded(const Alphabet& other) const;

    Word subword(std::size_t pos, std::size_t len) const;
    Word prefix(std::size_t len) const { return subword(0, len < size() ? len : size()); }
    bool starts_with(const Word& p) const;

    Word operator+(const Word& o) const;
    bool operator==(const Word& o) const {
        return alphabet_.compatible(o.alphabet_) && symbols_ == o.symbols_;
    }
    bool operator!=(const Word& o) const { return !(*this == o); }
    // Lexicographic on symbols; used for deterministic orderings.
    bool operator<(const Word& o) const { return symbols_ < o.symbols_; }

private:
    std::vector<Symbol> symbols_;
    Alphabet alphabet_;
};

// The set of distinct length-n factors of a word, sorted lexicographically.
struct FactorSet {
    std::size_t length = 0;
    std::vector<Word> factors;

    std::size_t size() const { return factors.size(); }
    bool contains(const Word& w) const;
};

// Letter complement w_i -> 1-w_i; binary alphabets only.
Word mirror(const Word& w);

// w_1...w_m -> w_m...w_1.
Word reversed(const Word& w);

// Distinct length-n contiguous subwords of w. n = 0 yields {empty word};
// n > |w| yields the empty set.
FactorSet factors(const Word& w, std::size_t n);

// Smallest index where needle occurs in haystack. Empty needle matches at 0.
std::optional<std::size_t> find(const Word& haystack, const Word& needle);

// Expand a run-length word over a two-letter alphabet: the i-th run has length
// runs[i]+1 (display value) and the run symbols alternate starting from start_symbol.
Word run_length_expand(const Word& runs, Symbol start_symbol);

// Inverse of run_length_expand given the first symbol of w; every run of w must
// have length 1 or 2. Result is rendered over the 1/2 run alphabet.
Word run_lengths(const Word& w);

}  // namespace blockwords
