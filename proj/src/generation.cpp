#include "blockwords/generation.hpp"

#include <algorithm>

namespace blockwords {

std::vector<Word> block_fixed_point_seeds(const BlockSubstitution& bs) {
    std::vector<Word> out;
    for (const auto& [block, img] : bs.images()) {
        if (img.size() > block.size() && img.starts_with(block)) out.push_back(block);
    }
    return out;
}

namespace {

Word iterate_to_length(Word w, std::size_t n, const auto& step, const char* what) {
    while (w.size() < n) {
        Word next = step(w);
        if (next.size() <= w.size())
            throw GenerationStalled(std::string(what) + " stopped growing at length " +
                                    std::to_string(w.size()));
        if (!next.starts_with(w))
            throw GenerationStalled(std::string(what) + " does not extend its input as a prefix");
        w = std::move(next);
    }
    return w.prefix(n);
}

}  // namespace

Word generate_prefix(const GenerationScheme& scheme, std::size_t n) {
    return std::visit(
        [n](const auto& s) -> Word {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MorphismIteration>) {
                const Word& img = s.morphism.image(s.seed_letter);
                if (img.size() < 2 || img[0] != s.seed_letter)
                    throw GenerationStalled("seed letter image must start with the seed and be longer");
                Word w(std::vector<Symbol>{s.seed_letter}, s.morphism.alphabet());
                return iterate_to_length(
                    std::move(w), n, [&](const Word& v) { return apply(s.morphism, v); },
                    "morphism iteration");
            } else if constexpr (std::is_same_v<T, TruncatedBlockIteration>) {
                return iterate_to_length(
                    s.seed, n, [&](const Word& v) { return apply_truncated(s.kappa, v); },
                    "truncated block iteration");
            } else if constexpr (std::is_same_v<T, Recurrence>) {
                return s.kind == RecurrenceKind::ThueMorse ? thue_morse(n)
                                                           : tm_blockfix_recurrence(n);
            } else {
                return kolakoski_selfread(n, s.start_symbol);
            }
        },
        scheme);
}

Word thue_morse(std::size_t n) {
    std::vector<Symbol> x(n);
    if (n > 0) x[0] = 0;
    for (std::size_t i = 1; i < n; ++i)
        x[i] = (i % 2 == 0) ? x[i / 2] : static_cast<Symbol>(1 - x[i / 2]);
    return Word(std::move(x), Alphabet::binary());
}

Word tm_blockfix_recurrence(std::size_t n) {
    if (n == 0) return Word(Alphabet::binary());
    // Fill whole index triples {3j, 3j+1, 3j+2}; sources 2j and 2j+1 are
    // already written when each triple is reached.
    std::size_t cap = ((std::max<std::size_t>(n, 2) + 2) / 3 + 1) * 3;
    std::vector<Symbol> x(cap, 0);
    x[0] = 0;
    x[1] = 0;
    for (std::size_t j = 0; 3 * j + 2 < cap; ++j) {
        if (j > 0) x[3 * j] = x[2 * j];
        x[3 * j + 1] = x[2 * j + 1];
        x[3 * j + 2] = static_cast<Symbol>(1 - x[2 * j + 1]);
    }
    x.resize(n);
    return Word(std::move(x), Alphabet::binary());
}

Word kolakoski_selfread(std::size_t n, Symbol start_symbol) {
    if (start_symbol >= 2) throw std::invalid_argument("start symbol must be 0 or 1");
    if (n == 0) return Word(Alphabet::runs());
    std::vector<Symbol> s;
    s.reserve(n + 2);
    s.push_back(start_symbol);
    Symbol cur = start_symbol;
    std::size_t reader = 0;
    while (s.size() < n) {
        // Run `reader` has symbol `cur`. When the reader catches the writer,
        // the run defines its own length through the symbol being written.
        std::size_t len = (reader < s.size() ? s[reader] : cur) + 1;
        std::size_t already = (reader == 0) ? 1 : 0;
        for (std::size_t t = already; t < len; ++t) s.push_back(cur);
        cur = static_cast<Symbol>(1 - cur);
        ++reader;
    }
    s.resize(n);
    return Word(std::move(s), Alphabet::runs());
}

bool fixed_point_property_check(const BlockSubstitution& bs, const Word& x) {
    Word y = apply_truncated(bs, x);
    std::size_t m = std::min(x.size(), y.size());
    auto xs = x.symbols();
    auto ys = y.symbols();
    return std::equal(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(m), ys.begin());
}

}  // namespace blockwords
