#pragma once

#include <variant>
#include <vector>

#include "blockwords/substitution.hpp"
#include "blockwords/word.hpp"

namespace blockwords {

// Iterate a morphism from a single letter whose image starts with that letter.
struct MorphismIteration {
    Morphism morphism;
    Symbol seed_letter;
};

// Iterate the truncated block map from a seed word that is a proper prefix of
// its own image. Short seeds can stall; the engine detects that.
struct TruncatedBlockIteration {
    BlockSubstitution kappa;
    Word seed;
};

// Closed-form index recurrences, independent of the substitution machinery.
enum class RecurrenceKind {
    ThueMorse,      // t(0)=0, t(2n)=t(n), t(2n+1)=1-t(n)
    TmBlockfix,     // x(0)=x(1)=0, x(3n)=x(2n), x(3n+1)=x(2n+1), x(3n+2)=1-x(2n+1)
};

struct Recurrence {
    RecurrenceKind kind;
};

// The self-reading run-length sequence over the 1/2 alphabet.
struct SelfReading {
    Symbol start_symbol;  // 0 for a leading 1-run, 1 for a leading 2-run
};

using GenerationScheme =
    std::variant<MorphismIteration, TruncatedBlockIteration, Recurrence, SelfReading>;

// Domain blocks whose image has the block itself as proper prefix; iterating
// the truncated map from such a block (suitably extended) converges to the
// fixed point that starts with it.
std::vector<Word> block_fixed_point_seeds(const BlockSubstitution& bs);

// The length-n prefix of the scheme's fixed point. Monotone in n. Throws
// GenerationStalled when iteration stops growing or breaks the prefix chain.
Word generate_prefix(const GenerationScheme& scheme, std::size_t n);

// Length-n prefix of the Thue-Morse word (first letter 0).
Word thue_morse(std::size_t n);

// Length-n prefix of the 00-starting fixed point of the Thue-Morse block map,
// computed purely from its index recurrences.
Word tm_blockfix_recurrence(std::size_t n);

// Length-n prefix of the self-reading sequence over 1/2: the sequence equals
// its own run-length word. start_symbol as in SelfReading.
Word kolakoski_selfread(std::size_t n, Symbol start_symbol);

// True iff apply_truncated(bs, x) and x agree on their common prefix.
bool fixed_point_property_check(const BlockSubstitution& bs, const Word& x);

}  // namespace blockwords
