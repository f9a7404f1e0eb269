#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "blockwords/word.hpp"

namespace blockwords {

// A non-erasing letter-to-word map, applied letterwise.
class Morphism {
public:
    Morphism(const Alphabet& a, std::vector<Word> images);

    const Alphabet& alphabet() const { return alphabet_; }
    const Word& image(Symbol letter) const { return images_.at(letter); }
    const std::vector<Word>& images() const { return images_; }

    bool operator==(const Morphism& o) const {
        return alphabet_.compatible(o.alphabet_) && images_ == o.images_;
    }

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

// A partial map from length-k blocks to words, applied to words whose length
// is a multiple of k by substituting aligned blocks. Partiality is deliberate:
// blocks that never occur need no image, and applying to one is an error.
class BlockSubstitution {
public:
    BlockSubstitution(std::size_t k, const Alphabet& a, std::map<Word, Word> images);

    std::size_t block_length() const { return k_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Word>& images() const { return images_; }

    std::vector<Word> domain() const;
    bool defines(const Word& block) const { return images_.count(block) > 0; }
    // Throws BlockNotInDomain when the block has no image.
    const Word& image(const Word& block) const;

    bool operator==(const BlockSubstitution& o) const {
        return k_ == o.k_ && alphabet_.compatible(o.alphabet_) && images_ == o.images_;
    }

private:
    std::size_t k_;
    Alphabet alphabet_;
    std::map<Word, Word> images_;
};

Word apply(const Morphism& m, const Word& w);

// Blockwise application; |w| must be a multiple of k and every aligned block
// must have an image.
Word apply(const BlockSubstitution& bs, const Word& w);

// Apply after truncating w to the largest multiple of the block length.
// |w| must be at least one block.
Word apply_truncated(const BlockSubstitution& bs, const Word& w);

// True iff every image length is a multiple of k, so iterates are defined.
bool is_block_stable(const BlockSubstitution& bs);

// The block substitution B -> m(B) on the given length-k blocks.
BlockSubstitution induced_block_sub(const Morphism& m, std::size_t k,
                                    const std::vector<Word>& domain);

// The block map B -> B.
BlockSubstitution identity_block_sub(const Alphabet& a, std::size_t k,
                                     const std::vector<Word>& domain);

// n-fold iterate, n >= 1.
Morphism power(const Morphism& m, unsigned n);

// B -> outer(inner(B)); inner must be block-stable with the same block length.
BlockSubstitution block_compose(const BlockSubstitution& outer, const BlockSubstitution& inner);

// True iff |m(0)| and |m(1)| have the same parity (two-letter alphabets only).
bool conjugation_admissible(const Morphism& m);

// Rule text: one "pattern -> image" line per rule. Morphisms use single-letter
// patterns. The alphabet is inferred from the characters used (0/1 or 1/2).
using Rules = std::variant<Morphism, BlockSubstitution>;

Morphism parse_morphism_rules(const std::string& text);
BlockSubstitution parse_block_rules(const std::string& text);
Rules parse_rules(const std::string& text);

std::string format_rules(const Morphism& m);
std::string format_rules(const BlockSubstitution& bs);

}  // namespace blockwords
