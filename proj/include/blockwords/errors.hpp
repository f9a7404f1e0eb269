#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockwords {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A character that is not in the alphabet's display map.
struct InvalidSymbol : Error {
    std::size_t position;
    InvalidSymbol(char c, std::size_t pos)
        : Error("invalid symbol '" + std::string(1, c) + "' at position " + std::to_string(pos)),
          position(pos) {}
};

// Operation defined only for two-letter alphabets.
struct NonBinaryAlphabet : Error {
    NonBinaryAlphabet() : Error("operation requires a two-letter alphabet") {}
};

// run_lengths met a run of length > 2.
struct RunTooLong : Error {
    std::size_t position;
    explicit RunTooLong(std::size_t pos)
        : Error("run longer than 2 at position " + std::to_string(pos)), position(pos) {}
};

// Word length is not a multiple of the block length.
struct LengthNotDivisible : Error {
    LengthNotDivisible(std::size_t len, std::size_t k)
        : Error("word length " + std::to_string(len) + " is not a multiple of " + std::to_string(k)) {}
};

// Word shorter than one block.
struct WordTooShort : Error {
    WordTooShort(std::size_t len, std::size_t k)
        : Error("word of length " + std::to_string(len) + " is shorter than block length " +
                std::to_string(k)) {}
};

// An aligned block is missing from a block substitution's domain.
struct BlockNotInDomain : Error {
    std::string block;
    std::size_t position;
    BlockNotInDomain(std::string blk, std::size_t pos)
        : Error("block '" + blk + "' at position " + std::to_string(pos) + " is not in the domain"),
          block(std::move(blk)), position(pos) {}
};

// An aligned block is missing from a word-equation block set.
struct BlockNotInSet : Error {
    std::string block;
    explicit BlockNotInSet(std::string blk)
        : Error("block '" + blk + "' is not in the declared block set"), block(std::move(blk)) {}
};

// Composition or iteration requires a block-stable substitution.
struct NotStable : Error {
    NotStable() : Error("block substitution is not block-stable") {}
};

// Prefix iteration stopped growing before reaching the requested length.
struct GenerationStalled : Error {
    explicit GenerationStalled(const std::string& why) : Error("generation stalled: " + why) {}
};

// A hypothesis of the fixed-point transfer check failed.
struct HypothesisFailed : Error {
    std::string hypothesis;
    explicit HypothesisFailed(std::string which)
        : Error("hypothesis failed: " + which), hypothesis(std::move(which)) {}
};

// Catalog lookup of an unregistered name.
struct UnknownName : Error {
    std::string name;
    explicit UnknownName(std::string n) : Error("unknown name: " + n), name(std::move(n)) {}
};

// Analysis window too small for the requested parameters.
struct PrefixTooShort : Error {
    PrefixTooShort(std::size_t have, std::size_t need)
        : Error("prefix of length " + std::to_string(have) + " is too short, need at least " +
                std::to_string(need)) {}
};

// Malformed rule file, system file or b-file.
struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t ln, const std::string& msg)
        : Error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

}  // namespace blockwords
