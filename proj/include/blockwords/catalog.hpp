#pragma once

#include <string>
#include <variant>
#include <vector>

#include "blockwords/generation.hpp"
#include "blockwords/substitution.hpp"

namespace blockwords {

enum class ObjectKind { Morphism, BlockSubstitution, GenerationScheme };

// A named, immutable registry entry. The registry holds the verbatim rule sets
// the rest of the library is tested against; derived objects (powers,
// compositions) are built on demand.
struct NamedObject {
    std::string name;
    ObjectKind kind;
    std::string description;
    std::variant<Morphism, BlockSubstitution, GenerationScheme> value;

    const Morphism& morphism() const { return std::get<Morphism>(value); }
    const BlockSubstitution& block_substitution() const {
        return std::get<BlockSubstitution>(value);
    }
    const GenerationScheme& scheme() const { return std::get<GenerationScheme>(value); }
};

// All registered objects, in a fixed listing order.
const std::vector<NamedObject>& registry();

// Throws UnknownName for unregistered names.
const NamedObject& lookup(const std::string& name);

}  // namespace blockwords
