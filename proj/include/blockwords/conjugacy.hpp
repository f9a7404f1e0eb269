#pragma once

#include <vector>

#include "blockwords/generation.hpp"
#include "blockwords/substitution.hpp"
#include "blockwords/word.hpp"

namespace blockwords {

struct GeneratorIdentity {
    Word generator;
    Word lhs;  // kappa(sigma(B))
    Word rhs;  // sigma(kappa(B))
    bool equal;
};

// Outcome of the finite commutation check kappa o sigma = sigma o kappa on a
// generator set. `closed` records whether the generator set is closed under
// taking aligned blocks of sigma-images and kappa-images; without closure the
// per-generator identities do not extend to the generated submonoid's iterates.
struct CommutationReport {
    std::vector<GeneratorIdentity> per_generator;
    bool closed = false;
    bool verdict = false;  // all identities equal AND closed
};

CommutationReport check_commute(const BlockSubstitution& kappa, const Morphism& sigma,
                                const std::vector<Word>& generators);

// kappa(sigma^n(w)) == sigma^n(kappa(w)).
bool check_commute_power(const BlockSubstitution& kappa, const Morphism& sigma, unsigned n,
                         const Word& w);

struct TransferReport {
    CommutationReport commutation;
    Word seed_block;
    std::size_t agreement_length = 0;
    bool verdict = false;
};

// Empirical fixed-point transfer: with kappa and sigma commuting on a closed
// generator set, kappa(seed) having seed as proper prefix, and seed a prefix of
// sigma's fixed point x, checks that the length-n prefix of x is fixed by the
// truncated kappa map. Throws HypothesisFailed naming the first violated
// hypothesis ("commutation", "seed-prefix" or "seed-in-fixed-point").
TransferReport fixed_point_transfer(const BlockSubstitution& kappa, const Morphism& sigma,
                                 const std::vector<Word>& generators, const Word& seed_block,
                                 std::size_t n);

}  // namespace blockwords
