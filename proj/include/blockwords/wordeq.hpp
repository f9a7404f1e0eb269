#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockwords/substitution.hpp"
#include "blockwords/word.hpp"

namespace blockwords {

// One unknown of an implicit word-equation system, tagged with the block whose
// kappa-image it stands for.
struct Unknown {
    char name;
    Word block;
};

// The system sigma(u_i) = u_{j1} ... u_{jr}, one equation per unknown, where
// each right-hand side is a sequence of unknowns (indices into `unknowns`).
// A block substitution kappa with kappa(block_i) = value_i commutes with sigma
// on the blocks exactly when the values solve the system.
struct WordEquationSystem {
    Morphism sigma;
    std::size_t k = 2;
    std::vector<Unknown> unknowns;
    std::vector<std::vector<std::size_t>> rhs;  // per unknown, in declaration order

    std::optional<std::size_t> index_of(char name) const;
    std::string equation_string(std::size_t i) const;  // e.g. "sigma(a) = acb"
};

// Nonempty words assigned to the unknowns, in declaration order.
struct Assignment {
    std::vector<Word> values;

    bool operator==(const Assignment& o) const { return values == o.values; }
};

// Read the system off sigma: the equation for block B has as right-hand side
// the unknowns of the aligned k-blocks of sigma(B). Unknown names follow the
// two-block convention 00/01/10/11 -> a/b/c/d when k = 2, declaration order
// otherwise; pass `names` to override.
WordEquationSystem derive_system(const Morphism& sigma, std::size_t k,
                                 const std::vector<Word>& blocks,
                                 const std::optional<std::string>& names = std::nullopt);

// True iff every equation holds literally under the assignment.
bool check_solution(const WordEquationSystem& sys, const Assignment& a);

// Exhaustive search for solutions with |first unknown| <= max_first_len and
// the other unknowns bounded by `other_cap` (default 2*max_first_len + k).
// Depth-first over letters with equation-prefix propagation; the returned list
// is sorted length-lexicographically by concatenated values and deduplicated.
std::vector<Assignment> enumerate_solutions(const WordEquationSystem& sys,
                                            std::size_t max_first_len,
                                            std::optional<std::size_t> other_cap = std::nullopt);

// The linear letter-count identities implied by the system. Variables are
// N_l(u) for each unknown u and letter l; each row is a homogeneous identity
// (LHS counts of sigma(u) minus RHS counts), stored as coefficients over the
// variable index u * alphabet_size + l.
struct ParikhSystem {
    std::size_t unknown_count = 0;
    std::size_t alphabet_size = 0;
    std::vector<std::vector<long long>> rows;
    std::vector<std::string> identities;  // printable, e.g. "2*N0(a) + N1(a) = N0(a) + N0(c) + N0(b)"

    // counts[u][l] = number of occurrences of letter l in the value of unknown u.
    bool satisfied(const std::vector<std::vector<long long>>& counts) const;
};

ParikhSystem abelianize(const WordEquationSystem& sys);

bool check_parikh(const ParikhSystem& ps, const Assignment& a);

std::vector<std::vector<long long>> letter_counts(const WordEquationSystem& sys,
                                                  const Assignment& a);

// Bounded integer completion: entries of `partial` that are negative are free;
// every completion with all free entries in 0..bound satisfying the system is
// returned.
std::vector<std::vector<std::vector<long long>>> parikh_completions(
    const ParikhSystem& ps, std::vector<std::vector<long long>> partial, long long bound);

// The assignment u -> base(stable^n(block(u))). `stable` must be block-stable.
// With the identity base this is the family generated by powers of `stable`.
Assignment solution_family(const WordEquationSystem& sys, const BlockSubstitution& base,
                           const BlockSubstitution& stable, unsigned n);

// The block substitution block(u) -> value(u) defined by an assignment.
BlockSubstitution assignment_to_block_sub(const WordEquationSystem& sys, const Assignment& a);

// System file format:
//   sigma: 0->001, 1->0; k=2; blocks=00,01,10
//   sigma(a)=acb        (equation lines optional; derived when absent)
WordEquationSystem parse_system_file(const std::string& text);

std::string format_system(const WordEquationSystem& sys);

}  // namespace blockwords
