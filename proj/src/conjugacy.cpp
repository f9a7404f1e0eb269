#include "blockwords/conjugacy.hpp"

#include <set>
#include <stdexcept>

namespace blockwords {

namespace {

// Complete aligned k-blocks of w (any trailing remainder is ignored).
std::vector<Word> aligned_blocks(const Word& w, std::size_t k) {
    std::vector<Word> out;
    for (std::size_t i = 0; i + k <= w.size(); i += k) out.push_back(w.subword(i, k));
    return out;
}

}  // namespace

CommutationReport check_commute(const BlockSubstitution& kappa, const Morphism& sigma,
                                const std::vector<Word>& generators) {
    const std::size_t k = kappa.block_length();
    CommutationReport report;
    for (const Word& g : generators) {
        if (g.size() != k) throw std::invalid_argument("generators must have length k");
        Word sg = apply(sigma, g);
        if (sg.size() % k != 0) throw LengthNotDivisible(sg.size(), k);
        Word lhs = apply(kappa, sg);
        Word rhs = apply(sigma, kappa.image(g));
        report.per_generator.push_back({g, lhs, rhs, lhs == rhs});
    }

    std::set<Word> genset(generators.begin(), generators.end());
    report.closed = true;
    for (const Word& g : generators) {
        for (const Word& b : aligned_blocks(apply(sigma, g), k)) {
            if (!genset.count(b)) report.closed = false;
        }
        for (const Word& b : aligned_blocks(kappa.image(g), k)) {
            if (!kappa.defines(b)) report.closed = false;
        }
    }

    report.verdict = report.closed;
    for (const auto& row : report.per_generator) report.verdict = report.verdict && row.equal;
    return report;
}

bool check_commute_power(const BlockSubstitution& kappa, const Morphism& sigma, unsigned n,
                         const Word& w) {
    Morphism sn = power(sigma, n);
    Word lhs = apply(kappa, apply(sn, w));
    Word rhs = apply(sn, apply(kappa, w));
    return lhs == rhs;
}

TransferReport fixed_point_transfer(const BlockSubstitution& kappa, const Morphism& sigma,
                                 const std::vector<Word>& generators, const Word& seed_block,
                                 std::size_t n) {
    TransferReport out;
    out.commutation = check_commute(kappa, sigma, generators);
    out.seed_block = seed_block;
    if (!out.commutation.verdict) throw HypothesisFailed("commutation");

    const Word& img = kappa.image(seed_block);
    if (!(img.size() > seed_block.size() && img.starts_with(seed_block)))
        throw HypothesisFailed("seed-prefix");

    Symbol first = seed_block[0];
    const Word& fimg = sigma.image(first);
    if (fimg.size() < 2 || fimg[0] != first) throw HypothesisFailed("seed-in-fixed-point");
    Word x = generate_prefix(MorphismIteration{sigma, first}, n);
    if (!x.starts_with(seed_block)) throw HypothesisFailed("seed-in-fixed-point");

    Word y = apply_truncated(kappa, x);
    out.agreement_length = std::min(x.size(), y.size());
    out.verdict = x.prefix(out.agreement_length) == y.prefix(out.agreement_length);
    return out;
}

}  // namespace blockwords
