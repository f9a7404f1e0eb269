#include "blockwords/catalog.hpp"

namespace blockwords {

namespace {

Morphism make_morphism(const char* img0, const char* img1) {
    Alphabet a = Alphabet::binary();
    return Morphism(a, {Word::parse(img0, a), Word::parse(img1, a)});
}

BlockSubstitution make_block(std::size_t k,
                             std::initializer_list<std::pair<const char*, const char*>> rules) {
    Alphabet a = Alphabet::binary();
    std::map<Word, Word> images;
    for (const auto& [pat, img] : rules) images.emplace(Word::parse(pat, a), Word::parse(img, a));
    return BlockSubstitution(k, a, std::move(images));
}

std::vector<NamedObject> build_registry() {
    std::vector<NamedObject> reg;

    Morphism tm_morphism = make_morphism("01", "10");
    Morphism pell_morphism = make_morphism("001", "0");
    Morphism ex2_sigma = make_morphism("0001", "0");
    Morphism ex3_sigma = make_morphism("01", "0111");
    Morphism fibonacci = make_morphism("01", "0");

    BlockSubstitution kolakoski_kappa =
        make_block(2, {{"00", "10"}, {"01", "100"}, {"10", "110"}, {"11", "1100"}});
    BlockSubstitution tm_kappa =
        make_block(2, {{"00", "001"}, {"01", "010"}, {"10", "101"}, {"11", "110"}});
    BlockSubstitution pell_kappa = make_block(2, {{"00", "0010"}, {"01", "001"}, {"10", "010"}});
    BlockSubstitution pell_two_block =
        make_block(2, {{"00", "001001"}, {"01", "0010"}, {"10", "0001"}});
    BlockSubstitution ex2_kappa_sigma = make_block(3, {{"000", "000100010001"},
                                                       {"001", "000100010"},
                                                       {"010", "000100001"},
                                                       {"100", "000010001"}});
    BlockSubstitution ex2_kappa_prime = make_block(
        3, {{"000", "00010"}, {"001", "0001"}, {"010", "0010"}, {"100", "0010"}});
    BlockSubstitution ex3_kappa_sigma = make_block(2, {{"01", "010111"}, {"11", "01110111"}});

    auto add = [&](std::string name, ObjectKind kind, std::string desc, auto value) {
        reg.push_back({std::move(name), kind, std::move(desc), std::move(value)});
    };

    add("kolakoski-kappa", ObjectKind::BlockSubstitution,
        "Kolakoski two-block substitution", kolakoski_kappa);
    add("tm-kappa", ObjectKind::BlockSubstitution, "Thue-Morse two-block substitution", tm_kappa);
    add("tm-morphism", ObjectKind::Morphism, "Thue-Morse morphism", tm_morphism);
    add("pell-morphism", ObjectKind::Morphism, "Pell morphism", pell_morphism);
    add("pell-kappa", ObjectKind::BlockSubstitution,
        "two-block substitution commuting with the Pell morphism", pell_kappa);
    add("pell-two-block", ObjectKind::BlockSubstitution,
        "two-block substitution induced by the Pell morphism", pell_two_block);
    add("ex2-sigma", ObjectKind::Morphism, "morphism 0->0001, 1->0", ex2_sigma);
    add("ex2-kappa-sigma", ObjectKind::BlockSubstitution,
        "three-block substitution induced by ex2-sigma", ex2_kappa_sigma);
    add("ex2-kappa-prime", ObjectKind::BlockSubstitution,
        "non-trivial three-block conjugate of ex2-sigma", ex2_kappa_prime);
    add("ex3-sigma", ObjectKind::Morphism, "morphism 0->01, 1->0111", ex3_sigma);
    add("ex3-kappa-sigma", ObjectKind::BlockSubstitution,
        "two-block substitution induced by ex3-sigma", ex3_kappa_sigma);
    add("fibonacci", ObjectKind::Morphism, "Fibonacci morphism", fibonacci);

    const Alphabet bin = Alphabet::binary();
    add("tm-kappa-fixed-point", ObjectKind::GenerationScheme,
        "fixed point of tm-kappa starting 00, by truncated iteration from 001110",
        GenerationScheme(TruncatedBlockIteration{tm_kappa, Word::parse("001110", bin)}));
    add("tm-kappa-fixed-point-01", ObjectKind::GenerationScheme,
        "fixed point of tm-kappa starting 01",
        GenerationScheme(TruncatedBlockIteration{tm_kappa, Word::parse("0100", bin)}));
    add("tm-kappa-fixed-point-10", ObjectKind::GenerationScheme,
        "fixed point of tm-kappa starting 10",
        GenerationScheme(TruncatedBlockIteration{tm_kappa, Word::parse("1011", bin)}));
    add("tm-kappa-fixed-point-11", ObjectKind::GenerationScheme,
        "fixed point of tm-kappa starting 11",
        GenerationScheme(TruncatedBlockIteration{tm_kappa, Word::parse("1100", bin)}));
    add("tm-blockfix-recurrence", ObjectKind::GenerationScheme,
        "fixed point of tm-kappa starting 00, by index recurrences",
        GenerationScheme(Recurrence{RecurrenceKind::TmBlockfix}));
    add("thue-morse", ObjectKind::GenerationScheme, "Thue-Morse word, by index recurrences",
        GenerationScheme(Recurrence{RecurrenceKind::ThueMorse}));
    add("kolakoski-selfread", ObjectKind::GenerationScheme,
        "self-reading run-length sequence (leading 2-run by default)",
        GenerationScheme(SelfReading{1}));
    add("kolakoski-kappa-fixed-point", ObjectKind::GenerationScheme,
        "fixed point of kolakoski-kappa starting 11, by truncated iteration",
        GenerationScheme(TruncatedBlockIteration{kolakoski_kappa, Word::parse("11", bin)}));
    add("pell-word", ObjectKind::GenerationScheme, "fixed point of the Pell morphism",
        GenerationScheme(MorphismIteration{pell_morphism, 0}));

    return reg;
}

}  // namespace

const std::vector<NamedObject>& registry() {
    static const std::vector<NamedObject> reg = build_registry();
    return reg;
}

const NamedObject& lookup(const std::string& name) {
    for (const NamedObject& obj : registry()) {
        if (obj.name == name) return obj;
    }
    throw UnknownName(name);
}

}  // namespace blockwords
