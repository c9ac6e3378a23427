#include <random>

#include "doctest.h"
#include "gslab/error.hpp"
#include "gslab/presentation.hpp"

using namespace gslab;

TEST_CASE("parse trefoil and free groups")
{
    const Presentation t = parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1");
    CHECK(t.generators == std::vector<std::string>{"a", "b"});
    REQUIRE(t.relators.size() == 1);
    CHECK(format_word(t.relators[0], t.generators) == "a b a b^-1 a^-1 b^-1");
    CHECK_FALSE(t.aspherical);

    const Presentation f1 = parse_presentation("gens x\n");
    CHECK(f1.rank() == 1);
    CHECK(f1.relators.empty());
}

TEST_CASE("comments, powers and the aspherical flag")
{
    const Presentation p = parse_presentation("# comment\ngens x y  # trailing\nrel x^3 y^-2\nflag aspherical\n");
    CHECK(p.aspherical);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == Word({{0, 3}, {1, -2}}));
}

TEST_CASE("parse errors carry kind and location")
{
    try {
        parse_presentation("gens a a", "dup.grp");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ErrorKind::DuplicateGenerator);
        CHECK(e.line() == 1);
        CHECK(e.source() == "dup.grp");
    }
    try {
        parse_presentation("gens a b\nrel a c\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ErrorKind::UnknownGenerator);
        CHECK(e.line() == 2);
        CHECK(e.column() == 7);
    }
    CHECK_THROWS_AS(parse_presentation("gens a\nrel a^0\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens a\nfoo a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens a\nrel a^x\n"), ParseError);
}

TEST_CASE("free reduction")
{
    const Presentation f2 = Presentation::free_group(2);
    CHECK(free_reduce(parse_word("x1 x2 x2^-1 x1^-1", f2)).empty());
    CHECK(free_reduce(Word({{0, 2}, {0, -1}})) == Word::generator(0));
    const Word c = Word::commutator(Word::generator(0), Word::generator(1));
    CHECK(c == Word({{0, -1}, {1, -1}, {0, 1}, {1, 1}}));
    CHECK(free_reduce(c) == c);
}

TEST_CASE("free_reduce is idempotent and respects the group law")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> gen(0, 2), ex(-2, 2), len(0, 12);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> ls;
        for (int i = len(rng); i > 0; --i)
            ls.push_back({gen(rng), ex(rng)});
        const Word w(ls);
        const Word r = free_reduce(w);
        CHECK(free_reduce(r) == r);
        CHECK(free_reduce(w * w.inverse()).empty());
        CHECK(r.exponent_sums(3) == w.exponent_sums(3));
        for (std::size_t i = 0; i + 1 < r.size(); ++i)
            CHECK(r.letters()[i].gen != r.letters()[i + 1].gen);
    }
}

TEST_CASE("homomorphism parsing")
{
    const Presentation f1 = Presentation::free_group(1);
    const Presentation f2 = parse_presentation("gens x y");
    const Presentation tre = parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1");
    const GroupHom id = parse_hom("map x1 -> x1", f1, f1);
    CHECK(id.is_identity());

    const GroupHom h = parse_hom("source F2.grp\ntarget trefoil.grp\nmap x -> a\nmap y -> b\n", f2, tre);
    CHECK(h.images[0] == Word::generator(0));
    CHECK(h.images[1] == Word::generator(1));

    CHECK_THROWS_AS(parse_hom("map x -> q\nmap y -> a", f2, tre), ParseError);
    CHECK_THROWS_AS(parse_hom("map x -> a", f2, tre), ParseError);
    CHECK_THROWS_AS(parse_hom("map x -> a\nmap x -> b\nmap y -> a", f2, tre), ParseError);
}

TEST_CASE("homomorphism composition")
{
    const Presentation f2 = parse_presentation("gens x y");
    const GroupHom h = parse_hom("map x -> x x y x^-1 y^-1\nmap y -> y", f2, f2);
    const GroupHom g = parse_hom("map x -> y\nmap y -> x", f2, f2);
    const GroupHom gh = compose(g, h);
    const Word w = parse_word("x y^-1 x^2", f2);
    CHECK(gh.apply(w) == g.apply(h.apply(w)));
    CHECK(compose(GroupHom::identity(f2), h).images == h.images);
}

TEST_CASE("well-definedness up to a degree")
{
    const Presentation tre = parse_presentation("gens a b\nrel a b a b^-1 a^-1 b^-1");
    CHECK(hom_welldefined_upto(GroupHom::identity(tre), 5).certified);
    const GroupHom swap = parse_hom("map a -> b\nmap b -> a", tre, tre);
    CHECK(hom_welldefined_upto(swap, 4).certified);

    const Presentation z2 = parse_presentation("gens x\nrel x^2");
    const GroupHom bad = parse_hom("map x -> x1", z2, Presentation::free_group(1));
    const WellDefinedVerdict v = hom_welldefined_upto(bad, 2);
    CHECK_FALSE(v.certified);
    REQUIRE(v.failing_relator.has_value());
    CHECK(*v.failing_relator == 0);
}
