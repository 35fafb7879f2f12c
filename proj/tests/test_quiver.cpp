#include <doctest.h>

#include "nf/quiver.hpp"

using namespace nf;
using namespace nf::quiver;

TEST_CASE("parser accepts the three A_3 spellings") {
    auto with_rel = parse_quiver("vertices 3\na: 1->2\nb: 2->3\nrel a*b\n");
    CHECK(with_rel.quiver.vertex_count == 3);
    CHECK(with_rel.quiver.arrows.size() == 2);
    REQUIRE(with_rel.relations.size() == 1);
    CHECK(with_rel.relations[0].terms[0].path.arrows == std::vector<int>{0, 1});

    auto dotted = parse_quiver("vertices 3\na: 1->2\nb: 2->3\nrel a.b\n");
    CHECK(dotted.relations.size() == 1);
    CHECK(dotted.relations[0].terms[0].path.arrows == with_rel.relations[0].terms[0].path.arrows);

    auto no_rel = parse_quiver("vertices 3\na: 1 -> 2\nb: 2 -> 3\n");
    CHECK(no_rel.relations.empty());
    CHECK(no_rel.bound == 3);  // longest path + 1
}

TEST_CASE("parser reports errors with positions") {
    CHECK_THROWS_AS(parse_quiver("vertices 3\na: 1->2\nrel a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 3\na: 1->2\nrel c.a\n"), ParseError);
    CHECK_THROWS_AS(parse_quiver("a: 1->2\n"), ParseError);             // arrow before vertices
    CHECK_THROWS_AS(parse_quiver("vertices 2\na: 1->5\n"), ParseError);  // out of range
    CHECK_THROWS_AS(parse_quiver("vertices 2\na: 1->2\na: 2->1\n"), ParseError);  // dup name
    CHECK_THROWS_AS(parse_quiver("vertices 1\nx: 1->1\n"), ParseError);  // cycle, no bound
    CHECK_THROWS_AS(parse_quiver("nonsense line\n"), ParseError);
    // non-parallel relation terms
    CHECK_THROWS_AS(
        parse_quiver("vertices 4\na: 1->2\nb: 2->3\nc: 2->4\nd: 1->2\nrel a.b + d.c\n"),
        ParseError);
    try {
        parse_quiver("vertices 3\na: 1->2\nb: 2->3\nrel a\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("parser handles coefficients and explicit bound") {
    auto spec = parse_quiver(
        "vertices 3\n"
        "a: 1->2\n"
        "b: 2->3\n"
        "c: 1->2\n"
        "bound 4\n"
        "# a commuting-style relation\n"
        "rel a.b + -1/2*c.b\n");
    CHECK(spec.bound == 4);
    REQUIRE(spec.relations.size() == 1);
    REQUIRE(spec.relations[0].terms.size() == 2);
    CHECK(spec.relations[0].terms[0].coeff == Rational(1));
    CHECK(spec.relations[0].terms[1].coeff == Rational(-1, 2));
}

TEST_CASE("emit/parse round trip") {
    for (const char* text : {
             "vertices 3\na: 1->2\nb: 2->3\nrel a.b\n",
             "vertices 4\na: 1->2\nb: 2->3\nc: 2->4\nrel a.b\nrel 2/3*a.c\n",
             "vertices 1\nx: 1->1\nbound 3\nrel x.x\n",
         }) {
        auto spec = parse_quiver(text);
        auto again = parse_quiver(emit_quiver(spec));
        CHECK(emit_quiver(again) == emit_quiver(spec));
        CHECK(again.bound == spec.bound);
        CHECK(again.quiver.arrows.size() == spec.quiver.arrows.size());
        CHECK(again.relations.size() == spec.relations.size());
    }
}

TEST_CASE("path enumeration") {
    SUBCASE("A_3 without relations has six paths") {
        auto spec = parse_quiver("vertices 3\na: 1->2\nb: 2->3\n");
        auto paths = enumerate_paths(spec);
        REQUIRE(paths.size() == 6);
        CHECK(paths[0].label(spec.quiver) == "e1");
        CHECK(paths[3].label(spec.quiver) == "a");
        CHECK(paths[5].label(spec.quiver) == "a.b");
        for (const auto& p : paths) CHECK(p.composes(spec.quiver));
    }
    SUBCASE("single vertex") {
        auto spec = make_linear_An(1);
        auto paths = enumerate_paths(spec);
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].trivial());
    }
    SUBCASE("loop with bound 3") {
        auto spec = parse_quiver("vertices 1\nx: 1->1\nbound 3\nrel x.x\n");
        auto paths = enumerate_paths(spec);
        REQUIRE(paths.size() == 3);
        CHECK(paths[2].length() == 2);
    }
    SUBCASE("cap guard") {
        auto spec = parse_quiver("vertices 1\nx: 1->1\ny: 1->1\nbound 30\nrel x.x\n");
        CHECK_THROWS_AS(enumerate_paths(spec, 1000), PathEnumerationError);
    }
    SUBCASE("A_n path count is n(n+1)/2") {
        for (int n = 1; n <= 7; ++n)
            CHECK(enumerate_paths(make_linear_An(n)).size() ==
                  static_cast<std::size_t>(n * (n + 1) / 2));
    }
}

TEST_CASE("gentleness predicate") {
    CHECK(is_gentle(make_linear_An(5)).gentle);
    CHECK(is_gentle(parse_quiver("vertices 3\na: 1->2\nb: 2->3\nrel a.b\n")).gentle);

    auto three_out = is_gentle(
        parse_quiver("vertices 4\na: 1->2\nb: 1->3\nc: 1->4\n"));
    CHECK_FALSE(three_out.gentle);
    REQUIRE_FALSE(three_out.violations.empty());
    CHECK(three_out.violations[0].find("at most 2 arrows start") != std::string::npos);

    // non-monomial relation is not gentle
    auto nonmono = is_gentle(parse_quiver(
        "vertices 4\na: 1->2\nb: 2->3\nc: 1->2\nrel a.b + c.b\n"));
    CHECK_FALSE(nonmono.gentle);

    // two surviving continuations of one arrow
    auto fan = is_gentle(parse_quiver("vertices 4\na: 1->2\nb: 2->3\nc: 2->4\n"));
    CHECK_FALSE(fan.gentle);

    for (auto segments : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3, 3}, {1, 2, 3}})
        CHECK(is_gentle(make_cyclic_family(segments)).gentle);
}

TEST_CASE("admissibility validation") {
    CHECK(validate_admissible(make_linear_An(4)));
    // free loop is infinite dimensional: x^bound survives
    CHECK_FALSE(validate_admissible(parse_quiver("vertices 1\nx: 1->1\nbound 3\n")));
    // 2-cycle with both junction relations, checked above its natural bound
    auto c11 = parse_quiver("vertices 2\na: 1->2\nb: 2->1\nbound 3\nrel a.b\nrel b.a\n");
    CHECK(validate_admissible(c11));
}

TEST_CASE("built-in families") {
    SUBCASE("linear A_n") {
        CHECK(make_linear_An(1).quiver.vertex_count == 1);
        CHECK(make_linear_An(3).quiver.arrows.size() == 2);
        CHECK(make_linear_An(5).quiver.vertex_count == 5);
        CHECK(make_linear_An(5).quiver.arrows.size() == 4);
        CHECK_THROWS_AS(make_linear_An(0), std::invalid_argument);
    }
    SUBCASE("cyclic families") {
        auto c = make_cyclic_family({1, 1});
        CHECK(c.quiver.vertex_count == 2);
        CHECK(c.quiver.arrows.size() == 2);
        CHECK(c.relations.size() == 2);

        auto c33 = make_cyclic_family({3, 3});
        CHECK(c33.quiver.vertex_count == 6);
        CHECK(c33.relations.size() == 2);
        CHECK(c33.bound == 4);

        auto c2 = make_cyclic_family({2});
        CHECK(c2.quiver.vertex_count == 2);
        CHECK(c2.relations.size() == 1);

        CHECK_THROWS_AS(make_cyclic_family({}), std::invalid_argument);
        CHECK_THROWS_AS(make_cyclic_family({0}), std::invalid_argument);
    }
    SUBCASE("gentle lemma quivers") {
        auto mid = make_gentle_lemma_family(GentleLemmaKind::MidRelation, {2, 2, 1, 1});
        CHECK(mid.quiver.vertex_count == 5);
        CHECK(mid.quiver.arrows.size() == 4);
        CHECK(mid.relations.size() == 1);
        CHECK(is_gentle(mid).gentle);

        auto inb = make_gentle_lemma_family(GentleLemmaKind::InBranch, {1, 1, 1, 1});
        CHECK(inb.quiver.vertex_count == 4);
        CHECK(inb.relations.size() == 1);
        CHECK(is_gentle(inb).gentle);

        auto cross = make_gentle_lemma_family(GentleLemmaKind::Crossing, {1, 1, 1, 1});
        CHECK(cross.quiver.vertex_count == 5);
        CHECK(cross.quiver.arrows.size() == 4);
        CHECK(cross.relations.size() == 2);
        CHECK(is_gentle(cross).gentle);

        CHECK_THROWS_AS(make_gentle_lemma_family(GentleLemmaKind::MidRelation, {0, 1, 1, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("structural validation") {
    BoundQuiverSpec bad;
    bad.quiver.vertex_count = 2;
    bad.quiver.arrows.push_back(Arrow{0, 0, 5, "a"});
    CHECK_THROWS_AS(bad.check_valid(), std::invalid_argument);

    BoundQuiverSpec low_bound = make_linear_An(2);
    low_bound.bound = 1;
    CHECK_THROWS_AS(low_bound.check_valid(), std::invalid_argument);
}
