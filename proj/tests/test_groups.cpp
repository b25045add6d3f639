#include "doctest.h"

#include <charmoments/errors.hpp>
#include <charmoments/groups.hpp>

#include "oracles.hpp"

using namespace charmoments;

TEST_CASE("free group reduces words") {
    const auto g = make_free_group(2);
    const auto a = g->generator(0), b = g->generator(1);
    const auto ab = g->multiply(a, b);
    CHECK(g->multiply(ab, g->invert(b)) == a);
    CHECK(g->multiply(g->invert(a), a) == g->identity());
    CHECK(g->cayley_tree_degree() == 4);
    CHECK(g->defining_relations().empty());
    CHECK(g->letters().size() == 4);
}

TEST_CASE("abelian group collects exponents") {
    const auto g = make_free_abelian(2);
    const auto a = g->generator(0), b = g->generator(1);
    CHECK(g->multiply(a, b) == g->multiply(b, a));
    CHECK(g->multiply(a, g->invert(a)) == g->identity());
    // commutators are the defining relations
    CHECK(g->defining_relations().size() == 1);
    CHECK(g->evaluate_word({1, 2, -1, -2}) == g->identity());
}

TEST_CASE("cyclic group wraps") {
    const auto g = make_cyclic(3);
    const auto a = g->generator(0);
    CHECK(g->multiply(g->multiply(a, a), a) == g->identity());
    CHECK(g->invert(a) == g->multiply(a, a));
    CHECK(g->evaluate_word({1, 1, 1}) == g->identity());
}

TEST_CASE("walk moments of the free group match brute-force enumeration") {
    const auto g = make_free_group(2);
    const auto oracle = oracles::walk_moments_bruteforce(*g, 8);
    const auto seq = group_moment_sequence(*g, 8);
    CHECK(seq.values == oracle);
    CHECK(seq.values[2] == 4);
    CHECK(seq.values[4] == 28);
}

TEST_CASE("radial recursion and element walk agree on the free group") {
    // same group through the generic route: strip the tree shortcut by
    // walking with explicitly supplied letters
    const auto g = make_free_group(2);
    const auto direct = group_moment_sequence(*g, 10);
    const auto generic = group_moment_sequence(*g, 10, g->letters(), {}, "free:2");
    CHECK(direct.values == generic.values);
}

TEST_CASE("lattice walk moments are squared central binomials") {
    const auto g = make_free_abelian(2);
    const auto seq = group_moment_sequence(*g, 12);
    for (int k = 0; k <= 6; ++k) {
        const BigInt cb = oracles::binom(2 * k, k);
        CHECK(seq.values[2 * k] == cb * cb);
        if (k > 0) CHECK(seq.values[2 * k - 1] == 0);
    }
}

TEST_CASE("one-dimensional lattice walk moments are central binomials") {
    const auto seq = group_moment_sequence(*make_free_abelian(1), 12);
    for (int k = 0; k <= 6; ++k)
        CHECK(seq.values[2 * k] == oracles::binom(2 * k, k));
}

TEST_CASE("finite groups match the dense transfer-matrix oracle") {
    const auto klein = oracles::klein_four();
    const auto g = make_finite_table_group(klein, "klein");
    const auto seq = group_moment_sequence(*g, 10);
    CHECK(seq.values == oracles::walk_moments_matrix(klein, 10));
    CHECK(seq.values[4] == 128);

    const auto c3 = parse_group_preset("cyclic:3");
    const auto brute = oracles::walk_moments_bruteforce(*c3, 9);
    CHECK(group_moment_sequence(*c3, 9).values == brute);
}

TEST_CASE("direct product agrees with the hand-built table") {
    const auto product = parse_group_preset("product:cyclic:2+cyclic:2");
    const auto via_table = oracles::walk_moments_matrix(oracles::klein_four(), 12);
    CHECK(group_moment_sequence(*product, 12).values == via_table);
}

TEST_CASE("free products walk like their brute force") {
    const auto inf_dihedral = parse_group_preset("freeprod:2,2");
    CHECK(group_moment_sequence(*inf_dihedral, 8).values ==
          oracles::walk_moments_bruteforce(*inf_dihedral, 8));
    const auto modular = parse_group_preset("freeprod:2,3");
    CHECK(group_moment_sequence(*modular, 8).values ==
          oracles::walk_moments_bruteforce(*modular, 8));
    // all-Z free product is the free group again
    const auto f2 = parse_group_preset("freeprod:0,0");
    CHECK(f2->cayley_tree_degree() == 4);
    CHECK(group_moment_sequence(*f2, 8).values ==
          group_moment_sequence(*make_free_group(2), 8).values);
}

TEST_CASE("presets parse and reject") {
    CHECK(parse_group_preset("free:3")->generator_count() == 3);
    CHECK(parse_group_preset("abelian:1")->generator_count() == 1);
    CHECK_THROWS_AS(parse_group_preset("free"), InvalidInput);
    CHECK_THROWS_AS(parse_group_preset("free:x"), InvalidInput);
    CHECK_THROWS_AS(parse_group_preset("free:-1"), InvalidInput);
    CHECK_THROWS_AS(parse_group_preset("banana:2"), InvalidInput);
    CHECK_THROWS_AS(parse_group_preset("cyclic:0"), InvalidInput);
    CHECK_THROWS_AS(parse_group_preset("product:free:2"), InvalidInput);
}

TEST_CASE("cayley table validation") {
    auto t = oracles::klein_four();
    CHECK_NOTHROW(t.validate());

    auto bad = t;
    bad.table[1][1] = 1;  // breaks the Latin square
    CHECK_THROWS_AS(bad.validate(), InvalidInput);

    bad = t;
    bad.identity = 1;
    CHECK_THROWS_AS(bad.validate(), InvalidInput);

    bad = t;
    bad.generators = {1};  // subgroup of order 2 only
    CHECK_THROWS_AS(bad.validate(), InvalidInput);

    bad = t;
    bad.table.pop_back();
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("memory budget stops the walk with the attained order") {
    DpLimits tiny;
    tiny.memory_budget_bytes = 2000;
    const auto g = parse_group_preset("freeprod:2,3");
    try {
        group_moment_sequence(*g, 30, tiny);
        FAIL("expected ResourceError");
    } catch (const ResourceError& e) {
        CHECK(e.attained_k >= 0);
        CHECK(e.attained_k < 30);
    }
}

TEST_CASE("compare_dominance reports the first strict index") {
    MomentSequence a{"a", {1, 0, 4, 0, 28}};
    MomentSequence b{"b", {1, 0, 4, 0, 36}};
    const auto r = compare_dominance(a, b);
    CHECK(r.monotone);
    CHECK(r.strict_found);
    CHECK(r.first_strict == 4);

    const auto eq = compare_dominance(a, a);
    CHECK(eq.monotone);
    CHECK_FALSE(eq.strict_found);
    CHECK(eq.first_strict == -1);

    const auto rev = compare_dominance(b, a);
    CHECK_FALSE(rev.monotone);
}

TEST_CASE("push-forward along abelianization") {
    const auto free2 = make_free_group(2);
    const auto z2 = make_free_abelian(2);
    const auto report = push_forward_check(*free2, *z2, {{1}, {2}}, 10);
    CHECK(report.monotone);
    CHECK(report.first_strict == 4);
    CHECK(report.source.values[4] == 28);
    CHECK(report.target.values[4] == 36);
}

TEST_CASE("push-forward rejects non-homomorphisms") {
    const auto z2 = make_free_abelian(2);
    const auto free2 = make_free_group(2);
    // generators of Z^2 commute, their images must too
    CHECK_THROWS_AS(push_forward_check(*z2, *free2, {{1}, {2}}, 6), InvalidInput);
    // wrong image count
    CHECK_THROWS_AS(push_forward_check(*free2, *z2, {{1}}, 6), InvalidInput);
    // image referencing a missing target generator
    CHECK_THROWS_AS(push_forward_check(*free2, *z2, {{1}, {5}}, 6), InvalidInput);
}

TEST_CASE("push-forward accepts quotient maps onto finite groups") {
    const auto free2 = make_free_group(2);
    const auto klein = parse_group_preset("product:cyclic:2+cyclic:2");
    const auto report = push_forward_check(*free2, *klein, {{1}, {2}}, 10);
    CHECK(report.monotone);
    CHECK(report.strict_found);
}
