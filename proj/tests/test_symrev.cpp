#include <doctest.h>

#include "shiftsym/catalog.hpp"
#include "shiftsym/error.hpp"
#include "shiftsym/symrev.hpp"

using namespace shiftsym;

namespace {

Perm perm(const Substitution& s, const char* text) { return Perm::parse(s.alphabet(), text); }

std::vector<std::string> seed_map(const Substitution& s, const SeedAction& act) {
    std::vector<std::string> out;
    for (const auto& [a, b] : act.mapping)
        out.push_back(seed_str(*s.alphabet(), a) + "->" + seed_str(*s.alphabet(), b));
    return out;
}

}  // namespace

TEST_CASE("letter-exchange symmetry test") {
    auto tm = catalog_get("tm").rule;
    auto c = lem_symmetry_test(tm, perm(tm, "(ab)"));
    CHECK(c.accepted());
    CHECK(c.caveats.empty());

    auto rs = catalog_get("rs").rule;
    CHECK(lem_symmetry_test(rs, perm(rs, "(03)(12)")).accepted());
    CHECK_FALSE(lem_symmetry_test(rs, perm(rs, "(01)")).accepted());

    auto fr = catalog_get("flip-reversible").rule;
    auto bad = lem_symmetry_test(fr, perm(fr, "(ab)"));
    CHECK_FALSE(bad.accepted());
    CHECK(bad.witnesses == std::vector<std::string>{"bbaa", "aabb"});
}

TEST_CASE("letter-exchange reversor test") {
    auto rs = catalog_get("rs").rule;
    CHECK(lem_reversor_test(rs, perm(rs, "(0231)")).accepted());
    CHECK(lem_reversor_test(rs, perm(rs, "(0132)")).accepted());
    CHECK_FALSE(lem_reversor_test(rs, Perm::identity(rs.alphabet())).accepted());

    for (int n = 3; n <= 6; ++n) {
        auto s = catalog_get("cyclic-tm", {n}).rule;
        Letters neg(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) neg[static_cast<std::size_t>(i)] = static_cast<Letter>((n - i) % n);
        CHECK(lem_reversor_test(s, Perm(s.alphabet(), neg)).accepted());
    }

    auto nr = catalog_get("non-reversible").rule;
    auto id = lem_reversor_test(nr, Perm::identity(nr.alphabet()));
    CHECK_FALSE(id.accepted());
    CHECK(id.witnesses == std::vector<std::string>{"aaabaa", "aabaaa"});
    CHECK_FALSE(lem_reversor_test(nr, perm(nr, "(ab)")).accepted());
}

TEST_CASE("caveats when preconditions fail") {
    auto pd = catalog_get("pd").rule;
    auto c = lem_symmetry_test(pd, Perm::identity(pd.alphabet()));
    CHECK(c.accepted());
    REQUIRE(c.caveats.size() == 1);
    CHECK(c.caveats[0] == "conditions-not-met: not strongly injective");
    CHECK_THROWS_AS(lem_symmetry_test(catalog_get("fibonacci").rule, perm(catalog_get("fibonacci").rule, "(ab)")),
                    Error);
}

TEST_CASE("enumerate candidates") {
    auto tm = enumerate_lem_candidates(catalog_get("tm").rule);
    CHECK(tm.symmetries.size() == 2);
    CHECK(tm.reversors.size() == 2);

    CHECK(enumerate_lem_candidates(catalog_get("gtm", {1, 2}).rule).reversors.empty());
    CHECK(enumerate_lem_candidates(catalog_get("gtm", {2, 2}).rule).reversors.size() == 2);

    auto rs = enumerate_lem_candidates(catalog_get("rs").rule);
    REQUIRE(rs.reversors.size() == 2);
    CHECK(rs.reversors[0].compact() == "(0132)");
    CHECK(rs.reversors[1].compact() == "(0231)");
    REQUIRE(rs.symmetries.size() == 2);
    CHECK(rs.symmetries[1].compact() == "(03)(12)");
}

TEST_CASE("accepted candidates preserve the language") {
    for (const char* label : {"tm", "rs", "flip-reversible", "gtm:2,2", "cyclic-tm:4"}) {
        auto s = catalog_get_spec(label).rule;
        auto cands = enumerate_lem_candidates(s);
        for (std::size_t n = 1; n <= 12; ++n) {
            auto lang = language(s, n);
            for (const auto& p : cands.symmetries) {
                std::set<Word> img;
                for (const auto& w : lang) img.insert(perm_apply(p, w));
                CHECK(img == lang);
            }
            for (const auto& p : cands.reversors) {
                std::set<Word> img;
                for (const auto& w : lang) img.insert(perm_apply(p, reverse_word(w)));
                CHECK(img == lang);
            }
        }
        for (const auto& p : cands.reversors) CHECK(reversor_order(p) % 2 == 0);
    }
}

TEST_CASE("shifted reversor candidates") {
    auto pd = shifted_reversor_candidates(catalog_get("pd").rule);
    REQUIRE(pd.size() == 1);
    CHECK(pd[0].str() == "reversor S^1 R'");
    CHECK(shifted_reversor_candidates(catalog_get("non-reversible").rule).empty());
    CHECK(shifted_reversor_candidates(catalog_get("gtm", {1, 2}).rule).empty());
}

TEST_CASE("reflection invariance witnesses") {
    auto fr = reflection_invariance_witness(catalog_get("flip-reversible").rule, 4);
    REQUIRE(fr);
    CHECK(fr->str() == "bbaa");
    auto nr = reflection_invariance_witness(catalog_get("non-reversible").rule, 6);
    REQUIRE(nr);
    CHECK(nr->str() == "aaabaa");
    CHECK_FALSE(reflection_invariance_witness(catalog_get("pd").rule, 12));

    CHECK(reflection_verdict(catalog_get("tm").rule).kind == ReflectionVerdict::Kind::Palindromic);
    CHECK(reflection_verdict(catalog_get("rs").rule).kind == ReflectionVerdict::Kind::NotReflectionInvariant);
}

TEST_CASE("reversor order") {
    auto four = Alphabet::numeric(4);
    CHECK(reversor_order(Perm::identity(four)) == 2);
    CHECK(reversor_order(Perm::parse(four, "(0231)")) == 4);
    auto five = Alphabet::numeric(5);
    CHECK(reversor_order(Perm::parse(five, "(14)(23)")) == 2);
    auto three = Alphabet::numeric(3);
    CHECK(reversor_order(Perm::parse(three, "(012)")) == 6);
}

TEST_CASE("seed actions") {
    auto rs = catalog_get("rs").rule;
    auto act = seed_action(rs, SymCandidate::reversor(perm(rs, "(0231)")));
    CHECK(act.ok);
    CHECK(seed_map(rs, act) == std::vector<std::string>{"1|0->2|0", "1|3->1|0", "2|0->2|3", "2|3->1|3"});

    auto fr = catalog_get("flip-reversible").rule;
    CHECK(seed_map(fr, seed_action(fr, SymCandidate::reversor(perm(fr, "(ab)")))) ==
          std::vector<std::string>{"a|a->b|b", "a|b->a|b", "b|a->b|a", "b|b->a|a"});

    auto tm = catalog_get("tm").rule;
    CHECK(seed_map(tm, seed_action(tm, SymCandidate::reversor(Perm::identity(tm.alphabet())))) ==
          std::vector<std::string>{"a|a->a|a", "a|b->b|a", "b|a->a|b", "b|b->b|b"});

    auto nr = catalog_get("non-reversible").rule;
    auto esc = seed_action(nr, SymCandidate::reversor(perm(nr, "(ab)")));
    CHECK_FALSE(esc.ok);
    CHECK(esc.escaping_seed.has_value());
}

TEST_CASE("seed action of a reversor applied twice matches its square") {
    auto rs = catalog_get("rs").rule;
    for (const char* a : {"(0231)", "(0132)"}) {
        auto alpha = perm(rs, a);
        auto once = seed_action(rs, SymCandidate::reversor(alpha));
        std::map<Seed, Seed> m(once.mapping.begin(), once.mapping.end());
        auto sq = alpha * alpha;
        for (const auto& [from, to] : once.mapping) {
            Seed twice = m.at(to);
            CHECK(twice == Seed{sq(from.first), sq(from.second)});
        }
    }
}

TEST_CASE("block symmetry search") {
    auto pd = block_symmetry_search(catalog_get("pd").rule, 0, 10);
    REQUIRE(pd.size() == 1);
    CHECK(pd[0].single_position_form()->second.is_identity());

    auto tm = block_symmetry_search(catalog_get("tm").rule, 0, 10);
    CHECK(tm.size() == 2);

    auto fib = block_symmetry_search(catalog_get("fibonacci").rule, 1, 12);
    REQUIRE(fib.size() == 3);
    std::set<int> offsets;
    for (const auto& r : fib) {
        auto f = r.single_position_form();
        REQUIRE(f);
        CHECK(f->second.is_identity());
        offsets.insert(f->first);
    }
    CHECK(offsets == std::set<int>{-1, 0, 1});
}

TEST_CASE("radius-0 search agrees with the letter-exchange enumeration") {
    for (const char* label : {"tm", "rs", "flip-reversible", "gtm:2,3", "cyclic-tm:3"}) {
        auto s = catalog_get_spec(label).rule;
        std::set<std::string> search, lem;
        for (const auto& r : block_symmetry_search(s, 0, 10)) search.insert(r.single_position_form()->second.compact());
        for (const auto& p : enumerate_lem_candidates(s).symmetries) lem.insert(p.compact());
        CHECK(search == lem);
    }
}

TEST_CASE("asymptotic fixed pairs") {
    auto fr = catalog_get("flip-reversible").rule;
    auto ap = asymptotic_fixed_pairs(fr);
    CHECK(ap.right.size() == 2);
    CHECK(ap.left.size() == 2);
    auto pd = asymptotic_fixed_pairs(catalog_get("pd").rule);
    CHECK(pd.right.size() == 1);
}

TEST_CASE("local rules") {
    auto ab = Alphabet::from_chars("ab");
    LocalRule shift{ab, 1, 1, {}};
    for (Letter x = 0; x < 2; ++x)
        for (Letter y = 0; y < 2; ++y)
            for (Letter z = 0; z < 2; ++z) shift.table[{x, y, z}] = z;
    auto f = shift.single_position_form();
    REQUIRE(f);
    CHECK(f->first == 1);
    CHECK(Word(ab, shift.apply(Word::parse(ab, "abba").letters())).str() == "ba");
    LocalRule sum{ab, 0, 1, {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}}};
    CHECK_FALSE(sum.single_position_form());
}
