#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftsym/certificate.hpp"
#include "shiftsym/subst.hpp"

namespace shiftsym {

// Sliding block map with left radius `left` and right radius `right`.
struct LocalRule {
    AlphabetPtr alphabet;
    int left = 0;
    int right = 0;
    std::map<Letters, Letter> table;

    int radius() const { return std::max(left, right); }
    // Image of a word of length n: length n - left - right; throws on a window missing from the table.
    Letters apply(const Letters& w) const;
    // If the output depends on one window position through a permutation, returns (offset, perm).
    std::optional<std::pair<int, Perm>> single_position_form() const;
    std::string str() const;
    bool operator==(const LocalRule& o) const { return left == o.left && right == o.right && table == o.table; }
};

enum class Reflection { R, RPrime };

struct SymCandidate {
    enum class Kind { Symmetry, Reversor } kind = Kind::Symmetry;
    long shift_power = 0;
    std::optional<Perm> lem;
    std::optional<LocalRule> block;
    Reflection reflection = Reflection::RPrime;

    static SymCandidate symmetry(const Perm& alpha, long shift = 0);
    static SymCandidate reversor(const Perm& alpha, long shift = 0, Reflection refl = Reflection::RPrime);
    std::string str() const;
};

// Image of a finite window under the candidate (shifts are invisible on finite words).
Word candidate_word_action(const SymCandidate& c, const Word& w);

struct LemOptions {
    std::size_t word_witness_max = 12;  // search bound for a concrete illegal-image witness
};

// Commutation with theta^{c!} checked exactly on the monoid of column-map compositions.
Certificate lem_symmetry_test(const Substitution& s, const Perm& alpha, LemOptions opt = {});
Certificate lem_reversor_test(const Substitution& s, const Perm& alpha, LemOptions opt = {});

struct LemCandidates {
    std::vector<Perm> symmetries;
    std::vector<Perm> reversors;
};

LemCandidates enumerate_lem_candidates(const Substitution& s);

// Reversors S^m F_alpha R' with |m| <= max_shift that map every fixed point (window of
// half-length >= window) onto a fixed point. Finite-level necessary condition.
std::vector<SymCandidate> shifted_reversor_candidates(const Substitution& s, long max_shift = 4,
                                                      std::size_t window = 512);

std::optional<Word> reflection_invariance_witness(const Substitution& s, std::size_t n_max);

struct ReflectionVerdict {
    enum class Kind { Palindromic, NotReflectionInvariant, Unknown } kind = Kind::Unknown;
    std::optional<PalindromicDecomposition> decomposition;
    std::optional<Word> witness;
    std::size_t checked_up_to = 0;
    std::string str() const;
};

ReflectionVerdict reflection_verdict(const Substitution& s, std::size_t n_max = 12);

unsigned long reversor_order(const Perm& alpha);

using Seed = std::pair<Letter, Letter>;

struct SeedAction {
    bool ok = true;
    std::vector<std::pair<Seed, Seed>> mapping;  // seed -> image seed, in seed order
    std::optional<Seed> escaping_seed;          // a seed whose image is not a legal seed
};

SeedAction seed_action(const Substitution& s, const SymCandidate& c);

// Radius-k sliding maps that send L(n) onto L(n-2k); for k = 0 this means bijectively.
std::vector<LocalRule> block_symmetry_search(const Substitution& s, int k, std::size_t n,
                                             std::size_t assignment_cap = (1u << 22));

struct AsymptoticPairs {
    std::vector<std::pair<Seed, Seed>> right;
    std::vector<std::pair<Seed, Seed>> left;
};

AsymptoticPairs asymptotic_fixed_pairs(const Substitution& s);

// Three-word argument for non-strongly-injective binary rules: the legal 3-words and whether
// every surviving radius-1 symmetry rule is a letter map composed with a shift.
struct ThreeWordCheck {
    std::set<Word> legal_three_words;
    bool matches_expected = false;
    bool radius_one_collapses = false;
    std::size_t radius_one_rules = 0;
};

ThreeWordCheck three_word_check(const Substitution& s, const std::set<std::string>& expected,
                                std::size_t depth = 12);

}  // namespace shiftsym
