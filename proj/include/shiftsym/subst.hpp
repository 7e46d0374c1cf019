#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftsym/words.hpp"

namespace shiftsym {

using Matrix = std::vector<std::vector<long long>>;
using WordSet = std::set<Letters>;

class Substitution {
public:
    Substitution() = default;
    Substitution(AlphabetPtr alphabet, std::vector<Letters> rules);
    // rules given as text words, in alphabet order
    static Substitution from_strings(AlphabetPtr alphabet, const std::vector<std::string>& rules);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t size() const { return rules_.size(); }
    const Letters& rule(Letter a) const { return rules_.at(a); }
    const std::vector<Letters>& rules() const { return rules_; }
    Word image(Letter a) const { return Word(alphabet_, rules_.at(a)); }

    bool constant_length() const;
    // Common rule length; throws when not constant length.
    std::size_t length() const;
    std::size_t min_length() const;

    Substitution power(unsigned k) const;

    bool operator==(const Substitution& o) const {
        return same_alphabet(alphabet_, o.alphabet_) && rules_ == o.rules_;
    }

private:
    AlphabetPtr alphabet_;
    std::vector<Letters> rules_;
};

Letters apply_letters(const Substitution& s, const Letters& w, unsigned k = 1);
Word substitute(const Substitution& s, const Word& w, unsigned k);

Matrix substitution_matrix(const Substitution& s);
Matrix matrix_multiply(const Matrix& a, const Matrix& b);
bool is_primitive(const Substitution& s);

// Legal words of length 2, as the least fixed point of substitute-and-subword.
WordSet legal_two_words(const Substitution& s);
WordSet language_letters(const Substitution& s, std::size_t n);
std::set<Word> language(const Substitution& s, std::size_t n);
bool is_legal(const Substitution& s, const Letters& w);

// Column maps of a constant-length substitution: column j sends a to rule(a)[j].
std::vector<Letters> column_maps(const Substitution& s);

struct ConstantLengthProfile {
    std::size_t length = 0;
    std::size_t height = 0;
    std::size_t column_number = 0;
    bool bijective = false;
    bool has_coincidence = false;
    std::vector<std::size_t> coincidence_positions;  // 1-based
};

std::size_t column_number(const Substitution& s, std::size_t cap = 1000000);
std::size_t height(const Substitution& s);
ConstantLengthProfile constant_length_profile(const Substitution& s);

struct SeedSet {
    unsigned power = 1;
    std::vector<std::pair<Letter, Letter>> seeds;  // (left, right) = x_{-1} | x_0
};

// Smallest m with the first- and last-letter maps of the m-th power idempotent.
unsigned stabilizing_power(const Substitution& s);
SeedSet legal_seeds(const Substitution& s);
std::string seed_str(const Alphabet& a, std::pair<Letter, Letter> seed);

Substitution reverse_substitution(const Substitution& s);

struct PalindromicDecomposition {
    enum class Form { Left, Right } form = Form::Left;
    unsigned power = 1;     // decomposition found for this power of the rule
    // >0: that many one-letter conjugations moving a shared first letter to the back;
    // <0: shared last letter to the front
    long conjugation = 0;
    Word p;
    std::vector<Word> q;
};

struct PalindromicOptions {
    unsigned max_power = 3;
    bool conjugates = true;
};

std::optional<PalindromicDecomposition> palindromic_criterion(const Substitution& s,
                                                              PalindromicOptions opt = {});

bool strongly_injective(const Substitution& s);

// Heuristic: false when every legal word of length 24 is periodic with one period <= 12.
bool looks_aperiodic(const Substitution& s);

}  // namespace shiftsym
