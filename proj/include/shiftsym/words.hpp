#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "shiftsym/error.hpp"

namespace shiftsym {

using Letter = std::uint8_t;
using Letters = std::vector<Letter>;

// Ordered list of distinct symbols. Letters are addressed by dense index.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    static std::shared_ptr<const Alphabet> make(std::vector<std::string> symbols);
    // "ab" -> {a, b}; one symbol per character.
    static std::shared_ptr<const Alphabet> from_chars(std::string_view chars);
    // {"0", "1", ..., "n-1"}
    static std::shared_ptr<const Alphabet> numeric(std::size_t n);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbol(Letter i) const { return symbols_.at(i); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    Letter index_of(std::string_view symbol) const;
    bool contains(std::string_view symbol) const;
    bool single_char() const { return single_char_; }

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<std::string> symbols_;
    bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

class Word {
public:
    Word() = default;
    Word(AlphabetPtr alphabet, Letters letters);

    // Parses concatenated single-char symbols, or a comma-separated list.
    static Word parse(AlphabetPtr alphabet, std::string_view text);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Letters& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word subword(std::size_t pos, std::size_t len) const;
    std::string str() const;

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

private:
    AlphabetPtr alphabet_;
    Letters letters_;
};

std::string format_letters(const Alphabet& alphabet, const Letters& letters);

class Perm {
public:
    Perm() = default;
    Perm(AlphabetPtr alphabet, Letters images);

    static Perm identity(AlphabetPtr alphabet);
    // Accepts "()", "id", "(0 2 3 1)", "(03)(12)" (compact form needs one-char symbols).
    static Perm parse(AlphabetPtr alphabet, std::string_view text);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const Letters& images() const { return images_; }
    Letter operator()(Letter x) const { return images_[x]; }
    std::size_t size() const { return images_.size(); }

    bool is_identity() const;
    Perm inverse() const;
    // (this * o)(x) = this(o(x))
    Perm operator*(const Perm& o) const;
    Perm power(long k) const;

    // Canonical cycle notation, e.g. "(0 2 3 1)"; identity is "()".
    std::string str() const;
    // Space-free variant "(0231)" when every symbol is one character; identity is "id".
    std::string compact() const;

    bool operator==(const Perm& o) const { return images_ == o.images_; }
    bool operator<(const Perm& o) const { return images_ < o.images_; }

private:
    AlphabetPtr alphabet_;
    Letters images_;
};

Word reverse_word(const Word& w);
Word perm_apply(const Perm& alpha, const Word& w);
unsigned long perm_order(const Perm& alpha);

// All permutations of the alphabet in lexicographic order of image vectors.
std::vector<Perm> all_perms(const AlphabetPtr& alphabet);

// Sort by canonical cycle notation.
void sort_by_cycle_notation(std::vector<Perm>& perms);

}  // namespace shiftsym
