#include "shiftsym/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace shiftsym {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2) throw Error("alphabet needs at least two symbols");
    if (symbols_.size() > 255) throw Error("alphabet too large");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error("empty alphabet symbol");
        if (s.find_first_of(",() ;") != std::string::npos)
            throw Error("alphabet symbol contains a reserved character: " + s);
        if (!seen.insert(s).second) throw Error("duplicate alphabet symbol: " + s);
        if (s.size() != 1) single_char_ = false;
    }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

std::shared_ptr<const Alphabet> Alphabet::from_chars(std::string_view chars) {
    std::vector<std::string> s;
    for (char c : chars) s.emplace_back(1, c);
    return make(std::move(s));
}

std::shared_ptr<const Alphabet> Alphabet::numeric(std::size_t n) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(std::to_string(i));
    return make(std::move(s));
}

Letter Alphabet::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol) return static_cast<Letter>(i);
    throw Error("symbol not in alphabet: " + std::string(symbol));
}

bool Alphabet::contains(std::string_view symbol) const {
    return std::find(symbols_.begin(), symbols_.end(), symbol) != symbols_.end();
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

Word::Word(AlphabetPtr alphabet, Letters letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw Error("word without alphabet");
    for (Letter x : letters_)
        if (x >= alphabet_->size()) throw Error("letter index out of range");
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
    Letters out;
    if (text.find(',') != std::string_view::npos || !alphabet->single_char()) {
        std::size_t start = 0;
        while (start <= text.size() && !text.empty()) {
            auto end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            out.push_back(alphabet->index_of(text.substr(start, end - start)));
            start = end + 1;
        }
    } else {
        for (char c : text) out.push_back(alphabet->index_of(std::string_view(&c, 1)));
    }
    return Word(std::move(alphabet), std::move(out));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) throw Error("subword out of range");
    return Word(alphabet_, Letters(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::string format_letters(const Alphabet& alphabet, const Letters& letters) {
    std::string out;
    bool sep = !alphabet.single_char();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (sep && i) out += ',';
        out += alphabet.symbol(letters[i]);
    }
    return out;
}

std::string Word::str() const { return alphabet_ ? format_letters(*alphabet_, letters_) : ""; }

Perm::Perm(AlphabetPtr alphabet, Letters images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (!alphabet_ || images_.size() != alphabet_->size())
        throw Error("permutation size does not match alphabet");
    std::vector<bool> hit(images_.size(), false);
    for (Letter x : images_) {
        if (x >= images_.size() || hit[x]) throw Error("images do not form a bijection");
        hit[x] = true;
    }
}

Perm Perm::identity(AlphabetPtr alphabet) {
    Letters id(alphabet->size());
    std::iota(id.begin(), id.end(), 0);
    return Perm(std::move(alphabet), std::move(id));
}

Perm Perm::parse(AlphabetPtr alphabet, std::string_view text) {
    Letters img(alphabet->size());
    std::iota(img.begin(), img.end(), 0);
    std::string t;
    for (char c : text)
        if (c != '\t' && c != '\n') t += c;
    if (t == "id" || t.empty()) return Perm(alphabet, img);
    std::size_t i = 0;
    std::vector<bool> used(img.size(), false);
    while (i < t.size()) {
        if (t[i] == ' ') { ++i; continue; }
        if (t[i] != '(') throw Error("bad cycle notation: " + std::string(text));
        auto close = t.find(')', i);
        if (close == std::string::npos) throw Error("unbalanced cycle notation");
        std::string body = t.substr(i + 1, close - i - 1);
        std::vector<Letter> cyc;
        if (body.find(' ') != std::string::npos || body.find(',') != std::string::npos) {
            std::string cur;
            for (char c : body + " ") {
                if (c == ' ' || c == ',') {
                    if (!cur.empty()) cyc.push_back(alphabet->index_of(cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
        } else if (!body.empty()) {
            if (alphabet->contains(body) && !alphabet->single_char()) {
                cyc.push_back(alphabet->index_of(body));
            } else {
                for (char c : body) cyc.push_back(alphabet->index_of(std::string(1, c)));
            }
        }
        for (Letter x : cyc) {
            if (used[x]) throw Error("letter repeated in cycle notation");
            used[x] = true;
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
        i = close + 1;
    }
    return Perm(std::move(alphabet), std::move(img));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    Letters inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Letter>(i);
    return Perm(alphabet_, std::move(inv));
}

Perm Perm::operator*(const Perm& o) const {
    if (images_.size() != o.images_.size()) throw Error("alphabet mismatch");
    Letters out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[o.images_[i]];
    return Perm(alphabet_, std::move(out));
}

Perm Perm::power(long k) const {
    Perm base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Perm out = identity(alphabet_);
    while (e) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

static std::string cycles(const Perm& p, bool spaced) {
    const auto& a = *p.alphabet();
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p(static_cast<Letter>(s)) == s) continue;
        out += '(';
        Letter x = static_cast<Letter>(s);
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first && spaced) out += ' ';
            out += a.symbol(x);
            first = false;
            x = p(x);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::string Perm::str() const { return cycles(*this, true); }

std::string Perm::compact() const { return is_identity() ? "id" : cycles(*this, !alphabet_->single_char()); }

Word reverse_word(const Word& w) {
    Letters r(w.letters().rbegin(), w.letters().rend());
    return Word(w.alphabet(), std::move(r));
}

Word perm_apply(const Perm& alpha, const Word& w) {
    if (!same_alphabet(alpha.alphabet(), w.alphabet())) throw Error("alphabet mismatch");
    Letters out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = alpha(w[i]);
    return Word(w.alphabet(), std::move(out));
}

unsigned long perm_order(const Perm& alpha) {
    unsigned long order = 1;
    std::vector<bool> seen(alpha.size(), false);
    for (std::size_t s = 0; s < alpha.size(); ++s) {
        if (seen[s]) continue;
        unsigned long len = 0;
        Letter x = static_cast<Letter>(s);
        while (!seen[x]) {
            seen[x] = true;
            x = alpha(x);
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

std::vector<Perm> all_perms(const AlphabetPtr& alphabet) {
    Letters img(alphabet->size());
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(alphabet, img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

void sort_by_cycle_notation(std::vector<Perm>& perms) {
    std::sort(perms.begin(), perms.end(),
              [](const Perm& a, const Perm& b) { return a.str() < b.str(); });
}

}  // namespace shiftsym
