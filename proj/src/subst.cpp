#include "shiftsym/subst.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace shiftsym {

Substitution::Substitution(AlphabetPtr alphabet, std::vector<Letters> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    if (!alphabet_) throw Error("substitution without alphabet");
    if (rules_.size() != alphabet_->size()) throw Error("need exactly one rule per letter");
    for (const auto& r : rules_) {
        if (r.empty()) throw Error("empty rule word");
        for (Letter x : r)
            if (x >= alphabet_->size()) throw Error("rule letter out of range");
    }
}

Substitution Substitution::from_strings(AlphabetPtr alphabet, const std::vector<std::string>& rules) {
    std::vector<Letters> r;
    for (const auto& t : rules) r.push_back(Word::parse(alphabet, t).letters());
    return Substitution(std::move(alphabet), std::move(r));
}

bool Substitution::constant_length() const {
    for (const auto& r : rules_)
        if (r.size() != rules_[0].size()) return false;
    return true;
}

std::size_t Substitution::length() const {
    if (!constant_length()) throw Error("substitution is not of constant length");
    return rules_[0].size();
}

std::size_t Substitution::min_length() const {
    std::size_t m = rules_[0].size();
    for (const auto& r : rules_) m = std::min(m, r.size());
    return m;
}

Substitution Substitution::power(unsigned k) const {
    std::vector<Letters> r;
    for (std::size_t a = 0; a < rules_.size(); ++a)
        r.push_back(apply_letters(*this, Letters{static_cast<Letter>(a)}, k));
    return Substitution(alphabet_, std::move(r));
}

Letters apply_letters(const Substitution& s, const Letters& w, unsigned k) {
    Letters cur = w;
    for (unsigned i = 0; i < k; ++i) {
        Letters next;
        for (Letter x : cur) {
            const auto& r = s.rule(x);
            next.insert(next.end(), r.begin(), r.end());
        }
        cur.swap(next);
    }
    return cur;
}

Word substitute(const Substitution& s, const Word& w, unsigned k) {
    if (!same_alphabet(s.alphabet(), w.alphabet())) throw Error("alphabet mismatch");
    return Word(w.alphabet(), apply_letters(s, w.letters(), k));
}

Matrix substitution_matrix(const Substitution& s) {
    std::size_t n = s.size();
    Matrix m(n, std::vector<long long>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (Letter x : s.rule(static_cast<Letter>(j))) ++m[x][j];
    return m;
}

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix c(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

bool is_primitive(const Substitution& s) {
    std::size_t n = s.size();
    std::vector<std::vector<bool>> base(n, std::vector<bool>(n, false));
    auto m = substitution_matrix(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) base[i][j] = m[i][j] > 0;
    auto cur = base;
    std::size_t bound = (n - 1) * (n - 1) + 1;
    for (std::size_t k = 1;; ++k) {
        bool positive = true;
        for (auto& row : cur)
            for (bool v : row) positive = positive && v;
        if (positive) return true;
        if (k >= bound) return false;
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (cur[i][l])
                    for (std::size_t j = 0; j < n; ++j)
                        if (base[l][j]) next[i][j] = true;
        cur.swap(next);
    }
}

static void require_primitive(const Substitution& s) {
    if (!is_primitive(s)) throw Error("substitution is not primitive");
}

static void add_subwords(const Letters& w, std::size_t n, WordSet& out) {
    if (w.size() < n) return;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace(w.begin() + i, w.begin() + i + n);
}

WordSet legal_two_words(const Substitution& s) {
    require_primitive(s);
    WordSet legal;
    for (const auto& r : s.rules()) add_subwords(r, 2, legal);
    std::vector<Letters> frontier(legal.begin(), legal.end());
    while (!frontier.empty()) {
        std::vector<Letters> next;
        for (const auto& ab : frontier) {
            WordSet found;
            add_subwords(apply_letters(s, ab), 2, found);
            for (const auto& w : found)
                if (legal.insert(w).second) next.push_back(w);
        }
        frontier.swap(next);
    }
    return legal;
}

WordSet language_letters(const Substitution& s, std::size_t n) {
    if (n == 0) throw Error("word length must be positive");
    auto legal2 = legal_two_words(s);
    WordSet out;
    if (n == 1) {
        for (const auto& w : legal2) out.insert(Letters{w[0]});
        return out;
    }
    if (n == 2) return legal2;
    unsigned k = 0;
    std::vector<Letters> blocks(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) blocks[a] = Letters{static_cast<Letter>(a)};
    auto shortest = [&] {
        std::size_t m = blocks[0].size();
        for (const auto& b : blocks) m = std::min(m, b.size());
        return m;
    };
    while (shortest() < n) {
        for (auto& b : blocks) b = apply_letters(s, b);
        ++k;
    }
    for (const auto& ab : legal2) {
        Letters w = blocks[ab[0]];
        w.insert(w.end(), blocks[ab[1]].begin(), blocks[ab[1]].end());
        add_subwords(w, n, out);
    }
    return out;
}

std::set<Word> language(const Substitution& s, std::size_t n) {
    std::set<Word> out;
    for (const auto& w : language_letters(s, n)) out.emplace(s.alphabet(), w);
    return out;
}

bool is_legal(const Substitution& s, const Letters& w) {
    if (w.empty()) return true;
    return language_letters(s, w.size()).count(w) > 0;
}

std::vector<Letters> column_maps(const Substitution& s) {
    std::size_t r = s.length();
    std::vector<Letters> cols(r, Letters(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t j = 0; j < r; ++j) cols[j][a] = s.rule(static_cast<Letter>(a))[j];
    return cols;
}

static std::size_t image_size(const Letters& f) {
    std::vector<bool> hit(f.size(), false);
    std::size_t c = 0;
    for (Letter x : f)
        if (!hit[x]) hit[x] = true, ++c;
    return c;
}

struct LettersHash {
    std::size_t operator()(const Letters& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Letter x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

std::size_t column_number(const Substitution& s, std::size_t cap) {
    auto cols = column_maps(s);
    std::unordered_set<Letters, LettersHash> seen(cols.begin(), cols.end());
    std::vector<Letters> frontier(seen.begin(), seen.end());
    std::size_t best = s.size();
    for (const auto& f : seen) best = std::min(best, image_size(f));
    while (!frontier.empty() && best > 1) {
        std::vector<Letters> next;
        for (const auto& g : frontier) {
            for (const auto& c : cols) {
                Letters h(g.size());
                for (std::size_t a = 0; a < g.size(); ++a) h[a] = c[g[a]];
                if (seen.insert(h).second) {
                    if (seen.size() > cap) throw Error("column-map monoid exceeds cap");
                    best = std::min(best, image_size(h));
                    next.push_back(std::move(h));
                }
            }
        }
        frontier.swap(next);
    }
    return best;
}

static std::size_t stripped_gcd(const Letters& w, std::size_t len, std::size_t r) {
    std::size_t g = 0;
    for (std::size_t k = 1; k < len; ++k)
        if (w[k] == w[0]) g = std::gcd(g, k);
    if (g == 0) throw Error("height: first letter does not recur in the prefix");
    for (std::size_t p = std::gcd(g, r); p > 1; p = std::gcd(g, r)) g /= p;
    return g;
}

std::size_t height(const Substitution& s) {
    require_primitive(s);
    std::size_t r = s.length();
    unsigned m = stabilizing_power(s);
    auto pm = s.power(m);
    Letter start = 0;
    bool found = false;
    for (std::size_t a = 0; a < s.size() && !found; ++a)
        if (pm.rule(static_cast<Letter>(a))[0] == a) start = static_cast<Letter>(a), found = true;
    if (!found) throw Error("height: no one-sided fixed point");
    // The gcd only shrinks as the prefix grows; stop once it is 1, or once it is within the
    // bound h <= |A| and unchanged over two successive prefix lengths.
    const std::size_t limit = 20000000;
    Letters w{start};
    std::size_t len = r, prev = 0;
    while (true) {
        while (w.size() < len) w = apply_letters(pm, w);
        std::size_t g = 0;
        bool recurs = std::find(w.begin() + 1, w.begin() + static_cast<long>(len), start) !=
                      w.begin() + static_cast<long>(len);
        if (recurs) {
            g = stripped_gcd(w, len, r);
            if (g == 1 || (g == prev && g <= s.size())) return g;
        }
        prev = g;
        if (len >= limit) throw Error("height did not stabilise within the prefix limit");
        len = std::min(limit, len * r);
    }
}

ConstantLengthProfile constant_length_profile(const Substitution& s) {
    if (!s.constant_length()) throw Error("substitution is not of constant length");
    require_primitive(s);
    ConstantLengthProfile p;
    p.length = s.length();
    auto cols = column_maps(s);
    p.bijective = true;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::size_t c = image_size(cols[j]);
        if (c != s.size()) p.bijective = false;
        if (c == 1) p.coincidence_positions.push_back(j + 1);
    }
    p.column_number = column_number(s);
    p.has_coincidence = p.column_number == 1;
    p.height = height(s);
    return p;
}

unsigned stabilizing_power(const Substitution& s) {
    std::size_t n = s.size();
    Letters first(n), last(n);
    for (std::size_t a = 0; a < n; ++a) {
        first[a] = s.rule(static_cast<Letter>(a)).front();
        last[a] = s.rule(static_cast<Letter>(a)).back();
    }
    auto compose = [](const Letters& f, const Letters& g) {
        Letters h(g.size());
        for (std::size_t a = 0; a < g.size(); ++a) h[a] = f[g[a]];
        return h;
    };
    Letters fm = first, lm = last;
    for (unsigned m = 1; m < 100000; ++m) {
        if (compose(fm, fm) == fm && compose(lm, lm) == lm) return m;
        fm = compose(first, fm);
        lm = compose(last, lm);
    }
    throw Error("stabilizing power not found");
}

SeedSet legal_seeds(const Substitution& s) {
    auto legal2 = legal_two_words(s);
    SeedSet out;
    out.power = stabilizing_power(s);
    auto pm = s.power(out.power);
    for (const auto& ab : legal2)
        if (pm.rule(ab[0]).back() == ab[0] && pm.rule(ab[1]).front() == ab[1])
            out.seeds.emplace_back(ab[0], ab[1]);
    return out;
}

std::string seed_str(const Alphabet& a, std::pair<Letter, Letter> seed) {
    return a.symbol(seed.first) + "|" + a.symbol(seed.second);
}

Substitution reverse_substitution(const Substitution& s) {
    std::vector<Letters> r;
    for (const auto& w : s.rules()) r.emplace_back(w.rbegin(), w.rend());
    return Substitution(s.alphabet(), std::move(r));
}

static bool palindrome(const Letters& w, std::size_t b, std::size_t e) {
    while (b + 1 < e) {
        if (w[b] != w[e - 1]) return false;
        ++b, --e;
    }
    return true;
}

static std::size_t common_prefix(const std::vector<Letters>& rules) {
    std::size_t n = rules[0].size();
    for (const auto& r : rules) {
        std::size_t i = 0;
        while (i < n && i < r.size() && r[i] == rules[0][i]) ++i;
        n = i;
    }
    return n;
}

static std::size_t common_suffix(const std::vector<Letters>& rules) {
    std::vector<Letters> rev;
    for (const auto& r : rules) rev.emplace_back(r.rbegin(), r.rend());
    return common_prefix(rev);
}

static std::optional<PalindromicDecomposition> decompose(const AlphabetPtr& alpha,
                                                         const std::vector<Letters>& rules) {
    std::size_t shortest = rules[0].size();
    for (const auto& r : rules) shortest = std::min(shortest, r.size());
    std::size_t pre = common_prefix(rules), suf = common_suffix(rules);
    for (std::size_t len = 0; len <= shortest; ++len) {
        for (auto form : {PalindromicDecomposition::Form::Left, PalindromicDecomposition::Form::Right}) {
            bool left = form == PalindromicDecomposition::Form::Left;
            if (len > (left ? pre : suf)) continue;
            const auto& r0 = rules[0];
            bool ok = left ? palindrome(r0, 0, len) : palindrome(r0, r0.size() - len, r0.size());
            for (std::size_t i = 0; ok && i < rules.size(); ++i) {
                const auto& r = rules[i];
                ok = left ? palindrome(r, len, r.size()) : palindrome(r, 0, r.size() - len);
            }
            if (!ok) continue;
            PalindromicDecomposition d;
            d.form = form;
            d.p = left ? Word(alpha, Letters(r0.begin(), r0.begin() + len))
                       : Word(alpha, Letters(r0.end() - len, r0.end()));
            for (const auto& r : rules)
                d.q.push_back(left ? Word(alpha, Letters(r.begin() + len, r.end()))
                                   : Word(alpha, Letters(r.begin(), r.end() - len)));
            return d;
        }
    }
    return std::nullopt;
}

std::optional<PalindromicDecomposition> palindromic_criterion(const Substitution& s,
                                                              PalindromicOptions opt) {
    for (unsigned j = 1; j <= std::max(1u, opt.max_power); ++j) {
        auto pj = j == 1 ? s : s.power(j);
        const auto& rules = pj.rules();
        if (auto d = decompose(s.alphabet(), rules)) {
            d->power = j;
            return d;
        }
        if (!opt.conjugates) continue;
        std::size_t longest = 0;
        for (const auto& r : rules) longest = std::max(longest, r.size());
        // Conjugate one letter at a time while all rules share a first (resp. last) letter.
        for (int dir : {1, -1}) {
            auto cur = rules;
            for (std::size_t t = 1; t <= longest; ++t) {
                if ((dir > 0 ? common_prefix(cur) : common_suffix(cur)) == 0) break;
                for (auto& r : cur) {
                    if (dir > 0) std::rotate(r.begin(), r.begin() + 1, r.end());
                    else std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
                }
                if (auto d = decompose(s.alphabet(), cur)) {
                    d->power = j;
                    d->conjugation = dir * static_cast<long>(t);
                    return d;
                }
            }
        }
    }
    return std::nullopt;
}

bool strongly_injective(const Substitution& s) {
    s.length();
    for (std::size_t p = 0; p < s.size(); ++p)
        for (std::size_t q = p + 1; q < s.size(); ++q)
            if (s.rule(static_cast<Letter>(p)) == s.rule(static_cast<Letter>(q))) return false;
    auto pm = s.power(stabilizing_power(s));
    for (std::size_t p = 0; p < s.size(); ++p) {
        for (std::size_t q = p + 1; q < s.size(); ++q) {
            const auto& u = pm.rule(static_cast<Letter>(p));
            const auto& v = pm.rule(static_cast<Letter>(q));
            if (u.front() == p && v.front() == q && std::equal(u.begin() + 1, u.end(), v.begin() + 1))
                return false;
            if (u.back() == p && v.back() == q && std::equal(u.begin(), u.end() - 1, v.begin()))
                return false;
        }
    }
    return true;
}

bool looks_aperiodic(const Substitution& s) {
    auto words = language_letters(s, 24);
    for (std::size_t p = 1; p <= 12; ++p) {
        bool all = true;
        for (const auto& w : words) {
            for (std::size_t i = 0; all && i + p < w.size(); ++i) all = w[i] == w[i + p];
            if (!all) break;
        }
        if (all) return false;
    }
    return true;
}

}  // namespace shiftsym
