#include "shiftsym/symrev.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace shiftsym {

Letters LocalRule::apply(const Letters& w) const {
    int span = left + right + 1;
    if (static_cast<int>(w.size()) < span) return {};
    Letters out;
    out.reserve(w.size() - static_cast<std::size_t>(span) + 1);
    for (std::size_t i = 0; i + static_cast<std::size_t>(span) <= w.size(); ++i) {
        Letters win(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + span);
        auto it = table.find(win);
        if (it == table.end()) throw Error("window not in local rule table");
        out.push_back(it->second);
    }
    return out;
}

std::optional<std::pair<int, Perm>> LocalRule::single_position_form() const {
    int span = left + right + 1;
    for (int j = 0; j < span; ++j) {
        std::vector<int> f(alphabet->size(), -1);
        bool ok = true;
        for (const auto& [win, out] : table) {
            int& slot = f[win[static_cast<std::size_t>(j)]];
            if (slot == -1) slot = out;
            else if (slot != out) { ok = false; break; }
        }
        if (!ok) continue;
        Letters img(alphabet->size());
        std::vector<bool> hit(alphabet->size(), false);
        for (std::size_t a = 0; a < f.size() && ok; ++a) {
            if (f[a] < 0 || hit[static_cast<std::size_t>(f[a])]) ok = false;
            else hit[static_cast<std::size_t>(f[a])] = true, img[a] = static_cast<Letter>(f[a]);
        }
        if (ok) return std::make_pair(j - left, Perm(alphabet, img));
    }
    return std::nullopt;
}

std::string LocalRule::str() const {
    std::string out = "radius(" + std::to_string(left) + "," + std::to_string(right) + ")";
    for (const auto& [win, v] : table) out += " " + format_letters(*alphabet, win) + "->" + alphabet->symbol(v);
    return out;
}

SymCandidate SymCandidate::symmetry(const Perm& alpha, long shift) {
    SymCandidate c;
    c.kind = Kind::Symmetry;
    c.lem = alpha;
    c.shift_power = shift;
    return c;
}

SymCandidate SymCandidate::reversor(const Perm& alpha, long shift, Reflection refl) {
    SymCandidate c;
    c.kind = Kind::Reversor;
    c.lem = alpha;
    c.shift_power = shift;
    c.reflection = refl;
    return c;
}

std::string SymCandidate::str() const {
    std::vector<std::string> parts{kind == Kind::Symmetry ? "symmetry" : "reversor"};
    if (shift_power) parts.push_back("S^" + std::to_string(shift_power));
    if (lem && !lem->is_identity()) parts.push_back("F" + lem->str());
    if (block) parts.push_back("block " + block->str());
    if (kind == Kind::Reversor) parts.push_back(reflection == Reflection::R ? "R" : "R'");
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += " " + parts[i];
    return out;
}

Word candidate_word_action(const SymCandidate& c, const Word& w) {
    Word out = w;
    if (c.kind == SymCandidate::Kind::Reversor) out = reverse_word(out);
    if (c.block) out = Word(w.alphabet(), c.block->apply(out.letters()));
    if (c.lem) out = perm_apply(*c.lem, out);
    return out;
}

namespace {

std::size_t capped_factorial(std::size_t c, std::size_t cap) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= c; ++i) {
        f *= i;
        if (f > cap) throw Error("column-number factorial exceeds cap");
    }
    return f;
}

Letters compose(const Letters& f, const Letters& g) {
    Letters h(g.size());
    for (std::size_t a = 0; a < g.size(); ++a) h[a] = f[g[a]];
    return h;
}

struct LemContext {
    std::size_t depth = 0;
    std::vector<std::string> caveats;
    WordSet legal2;
};

LemContext prepare(const Substitution& s, const Perm& alpha) {
    if (!same_alphabet(s.alphabet(), alpha.alphabet())) throw Error("alphabet mismatch");
    if (!s.constant_length()) throw Error("letter-exchange tests need a constant-length rule");
    if (!is_primitive(s)) throw Error("substitution is not primitive");
    LemContext ctx;
    auto prof = constant_length_profile(s);
    ctx.depth = capped_factorial(prof.column_number, 720);
    if (prof.height != 1)
        ctx.caveats.push_back("conditions-not-met: height " + std::to_string(prof.height) + " != 1");
    if (!strongly_injective(s)) ctx.caveats.push_back("conditions-not-met: not strongly injective");
    ctx.legal2 = legal_two_words(s);
    return ctx;
}

// Smallest legal word (by length, then letters) whose image under f is illegal.
std::optional<std::pair<Word, Word>> image_witness(const Substitution& s, const std::function<Word(const Word&)>& f,
                                                   std::size_t nmax) {
    for (std::size_t n = 2; n <= nmax; ++n) {
        auto lang = language_letters(s, n);
        for (const auto& w : lang) {
            Word img = f(Word(s.alphabet(), w));
            if (!lang.count(img.letters())) return std::make_pair(Word(s.alphabet(), w), img);
        }
    }
    return std::nullopt;
}

void add_witness(Certificate& cert, const Substitution& s, const SymCandidate& cand, std::size_t nmax,
                 const std::string& fallback) {
    auto w = image_witness(s, [&](const Word& x) { return candidate_word_action(cand, x); }, nmax);
    if (w) {
        cert.witnesses.push_back(w->first.str());
        cert.witnesses.push_back(w->second.str());
        cert.failed.push_back("legal " + w->first.str() + " maps to illegal " + w->second.str());
    } else {
        cert.witnesses.push_back(fallback);
    }
    cert.checked_lengths = nmax;
}

}  // namespace

Certificate lem_symmetry_test(const Substitution& s, const Perm& alpha, LemOptions opt) {
    auto ctx = prepare(s, alpha);
    const auto& A = *s.alphabet();
    auto cand = SymCandidate::symmetry(alpha);
    Certificate cert;
    cert.claim = cand.str();
    cert.caveats = ctx.caveats;
    cert.checked_lengths = 2;

    for (const auto& ab : ctx.legal2) {
        Letters img{alpha(ab[0]), alpha(ab[1])};
        if (!ctx.legal2.count(img)) {
            cert.failed.push_back("letter pairs: legal " + format_letters(A, ab) + " maps to illegal " +
                                  format_letters(A, img));
            add_witness(cert, s, cand, opt.word_witness_max, format_letters(A, ab));
            return cert;
        }
    }
    cert.passed.push_back("letter map preserves legal 2-words");

    auto cols = column_maps(s);
    std::set<Letters> level{Perm::identity(s.alphabet()).images()};
    for (std::size_t d = 0; d < ctx.depth; ++d) {
        std::set<Letters> next;
        for (const auto& g : level)
            for (const auto& c : cols) next.insert(compose(c, g));
        level.swap(next);
    }
    for (const auto& g : level) {
        for (std::size_t x = 0; x < g.size(); ++x) {
            if (alpha(g[x]) != g[alpha(static_cast<Letter>(x))]) {
                cert.failed.push_back("commutation with the rule power " + std::to_string(ctx.depth) +
                                      " fails on letter " + A.symbol(static_cast<Letter>(x)));
                add_witness(cert, s, cand, opt.word_witness_max, A.symbol(static_cast<Letter>(x)));
                return cert;
            }
        }
    }
    cert.passed.push_back("commutes with the rule power " + std::to_string(ctx.depth) + " (" +
                          std::to_string(level.size()) + " column compositions)");
    cert.verdict = Certificate::Verdict::Accepted;
    return cert;
}

Certificate lem_reversor_test(const Substitution& s, const Perm& alpha, LemOptions opt) {
    auto ctx = prepare(s, alpha);
    const auto& A = *s.alphabet();
    auto cand = SymCandidate::reversor(alpha);
    Certificate cert;
    cert.claim = cand.str();
    cert.caveats = ctx.caveats;
    cert.checked_lengths = 2;

    for (const auto& ab : ctx.legal2) {
        Letters img{alpha(ab[1]), alpha(ab[0])};
        if (!ctx.legal2.count(img)) {
            cert.failed.push_back("reflected letter pairs: legal " + format_letters(A, ab) + " maps to illegal " +
                                  format_letters(A, img));
            add_witness(cert, s, cand, opt.word_witness_max, format_letters(A, ab));
            return cert;
        }
    }
    cert.passed.push_back("reflected letter map preserves legal 2-words");

    // Position j of the rule power and its mirror position come from digit-reversed columns.
    auto cols = column_maps(s);
    std::size_t r = cols.size();
    std::set<std::pair<Letters, Letters>> level{{Perm::identity(s.alphabet()).images(),
                                                 Perm::identity(s.alphabet()).images()}};
    for (std::size_t d = 0; d < ctx.depth; ++d) {
        std::set<std::pair<Letters, Letters>> next;
        for (const auto& [g, gbar] : level)
            for (std::size_t j = 0; j < r; ++j) next.emplace(compose(cols[j], g), compose(cols[r - 1 - j], gbar));
        level.swap(next);
    }
    for (const auto& [g, gbar] : level) {
        for (std::size_t x = 0; x < g.size(); ++x) {
            if (alpha(gbar[x]) != g[alpha(static_cast<Letter>(x))]) {
                cert.failed.push_back("reflected commutation with the rule power " + std::to_string(ctx.depth) +
                                      " fails on letter " + A.symbol(static_cast<Letter>(x)));
                add_witness(cert, s, cand, opt.word_witness_max, A.symbol(static_cast<Letter>(x)));
                return cert;
            }
        }
    }
    cert.passed.push_back("reflected commutation with the rule power " + std::to_string(ctx.depth) + " (" +
                          std::to_string(level.size()) + " column pairs)");
    cert.verdict = Certificate::Verdict::Accepted;
    return cert;
}

LemCandidates enumerate_lem_candidates(const Substitution& s) {
    if (s.size() > 8) throw Error("alphabet too large for exhaustive permutation search");
    LemCandidates out;
    for (const auto& p : all_perms(s.alphabet())) {
        if (lem_symmetry_test(s, p, {0}).accepted()) out.symmetries.push_back(p);
        if (lem_reversor_test(s, p, {0}).accepted()) out.reversors.push_back(p);
    }
    sort_by_cycle_notation(out.symmetries);
    sort_by_cycle_notation(out.reversors);
    return out;
}

namespace {

struct FixedPoint {
    Letters left;   // x_{-len} .. x_{-1}
    Letters right;  // x_0 .. x_{len-1}
    long lo() const { return -static_cast<long>(left.size()); }
    long hi() const { return static_cast<long>(right.size()) - 1; }
    Letter at(long i) const {
        return i >= 0 ? right[static_cast<std::size_t>(i)] : left[left.size() - static_cast<std::size_t>(-i)];
    }
};

std::map<Seed, FixedPoint> fixed_points(const Substitution& s, const SeedSet& seeds, std::size_t window) {
    auto pm = s.power(seeds.power);
    std::map<Seed, FixedPoint> out;
    for (const auto& sd : seeds.seeds) {
        FixedPoint fp{{sd.first}, {sd.second}};
        while (fp.left.size() < window || fp.right.size() < window) {
            fp.left = apply_letters(pm, fp.left);
            fp.right = apply_letters(pm, fp.right);
        }
        out.emplace(sd, std::move(fp));
    }
    return out;
}

// Index of x read at output position n: y_n = lem(x_{source(n)}).
long source_index(const SymCandidate& c, long n) {
    if (c.kind == SymCandidate::Kind::Symmetry) return n + c.shift_power;
    if (c.reflection == Reflection::RPrime) return -n - 1 - c.shift_power;
    return -n - c.shift_power;
}

}  // namespace

std::vector<SymCandidate> shifted_reversor_candidates(const Substitution& s, long max_shift, std::size_t window) {
    if (s.size() > 8) throw Error("alphabet too large for exhaustive permutation search");
    auto seeds = legal_seeds(s);
    auto fps = fixed_points(s, seeds, window + static_cast<std::size_t>(max_shift) + 2);
    std::vector<SymCandidate> out;
    for (const auto& alpha : all_perms(s.alphabet())) {
        for (long m = -max_shift; m <= max_shift; ++m) {
            auto cand = SymCandidate::reversor(alpha, m);
            bool ok = true;
            for (const auto& [sd, fp] : fps) {
                Seed img{alpha(fp.at(source_index(cand, -1))), alpha(fp.at(source_index(cand, 0)))};
                auto it = fps.find(img);
                if (it == fps.end()) { ok = false; break; }
                const auto& target = it->second;
                long lim = static_cast<long>(window);
                for (long n = -lim; n < lim && ok; ++n) {
                    long src = source_index(cand, n);
                    if (src < fp.lo() || src > fp.hi() || n < target.lo() || n > target.hi()) continue;
                    ok = alpha(fp.at(src)) == target.at(n);
                }
                if (!ok) break;
            }
            if (ok) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), [](const SymCandidate& a, const SymCandidate& b) {
        if (a.shift_power != b.shift_power) return a.shift_power < b.shift_power;
        return a.lem->str() < b.lem->str();
    });
    return out;
}

std::optional<Word> reflection_invariance_witness(const Substitution& s, std::size_t n_max) {
    for (std::size_t n = 2; n <= n_max; ++n) {
        auto lang = language_letters(s, n);
        for (const auto& w : lang) {
            Letters r(w.rbegin(), w.rend());
            if (!lang.count(r)) return Word(s.alphabet(), w);
        }
    }
    return std::nullopt;
}

std::string ReflectionVerdict::str() const {
    switch (kind) {
        case Kind::Palindromic: return "palindromic";
        case Kind::NotReflectionInvariant: return "not reflection invariant";
        case Kind::Unknown: return "unknown";
    }
    return "";
}

ReflectionVerdict reflection_verdict(const Substitution& s, std::size_t n_max) {
    ReflectionVerdict v;
    v.checked_up_to = n_max;
    if (auto d = palindromic_criterion(s)) {
        v.kind = ReflectionVerdict::Kind::Palindromic;
        v.decomposition = d;
        return v;
    }
    if (auto w = reflection_invariance_witness(s, n_max)) {
        v.kind = ReflectionVerdict::Kind::NotReflectionInvariant;
        v.witness = w;
    }
    return v;
}

unsigned long reversor_order(const Perm& alpha) { return std::lcm(2ul, perm_order(alpha)); }

SeedAction seed_action(const Substitution& s, const SymCandidate& c) {
    if (!c.lem) throw Error("seed action needs a letter-exchange candidate");
    auto seeds = legal_seeds(s);
    std::size_t need = static_cast<std::size_t>(std::labs(c.shift_power)) + 2;
    auto fps = fixed_points(s, seeds, need);
    SeedAction act;
    for (const auto& [sd, fp] : fps) {
        Seed img{(*c.lem)(fp.at(source_index(c, -1))), (*c.lem)(fp.at(source_index(c, 0)))};
        act.mapping.emplace_back(sd, img);
        if (!fps.count(img) && act.ok) {
            act.ok = false;
            act.escaping_seed = sd;
        }
    }
    return act;
}

std::vector<LocalRule> block_symmetry_search(const Substitution& s, int k, std::size_t n,
                                             std::size_t assignment_cap) {
    if (k < 0) throw Error("radius must be non-negative");
    std::size_t span = static_cast<std::size_t>(2 * k + 1);
    if (n < span) throw Error("depth must be at least the window length");
    auto windows = language_letters(s, span);
    if (windows.size() > 32) throw Error("too many legal windows for exhaustive search");
    std::vector<Letters> wins(windows.begin(), windows.end());
    std::size_t q = s.size();
    double total = std::pow(static_cast<double>(q), static_cast<double>(wins.size()));
    if (total > static_cast<double>(assignment_cap)) throw Error("search-space cap exceeded");

    auto source = language_letters(s, n);
    auto target = n - 2 * static_cast<std::size_t>(k) >= 1 ? language_letters(s, n - 2 * static_cast<std::size_t>(k))
                                                            : WordSet{};
    std::vector<Letter> assign(wins.size(), 0);
    std::vector<LocalRule> out;
    while (true) {
        LocalRule rule{s.alphabet(), k, k, {}};
        for (std::size_t i = 0; i < wins.size(); ++i) rule.table.emplace(wins[i], assign[i]);
        bool ok = true;
        std::set<Letters> images;
        for (const auto& w : source) {
            Letters img = rule.apply(w);
            if (!target.count(img)) { ok = false; break; }
            images.insert(std::move(img));
        }
        if (ok && images.size() == target.size()) out.push_back(std::move(rule));
        std::size_t i = 0;
        while (i < assign.size() && ++assign[i] == q) assign[i++] = 0;
        if (i == assign.size()) break;
    }
    return out;
}

AsymptoticPairs asymptotic_fixed_pairs(const Substitution& s) {
    auto seeds = legal_seeds(s).seeds;
    AsymptoticPairs out;
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j) {
            if (seeds[i].second == seeds[j].second) out.right.emplace_back(seeds[i], seeds[j]);
            if (seeds[i].first == seeds[j].first) out.left.emplace_back(seeds[i], seeds[j]);
        }
    return out;
}

ThreeWordCheck three_word_check(const Substitution& s, const std::set<std::string>& expected, std::size_t depth) {
    ThreeWordCheck out;
    out.legal_three_words = language(s, 3);
    std::set<std::string> got;
    for (const auto& w : out.legal_three_words) got.insert(w.str());
    out.matches_expected = got == expected;
    auto rules = block_symmetry_search(s, 1, depth);
    out.radius_one_rules = rules.size();
    out.radius_one_collapses = std::all_of(rules.begin(), rules.end(),
                                           [](const LocalRule& r) { return r.single_position_form().has_value(); });
    return out;
}

}  // namespace shiftsym
