// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shiftsym/catalog.hpp"
#include "shiftsym/chair.hpp"
#include "shiftsym/lattice.hpp"
#include "shiftsym/ledrappier.hpp"
#include "shiftsym/odometer.hpp"
#include "shiftsym/patch.hpp"
#include "shiftsym/subst.hpp"
#include "shiftsym/symrev.hpp"

using namespace shiftsym;

namespace {

struct Report {
    std::vector<std::string> problems;
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Report&)>& body) {
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, limit_s);
        r.problems.push_back(buf);
    }
    char tbuf[32];
    std::snprintf(tbuf, sizeof tbuf, "%.2f s", secs);
    bool ok = r.problems.empty();
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << tbuf << ")\n";
    for (const auto& p : r.problems) std::cout << "    - " << p << "\n";
}

std::set<std::string> word_strings(const std::set<Word>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.str());
    return out;
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : " ") + x;
    return out;
}

std::vector<std::string> compact_all(const std::vector<Perm>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.compact());
    return out;
}

std::vector<std::string> seed_map_strings(const Substitution& s, const SeedAction& act) {
    std::vector<std::string> out;
    for (const auto& [from, to] : act.mapping)
        out.push_back(seed_str(*s.alphabet(), from) + "->" + seed_str(*s.alphabet(), to));
    return out;
}

// Catalog instances used by the property suite.
std::vector<CatalogEntry> catalog_sample() {
    std::vector<CatalogEntry> out;
    for (const char* label : {"tm", "pd", "rs", "fibonacci", "noble:1", "noble:2", "noble:3", "noble-conj:1",
                             "noble-conj:2", "gtm:1,1", "gtm:1,2", "gtm:2,3", "gtm:3,3", "gpd:1,1", "gpd:2,1",
                             "gpd:3,3", "cyclic-tm:3", "cyclic-tm:5", "cyclic-tm-prime:3", "cyclic-tm-prime:4",
                             "flip-reversible", "non-reversible", "non-reversible-5", "fib-variant"})
        out.push_back(catalog_get_spec(label));
    return out;
}

void profiles(Report& r) {
    auto pd = constant_length_profile(catalog_get("pd").rule);
    r.expect(pd.coincidence_positions == std::vector<std::size_t>{1}, "period doubling: coincidence positions");
    r.expect(pd.height == 1, "period doubling: height " + std::to_string(pd.height));

    auto fr = constant_length_profile(catalog_get("flip-reversible").rule);
    r.expect(fr.coincidence_positions == std::vector<std::size_t>{2, 3}, "flip-reversible: coincidence positions");

    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
            auto p = constant_length_profile(catalog_get("gtm", {k, l}).rule);
            std::string tag = "gtm:" + std::to_string(k) + "," + std::to_string(l);
            r.expect(p.column_number == 2, tag + " column number " + std::to_string(p.column_number));
            r.expect(p.bijective, tag + " not bijective");
        }

    auto rs = catalog_get("rs").rule;
    std::set<std::string> legal2;
    for (const auto& w : legal_two_words(rs)) legal2.insert(format_letters(*rs.alphabet(), w));
    std::set<std::string> expected{"10", "20", "13", "23", "01", "02", "31", "32"};
    r.expect(legal2 == expected, "rudin-shapiro legal 2-words differ");
}

void lem_verdicts(Report& r) {
    {
        auto tm = catalog_get("tm").rule;
        auto ab = Perm::parse(tm.alphabet(), "(ab)");
        r.expect(lem_symmetry_test(tm, ab).accepted(), "thue-morse: (ab) symmetry refuted");
        r.expect(lem_reversor_test(tm, ab).accepted(), "thue-morse: (ab) reversor refuted");
    }
    {
        auto rs = catalog_get("rs").rule;
        auto beta = Perm::parse(rs.alphabet(), "(03)(12)");
        r.expect(lem_symmetry_test(rs, beta).accepted(), "rudin-shapiro: (03)(12) symmetry refuted");
        auto cands = enumerate_lem_candidates(rs);
        auto revs = compact_all(cands.reversors);
        std::set<std::string> got(revs.begin(), revs.end());
        r.expect(got == std::set<std::string>{"(0231)", "(0132)"}, "rudin-shapiro reversors: " + join(revs));
        for (const auto& p : cands.reversors)
            r.expect(reversor_order(p) == 4, "rudin-shapiro reversor order of " + p.compact());
    }
    for (int n = 2; n <= 6; ++n) {
        auto s = catalog_get("cyclic-tm", {n}).rule;
        std::string tag = "cyclic-tm:" + std::to_string(n);
        Letters up(static_cast<std::size_t>(n)), neg(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            up[static_cast<std::size_t>(i)] = static_cast<Letter>((i + 1) % n);
            neg[static_cast<std::size_t>(i)] = static_cast<Letter>((n - i) % n);
        }
        Perm pi(s.alphabet(), up), gamma(s.alphabet(), neg);
        r.expect(perm_order(pi) == static_cast<unsigned long>(n), tag + ": rotation order");
        r.expect(lem_symmetry_test(s, pi).accepted(), tag + ": rotation symmetry refuted");
        r.expect(lem_reversor_test(s, gamma).accepted(), tag + ": negation reversor refuted");
        auto sym = SymCandidate::symmetry(pi);
        auto rev = SymCandidate::reversor(gamma);
        for (std::size_t len = 1; len <= 8; ++len)
            for (const auto& w : language(s, len)) {
                Word once = candidate_word_action(rev, candidate_word_action(sym, w));
                Word twice = candidate_word_action(rev, candidate_word_action(sym, once));
                if (twice != w) {
                    r.expect(false, tag + ": square of reversor-symmetry product moves " + w.str());
                    len = 9;
                    break;
                }
            }
    }
    {
        auto s = catalog_get("flip-reversible").rule;
        auto ab = Perm::parse(s.alphabet(), "(ab)");
        r.expect(lem_reversor_test(s, ab).accepted(), "flip-reversible: (ab) reversor refuted");
        auto act = seed_action(s, SymCandidate::reversor(ab));
        auto got = seed_map_strings(s, act);
        std::vector<std::string> want{"a|a->b|b", "a|b->a|b", "b|a->b|a", "b|b->a|a"};
        r.expect(act.ok && got == want, "flip-reversible seed action: " + join(got));
    }
    {
        auto s = catalog_get("non-reversible").rule;
        for (const auto& p : all_perms(s.alphabet())) {
            auto c = lem_reversor_test(s, p);
            r.expect(!c.accepted(), "non-reversible: reversor " + p.compact() + " accepted");
            r.expect(!c.witnesses.empty(), "non-reversible: refutation without witness");
        }
        auto w = reflection_invariance_witness(s, 6);
        r.expect(w && w->str() == "aaabaa", "non-reversible: reflection witness");
        if (w) {
            auto rev = reverse_word(*w);
            r.expect(rev.str() == "aabaaa" && !is_legal(s, rev.letters()), "non-reversible: aabaaa legal");
        }
    }
}

void dichotomy(Report& r) {
    const std::set<std::string> gpd3{"bbb", "bba", "bab", "abb"};
    for (const char* fam : {"gtm", "gpd"})
        for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) {
                auto e = catalog_get(fam, {k, l});
                std::string tag = e.label;
                auto cands = enumerate_lem_candidates(e.rule);
                auto shifted = shifted_reversor_candidates(e.rule);
                bool any = !cands.reversors.empty() || !shifted.empty();
                if (any != (k == l)) {
                    std::vector<std::string> found = compact_all(cands.reversors);
                    for (const auto& c : shifted) found.push_back(c.str());
                    r.expect(false, tag + ": reversor candidates " + (found.empty() ? "none" : join(found)));
                }
                if (k == l) r.expect(palindromic_criterion(e.rule).has_value(), tag + ": not palindromic");
                if (std::string(fam) == "gpd" && std::max(k, l) >= 3) {
                    auto chk = three_word_check(e.rule, gpd3);
                    if (!chk.matches_expected) {
                        auto ws = word_strings(chk.legal_three_words);
                        r.expect(false, tag + ": legal 3-words " + join({ws.begin(), ws.end()}));
                    }
                }
            }
}

void ledrappier_checks(Report& r) {
    std::set<Mat2> six{Mat2{1, 0, 0, 1},   Mat2{0, 1, 1, 0},   Mat2{-1, -1, 0, 1},
                       Mat2{0, 1, -1, -1}, Mat2{1, 0, -1, -1}, Mat2{-1, -1, 1, 0}};
    auto got = enumerate_preserving(3);
    r.expect(got == six, "enumerate_preserving(3) returned " + std::to_string(got.size()) + " matrices");
    auto closure = group_closure(std::vector<Mat2>(got.begin(), got.end()));
    r.expect(closure && closure->size() == 6, "closure of the preserving matrices is not of order 6");

    for (long long k = 1; k <= 20; ++k) {
        auto v = is_universal_L_triangle(k, 24);
        bool pow2 = (k & (k - 1)) == 0;
        if (pow2) r.expect(v.universal, "triangle size " + std::to_string(k) + " not universal");
        else r.expect(!v.universal && v.witness && v.witness_triangle,
                      "triangle size " + std::to_string(k) + " has no failure witness");
    }
    r.expect(!preserves_ledrappier(Mat2{0, -1, 1, 1}), "[[0,-1],[1,1]] preserves the kernel");

    std::mt19937_64 rng(kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
        auto p = fill_up(random_binary_word(200, rng()), 200);
        auto chk = kernel_check(KernelRelation::ledrappier(), p);
        if (!chk.ok) {
            r.expect(false, "random patch " + std::to_string(i) + " violates the kernel");
            break;
        }
    }
}

GL2Class classify_by_powering(const Mat2& m) {
    Mat2 p = m;
    for (unsigned k = 1; k <= 12; ++k) {
        if (p == Mat2::identity()) return {GL2Class::Kind::FiniteOrder, k};
        p = p * m;
    }
    double t = static_cast<double>(m.trace()), d = static_cast<double>(m.det());
    double disc = t * t - 4 * d;
    double rho = disc >= 0 ? std::max(std::abs((t + std::sqrt(disc)) / 2), std::abs((t - std::sqrt(disc)) / 2))
                           : std::sqrt(std::abs(d));
    return {rho > 1 + 1e-9 ? GL2Class::Kind::Hyperbolic : GL2Class::Kind::Parabolic, 0};
}

std::vector<std::vector<int>> int_mat_mul(const std::vector<std::vector<int>>& a,
                                          const std::vector<std::vector<int>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

void lattice_checks(Report& r) {
    std::size_t fact = 1;
    for (std::size_t d = 1; d <= 4; ++d) {
        fact *= d;
        auto all = wd_enumerate(d);
        std::set<SignedPerm> uniq(all.begin(), all.end());
        r.expect(uniq.size() == (std::size_t{1} << d) * fact && all.size() == uniq.size(),
                 "|W_" + std::to_string(d) + "| = " + std::to_string(uniq.size()));
    }
    for (std::size_t d = 2; d <= 3; ++d) {
        auto all = wd_enumerate(d);
        for (const auto& x : all)
            for (const auto& y : all)
                if (wd_matrix(wd_compose(x, y)) != int_mat_mul(wd_matrix(x), wd_matrix(y))) {
                    r.expect(false, "matrix law fails for " + x.str() + " and " + y.str());
                    goto next_d;
                }
    next_d:;
    }
    std::size_t classified = 0;
    for (long long a = -2; a <= 2; ++a)
        for (long long b = -2; b <= 2; ++b)
            for (long long c = -2; c <= 2; ++c)
                for (long long d = -2; d <= 2; ++d) {
                    Mat2 m{a, b, c, d};
                    if (!m.unimodular()) continue;
                    ++classified;
                    auto got = gl2_classify(m), want = classify_by_powering(m);
                    if (!(got == want)) r.expect(false, m.str() + ": " + got.str() + " vs " + want.str());
                }
    r.expect(classified > 0, "no unimodular matrices in range");
    auto cl = group_closure({Mat2{-1, -1, 1, 0}, Mat2{0, 1, 1, 0}});
    r.expect(cl && cl->size() == 6, "closure of the order-3 rotation and coordinate swap is not of order 6");
}

void chair_checks(Report& r) {
    auto rule = load_chair_rule(default_chair_rule_path());
    r.expect(rule.rule.is_primitive(), "chair rule not primitive");
    auto group = paired_closure(rule.generators);
    r.expect(group.size() == 8, "paired closure has " + std::to_string(group.size()) + " elements");
    for (const auto& g : group) {
        auto cert = extended_symmetry_check(rule, g, {1, 2, 3, 4});
        r.expect(cert.accepted(), "paired symmetry refuted: " + g.str());
    }
    auto pres = presentation_check(rule, 4);
    r.expect(pres.holds() && pres.group_order == 8, "presentation r^4 = s^2 = (rs)^2 = e fails");

    PairedSymmetry bare = rule.generators.at(0);
    bare.lem = Perm::identity(bare.lem.alphabet());
    bare.name = "r without letter map";
    auto c1 = extended_symmetry_check(rule, bare, {1, 2, 3, 4});
    r.expect(!c1.accepted() && !c1.witnesses.empty(), "rotation with identity letter map not refuted");

    auto neg = load_chair_rule(std::string(SHIFTSYM_DEFAULT_DATA_DIR) + "/chair-negative-control.json");
    bool refuted = false;
    for (const auto& g : paired_closure(neg.generators)) {
        auto c = extended_symmetry_check(neg, g, {1, 2, 3, 4});
        if (!c.accepted() && !c.witnesses.empty()) refuted = true;
    }
    r.expect(refuted, "transposed-blocks control not refuted");
}

bool squarefree_oracle(long long k) {
    if (k == 0) return false;
    k = std::llabs(k);
    for (long long p = 2; p * p <= k; ++p)
        if (k % (p * p) == 0) return false;
    return true;
}

void squarefree_checks(Report& r) {
    const long long n = 10000;
    auto w = squarefree_window(n);
    const auto& L = w.letters();
    r.expect(L.size() == static_cast<std::size_t>(2 * n + 1), "window length");
    r.expect(reverse_word(w) == w, "window not reflection-symmetric");
    r.expect(w.alphabet()->symbol(L[static_cast<std::size_t>(n)]) == "0", "origin is not 0");
    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<long long> pos(-n, n);
    for (int i = 0; i < 200; ++i) {
        long long k = pos(rng);
        std::string want = squarefree_oracle(k) ? "1" : "0";
        if (w.alphabet()->symbol(L[static_cast<std::size_t>(k + n)]) != want)
            r.expect(false, "position " + std::to_string(k) + " disagrees with trial division");
    }
}

void property_suites(Report& r) {
    for (const auto& e : catalog_sample()) {
        const auto& s = e.rule;
        auto mirror = reverse_substitution(s);
        WordSet prev;
        for (std::size_t n = 1; n <= 12; ++n) {
            auto cur = language_letters(s, n);
            if (n > 1) {
                WordSet subs;
                for (const auto& w : cur) {
                    subs.insert(Letters(w.begin(), w.end() - 1));
                    subs.insert(Letters(w.begin() + 1, w.end()));
                }
                if (subs != prev) r.expect(false, e.label + ": language not factor-closed at " + std::to_string(n));
            }
            WordSet reversed;
            for (auto w : cur) {
                std::reverse(w.begin(), w.end());
                reversed.insert(w);
            }
            if (language_letters(mirror, n) != reversed)
                r.expect(false, e.label + ": mirror law fails at " + std::to_string(n));
            prev = std::move(cur);
        }
        if (palindromic_criterion(s)) {
            auto w = reflection_invariance_witness(s, 12);
            if (w) r.expect(false, e.label + ": palindromic but " + w->str() + " reverses to an illegal word");
        }
    }

    std::mt19937_64 rng(kDefaultSeed);
    std::uniform_int_distribution<long long> val(-1000000, 1000000);
    for (unsigned base : {2u, 3u, 5u}) {
        for (int i = 0; i < 200; ++i) {
            auto rnd = [&] { return KappaElem(AdicInt::from_int(val(rng), base, 32), (rng() & 1) ? 1 : -1); };
            KappaElem g = rnd(), h = rnd(), k = rnd();
            KappaElem e(AdicInt::zero(base, 32), 1);
            if (!(kappa_compose(kappa_compose(g, h), k) == kappa_compose(g, kappa_compose(h, k))))
                r.expect(false, "kappa composition not associative");
            if (!(kappa_compose(e, g) == g) || !(kappa_compose(g, e) == g)) r.expect(false, "kappa identity law");
            KappaElem rev(g.kappa, -1);
            if (!kappa_compose(rev, rev).kappa.is_zero()) r.expect(false, "reversor squared has nonzero kappa");
            if (kappa_compose(g, h).epsilon != g.epsilon * h.epsilon) r.expect(false, "sign is not multiplicative");
        }
    }

    std::vector<Mat2> d4;
    for (const auto& sp : wd_enumerate(2)) {
        auto m = wd_matrix(sp);
        d4.push_back(Mat2{m[0][0], m[0][1], m[1][0], m[1][1]});
    }
    auto bin = binary_alphabet();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(d4.size()) - 1);
    for (int i = 0; i < 64; ++i) {
        Patch2D p(bin);
        for (int c = 0; c < 30; ++c)
            p.set(Vec2{static_cast<long long>(rng() % 11) - 5, static_cast<long long>(rng() % 11) - 5},
                  static_cast<Letter>(rng() & 1));
        const Mat2& a = d4[static_cast<std::size_t>(pick(rng))];
        const Mat2& b = d4[static_cast<std::size_t>(pick(rng))];
        if (!(hM_patch(a, hM_patch(b, p)) == hM_patch(a * b, p))) {
            r.expect(false, "h_M composition law fails for " + a.str() + " and " + b.str());
            break;
        }
    }

    auto pd = catalog_get("pd").rule;
    auto pd_rules = block_symmetry_search(pd, 0, 10);
    std::vector<std::string> pd_maps;
    for (const auto& lr : pd_rules)
        if (auto f = lr.single_position_form()) pd_maps.push_back(f->second.compact());
    r.expect(pd_rules.size() == 1 && pd_maps == std::vector<std::string>{"id"},
             "period doubling radius-0 rules: " + join(pd_maps));

    auto tm = catalog_get("tm").rule;
    auto tm_rules = block_symmetry_search(tm, 0, 10);
    std::vector<std::string> tm_maps;
    for (const auto& lr : tm_rules)
        if (auto f = lr.single_position_form()) tm_maps.push_back(f->second.compact());
    std::sort(tm_maps.begin(), tm_maps.end());
    r.expect(tm_rules.size() == 2 && tm_maps == std::vector<std::string>{"(ab)", "id"},
             "thue-morse radius-0 rules: " + join(tm_maps));
}

}  // namespace

int main() {
    criterion(1, "constant-length profiles of catalog rules", 1.0, profiles);
    criterion(2, "letter-exchange symmetry and reversor verdicts", 5.0, lem_verdicts);
    criterion(3, "reversor dichotomy for generalised Thue-Morse and period doubling", 10.0, dichotomy);
    criterion(4, "Ledrappier kernel symmetries, triangles and random patches", 60.0, ledrappier_checks);
    criterion(5, "signed permutations and GL(2,Z) classification", 0, lattice_checks);
    criterion(6, "chair paired symmetries and presentation", 30.0, chair_checks);
    criterion(7, "square-free window", 2.0, squarefree_checks);
    criterion(8, "property suites", 0, property_suites);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
