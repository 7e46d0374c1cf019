#include "shiftsym/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shiftsym/symrev.hpp"

namespace shiftsym {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char* tristate_str(Tristate t) {
    switch (t) {
        case Tristate::Yes: return "yes";
        case Tristate::No: return "no";
        case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

static Tristate tristate_from(const std::string& s) {
    if (s == "yes") return Tristate::Yes;
    if (s == "no") return Tristate::No;
    if (s == "unknown") return Tristate::Unknown;
    throw Error("bad flag value: " + s);
}

const std::vector<FamilyInfo>& catalog_families() {
    static const std::vector<FamilyInfo> families = {
        {"tm", {}, {}, "Thue-Morse a->ab, b->ba"},
        {"pd", {}, {}, "period doubling a->ab, b->aa"},
        {"rs", {}, {}, "Rudin-Shapiro 0->02, 1->32, 2->01, 3->31"},
        {"fibonacci", {}, {}, "Fibonacci a->ab, b->a"},
        {"noble", {"m"}, {1}, "noble mean a->a^m b, b->a"},
        {"noble-conj", {"l"}, {1}, "noble mean conjugate a->a^l b a^l, b->a (m = 2l)"},
        {"gtm", {"k", "l"}, {1, 1}, "generalised Thue-Morse a->a^k b^l, b->b^k a^l"},
        {"gpd", {"k", "l"}, {1, 1}, "generalised period doubling a->ub, b->ua with u = b^(k-1) a b^(l-1)"},
        {"cyclic-tm", {"N"}, {3}, "cyclic Thue-Morse i->i, i+1 (mod N)"},
        {"cyclic-tm-prime", {"N"}, {3}, "cyclic period doubling i->0, i+1 (mod N)"},
        {"flip-reversible", {}, {}, "a->aaba, b->babb: reversible only with a letter swap"},
        {"non-reversible", {}, {}, "a->aba, b->baa: no reversors"},
        {"non-reversible-5", {}, {}, "a->aabba, b->babbb: no reversors"},
        {"fib-variant", {}, {}, "a->aab, b->ba: Fibonacci square with the image of b flipped"},
        {"grigorchuk", {}, {}, "x->xax, a->b, b->c, c->a (not primitive; listed for reference only)"},
    };
    return families;
}

namespace {

std::string rep(const std::string& s, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) out += s;
    return out;
}

Flag checked(Tristate v, std::string basis) { return {v, true, std::move(basis)}; }
Flag asserted(Tristate v, std::string basis) { return {v, false, std::move(basis)}; }

CatalogEntry binary(const std::string& name, const std::string& a, const std::string& b) {
    CatalogEntry e;
    e.name = name;
    e.rule = Substitution::from_strings(Alphabet::from_chars("ab"), {a, b});
    e.aperiodic = checked(Tristate::Yes, "no short period found in legal words of length 24");
    return e;
}

std::string label_of(const std::string& name, const std::vector<int>& params) {
    std::string out = name;
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : ":") + std::to_string(params[i]);
    return out;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name, const std::vector<int>& params_in) {
    const FamilyInfo* fam = nullptr;
    for (const auto& f : catalog_families())
        if (f.name == name) fam = &f;
    if (!fam) throw Error("unknown catalog entry: " + name);
    std::vector<int> p = params_in.empty() ? fam->defaults : params_in;
    if (p.size() != fam->param_names.size())
        throw Error("entry " + name + " takes " + std::to_string(fam->param_names.size()) + " parameter(s)");

    const Tristate Y = Tristate::Yes, N = Tristate::No, U = Tristate::Unknown;
    CatalogEntry e;
    if (name == "tm") {
        e = binary(name, "ab", "ba");
        e.palindromic = checked(Y, "palindromic decomposition of the squared rule");
        e.reversible = checked(Y, "R' and the letter swap pass the letter-exchange reversor test");
    } else if (name == "pd") {
        e = binary(name, "ab", "aa");
        e.palindromic = checked(Y, "palindromic decomposition p = a");
        e.reversible = checked(Y, "palindromic, so the reflection is a reversor");
    } else if (name == "rs") {
        e.name = name;
        e.rule = Substitution::from_strings(Alphabet::numeric(4), {"02", "32", "01", "31"});
        e.aperiodic = checked(Y, "no short period found in legal words of length 24");
        e.palindromic = checked(N, "reflection witness among short legal words");
        e.reversible = checked(Y, "order-4 letter-exchange reversors (0231) and (0132)");
    } else if (name == "fibonacci" || name == "noble") {
        int m = name == "noble" ? p[0] : 1;
        if (m < 1) throw Error("noble: m must be at least 1");
        e = binary(name, rep("a", m) + "b", "a");
        e.palindromic = checked(Y, "palindromic decomposition of a conjugate rule");
        e.reversible = checked(Y, "palindromic, so the reflection is a reversor");
    } else if (name == "noble-conj") {
        int l = p[0];
        if (l < 1) throw Error("noble-conj: l must be at least 1");
        e = binary(name, rep("a", l) + "b" + rep("a", l), "a");
        e.palindromic = checked(Y, "palindromic decomposition with empty p");
        e.reversible = checked(Y, "palindromic, so the reflection is a reversor");
    } else if (name == "gtm") {
        int k = p[0], l = p[1];
        if (k < 1 || l < 1) throw Error("gtm: k and l must be at least 1");
        e = binary(name, rep("a", k) + rep("b", l), rep("b", k) + rep("a", l));
        if (k == l) {
            e.palindromic = checked(Y, "palindromic decomposition of the squared rule");
            e.reversible = checked(Y, "letter-exchange reversor test");
        } else {
            e.palindromic = checked(N, "reflection witness among short legal words");
            e.reversible = asserted(N, "no kappa-zero letter-exchange reversor; non-integer kappa excluded by a fibre argument");
        }
    } else if (name == "gpd") {
        int k = p[0], l = p[1];
        if (k < 1 || l < 1) throw Error("gpd: k and l must be at least 1");
        std::string u = rep("b", k - 1) + "a" + rep("b", l - 1);
        e = binary(name, u + "b", u + "a");
        if (k == l) {
            e.palindromic = checked(Y, "palindromic decomposition with p = u");
            e.reversible = checked(Y, "palindromic, so the reflection is a reversor");
        } else {
            e.palindromic = asserted(U, "not asserted");
            e.reversible = asserted(N, "radius-1 reversors collapse to radius 0; none passes the letter-exchange test");
        }
    } else if (name == "cyclic-tm" || name == "cyclic-tm-prime") {
        int n = p[0];
        if (n < 2 || n > 8) throw Error(name + ": N must be in 2..8");
        auto alpha = Alphabet::numeric(static_cast<std::size_t>(n));
        std::vector<Letters> rules;
        for (int i = 0; i < n; ++i) {
            Letter first = name == "cyclic-tm" ? static_cast<Letter>(i) : 0;
            rules.push_back({first, static_cast<Letter>((i + 1) % n)});
        }
        e.name = name;
        e.rule = Substitution(alpha, rules);
        e.aperiodic = checked(Y, "no short period found in legal words of length 24");
        if (name == "cyclic-tm") {
            e.palindromic = n == 2 ? checked(Y, "palindromic decomposition of the squared rule")
                                   : checked(N, "reflection witness among short legal words");
            e.reversible = checked(Y, "R' with the letter map i <-> -i passes the letter-exchange reversor test");
        } else {
            e.palindromic = checked(Y, "palindromic decomposition p = 0");
            e.reversible = checked(Y, "palindromic, so the reflection is a reversor");
        }
    } else if (name == "flip-reversible") {
        e = binary(name, "aaba", "babb");
        e.palindromic = checked(N, "reflection witness bbaa");
        e.reversible = checked(Y, "R' with the letter swap passes the letter-exchange reversor test");
    } else if (name == "non-reversible") {
        e = binary(name, "aba", "baa");
        e.palindromic = checked(N, "reflection witness aaabaa");
        e.reversible = asserted(N, "no kappa-zero reversor; 3-adic argument excludes the rest");
    } else if (name == "non-reversible-5") {
        e = binary(name, "aabba", "babbb");
        e.palindromic = asserted(U, "not asserted");
        e.reversible = asserted(N, "no kappa-zero reversor; 5-adic argument excludes the rest");
    } else if (name == "fib-variant") {
        e = binary(name, "aab", "ba");
        e.palindromic = asserted(U, "not asserted");
        e.reversible = asserted(N, "excluded by an argument over the maximal equicontinuous factor");
    } else if (name == "grigorchuk") {
        e.name = name;
        e.rule = Substitution::from_strings(Alphabet::from_chars("xabc"), {"xax", "b", "c", "a"});
        e.primitive = false;
        e.aperiodic = asserted(U, "not analysed");
        e.palindromic = asserted(U, "not analysed");
        e.reversible = asserted(U, "not analysed");
    }
    e.params = fam->param_names.empty() ? std::vector<int>{} : p;
    e.label = label_of(name, e.params);
    e.description = fam->description;
    return e;
}

CatalogEntry catalog_get_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return catalog_get(spec);
    std::vector<int> params;
    std::stringstream ss(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            params.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error("bad parameter in " + spec);
        }
    }
    return catalog_get(spec.substr(0, colon), params);
}

std::string catalog_dir() {
    if (const char* env = std::getenv("SHIFTSYM_CATALOG_DIR"); env && *env) return env;
    return SHIFTSYM_DEFAULT_CATALOG_DIR;
}

static ordered_json flag_json(const Flag& f) {
    return ordered_json{{"value", tristate_str(f.value)}, {"checked", f.checked}, {"basis", f.basis}};
}

std::string entry_to_json(const CatalogEntry& e, int indent) {
    const auto& A = *e.rule.alphabet();
    ordered_json j;
    j["name"] = e.label;
    j["alphabet"] = A.symbols();
    ordered_json rules = ordered_json::object();
    for (std::size_t a = 0; a < A.size(); ++a)
        rules[A.symbol(static_cast<Letter>(a))] = format_letters(A, e.rule.rule(static_cast<Letter>(a)));
    j["rules"] = rules;
    j["description"] = e.description;
    j["primitive"] = e.primitive;
    j["flags"] = {{"aperiodic", flag_json(e.aperiodic)},
                  {"palindromic", flag_json(e.palindromic)},
                  {"reversible", flag_json(e.reversible)}};
    return j.dump(indent) + "\n";
}

CatalogEntry entry_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw Error(std::string("invalid substitution JSON: ") + ex.what());
    }
    try {
        CatalogEntry e;
        e.label = j.at("name").get<std::string>();
        auto colon = e.label.find(':');
        e.name = e.label.substr(0, colon);
        if (colon != std::string::npos) {
            std::stringstream ss(e.label.substr(colon + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) e.params.push_back(std::stoi(tok));
        }
        auto alpha = Alphabet::make(j.at("alphabet").get<std::vector<std::string>>());
        std::vector<std::string> rules;
        for (const auto& s : alpha->symbols()) {
            if (!j.at("rules").contains(s)) throw Error("missing rule for letter " + s);
            rules.push_back(j.at("rules").at(s).get<std::string>());
        }
        e.rule = Substitution::from_strings(alpha, rules);
        e.description = j.value("description", "");
        e.primitive = j.value("primitive", true);
        if (j.contains("flags")) {
            auto read = [&](const char* key, Flag& f) {
                if (!j["flags"].contains(key)) return;
                const auto& jf = j["flags"][key];
                f.value = tristate_from(jf.value("value", "unknown"));
                f.checked = jf.value("checked", false);
                f.basis = jf.value("basis", "");
            };
            read("aperiodic", e.aperiodic);
            read("palindromic", e.palindromic);
            read("reversible", e.reversible);
        }
        if (e.primitive && !is_primitive(e.rule)) throw Error("entry " + e.label + " is marked primitive but is not");
        return e;
    } catch (const json::exception& ex) {
        throw Error(std::string("invalid substitution JSON: ") + ex.what());
    }
}

CatalogEntry load_entry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return entry_from_json(ss.str());
}

CatalogEntry resolve_target(const std::string& target) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(target)) return load_entry_file(target);
    if (target.find('/') == std::string::npos && target.find(':') == std::string::npos) {
        fs::path p = fs::path(catalog_dir()) / (target + ".json");
        if (fs::is_regular_file(p)) return load_entry_file(p.string());
    }
    return catalog_get_spec(target);
}

std::vector<std::string> flag_discrepancies(const CatalogEntry& e) {
    std::vector<std::string> out;
    if (!e.primitive) return out;
    if (!is_primitive(e.rule)) {
        out.push_back("marked primitive but is not");
        return out;
    }
    const auto& s = e.rule;
    if (e.aperiodic.value != Tristate::Unknown) {
        bool ap = looks_aperiodic(s);
        if (ap != (e.aperiodic.value == Tristate::Yes))
            out.push_back(std::string("aperiodic flag is ") + tristate_str(e.aperiodic.value) + " but the heuristic says " +
                          (ap ? "aperiodic" : "periodic"));
    }
    if (e.palindromic.value != Tristate::Unknown) {
        auto v = reflection_verdict(s, 12);
        if (e.palindromic.value == Tristate::Yes && v.kind == ReflectionVerdict::Kind::NotReflectionInvariant)
            out.push_back("palindromic flag is yes but " + v.witness->str() + " is legal while its reversal is not");
        if (e.palindromic.value == Tristate::No && v.kind != ReflectionVerdict::Kind::NotReflectionInvariant)
            out.push_back("palindromic flag is no but no reflection witness was found (verdict: " + v.str() + ")");
    }
    if (e.reversible.value != Tristate::Unknown) {
        std::vector<std::string> found;
        if (s.constant_length())
            for (const auto& p : enumerate_lem_candidates(s).reversors) found.push_back("F" + p.str() + " R'");
        for (const auto& c : shifted_reversor_candidates(s)) found.push_back(c.str());
        bool pal = palindromic_criterion(s).has_value();
        bool evidence = !found.empty() || pal;
        if (e.reversible.value == Tristate::Yes && !evidence)
            out.push_back("reversible flag is yes but no reversor candidate was found");
        if (e.reversible.value == Tristate::No && evidence)
            out.push_back("reversible flag is no but a reversor candidate was found: " +
                          (found.empty() ? std::string("palindromic decomposition") : found.front()));
    }
    return out;
}

Word squarefree_window(long long n) {
    if (n < 0 || n > 10000000) throw Error("squarefree window: n must be in 0..10^7");
    std::vector<Letter> sf(static_cast<std::size_t>(n) + 1, 1);
    sf[0] = 0;
    for (long long p = 2; p * p <= n; ++p)
        for (long long q = p * p; q <= n; q += p * p) sf[static_cast<std::size_t>(q)] = 0;
    Letters w(static_cast<std::size_t>(2 * n + 1));
    for (long long k = -n; k <= n; ++k) w[static_cast<std::size_t>(k + n)] = sf[static_cast<std::size_t>(k < 0 ? -k : k)];
    return Word(Alphabet::from_chars("01"), std::move(w));
}

}  // namespace shiftsym
