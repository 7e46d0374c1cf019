#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "shiftsym/catalog.hpp"
#include "shiftsym/chair.hpp"
#include "shiftsym/io.hpp"
#include "shiftsym/ledrappier.hpp"
#include "shiftsym/symrev.hpp"

using namespace shiftsym;

namespace {

struct Run {
    std::string command_line;
    Json inputs = Json::object();
    std::uint64_t seed = kDefaultSeed;
    bool timing = true;
    bool expect_refutation = false;
    int unexpected = 0;  // refuted claims not declared as expected
    int refuted = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void refutation() {
        ++refuted;
        if (!expect_refutation) ++unexpected;
    }
    int exit_code() const { return unexpected ? 1 : 0; }

    Json report(Json results) const {
        Json r{{"schema", kReportSchema}, {"command", command_line}, {"inputs", inputs}, {"seed", seed}};
        r["results"] = std::move(results);
        r["refutations"] = refuted;
        r["unexpected_refutations"] = unexpected;
        if (timing) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            r["wall_time_ms"] = ms.count();
        }
        return r;
    }
};

std::string order_word(unsigned long ord) { return ord == 2 ? "involution" : "order " + std::to_string(ord); }

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string patch_text(const Patch2D& p, const std::string& format) {
    std::ostringstream ss;
    if (format == "pgm") write_pgm(ss, p);
    else write_csv(ss, p);
    return ss.str();
}

int cmd_analyze(Run& run, const std::string& target, std::size_t max_len, const std::string& format) {
    CatalogEntry e = resolve_target(target);
    run.inputs = {{"target", target}, {"resolved", e.label}, {"max_len", max_len}};
    const auto& s = e.rule;
    const auto& A = *s.alphabet();
    if (!e.primitive || !is_primitive(s)) throw Error(e.label + " is not primitive; analysis refused");

    Json res;
    std::vector<std::string> lines;
    Json rules = Json::object();
    for (std::size_t a = 0; a < A.size(); ++a)
        rules[A.symbol(static_cast<Letter>(a))] = format_letters(A, s.rule(static_cast<Letter>(a)));
    res["rules"] = rules;
    lines.push_back("target: " + e.label + (e.description.empty() ? "" : " (" + e.description + ")"));

    Json sizes = Json::array();
    std::string size_line = "language sizes:";
    for (std::size_t n = 1; n <= max_len; ++n) {
        auto k = language_letters(s, n).size();
        sizes.push_back(k);
        size_line += " " + std::to_string(k);
    }
    res["language_sizes"] = sizes;
    lines.push_back(size_line);

    if (s.constant_length()) {
        auto prof = constant_length_profile(s);
        res["profile"] = to_json(prof);
        std::string pos;
        for (auto p : prof.coincidence_positions) pos += (pos.empty() ? "" : ",") + std::to_string(p);
        lines.push_back("profile: length " + std::to_string(prof.length) + ", height " + std::to_string(prof.height) +
                        ", column number " + std::to_string(prof.column_number) +
                        (prof.bijective ? ", bijective" : "") +
                        (pos.empty() ? "" : ", coincidences at " + pos));
        res["strongly_injective"] = strongly_injective(s);
    }

    auto refl = reflection_verdict(s, max_len);
    Json rj{{"verdict", refl.str()}, {"checked_up_to", refl.checked_up_to}};
    if (refl.decomposition) rj["decomposition"] = to_json(*refl.decomposition);
    if (refl.witness) {
        rj["witness"] = refl.witness->str();
        rj["reversed"] = reverse_word(*refl.witness).str();
    }
    res["reflection"] = rj;
    lines.push_back("reflection: " + refl.str());
    if (refl.witness) lines.push_back("reflection witness: " + refl.witness->str());

    auto seeds = legal_seeds(s);
    res["seeds"] = to_json(A, seeds);
    std::string seed_line = "seeds (power " + std::to_string(seeds.power) + "):";
    for (const auto& sd : seeds.seeds) seed_line += " " + seed_str(A, sd);
    lines.push_back(seed_line);

    if (s.constant_length()) {
        auto cands = enumerate_lem_candidates(s);
        Json certs = Json::array();
        Json syms = Json::array(), revs = Json::array();
        for (const auto& p : cands.symmetries) {
            syms.push_back(p.str());
            certs.push_back(to_json(lem_symmetry_test(s, p)));
            if (!p.is_identity()) lines.push_back("symmetry LEM: " + p.compact());
        }
        if (cands.symmetries.size() <= 1) lines.push_back("symmetry LEM: none beyond the identity");
        std::map<unsigned long, std::vector<std::string>> by_order;
        Json actions = Json::object();
        for (const auto& p : cands.reversors) {
            auto ord = reversor_order(p);
            Json rv{{"lem", p.str()}, {"order", ord}};
            revs.push_back(rv);
            certs.push_back(to_json(lem_reversor_test(s, p)));
            actions[p.str()] = to_json(A, seed_action(s, SymCandidate::reversor(p)));
            by_order[ord].push_back(p.compact());
            lines.push_back(p.is_identity() ? "reversor: R' (" + order_word(ord) + ")"
                                            : "reversor: R' with LEM " + p.compact() + " (" + order_word(ord) + ")");
        }
        for (const auto& [ord, list] : by_order) {
            std::string l = "reversors of order " + std::to_string(ord) + ":";
            for (std::size_t i = 0; i < list.size(); ++i) l += (i ? ", " : " ") + list[i];
            lines.push_back(l);
        }
        if (cands.reversors.empty()) lines.push_back("LEM reversors: none");
        res["lem_symmetries"] = syms;
        res["lem_reversors"] = revs;
        res["seed_actions"] = actions;
        res["certificates"] = certs;
    } else {
        res["lem_symmetries"] = nullptr;
        res["lem_reversors"] = nullptr;
        lines.push_back("LEM tests: not applicable (rule is not of constant length)");
    }

    Json shifted = Json::array();
    for (const auto& c : shifted_reversor_candidates(s)) {
        shifted.push_back(Json{{"shift", c.shift_power}, {"lem", c.lem->str()}, {"order", reversor_order(*c.lem)}});
        if (c.shift_power != 0) lines.push_back("shifted reversor candidate: " + c.str());
    }
    res["shifted_reversor_candidates"] = shifted;
    res["shifted_reversor_caveat"] = "finite level: fixed-point windows only";

    auto pairs = asymptotic_fixed_pairs(s);
    auto pj = [&](const std::vector<std::pair<Seed, Seed>>& v) {
        Json a = Json::array();
        for (const auto& [x, y] : v) a.push_back(Json::array({seed_str(A, x), seed_str(A, y)}));
        return a;
    };
    res["asymptotic_pairs"] = {{"right", pj(pairs.right)}, {"left", pj(pairs.left)}};

    auto disc = flag_discrepancies(e);
    res["flag_discrepancies"] = disc;
    for (const auto& d : disc) {
        lines.push_back("flag discrepancy: " + d);
        run.refutation();
    }

    if (format == "json") {
        std::cout << run.report(res).dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
    }
    return run.exit_code();
}

bool is_power_of_two(long long k) { return k > 0 && (k & (k - 1)) == 0; }

int cmd_ledrappier(Run& run, std::size_t rows, std::size_t width, int enumerate, long long triangles,
                   const std::string& format, const std::string& out_path) {
    Json res;
    if (enumerate >= 0) {
        run.inputs = {{"enumerate", enumerate}};
        auto mats = enumerate_preserving(enumerate);
        Json list = Json::array();
        for (const auto& m : mats) {
            Json dirs = determinism_directions(transformed_kernel(m));
            list.push_back(Json{{"matrix", m.str()}, {"class", gl2_classify(m).str()}, {"determined_directions", dirs}});
        }
        std::vector<Mat2> gens(mats.begin(), mats.end());
        auto closure = group_closure(gens, 1000);
        bool closed = closure && *closure == mats;
        bool abelian = true, has3 = false;
        for (const auto& a : mats) {
            auto c = gl2_classify(a);
            has3 = has3 || (c.kind == GL2Class::Kind::FiniteOrder && c.order == 3);
            for (const auto& b : mats) abelian = abelian && a * b == b * a;
        }
        bool d3 = closed && mats.size() == 6 && !abelian && has3;
        res = {{"matrices", list}, {"group_order", mats.size()}, {"closed", closed}, {"group", d3 ? "D3" : "other"}};
        if (!d3) run.refutation();
        std::cout << run.report(res).dump(2) << "\n";
        return run.exit_code();
    }
    if (triangles > 0) {
        run.inputs = {{"triangles", triangles}, {"width", width}};
        Json verdicts = Json::array(), witnesses = Json::object();
        for (long long k = 1; k <= triangles; ++k) {
            auto v = is_universal_L_triangle(k, static_cast<long long>(width), run.seed);
            verdicts.push_back(to_json(v));
            if (v.witness) witnesses[std::to_string(k)] = v.witness->str();
            if (v.universal != is_power_of_two(k)) run.refutation();
        }
        res = {{"triangles", verdicts}, {"witnesses", witnesses}};
        std::cout << run.report(res).dump(2) << "\n";
        return run.exit_code();
    }
    run.inputs = {{"rows", rows}, {"width", width}};
    Word bottom = random_binary_word(width, run.seed);
    Patch2D p = fill_up(bottom, rows);
    auto kc = kernel_check(KernelRelation::ledrappier(), p);
    if (!kc.ok) run.refutation();
    if (format == "csv" || format == "pgm") {
        write_output(out_path, patch_text(p, format));
        return run.exit_code();
    }
    res = {{"bottom", bottom.str()}, {"cells", p.cell_count()}, {"kernel_check", kc.ok}, {"relations_checked", kc.checked}};
    if (!out_path.empty()) {
        write_output(out_path, patch_text(p, "csv"));
        res["patch_file"] = out_path;
    }
    std::cout << run.report(res).dump(2) << "\n";
    return run.exit_code();
}

int cmd_chair(Run& run, unsigned level, bool check, const std::string& rule_path, std::string format,
              const std::string& out_path) {
    std::string path = rule_path.empty() ? default_chair_rule_path() : rule_path;
    ChairRule rule = load_chair_rule(path);
    run.inputs = {{"level", level}, {"rule", rule_path.empty() ? "chair.json (default)" : rule_path}};
    if (format.empty()) format = check ? "json" : "csv";
    Patch2D p = chair_patch(rule, level);
    if (!check) {
        if (format == "json") {
            Json rows = p.rows_top_down();
            std::cout << run.report(Json{{"patch_rows_top_down", rows}, {"cells", p.cell_count()}}).dump(2) << "\n";
        } else {
            write_output(out_path, patch_text(p, format));
        }
        return 0;
    }
    auto group = paired_closure(rule.generators);
    std::vector<unsigned> levels;
    for (unsigned l = 0; l <= level; ++l) levels.push_back(l);
    Json certs = Json::array();
    std::size_t accepted = 0;
    for (const auto& g : group) {
        auto c = extended_symmetry_check(rule, g, levels);
        if (c.accepted()) ++accepted;
        else run.refutation();
        certs.push_back(to_json(c));
    }
    auto pres = presentation_check(rule, level);
    if (!pres.holds()) run.refutation();
    std::string summary = std::to_string(accepted) + "/" + std::to_string(group.size()) + " accepted; " +
                          (pres.holds() ? "r^4=s^2=(rs)^2=e verified" : "presentation relations fail");
    Json res{{"summary", summary},
             {"group_order", pres.group_order},
             {"relations", {{"r^4", pres.r4}, {"s^2", pres.s2}, {"(rs)^2", pres.rs2}}},
             {"certificates", certs}};
    if (!out_path.empty()) {
        write_output(out_path, patch_text(p, format == "pgm" ? "pgm" : "csv"));
        res["patch_file"] = out_path;
    }
    if (format == "json") std::cout << run.report(res).dump(2) << "\n";
    else std::cout << summary << "\n";
    return run.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetries and reversing symmetries of substitution and kernel shifts"};
    app.require_subcommand(1);
    Run run;
    for (int i = 0; i < argc; ++i) run.command_line += (i ? " " : "") + std::string(i ? argv[i] : "shiftsym");

    std::string seed_text = "0x1ED";
    bool no_timing = false;
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--no-timing", no_timing, "Omit wall time so reports are byte-reproducible");
        sub->add_flag("--expect-refutation", run.expect_refutation, "Refutations do not change the exit code");
    };

    auto* analyze = app.add_subcommand("analyze", "Profile, language, palindromicity and reversor analysis");
    std::string target;
    std::size_t max_len = 12;
    std::string an_format = "text";
    analyze->add_option("target", target, "Catalog name (e.g. tm, gtm:2,3) or substitution JSON file")->required();
    analyze->add_option("--max-len", max_len, "Longest language length to enumerate")->check(CLI::Range(2, 40));
    analyze->add_option("--format", an_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    common(analyze);

    auto* led = app.add_subcommand("ledrappier", "Patches, L-triangles and preserving matrices");
    std::size_t rows = 64, width = 128;
    int enumerate = -1;
    long long triangles = 0;
    std::string led_format = "json", led_out;
    auto* width_opt = led->add_option("--width", width, "Bottom row width");
    led->add_option("--rows", rows, "Number of rows");
    led->add_option("--seed", seed_text, "Random seed (decimal or 0x hex)");
    led->add_option("--enumerate", enumerate, "List preserving matrices with entries in [-B,B]")->check(CLI::Range(0, 10));
    led->add_option("--triangles", triangles, "Test L-triangles of sizes 1..K")->check(CLI::Range(1, 64));
    led->add_option("--format", led_format, "json, csv or pgm")->check(CLI::IsMember({"json", "csv", "pgm"}));
    led->add_option("--out", led_out, "Write the patch to this file");
    common(led);

    auto* chair = app.add_subcommand("chair", "Chair substitution patches and D4 extended symmetry checks");
    unsigned level = 3;
    bool check_d4 = false;
    std::string rule_path, chair_format, chair_out;
    chair->add_option("--level", level, "Inflation level")->check(CLI::Range(0, 8));
    chair->add_flag("--check-d4", check_d4, "Certify all paired symmetries generated by the rule file");
    chair->add_option("--rule", rule_path, "Chair rule JSON file");
    chair->add_option("--format", chair_format, "json, csv or pgm")->check(CLI::IsMember({"json", "csv", "pgm"}));
    chair->add_option("--out", chair_out, "Write the patch to this file");
    common(chair);

    auto* cat = app.add_subcommand("catalog", "List or export catalog entries");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List families and parameters");
    auto* cat_export = cat->add_subcommand("export", "Print an entry as substitution JSON");
    std::string export_spec;
    cat_export->add_option("entry", export_spec, "Entry, e.g. gpd:2,1")->required();
    auto* cat_check = cat->add_subcommand("check", "Check every fixed entry's flags");

    auto* sf = app.add_subcommand("squarefree", "Square-free indicator window x_{-n..n}");
    long long sf_n = 10;
    sf->add_option("n", sf_n, "Half-width")->required()->check(CLI::Range(0LL, 10000000LL));

    CLI11_PARSE(app, argc, argv);
    run.timing = !no_timing;
    try {
        run.seed = std::stoull(seed_text, nullptr, 0);
    } catch (const std::exception&) {
        std::cerr << "error: bad seed " << seed_text << "\n";
        return 2;
    }

    try {
        if (*analyze) return cmd_analyze(run, target, max_len, an_format);
        if (*led) {
            if (triangles > 0 && width_opt->count() == 0) width = 24;
            return cmd_ledrappier(run, rows, width, enumerate, triangles, led_format, led_out);
        }
        if (*chair) return cmd_chair(run, level, check_d4, rule_path, chair_format, chair_out);
        if (*cat_list) {
            for (const auto& f : catalog_families()) {
                std::string params;
                for (std::size_t i = 0; i < f.param_names.size(); ++i)
                    params += (i ? "," : ":") + f.param_names[i];
                std::cout << f.name << params << "  " << f.description << "\n";
            }
            return 0;
        }
        if (*cat_export) {
            std::cout << entry_to_json(catalog_get_spec(export_spec));
            return 0;
        }
        if (*cat_check) {
            int bad = 0;
            for (const auto& f : catalog_families()) {
                auto e = resolve_target(f.name);
                auto d = flag_discrepancies(e);
                std::cout << e.label << ": " << (d.empty() ? "ok" : std::to_string(d.size()) + " discrepancies") << "\n";
                for (const auto& x : d) std::cout << "  " << x << "\n";
                bad += static_cast<int>(d.size());
            }
            return bad ? 1 : 0;
        }
        if (*sf) {
            std::cout << squarefree_window(sf_n).str() << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
