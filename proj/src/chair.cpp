#include "shiftsym/chair.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace shiftsym {

using nlohmann::json;

Patch2D PairedSymmetry::apply(const Patch2D& p) const {
    if (!matrix.unimodular()) throw Error("determinant is not +-1");
    Patch2D out(p.alphabet());
    p.for_each([&](Vec2 u, Letter v) { out.set(matrix * u - shift, lem(v)); });
    return out;
}

std::string PairedSymmetry::str() const {
    return "(" + matrix.str() + ", " + lem.compact() + ", shift (" + std::to_string(shift.x) + "," +
           std::to_string(shift.y) + "))";
}

PairedSymmetry compose(const PairedSymmetry& g, const PairedSymmetry& h) {
    PairedSymmetry out{g.matrix * h.matrix, g.lem * h.lem, g.shift + g.matrix * h.shift, ""};
    if (!g.name.empty() || !h.name.empty()) out.name = g.name + h.name;
    return out;
}

PairedSymmetry paired_identity(AlphabetPtr alphabet) {
    return {Mat2::identity(), Perm::identity(std::move(alphabet)), {0, 0}, "e"};
}

std::string default_chair_rule_path() {
    return std::string(SHIFTSYM_DEFAULT_DATA_DIR) + "/chair.json";
}

ChairRule parse_chair_rule(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(std::string("chair rule: invalid JSON: ") + e.what());
    }
    try {
        std::vector<std::string> symbols = j.at("alphabet").get<std::vector<std::string>>();
        auto alphabet = Alphabet::make(symbols);
        auto letter = [&](const json& v) {
            return alphabet->index_of(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
        };
        auto square = [&](const json& rows) {
            if (!rows.is_array() || rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
                throw Error("chair rule: every block must be 2x2");
            std::array<std::array<Letter, 2>, 2> b{};
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) b[r][c] = letter(rows[r][c]);
            return b;
        };
        std::vector<std::array<std::array<Letter, 2>, 2>> blocks(alphabet->size());
        const auto& jb = j.at("blocks");
        for (std::size_t a = 0; a < alphabet->size(); ++a) {
            const auto& sym = alphabet->symbol(static_cast<Letter>(a));
            if (!jb.contains(sym)) throw Error("chair rule: missing block for letter " + sym);
            blocks[a] = square(jb.at(sym));
        }
        BlockSub2D rule(alphabet, blocks);
        if (!rule.is_primitive()) throw Error("chair rule: block substitution is not primitive");

        // seed rows are listed top first; the 2x2 seed occupies [-1,0]^2
        auto seed_rows = square(j.at("seed"));
        Patch2D seed(alphabet);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) seed.set({c - 1, -r}, seed_rows[r][c]);

        ChairRule out{rule, seed, {}, j.value("description", "")};
        for (const auto& g : j.at("generators")) {
            auto m = g.at("matrix").get<std::vector<std::vector<long long>>>();
            if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2) throw Error("chair rule: matrix must be 2x2");
            Mat2 mat{m[0][0], m[0][1], m[1][0], m[1][1]};
            if (!mat.unimodular()) throw Error("chair rule: generator matrix is not unimodular");
            auto sh = g.value("shift", std::vector<long long>{1, 0});
            if (sh.size() != 2) throw Error("chair rule: shift must have two entries");
            out.generators.push_back(
                {mat, Perm::parse(alphabet, g.at("lem").get<std::string>()), {sh[0], sh[1]}, g.value("name", "")});
        }
        return out;
    } catch (const json::exception& e) {
        throw Error(std::string("chair rule: ") + e.what());
    }
}

ChairRule load_chair_rule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open chair rule file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_chair_rule(ss.str());
}

Patch2D chair_patch(const ChairRule& c, unsigned level) { return block_substitute2d(c.rule, c.seed, level); }

std::vector<PairedSymmetry> paired_closure(const std::vector<PairedSymmetry>& gens, std::size_t cap) {
    if (gens.empty()) throw Error("no generators");
    std::vector<PairedSymmetry> out{paired_identity(gens[0].lem.alphabet())};
    std::vector<PairedSymmetry> frontier = out;
    auto known = [&](const PairedSymmetry& x) {
        return std::any_of(out.begin(), out.end(), [&](const PairedSymmetry& y) { return y.same_action(x); });
    };
    while (!frontier.empty()) {
        std::vector<PairedSymmetry> next;
        for (const auto& g : frontier)
            for (const auto& h : gens) {
                auto x = compose(g, h);
                if (g.name == "e") x.name = h.name;
                if (!known(x)) {
                    out.push_back(x);
                    next.push_back(x);
                    if (out.size() > cap) throw Error("paired symmetry closure exceeds cap");
                }
            }
        frontier.swap(next);
    }
    return out;
}

static std::string render_window(const Alphabet& a, const std::vector<Letter>& win, long long w) {
    std::string out;
    for (long long y = w - 1; y >= 0; --y) {
        if (y != w - 1) out += '/';
        for (long long x = 0; x < w; ++x) out += a.symbol(win[static_cast<std::size_t>(y * w + x)]);
    }
    return out;
}

Certificate extended_symmetry_check(const ChairRule& c, const PairedSymmetry& g, const std::vector<unsigned>& levels,
                                    SymmetryCheckOptions opt) {
    Certificate cert;
    cert.claim = "extended symmetry " + (g.name.empty() ? std::string() : g.name + " ") + g.str();
    cert.verdict = Certificate::Verdict::Accepted;
    cert.caveats.push_back("finite level: subpatch legality judged by occurrence in the level+2 patch");
    for (unsigned level : levels) {
        Patch2D p = chair_patch(c, level);
        Patch2D q = g.apply(p);
        long long w = std::min<long long>(opt.window, std::min(p.width(), p.height()));
        auto legal_list = square_windows(chair_patch(c, level + 2), w);
        std::set<std::vector<Letter>> legal(legal_list.begin(), legal_list.end());
        cert.checked_lengths = std::max<std::size_t>(cert.checked_lengths, static_cast<std::size_t>(w));
        for (const auto& win : square_windows(q, w)) {
            if (!legal.count(win)) {
                cert.verdict = Certificate::Verdict::Refuted;
                cert.witnesses.push_back("level " + std::to_string(level) + " " + std::to_string(w) + "x" +
                                         std::to_string(w) + " subpatch " + render_window(*p.alphabet(), win, w));
                cert.failed.push_back("image of the level " + std::to_string(level) +
                                      " patch contains an illegal subpatch");
                return cert;
            }
        }
        cert.passed.push_back("level " + std::to_string(level) + ": all " + std::to_string(w) + "x" +
                              std::to_string(w) + " subpatches of the image are legal");
    }
    return cert;
}

PresentationCheck presentation_check(const ChairRule& c, unsigned level) {
    if (c.generators.size() < 2) throw Error("need two generators");
    const auto& r = c.generators[0];
    const auto& s = c.generators[1];
    PresentationCheck out;
    out.group_order = paired_closure(c.generators).size();

    // Probe with an asymmetric random patch as well as the chair patch itself.
    std::mt19937 rng(0x1ED);
    Patch2D probe(c.rule.alphabet());
    for (long long y = -2; y <= 1; ++y)
        for (long long x = -3; x <= 2 + y; ++x)
            probe.set({x, y}, static_cast<Letter>(rng() % c.rule.alphabet()->size()));
    auto rs = compose(r, s);
    auto times = [](const PairedSymmetry& g, Patch2D x, int k) {
        for (int i = 0; i < k; ++i) x = g.apply(x);
        return x;
    };
    out.r4 = out.s2 = out.rs2 = true;
    for (const Patch2D& p : std::vector<Patch2D>{probe, chair_patch(c, level)}) {
        out.r4 = out.r4 && times(r, p, 4) == p;
        out.s2 = out.s2 && times(s, p, 2) == p;
        out.rs2 = out.rs2 && times(rs, p, 2) == p;
    }
    return out;
}

}  // namespace shiftsym
