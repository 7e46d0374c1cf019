#include "shiftsym/io.hpp"

namespace shiftsym {

Json to_json(const Certificate& c) {
    return Json{{"claim", c.claim},
                {"verdict", verdict_str(c.verdict)},
                {"witnesses", c.witnesses},
                {"checked_lengths", c.checked_lengths},
                {"caveats", c.caveats},
                {"passed", c.passed},
                {"failed", c.failed}};
}

Json to_json(const ConstantLengthProfile& p) {
    return Json{{"length", p.length},
                {"height", p.height},
                {"column_number", p.column_number},
                {"bijective", p.bijective},
                {"has_coincidence", p.has_coincidence},
                {"coincidence_positions", p.coincidence_positions}};
}

Json to_json(const Alphabet& a, const SeedSet& s) {
    Json seeds = Json::array();
    for (const auto& sd : s.seeds) seeds.push_back(seed_str(a, sd));
    return Json{{"power", s.power}, {"seeds", seeds}};
}

Json to_json(const PalindromicDecomposition& d) {
    Json q = Json::array();
    for (const auto& w : d.q) q.push_back(w.str());
    return Json{{"form", d.form == PalindromicDecomposition::Form::Left ? "left" : "right"},
                {"power", d.power},
                {"conjugation", d.conjugation},
                {"p", d.p.str()},
                {"q", q}};
}

Json to_json(const Alphabet& a, const SeedAction& act) {
    Json m = Json::object();
    for (const auto& [from, to] : act.mapping) m[seed_str(a, from)] = seed_str(a, to);
    Json out{{"permutes_seeds", act.ok}, {"map", m}};
    if (act.escaping_seed) out["escaping_seed"] = seed_str(a, *act.escaping_seed);
    return out;
}

Json to_json(const TriangleVerdict& v) {
    Json out{{"k", v.k},
             {"width", v.width},
             {"universal", v.universal},
             {"exhaustive", v.exhaustive},
             {"bottoms_checked", v.bottoms_checked}};
    if (!v.exhaustive) out["seed"] = v.seed;
    if (v.witness) {
        out["witness_bottom"] = v.witness->str();
        out["witness_base"] = {v.witness_triangle->base.x, v.witness_triangle->base.y};
    }
    return out;
}

}  // namespace shiftsym
