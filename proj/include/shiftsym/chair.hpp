#pragma once

#include <string>
#include <vector>

#include "shiftsym/certificate.hpp"
#include "shiftsym/patch.hpp"

namespace shiftsym {

// Acts by y_n = lem(x_{M^-1 (n + shift)}): the cell at u moves to M u - shift.
struct PairedSymmetry {
    Mat2 matrix;
    Perm lem;
    Vec2 shift;
    std::string name;

    Patch2D apply(const Patch2D& p) const;
    std::string str() const;
    bool same_action(const PairedSymmetry& o) const {
        return matrix == o.matrix && lem == o.lem && shift == o.shift;
    }
};

// (M1, a1, t1)(M2, a2, t2) = (M1 M2, a1 a2, t1 + M1 t2)
PairedSymmetry compose(const PairedSymmetry& g, const PairedSymmetry& h);
PairedSymmetry paired_identity(AlphabetPtr alphabet);

struct ChairRule {
    BlockSub2D rule;
    Patch2D seed;  // level-0 patch, centred at the origin
    std::vector<PairedSymmetry> generators;
    std::string description;
};

ChairRule load_chair_rule(const std::string& path);
ChairRule parse_chair_rule(const std::string& json_text);
std::string default_chair_rule_path();

Patch2D chair_patch(const ChairRule& c, unsigned level);

// Closure of the generators under composition; throws past `cap` elements.
std::vector<PairedSymmetry> paired_closure(const std::vector<PairedSymmetry>& gens, std::size_t cap = 64);

struct SymmetryCheckOptions {
    long long window = 3;  // side of the square subpatches tested for legality
};

Certificate extended_symmetry_check(const ChairRule& c, const PairedSymmetry& g, const std::vector<unsigned>& levels,
                                    SymmetryCheckOptions opt = {});

struct PresentationCheck {
    std::size_t group_order = 0;
    bool r4 = false, s2 = false, rs2 = false;
    bool holds() const { return r4 && s2 && rs2; }
};

// Checks r^4 = s^2 = (rs)^2 = e on the patch of the given level, with r, s the first two generators.
PresentationCheck presentation_check(const ChairRule& c, unsigned level);

}  // namespace shiftsym
