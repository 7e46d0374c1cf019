#pragma once

#include <string>

#include <json.hpp>

#include "shiftsym/catalog.hpp"
#include "shiftsym/certificate.hpp"
#include "shiftsym/ledrappier.hpp"
#include "shiftsym/odometer.hpp"
#include "shiftsym/subst.hpp"
#include "shiftsym/symrev.hpp"

namespace shiftsym {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const Certificate& c);
Json to_json(const ConstantLengthProfile& p);
Json to_json(const Alphabet& a, const SeedSet& s);
Json to_json(const PalindromicDecomposition& d);
Json to_json(const Alphabet& a, const SeedAction& act);
Json to_json(const TriangleVerdict& v);

}  // namespace shiftsym
