#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shiftsym/subst.hpp"

namespace shiftsym {

enum class Tristate { Yes, No, Unknown };
const char* tristate_str(Tristate t);

// A property claimed for an entry; `checked` says whether an automated check backs it.
struct Flag {
    Tristate value = Tristate::Unknown;
    bool checked = false;
    std::string basis;
};

struct CatalogEntry {
    std::string name;       // family name, e.g. "gtm"
    std::vector<int> params;
    std::string label;      // instantiated, e.g. "gtm:2,3"
    std::string description;
    Substitution rule;
    bool primitive = true;
    Flag aperiodic, palindromic, reversible;
};

struct FamilyInfo {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<int> defaults;
    std::string description;
};

const std::vector<FamilyInfo>& catalog_families();
CatalogEntry catalog_get(const std::string& name, const std::vector<int>& params = {});
// "gtm:2,3" or "tm"
CatalogEntry catalog_get_spec(const std::string& spec);

// Directory holding <name>.json definitions; SHIFTSYM_CATALOG_DIR overrides the built-in path.
std::string catalog_dir();

// Substitution definition JSON {"name","alphabet","rules"} plus an optional "flags" block.
std::string entry_to_json(const CatalogEntry& e, int indent = 2);
CatalogEntry entry_from_json(const std::string& text);
CatalogEntry load_entry_file(const std::string& path);

// Resolves a CLI target: an existing file path, a file in catalog_dir(), or a built-in family.
CatalogEntry resolve_target(const std::string& target);

// Automated checks of the entry's flags; each string describes one disagreement.
std::vector<std::string> flag_discrepancies(const CatalogEntry& e);

// Window x_{-n..n}: 1 where |k| is square-free, 0 at the origin.
Word squarefree_window(long long n);

}  // namespace shiftsym
