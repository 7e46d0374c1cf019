#pragma once

#include <string>
#include <vector>

namespace shiftsym {

struct Certificate {
    enum class Verdict { Accepted, Refuted };

    std::string claim;
    Verdict verdict = Verdict::Refuted;
    std::vector<std::string> witnesses;
    std::size_t checked_lengths = 0;
    std::vector<std::string> caveats;
    std::vector<std::string> passed;  // conditions that held, with depth
    std::vector<std::string> failed;  // conditions that did not hold

    bool accepted() const { return verdict == Verdict::Accepted; }
};

inline const char* verdict_str(Certificate::Verdict v) {
    return v == Certificate::Verdict::Accepted ? "accepted" : "refuted";
}

}  // namespace shiftsym
