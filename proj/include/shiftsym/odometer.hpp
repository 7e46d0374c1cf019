#pragma once

#include <string>
#include <vector>

#include "shiftsym/error.hpp"

namespace shiftsym {

// r-adic integer truncated to P digits (least significant first); arithmetic mod r^P.
class AdicInt {
public:
    AdicInt(unsigned base, std::vector<unsigned> digits);

    static AdicInt from_int(long long value, unsigned base, std::size_t precision = 64);
    static AdicInt zero(unsigned base, std::size_t precision = 64);
    // "2:11111"
    static AdicInt parse(const std::string& text);

    unsigned base() const { return base_; }
    std::size_t precision() const { return digits_.size(); }
    const std::vector<unsigned>& digits() const { return digits_; }

    AdicInt operator+(const AdicInt& o) const;
    AdicInt operator-() const;
    AdicInt operator-(const AdicInt& o) const { return *this + (-o); }
    bool is_zero() const;

    std::string str() const;
    bool operator==(const AdicInt& o) const { return base_ == o.base_ && digits_ == o.digits_; }

private:
    void check_compatible(const AdicInt& o) const;
    unsigned base_;
    std::vector<unsigned> digits_;
};

struct KappaElem {
    AdicInt kappa;
    int epsilon;  // +1 symmetry, -1 reversor

    KappaElem(AdicInt k, int eps);
    bool operator==(const KappaElem& o) const { return kappa == o.kappa && epsilon == o.epsilon; }
};

// kappa(GH) = kappa(G) + eps(G) kappa(H)
KappaElem kappa_compose(const KappaElem& g, const KappaElem& h);

}  // namespace shiftsym
