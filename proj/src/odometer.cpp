#include "shiftsym/odometer.hpp"

namespace shiftsym {

AdicInt::AdicInt(unsigned base, std::vector<unsigned> digits) : base_(base), digits_(std::move(digits)) {
    if (base_ < 2) throw Error("adic base must be at least 2");
    if (digits_.empty()) throw Error("adic precision must be positive");
    for (unsigned d : digits_)
        if (d >= base_) throw Error("adic digit out of range");
}

AdicInt AdicInt::zero(unsigned base, std::size_t precision) {
    return AdicInt(base, std::vector<unsigned>(precision, 0));
}

AdicInt AdicInt::from_int(long long value, unsigned base, std::size_t precision) {
    if (base < 2) throw Error("adic base must be at least 2");
    bool negative = value < 0;
    unsigned long long mag = negative ? 0ull - static_cast<unsigned long long>(value)
                                      : static_cast<unsigned long long>(value);
    std::vector<unsigned> d(precision, 0);
    for (std::size_t i = 0; i < precision && mag; ++i) {
        d[i] = static_cast<unsigned>(mag % base);
        mag /= base;
    }
    AdicInt out(base, std::move(d));
    return negative ? -out : out;
}

AdicInt AdicInt::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("adic text needs 'base:digits'");
    unsigned base = static_cast<unsigned>(std::stoul(text.substr(0, colon)));
    std::vector<unsigned> d;
    for (char c : text.substr(colon + 1)) {
        unsigned v;
        if (c >= '0' && c <= '9') v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'z') v = static_cast<unsigned>(c - 'a' + 10);
        else throw Error("bad adic digit");
        d.push_back(v);
    }
    return AdicInt(base, std::move(d));
}

void AdicInt::check_compatible(const AdicInt& o) const {
    if (base_ != o.base_) throw Error("adic base mismatch");
    if (digits_.size() != o.digits_.size()) throw Error("adic precision mismatch");
}

AdicInt AdicInt::operator+(const AdicInt& o) const {
    check_compatible(o);
    std::vector<unsigned> d(digits_.size());
    unsigned carry = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        unsigned s = digits_[i] + o.digits_[i] + carry;
        d[i] = s % base_;
        carry = s / base_;
    }
    return AdicInt(base_, std::move(d));
}

AdicInt AdicInt::operator-() const {
    // r-complement: (r-1-d_i) then add one
    std::vector<unsigned> d(digits_.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = base_ - 1 - digits_[i];
    return AdicInt(base_, std::move(d)) + from_int(1, base_, digits_.size());
}

bool AdicInt::is_zero() const {
    for (unsigned d : digits_)
        if (d) return false;
    return true;
}

std::string AdicInt::str() const {
    std::string out = std::to_string(base_) + ":";
    for (unsigned d : digits_) out += static_cast<char>(d < 10 ? '0' + d : 'a' + d - 10);
    return out;
}

KappaElem::KappaElem(AdicInt k, int eps) : kappa(std::move(k)), epsilon(eps) {
    if (eps != 1 && eps != -1) throw Error("epsilon must be +1 or -1");
}

KappaElem kappa_compose(const KappaElem& g, const KappaElem& h) {
    AdicInt k = g.epsilon == 1 ? g.kappa + h.kappa : g.kappa - h.kappa;
    return KappaElem(k, g.epsilon * h.epsilon);
}

}  // namespace shiftsym
