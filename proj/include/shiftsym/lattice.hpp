#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftsym/error.hpp"

namespace shiftsym {

struct Vec2 {
    long long x = 0, y = 0;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    auto operator<=>(const Vec2&) const = default;
};

// 2x2 integer matrix, row-major [[a,b],[c,d]].
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }
    // "[[a,b],[c,d]]"
    static Mat2 parse(const std::string& text);

    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }
    bool unimodular() const { long long e = det(); return e == 1 || e == -1; }
    Mat2 operator*(const Mat2& o) const;
    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 inverse() const;  // requires det = +-1
    Mat2 power(unsigned k) const;
    Vec2 column(int j) const { return j == 0 ? Vec2{a, c} : Vec2{b, d}; }

    std::string str() const;
    auto operator<=>(const Mat2&) const = default;
};

struct GL2Class {
    enum class Kind { FiniteOrder, Parabolic, Hyperbolic } kind;
    unsigned order = 0;  // only for FiniteOrder
    std::string str() const;
    bool operator==(const GL2Class&) const = default;
};

GL2Class gl2_classify(const Mat2& m);

// Multiplicative closure; nullopt when it grows beyond cap elements.
std::optional<std::set<Mat2>> group_closure(const std::vector<Mat2>& gens, std::size_t cap = 100000);

// Signed permutation (pi, eps) of {0..d-1}; element of the hyperoctahedral group W_d.
struct SignedPerm {
    std::vector<int> pi;
    std::vector<int> eps;

    static SignedPerm identity(std::size_t d);
    std::size_t dim() const { return pi.size(); }
    SignedPerm inverse() const;
    std::string str() const;  // "((1 2); +-)"
    auto operator<=>(const SignedPerm&) const = default;
};

// (sigma, eta) o (pi, eps) = (sigma o pi, eta_pi eps), (eta_pi)_i = eta_{pi(i)}
SignedPerm wd_compose(const SignedPerm& x, const SignedPerm& y);
// m_ij = eps_j delta_{i, pi(j)}
std::vector<std::vector<int>> wd_matrix(const SignedPerm& x);
std::vector<SignedPerm> wd_enumerate(std::size_t d);

}  // namespace shiftsym
