#include "shiftsym/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace shiftsym {

Mat2 Mat2::parse(const std::string& text) {
    std::vector<long long> v;
    std::string cur;
    for (char ch : text + ",") {
        if ((ch >= '0' && ch <= '9') || ch == '-' || ch == '+') {
            cur += ch;
        } else if (!cur.empty()) {
            v.push_back(std::stoll(cur));
            cur.clear();
        }
    }
    if (v.size() != 4) throw Error("matrix needs four entries: " + text);
    return {v[0], v[1], v[2], v[3]};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
    long long e = det();
    if (e != 1 && e != -1) throw Error("matrix not invertible over Z");
    return {d * e, -b * e, -c * e, a * e};
}

Mat2 Mat2::power(unsigned k) const {
    Mat2 out, base = *this;
    while (k) {
        if (k & 1) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

std::string Mat2::str() const {
    return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
           std::to_string(d) + "]]";
}

std::string GL2Class::str() const {
    switch (kind) {
        case Kind::FiniteOrder: return "finite_order " + std::to_string(order);
        case Kind::Parabolic: return "parabolic";
        case Kind::Hyperbolic: return "hyperbolic";
    }
    return "";
}

GL2Class gl2_classify(const Mat2& m) {
    if (!m.unimodular()) throw Error("determinant is not +-1");
    Mat2 p = m;
    for (unsigned k = 1; k <= 12; ++k) {
        if (p == Mat2::identity()) return {GL2Class::Kind::FiniteOrder, k};
        p = p * m;
    }
    if (m.det() == 1 && std::llabs(m.trace()) == 2) return {GL2Class::Kind::Parabolic, 0};
    return {GL2Class::Kind::Hyperbolic, 0};
}

std::optional<std::set<Mat2>> group_closure(const std::vector<Mat2>& gens, std::size_t cap) {
    std::set<Mat2> seen{Mat2::identity()};
    std::vector<Mat2> frontier{Mat2::identity()};
    while (!frontier.empty()) {
        std::vector<Mat2> next;
        for (const auto& g : frontier) {
            for (const auto& h : gens) {
                Mat2 x = g * h;
                if (seen.insert(x).second) {
                    if (seen.size() > cap) return std::nullopt;
                    next.push_back(x);
                }
            }
        }
        frontier.swap(next);
    }
    return seen;
}

SignedPerm SignedPerm::identity(std::size_t d) {
    SignedPerm x;
    x.pi.resize(d);
    std::iota(x.pi.begin(), x.pi.end(), 0);
    x.eps.assign(d, 1);
    return x;
}

SignedPerm SignedPerm::inverse() const {
    // (pi^-1, eps_{pi^-1})
    SignedPerm x;
    x.pi.resize(dim());
    x.eps.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) x.pi[pi[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < dim(); ++i) x.eps[i] = eps[x.pi[i]];
    return x;
}

std::string SignedPerm::str() const {
    std::string cyc;
    std::vector<bool> seen(dim(), false);
    for (std::size_t s = 0; s < dim(); ++s) {
        if (seen[s] || pi[s] == static_cast<int>(s)) continue;
        cyc += '(';
        int x = static_cast<int>(s);
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) cyc += ' ';
            cyc += std::to_string(x + 1);
            first = false;
            x = pi[x];
        }
        cyc += ')';
    }
    if (cyc.empty()) cyc = "()";
    std::string signs;
    for (int e : eps) signs += e > 0 ? '+' : '-';
    return "(" + cyc + "; " + signs + ")";
}

SignedPerm wd_compose(const SignedPerm& x, const SignedPerm& y) {
    if (x.dim() != y.dim()) throw Error("signed permutation dimension mismatch");
    SignedPerm z;
    z.pi.resize(x.dim());
    z.eps.resize(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        z.pi[i] = x.pi[y.pi[i]];
        z.eps[i] = x.eps[y.pi[i]] * y.eps[i];
    }
    return z;
}

std::vector<std::vector<int>> wd_matrix(const SignedPerm& x) {
    std::vector<std::vector<int>> m(x.dim(), std::vector<int>(x.dim(), 0));
    for (std::size_t j = 0; j < x.dim(); ++j) m[x.pi[j]][j] = x.eps[j];
    return m;
}

std::vector<SignedPerm> wd_enumerate(std::size_t d) {
    if (d == 0 || d > 6) throw Error("W_d enumeration supports 1 <= d <= 6");
    std::vector<SignedPerm> out;
    std::vector<int> pi(d);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            SignedPerm x;
            x.pi = pi;
            for (std::size_t i = 0; i < d; ++i) x.eps.push_back((mask >> i) & 1 ? -1 : 1);
            out.push_back(std::move(x));
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace shiftsym
