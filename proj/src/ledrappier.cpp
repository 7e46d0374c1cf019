#include "shiftsym/ledrappier.hpp"

#include <algorithm>
#include <random>

namespace shiftsym {

AlphabetPtr binary_alphabet() {
    static const AlphabetPtr a = Alphabet::from_chars("01");
    return a;
}

Patch2D fill_up(const Word& bottom, std::size_t rows) {
    if (bottom.alphabet()->size() != 2) throw Error("fill_up needs a binary word");
    if (rows == 0 || rows > bottom.size()) throw Error("rows must be between 1 and the bottom length");
    long long len = static_cast<long long>(bottom.size());
    Patch2D p = Patch2D::empty_box(bottom.alphabet(), 0, 0, len, static_cast<long long>(rows));
    Letters row = bottom.letters();
    for (std::size_t n = 0; n < rows; ++n) {
        for (std::size_t m = 0; m < row.size(); ++m)
            p.set({static_cast<long long>(m), static_cast<long long>(n)}, row[m]);
        Letters next(row.size() - 1);
        for (std::size_t m = 0; m + 1 < row.size(); ++m) next[m] = row[m] ^ row[m + 1];
        row.swap(next);
    }
    return p;
}

Word random_binary_word(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Letters w(len);
    for (auto& x : w) x = static_cast<Letter>(rng() & 1);
    return Word(binary_alphabet(), std::move(w));
}

int triangle_sum(const Patch2D& p, const LTriangle& t) {
    if (t.size < 1) throw Error("triangle size must be positive");
    auto a = p.get(t.base), b = p.get(t.base + Vec2{t.size, 0}), c = p.get(t.base + Vec2{0, t.size});
    if (!a || !b || !c) throw Error("triangle leaves the patch domain");
    return (*a + *b + *c) % 2;
}

static bool check_bottom(const Word& bottom, long long k, TriangleVerdict& v) {
    Patch2D p = fill_up(bottom, static_cast<std::size_t>(k + 1));
    long long width = static_cast<long long>(bottom.size());
    // k+1 rows: every triangle of size k in the domain sits on the bottom row
    for (long long m = 0; m + k < width; ++m) {
            LTriangle t{{m, 0}, k};
            if (triangle_sum(p, t)) {
                v.universal = false;
                v.witness = bottom;
                v.witness_triangle = t;
                return false;
            }
        }
    return true;
}

TriangleVerdict is_universal_L_triangle(long long k, long long width, std::uint64_t seed) {
    if (k < 1) throw Error("triangle size must be positive");
    if (width < k + 1) throw Error("width must be at least k+1");
    TriangleVerdict v;
    v.k = k;
    v.width = width;
    v.seed = seed;
    if (width <= 20) {
        v.exhaustive = true;
        for (std::uint64_t bits = 0; bits < (1ull << width); ++bits) {
            Letters w(static_cast<std::size_t>(width));
            for (long long i = 0; i < width; ++i) w[static_cast<std::size_t>(i)] = (bits >> i) & 1;
            ++v.bottoms_checked;
            if (!check_bottom(Word(binary_alphabet(), std::move(w)), k, v)) break;
        }
    } else {
        v.exhaustive = false;
        std::mt19937_64 rng(seed);
        for (int s = 0; s < 10000; ++s) {
            Letters w(static_cast<std::size_t>(width));
            for (auto& x : w) x = static_cast<Letter>(rng() & 1);
            ++v.bottoms_checked;
            if (!check_bottom(Word(binary_alphabet(), std::move(w)), k, v)) break;
        }
    }
    return v;
}

KernelRelation transformed_kernel(const Mat2& m) {
    if (!m.unimodular()) throw Error("determinant is not +-1");
    return {{{0, 0}, m.column(0), m.column(1)}, 2};
}

static std::vector<Vec2> normalized(std::vector<Vec2> offs) {
    std::sort(offs.begin(), offs.end());
    Vec2 lo = offs.front();
    for (auto& o : offs) o = o - lo;
    return offs;
}

bool preserves_ledrappier(const Mat2& m) {
    return normalized(transformed_kernel(m).offsets) == normalized(KernelRelation::ledrappier().offsets);
}

std::set<Mat2> enumerate_preserving(int bound) {
    if (bound < 0 || bound > 10) throw Error("bound must be in 0..10");
    std::set<Mat2> out;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c)
                for (long long d = -bound; d <= bound; ++d) {
                    Mat2 m{a, b, c, d};
                    if (m.unimodular() && preserves_ledrappier(m)) out.insert(m);
                }
    return out;
}

std::vector<std::string> determinism_directions(const KernelRelation& rel) {
    const std::pair<const char*, Vec2> dirs[] = {{"+x", {1, 0}}, {"-x", {-1, 0}}, {"+y", {0, 1}}, {"-y", {0, -1}}};
    std::vector<std::string> out;
    for (const auto& [name, d] : dirs) {
        std::vector<long long> proj;
        for (const auto& o : rel.offsets) proj.push_back(o.x * d.x + o.y * d.y);
        long long top = *std::max_element(proj.begin(), proj.end());
        long long at_top = std::count(proj.begin(), proj.end(), top);
        bool rest_adjacent = std::all_of(proj.begin(), proj.end(), [&](long long v) { return v == top || v == top - 1; });
        if (at_top == 1 && rest_adjacent) out.emplace_back(name);
    }
    return out;
}

}  // namespace shiftsym
