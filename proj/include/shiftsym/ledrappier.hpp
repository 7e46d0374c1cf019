#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shiftsym/lattice.hpp"
#include "shiftsym/patch.hpp"

namespace shiftsym {

inline constexpr std::uint64_t kDefaultSeed = 0x1ED;

AlphabetPtr binary_alphabet();

struct LTriangle {
    Vec2 base;
    long long size = 1;  // vertices base, base + (size,0), base + (0,size)
};

// Row n+1 is the mod-2 sum of horizontally adjacent cells of row n; row j has width len - j.
Patch2D fill_up(const Word& bottom, std::size_t rows);
Word random_binary_word(std::size_t len, std::uint64_t seed);

int triangle_sum(const Patch2D& p, const LTriangle& t);

struct TriangleVerdict {
    long long k = 0;
    long long width = 0;
    bool universal = true;
    bool exhaustive = true;
    std::size_t bottoms_checked = 0;
    std::uint64_t seed = kDefaultSeed;
    std::optional<Word> witness;        // bottom word giving a nonzero sum
    std::optional<LTriangle> witness_triangle;
};

// Exhaustive over all bottom words for width <= 20, otherwise 10^4 seeded samples.
TriangleVerdict is_universal_L_triangle(long long k, long long width, std::uint64_t seed = kDefaultSeed);

KernelRelation transformed_kernel(const Mat2& m);
bool preserves_ledrappier(const Mat2& m);
std::set<Mat2> enumerate_preserving(int bound);

// Unit directions (+x, -x, +y, -y) along which a full line of the relation determines the next line.
std::vector<std::string> determinism_directions(const KernelRelation& rel);

}  // namespace shiftsym
