#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shiftsym/lattice.hpp"
#include "shiftsym/words.hpp"

namespace shiftsym {

// Finite configuration on an arbitrary cell set of Z^2 (bounding box plus presence mask).
class Patch2D {
public:
    Patch2D() = default;
    explicit Patch2D(AlphabetPtr alphabet);
    // Full rectangle [x0, x0+w) x [y0, y0+h) filled with `fill`.
    static Patch2D rectangle(AlphabetPtr alphabet, long long x0, long long y0, long long w, long long h,
                             Letter fill = 0);
    // No cells yet, but storage reserved for the given box.
    static Patch2D empty_box(AlphabetPtr alphabet, long long x0, long long y0, long long w, long long h);
    // Rows given bottom row first; row j occupies cells (x0 .. x0+len-1, y0 + j).
    static Patch2D from_rows(AlphabetPtr alphabet, const std::vector<std::string>& rows, long long x0 = 0,
                             long long y0 = 0);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    bool contains(Vec2 c) const;
    std::optional<Letter> get(Vec2 c) const;
    Letter at(Vec2 c) const;  // throws when the cell is not in the domain
    void set(Vec2 c, Letter v);
    std::size_t cell_count() const { return count_; }
    bool empty() const { return count_ == 0; }

    // Inclusive bounding box; meaningless for an empty patch.
    long long min_x() const { return x0_; }
    long long min_y() const { return y0_; }
    long long max_x() const { return x0_ + w_ - 1; }
    long long max_y() const { return y0_ + h_ - 1; }
    long long width() const { return w_; }
    long long height() const { return h_; }
    bool is_rectangle() const { return count_ == static_cast<std::size_t>(w_ * h_); }

    // Cells in (y, x) ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (long long y = 0; y < h_; ++y)
            for (long long x = 0; x < w_; ++x) {
                std::size_t i = static_cast<std::size_t>(y * w_ + x);
                if (mask_[i]) f(Vec2{x0_ + x, y0_ + y}, values_[i]);
            }
    }

    Patch2D translated(Vec2 t) const;
    Patch2D restricted(long long x0, long long y0, long long w, long long h) const;
    // Rows as text, top row first; absent cells shown as '.'.
    std::vector<std::string> rows_top_down() const;

    bool operator==(const Patch2D& o) const;

private:
    void grow_to(Vec2 c);
    AlphabetPtr alphabet_;
    long long x0_ = 0, y0_ = 0, w_ = 0, h_ = 0;
    std::vector<Letter> values_;
    std::vector<unsigned char> mask_;
    std::size_t count_ = 0;
};

// 2x2 block substitution: cell (i,j) with letter v becomes cells (2i+a, 2j+b), a,b in {0,1}.
class BlockSub2D {
public:
    // blocks[v][row][col], row 0 = top (b = 1), col 0 = left (a = 0)
    BlockSub2D(AlphabetPtr alphabet, std::vector<std::array<std::array<Letter, 2>, 2>> blocks);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    Letter cell(Letter v, int a, int b) const { return blocks_[v][1 - b][a]; }
    const std::vector<std::array<std::array<Letter, 2>, 2>>& blocks() const { return blocks_; }
    std::vector<std::vector<long long>> count_matrix() const;
    bool is_primitive() const;

private:
    AlphabetPtr alphabet_;
    std::vector<std::array<std::array<Letter, 2>, 2>> blocks_;
};

struct KernelRelation {
    std::vector<Vec2> offsets;
    int modulus = 2;
    static KernelRelation ledrappier() { return {{{0, 0}, {1, 0}, {0, 1}}, 2}; }
};

struct KernelCheck {
    bool ok = true;
    std::optional<Vec2> first_failure;
    std::size_t checked = 0;
};

// (h_M p)_n = p_{M^-1 n}: the cell at u moves to M u.
Patch2D hM_patch(const Mat2& m, const Patch2D& p);
Patch2D block_substitute2d(const BlockSub2D& b, const Patch2D& p, unsigned k);
KernelCheck kernel_check(const KernelRelation& rel, const Patch2D& p);

// All fully-present w x w windows, each flattened row-major from the bottom-left.
std::vector<std::vector<Letter>> square_windows(const Patch2D& p, long long w);

void write_pgm(std::ostream& out, const Patch2D& p);
void write_csv(std::ostream& out, const Patch2D& p);
Patch2D read_csv(std::istream& in, AlphabetPtr alphabet);

}  // namespace shiftsym
