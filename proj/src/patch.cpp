#include "shiftsym/patch.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "shiftsym/subst.hpp"

namespace shiftsym {

Patch2D::Patch2D(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    if (!alphabet_) throw Error("patch without alphabet");
}

Patch2D Patch2D::rectangle(AlphabetPtr alphabet, long long x0, long long y0, long long w, long long h,
                           Letter fill) {
    Patch2D p(std::move(alphabet));
    if (w <= 0 || h <= 0) return p;
    p.x0_ = x0, p.y0_ = y0, p.w_ = w, p.h_ = h;
    p.values_.assign(static_cast<std::size_t>(w * h), fill);
    p.mask_.assign(static_cast<std::size_t>(w * h), 1);
    p.count_ = static_cast<std::size_t>(w * h);
    return p;
}

Patch2D Patch2D::empty_box(AlphabetPtr alphabet, long long x0, long long y0, long long w, long long h) {
    Patch2D p = rectangle(std::move(alphabet), x0, y0, w, h);
    std::fill(p.mask_.begin(), p.mask_.end(), 0);
    p.count_ = 0;
    return p;
}

Patch2D Patch2D::from_rows(AlphabetPtr alphabet, const std::vector<std::string>& rows, long long x0,
                           long long y0) {
    Patch2D p(alphabet);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        Word w = Word::parse(alphabet, rows[j]);
        for (std::size_t i = 0; i < w.size(); ++i)
            p.set({x0 + static_cast<long long>(i), y0 + static_cast<long long>(j)}, w[i]);
    }
    return p;
}

bool Patch2D::contains(Vec2 c) const {
    long long x = c.x - x0_, y = c.y - y0_;
    if (x < 0 || y < 0 || x >= w_ || y >= h_) return false;
    return mask_[static_cast<std::size_t>(y * w_ + x)] != 0;
}

std::optional<Letter> Patch2D::get(Vec2 c) const {
    if (!contains(c)) return std::nullopt;
    return values_[static_cast<std::size_t>((c.y - y0_) * w_ + (c.x - x0_))];
}

Letter Patch2D::at(Vec2 c) const {
    auto v = get(c);
    if (!v) throw Error("cell outside patch domain");
    return *v;
}

void Patch2D::grow_to(Vec2 c) {
    if (w_ == 0) {
        x0_ = c.x, y0_ = c.y, w_ = 1, h_ = 1;
        values_.assign(1, 0);
        mask_.assign(1, 0);
        return;
    }
    long long nx0 = std::min(x0_, c.x), ny0 = std::min(y0_, c.y);
    long long nx1 = std::max(x0_ + w_, c.x + 1), ny1 = std::max(y0_ + h_, c.y + 1);
    if (nx0 == x0_ && ny0 == y0_ && nx1 == x0_ + w_ && ny1 == y0_ + h_) return;
    long long nw = nx1 - nx0, nh = ny1 - ny0;
    std::vector<Letter> nv(static_cast<std::size_t>(nw * nh), 0);
    std::vector<unsigned char> nm(static_cast<std::size_t>(nw * nh), 0);
    for (long long y = 0; y < h_; ++y)
        for (long long x = 0; x < w_; ++x) {
            std::size_t from = static_cast<std::size_t>(y * w_ + x);
            std::size_t to = static_cast<std::size_t>((y + y0_ - ny0) * nw + (x + x0_ - nx0));
            nv[to] = values_[from];
            nm[to] = mask_[from];
        }
    x0_ = nx0, y0_ = ny0, w_ = nw, h_ = nh;
    values_.swap(nv);
    mask_.swap(nm);
}

void Patch2D::set(Vec2 c, Letter v) {
    if (v >= alphabet_->size()) throw Error("letter out of range");
    grow_to(c);
    std::size_t i = static_cast<std::size_t>((c.y - y0_) * w_ + (c.x - x0_));
    if (!mask_[i]) ++count_;
    mask_[i] = 1;
    values_[i] = v;
}

Patch2D Patch2D::translated(Vec2 t) const {
    Patch2D p = *this;
    p.x0_ += t.x;
    p.y0_ += t.y;
    return p;
}

Patch2D Patch2D::restricted(long long x0, long long y0, long long w, long long h) const {
    Patch2D p(alphabet_);
    for_each([&](Vec2 c, Letter v) {
        if (c.x >= x0 && c.y >= y0 && c.x < x0 + w && c.y < y0 + h) p.set(c, v);
    });
    return p;
}

std::vector<std::string> Patch2D::rows_top_down() const {
    std::vector<std::string> out;
    bool sep = !alphabet_->single_char();
    for (long long y = max_y(); y >= min_y() && count_; --y) {
        std::string row;
        for (long long x = min_x(); x <= max_x(); ++x) {
            if (sep && x != min_x()) row += ',';
            auto v = get({x, y});
            row += v ? alphabet_->symbol(*v) : ".";
        }
        out.push_back(row);
    }
    return out;
}

bool Patch2D::operator==(const Patch2D& o) const {
    if (count_ != o.count_) return false;
    bool same = true;
    for_each([&](Vec2 c, Letter v) {
        auto w = o.get(c);
        if (!w || *w != v) same = false;
    });
    return same;
}

BlockSub2D::BlockSub2D(AlphabetPtr alphabet, std::vector<std::array<std::array<Letter, 2>, 2>> blocks)
    : alphabet_(std::move(alphabet)), blocks_(std::move(blocks)) {
    if (!alphabet_ || blocks_.size() != alphabet_->size())
        throw Error("block substitution needs one 2x2 block per letter");
    for (const auto& b : blocks_)
        for (const auto& row : b)
            for (Letter x : row)
                if (x >= alphabet_->size()) throw Error("block letter out of range");
}

std::vector<std::vector<long long>> BlockSub2D::count_matrix() const {
    std::size_t n = blocks_.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& row : blocks_[j])
            for (Letter x : row) ++m[x][j];
    return m;
}

bool BlockSub2D::is_primitive() const {
    // Same letter-count matrix as a one-dimensional rule listing each block's four letters.
    std::vector<Letters> rules;
    for (const auto& b : blocks_) rules.push_back({b[0][0], b[0][1], b[1][0], b[1][1]});
    return shiftsym::is_primitive(Substitution(alphabet_, rules));
}

Patch2D hM_patch(const Mat2& m, const Patch2D& p) {
    if (!m.unimodular()) throw Error("determinant is not +-1");
    Patch2D out(p.alphabet());
    p.for_each([&](Vec2 c, Letter v) { out.set(m * c, v); });
    return out;
}

Patch2D block_substitute2d(const BlockSub2D& b, const Patch2D& p, unsigned k) {
    if (!same_alphabet(b.alphabet(), p.alphabet())) throw Error("alphabet mismatch");
    Patch2D cur = p;
    for (unsigned it = 0; it < k; ++it) {
        Patch2D next = cur.empty() ? Patch2D(p.alphabet())
                                   : Patch2D::empty_box(p.alphabet(), 2 * cur.min_x(), 2 * cur.min_y(),
                                                        2 * cur.width(), 2 * cur.height());
        cur.for_each([&](Vec2 c, Letter v) {
            for (int bb = 0; bb < 2; ++bb)
                for (int a = 0; a < 2; ++a) next.set({2 * c.x + a, 2 * c.y + bb}, b.cell(v, a, bb));
        });
        cur = std::move(next);
    }
    return cur;
}

KernelCheck kernel_check(const KernelRelation& rel, const Patch2D& p) {
    if (p.alphabet()->size() != 2) throw Error("kernel check needs a binary alphabet");
    KernelCheck res;
    p.for_each([&](Vec2 c, Letter) {
        if (!res.ok) return;
        int sum = 0;
        for (const auto& o : rel.offsets) {
            auto v = p.get(c + o);
            if (!v) return;
            sum += *v;
        }
        ++res.checked;
        if (sum % rel.modulus != 0) {
            res.ok = false;
            res.first_failure = c;
        }
    });
    return res;
}

std::vector<std::vector<Letter>> square_windows(const Patch2D& p, long long w) {
    std::vector<std::vector<Letter>> out;
    if (p.empty()) return out;
    for (long long y = p.min_y(); y + w - 1 <= p.max_y(); ++y)
        for (long long x = p.min_x(); x + w - 1 <= p.max_x(); ++x) {
            std::vector<Letter> win;
            win.reserve(static_cast<std::size_t>(w * w));
            bool full = true;
            for (long long dy = 0; dy < w && full; ++dy)
                for (long long dx = 0; dx < w && full; ++dx) {
                    auto v = p.get({x + dx, y + dy});
                    if (!v) full = false;
                    else win.push_back(*v);
                }
            if (full) out.push_back(std::move(win));
        }
    return out;
}

void write_pgm(std::ostream& out, const Patch2D& p) {
    // Gray level = letter index; cells outside the domain use the extra level maxval.
    std::size_t maxval = p.alphabet()->size();
    out << "P2\n" << p.width() << ' ' << p.height() << '\n' << maxval << '\n';
    for (long long y = p.max_y(); y >= p.min_y() && !p.empty(); --y) {
        for (long long x = p.min_x(); x <= p.max_x(); ++x) {
            auto v = p.get({x, y});
            if (x != p.min_x()) out << ' ';
            out << (v ? static_cast<unsigned>(*v) : maxval);
        }
        out << '\n';
    }
}

void write_csv(std::ostream& out, const Patch2D& p) {
    out << "x,y,letter\n";
    p.for_each([&](Vec2 c, Letter v) { out << c.x << ',' << c.y << ',' << p.alphabet()->symbol(v) << '\n'; });
}

Patch2D read_csv(std::istream& in, AlphabetPtr alphabet) {
    Patch2D p(alphabet);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line == "x,y,letter") continue;
        }
        std::stringstream ss(line);
        std::string xs, ys, sym;
        if (!std::getline(ss, xs, ',') || !std::getline(ss, ys, ',') || !std::getline(ss, sym))
            throw Error("bad CSV patch line: " + line);
        p.set({std::stoll(xs), std::stoll(ys)}, alphabet->index_of(sym));
    }
    return p;
}

}  // namespace shiftsym
