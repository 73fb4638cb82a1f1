#include "sen/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace sen {

SkewTableau::SkewTableau(SkewShape s, std::vector<std::vector<int>> r)
    : shape(std::move(s)), rows(std::move(r)) {
    if (static_cast<int>(rows.size()) != shape.outer.length())
        throw std::invalid_argument("SkewTableau: row count mismatch");
    for (int i = 0; i < shape.outer.length(); ++i) {
        int want = shape.outer.part(i) - shape.inner.part(i);
        if (static_cast<int>(rows[i].size()) != want)
            throw std::invalid_argument("SkewTableau: row length mismatch");
        for (int v : rows[i])
            if (v <= 0) throw std::invalid_argument("SkewTableau: entries must be positive");
    }
}

namespace {

// Entry at (row, col) in diagram coordinates, or 0 when the box is not
// part of the skew shape.
int entry_at(const SkewTableau& t, int row, int col) {
    if (row < 0 || row >= t.shape.outer.length()) return 0;
    int lo = t.shape.inner.part(row), hi = t.shape.outer.part(row);
    if (col < lo || col >= hi) return 0;
    return t.rows[row][col - lo];
}

}  // namespace

bool SkewTableau::is_semistandard() const {
    for (int i = 0; i < shape.outer.length(); ++i) {
        int lo = shape.inner.part(i), hi = shape.outer.part(i);
        for (int j = lo; j < hi; ++j) {
            int v = entry_at(*this, i, j);
            int left = entry_at(*this, i, j - 1);
            if (left != 0 && left > v) return false;
            int above = entry_at(*this, i - 1, j);
            if (above != 0 && above >= v) return false;
        }
    }
    return true;
}

Composition SkewTableau::content() const {
    int max_entry = 0;
    for (const auto& row : rows)
        for (int v : row) max_entry = std::max(max_entry, v);
    Composition c(max_entry, 0);
    for (const auto& row : rows)
        for (int v : row) ++c[v - 1];
    return c;
}

Word row_word(const SkewTableau& t) {
    Word w;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

bool is_lattice_word(const Word& w) {
    int max_entry = 0;
    for (int v : w) {
        if (v <= 0) return false;
        max_entry = std::max(max_entry, v);
    }
    std::vector<int> count(max_entry + 1, 0);
    for (int v : w) {
        ++count[v];
        if (v >= 2 && count[v] > count[v - 1]) return false;
    }
    return true;
}

namespace {

struct LrFill {
    const Partition* outer;
    const Partition* inner;
    const Partition* content;
    std::vector<std::vector<int>> rows;  // partial filling
    std::vector<int> used;               // per value, 1-based
    long count = 0;

    // Fill boxes in row-word order: top row right to left, then the next
    // row.  Every constraint looks only at already-filled boxes.
    void fill(int row, int col) {
        if (row == outer->length()) {
            ++count;
            return;
        }
        int lo = inner->part(row), hi = outer->part(row);
        if (col < lo) {
            fill(row + 1, outer->part(row + 1) - 1);
            return;
        }
        int right = (col + 1 < hi) ? rows[row][col + 1 - lo] : 0;
        int above = 0;
        if (row > 0 && col >= inner->part(row - 1) && col < outer->part(row - 1))
            above = rows[row - 1][col - inner->part(row - 1)];
        int max_v = content->length();
        if (right != 0) max_v = std::min(max_v, right);
        for (int v = above + 1; v <= max_v; ++v) {
            if (used[v] >= content->part(v - 1)) continue;      // content bound
            if (v >= 2 && used[v] + 1 > used[v - 1]) continue;  // lattice prefix
            rows[row][col - lo] = v;
            ++used[v];
            fill(row, col - 1);
            --used[v];
        }
    }
};

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& delta, const Partition& gamma) {
    if (lambda.size() + delta.size() != gamma.size())
        throw std::invalid_argument("lr_coefficient: |lambda| + |delta| != |gamma|");
    if (!gamma.contains(lambda)) return 0;
    if (delta.empty()) return 1;
    LrFill f;
    f.outer = &gamma;
    f.inner = &lambda;
    f.content = &delta;
    f.rows.resize(gamma.length());
    for (int i = 0; i < gamma.length(); ++i)
        f.rows[i].assign(gamma.part(i) - lambda.part(i), 0);
    f.used.assign(delta.length() + 1, 0);
    f.fill(0, gamma.part(0) - 1);
    return f.count;
}

std::map<Partition, long, PartitionLess> pieri_expansion(const Partition& lambda, int r) {
    std::map<Partition, long, PartitionLess> out;
    for (const Partition& gamma : add_horizontal_strip(lambda, r)) out[gamma] = 1;
    return out;
}

std::map<Partition, long, PartitionLess> lr_expansion(const Partition& lambda,
                                                      const Partition& delta) {
    std::map<Partition, long, PartitionLess> out;
    for (const Partition& gamma : partitions_of(lambda.size() + delta.size())) {
        long c = lr_coefficient(lambda, delta, gamma);
        if (c != 0) out[gamma] = c;
    }
    return out;
}

}  // namespace sen
