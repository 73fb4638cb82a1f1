#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace sen {

// An integer partition: weakly decreasing sequence of positive parts.
// The empty partition (of 0) is a valid value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // number of boxes
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                  // 0-based; 0 beyond the last row
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    std::string to_string() const;          // "[2,1]", "[]" for the empty partition

private:
    std::vector<int> parts_;
};

// Canonical order: sizes ascending, reverse-lexicographic within a size
// ([n] first, [1^n] last).  This order indexes everything downstream.
bool partition_order_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return partition_order_less(a, b);
    }
};

struct PartitionPairLess {
    bool operator()(const std::pair<Partition, Partition>& a,
                    const std::pair<Partition, Partition>& b) const {
        if (!(a.first == b.first)) return partition_order_less(a.first, b.first);
        return partition_order_less(a.second, b.second);
    }
};

struct SkewShape {
    Partition outer;
    Partition inner;
    SkewShape(Partition outer, Partition inner);  // requires inner to fit inside outer
    int box_count() const { return outer.size() - inner.size(); }
};

// Compositions may contain zero parts; only finiteness is required.
using Composition = std::vector<int>;

// All partitions of n in the canonical order; length = p(n).
// Cached; the returned reference stays valid for the process lifetime.
const std::vector<Partition>& partitions_of(int n);
// p(n) by dynamic programming, independent of the enumeration.
mpz_class partition_count(int n);
int partition_index(const Partition& p);  // index into partitions_of(p.size())

// Partitions obtained by removing one outer corner.
std::vector<Partition> removable_boxes(const Partition& lambda);
// Partitions obtained by adding r boxes, no two in the same column
// (horizontal strips), in canonical order.
std::vector<Partition> add_horizontal_strip(const Partition& lambda, int r);

// dim S^lambda by the hook length formula; equals the number of standard
// Young tableaux of the shape.
mpz_class hook_dimension(const Partition& lambda);

mpz_class factorial(int n);
mpz_class stirling2(int r, int k);
mpz_class binomial(int n, int k);

Partition single_row(int k);              // [k], or [] when k = 0
Partition single_column(int k);           // [1^k]
Partition hook_two_one(int k);            // [2,1^{k-2}], k >= 2

// Parses a JSON-style array of parts, e.g. "[3,1]" or "[]".
Partition parse_partition(const std::string& text);

}  // namespace sen
