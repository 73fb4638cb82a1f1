#pragma once

#include "sen/partition.hpp"

#include <map>
#include <vector>

namespace sen {

using Word = std::vector<int>;

// Entries for the boxes of outer/inner, row by row; row i holds
// outer_i - inner_i values, left to right.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);
    // rows non-decreasing, columns increasing
    bool is_semistandard() const;
    Composition content() const;
};

// Entries read right to left, top row first.
Word row_word(const SkewTableau& t);

// Every prefix contains at least as many i's as (i+1)'s.
bool is_lattice_word(const Word& w);

// Littlewood-Richardson coefficient c^gamma_{lambda,delta} by exhaustive
// filling of gamma/lambda in row-word order, pruned by semistandardness
// and the prefix lattice condition.
long lr_coefficient(const Partition& lambda, const Partition& delta, const Partition& gamma);

// Induction multiplicities of S^lambda (x) trivial, i.e. Y^r(lambda).
std::map<Partition, long, PartitionLess> pieri_expansion(const Partition& lambda, int r);

// Full expansion gamma -> c^gamma_{lambda,delta}; zero entries omitted.
std::map<Partition, long, PartitionLess> lr_expansion(const Partition& lambda,
                                                      const Partition& delta);

}  // namespace sen
