#pragma once

#include "sen/characters.hpp"
#include "sen/partition.hpp"
#include "sen/permutation.hpp"

#include <vector>

namespace sen {

// An onto map {1..r} -> {1..k}, stored 0-based as its image table.
struct Surjection {
    int domain = 0;
    int codomain = 0;
    std::vector<int> images;

    Surjection() = default;
    Surjection(int r, int k, std::vector<int> images);  // validates onto

    bool operator==(const Surjection&) const = default;
    auto operator<=>(const Surjection&) const = default;
    std::string to_string() const;
};

// All onto maps {1..r} -> {1..k} in image-table lexicographic order.
// Cached per (r, k); count = k! * S(r, k), empty when r < k.
const std::vector<Surjection>& surjections(int r, int k);

// g o f, applying f first; throws unless codomain(f) = domain(g).
Surjection compose(const Surjection& g, const Surjection& f);

// Canonical representatives of the two (k+2 -> k) orbit types: one map
// collapsing the last three points, one collapsing two adjacent pairs.
Surjection collapse_triple(int k);     // kernel type [3,1^{k-1}], k >= 1
Surjection collapse_two_pairs(int k);  // kernel type [2,2,1^{k-2}], k >= 2

// Sorted fiber sizes of f: a partition of r with exactly k parts.
Partition kernel_type(const Surjection& f);

// The left S_k x S_r action: (sigma, pi) . f = sigma o f o pi^{-1}.
Surjection act(const Perm& sigma, const Perm& pi, const Surjection& f);

struct SecondLevelOrbits {
    std::vector<Surjection> triple;     // kernel type [3,1^{k-1}]
    std::vector<Surjection> two_pairs;  // kernel type [2,2,1^{k-2}]
};

// Splits surjections(k+2, k) by kernel type and verifies each part is a
// single orbit by closure under the action; k >= 2.
SecondLevelOrbits second_level_orbits(int k);

// Character of the permutation action of S_k x S_r on surjections(r, k):
// classwise fixed-point counts.
ClassFunction hom_permutation_character(int r, int k, bool parallel = true);
// Cached variant (serial fill, idempotent).
const ClassFunction& hom_character_cached(int r, int k);

}  // namespace sen
