#pragma once

#include "sen/partition.hpp"

#include <vector>

namespace sen {

// A permutation of {0..m-1} stored as its image table.
// Composition is right-to-left throughout: compose(p, q) applies q first.
using Perm = std::vector<int>;

Perm identity_perm(int m);
Perm compose_perm(const Perm& p, const Perm& q);
Perm inverse_perm(const Perm& p);
bool is_permutation(const Perm& p);

Partition cycle_type(const Perm& p);
int perm_sign(const Perm& p);

// Canonical representative of a conjugacy class: consecutive cycles,
// largest first.
Perm class_representative(const Partition& mu);

// All m! permutations in image-table lexicographic order.  Cached; guarded
// against m > 8.
const std::vector<Perm>& symmetric_group(int m);

}  // namespace sen
