#pragma once

#include "sen/partition.hpp"

#include <map>
#include <string>
#include <vector>

namespace sen {

// A simple module of the surjection-category algebra: a level 0..n and a
// partition of that level.
struct SimpleIndex {
    int level = 0;
    Partition lambda;
    bool operator==(const SimpleIndex&) const = default;
};

// Global index: levels ascending, canonical partition order within a
// level.  Fixes the row/column order of every matrix below.
class SimpleOrder {
public:
    explicit SimpleOrder(int n);
    int n() const { return n_; }
    int size() const { return static_cast<int>(items_.size()); }
    const SimpleIndex& at(int idx) const { return items_[idx]; }
    int index_of(const Partition& lambda) const;

private:
    int n_ = 0;
    std::vector<SimpleIndex> items_;
};

enum class CartanMethod { character, closed_form, oracle };
const char* cartan_method_name(CartanMethod m);

// Entry value kUnknownEntry marks offsets >= 3 under the closed-form
// method's explicit fill policy.
constexpr long kUnknownEntry = -1;

struct CartanMatrix {
    int n = 0;
    int p = 0;  // number of simples, sum of p(k) for k <= n
    CartanMethod method = CartanMethod::character;
    std::vector<long> entries;  // row-major over SimpleOrder(n)

    int size() const { return p; }
    long at(int row, int col) const { return entries[static_cast<size_t>(row) * p + col]; }
    long& at(int row, int col) { return entries[static_cast<size_t>(row) * p + col]; }
};

// Throws unless the matrix is block upper unitriangular with non-negative
// (or unknown-marked) entries.
void check_cartan_invariants(const CartanMatrix& c);

// Multiplicity of S^beta (x) S^alpha in the permutation module of
// surjections(|alpha|, |beta|); zero when the hom-set is empty.
long cartan_entry_character(const Partition& beta, const Partition& alpha);

// |alpha| = |beta| + 1: ways to build alpha from beta by removing one box
// and adding two, no two in the same column.
long first_superdiagonal_entry(const Partition& beta, const Partition& alpha);

// |alpha| = |beta| + 2, |beta| >= 1: the horizontal-strip count through
// the triple-collapse orbit plus, for |beta| >= 2, the square-symmetry
// route through the two-pair-collapse orbit.
long second_superdiagonal_entry(const Partition& beta, const Partition& alpha);

// Induction of the two degree-one characters of the square-symmetry
// subgroup of S_4, as fixed partition lists (regenerated from scratch by
// the test suite).
const std::vector<Partition>& square_symmetry_trivial_induction();   // [4], [2,2]
const std::vector<Partition>& square_symmetry_sign_induction();      // [3,1]

struct CartanOptions {
    bool parallel = true;
    bool fill_unknown = false;  // closed_form only
};

CartanMatrix cartan_character_matrix(int n, const CartanOptions& opts = {});
CartanMatrix cartan_closed_form_matrix(int n, const CartanOptions& opts = {});

struct QuiverGraph {
    int n = 0;
    std::vector<SimpleIndex> vertices;          // global order
    std::map<std::pair<int, int>, long> arrows;  // (source, target) -> multiplicity
    long arrow_total() const;
};

QuiverGraph quiver(int n);

// Maximum arrow count over directed paths; throws on a cycle.
long longest_path(const QuiverGraph& q);

std::string quiver_dot(const QuiverGraph& q);

}  // namespace sen
