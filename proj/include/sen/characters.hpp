#pragma once

#include "sen/partition.hpp"
#include "sen/permutation.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace sen {

// Cycle types are partitions of k; the class order is the canonical
// partition order, so the identity class [1^k] comes last.
using CycleType = Partition;

mpz_class zee(const CycleType& mu);         // centralizer order
mpz_class class_size(const CycleType& mu);  // k! / zee

// Murnaghan-Nakayama value of the irreducible character chi^lambda at the
// class mu.  Memoized on (lambda, mu).
mpz_class character_value(const Partition& lambda, const CycleType& mu);

// Full table for S_k: [index of lambda][index of mu].  Cached.
const std::vector<std::vector<mpz_class>>& character_table(int k);

// Exact class function on S_k or on S_k x S_r.  Product-group values are
// stored classwise at index i_mu * p(r) + i_nu.
class ClassFunction {
public:
    ClassFunction(int k, std::vector<mpq_class> values);
    ClassFunction(int k, int r, std::vector<mpq_class> values);

    bool is_product() const { return degrees_.size() == 2; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<mpq_class>& values() const { return values_; }
    bool same_group(const ClassFunction& other) const { return degrees_ == other.degrees_; }

    mpq_class at(const CycleType& mu) const;
    mpq_class at(const CycleType& mu, const CycleType& nu) const;
    mpq_class at_identity() const;

    ClassFunction& operator+=(const ClassFunction& other);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }

    static ClassFunction trivial(int k);
    static ClassFunction sign(int k);
    static ClassFunction irreducible(int k, const Partition& lambda);
    static ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
    static ClassFunction trivial_product(int k, int r);

private:
    std::vector<int> degrees_;
    std::vector<mpq_class> values_;
};

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b);

// Restriction from S_k to the Young subgroup S_a x S_b, a + b = k.
ClassFunction restrict_to_product(const ClassFunction& chi, int a, int b);

// Induction of phi (x) psi from S_a x S_b to S_{a+b}.  Computed by the
// classwise induction formula and cross-checked against the
// decompose-then-reassemble route; the two must agree.
ClassFunction induce_product(const ClassFunction& phi, const ClassFunction& psi);

// Induction from an explicitly enumerated subgroup of S_m, with the
// character given by one value per listed element (constant on the
// subgroup's conjugacy classes).  Direct summation over S_m; m <= 6.
ClassFunction induce_from_subgroup(const std::vector<Perm>& elements,
                                   const std::vector<mpq_class>& values);

// Induction of the trivial character from an explicit subgroup of
// S_k x S_r, given as a list of pairs.
ClassFunction induce_trivial_from_product_subgroup(
    const std::vector<std::pair<Perm, Perm>>& elements, int k, int r);

// Decomposition into irreducibles; throws if any multiplicity is negative
// or non-integral.
std::map<Partition, mpz_class, PartitionLess> decompose(const ClassFunction& chi);
std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairLess> decompose_product(const ClassFunction& chi);

// The dihedral group on a square, as the subgroup of S_4 generated by
// (12) and (13)(24), listed in a fixed order: the first four elements
// keep the corner pairs {1,2} and {3,4} in place.
const std::vector<Perm>& dihedral_group();
// The degree-one character of the dihedral group pulled back from the
// sign of S_2 along the corner-pair quotient: +1 on the first four
// elements, -1 on the rest.
const std::vector<mpq_class>& dihedral_pulled_back_sign();
// The corner-pair quotient map onto S_2, one image per listed element.
const std::vector<Perm>& dihedral_quotient_map();

}  // namespace sen
