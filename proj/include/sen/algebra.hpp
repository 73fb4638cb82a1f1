#pragma once

#include "sen/cartan.hpp"
#include "sen/exact_matrix.hpp"
#include "sen/surjection.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sen {

// Size guard declined a computation; rerun with the override flag.
struct GuardRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact build-time certificate failed; every result of the build is
// suspect, so this is fatal.
struct CertificateFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------
// Group algebra Q S_k with dense coefficient vectors over the elements of
// symmetric_group(k).

using GroupVec = std::vector<mpq_class>;

class GroupAlgebra {
public:
    static const GroupAlgebra& of(int k);  // cached; k <= 6

    int k() const { return k_; }
    int order() const { return static_cast<int>(elements_->size()); }
    const std::vector<Perm>& elements() const { return *elements_; }
    int index_of(const Perm& p) const;
    int mult_index(int i, int j) const { return mult_[static_cast<size_t>(i) * order() + j]; }

    GroupVec zero() const { return GroupVec(order(), 0); }
    GroupVec unit() const;
    GroupVec mul(const GroupVec& x, const GroupVec& y) const;
    GroupVec mul_perm_right(const GroupVec& x, int g) const;  // x * elements[g]
    GroupVec mul_perm_left(int g, const GroupVec& x) const;   // elements[g] * x

private:
    explicit GroupAlgebra(int k);
    int k_;
    const std::vector<Perm>* elements_;
    std::vector<int32_t> mult_;
    std::map<Perm, int> index_;
};

// Standard Young tableaux of the shape, each as rows of 1-based entries;
// the row-filled tableau comes first.
std::vector<std::vector<std::vector<int>>> standard_tableaux(const Partition& lambda);

// Scaled row/column symmetrizer of a tableau: (dim/k!) a b, an exact
// primitive idempotent of Q S_k.  Idempotency is certified on
// construction.
GroupVec young_symmetrizer_of_tableau(int k, const std::vector<std::vector<int>>& rows);
// The canonical choice: the row-filled tableau of the shape.
GroupVec young_symmetrizer(int k, const Partition& lambda);

struct LevelIdempotent {
    Partition lambda;
    bool distinguished;  // canonical representative of its shape
    GroupVec vec;
};

// Complete system of orthogonal idempotents of Q S_k: tableau symmetrizers
// refined sequentially (subtract overlaps against the accepted sum, then
// re-idempotentize).  Certified exactly: idempotency, pairwise two-sided
// orthogonality, unit sum, and primitivity (dim e A_k e = 1) of the
// distinguished members.
const std::vector<LevelIdempotent>& level_idempotent_system(int k);

// ---------------------------------------------------------------------

struct Resolution {
    Partition simple;
    std::vector<std::vector<long>> terms;  // per degree, over SimpleOrder(n)
    // connecting data: images in the previous module's ambient coordinates
    // of the generators of each cover
    std::vector<std::vector<QVec>> connecting;
    bool truncated = false;

    int projective_dimension() const;  // throws when truncated
};

class Algebra;

// A concrete subquotient module: representative vectors in an ambient
// direct sum of copies of the algebra, with an optional subspace to
// quotient by.  Action matrices are exact and computed on demand.
class ModuleRep {
public:
    int dimension() const { return basis_.rank(); }
    int copies() const { return copies_; }
    QMat action(int basis_index) const;

private:
    friend class Algebra;
    ModuleRep(const Algebra* a, int copies, EchelonBasis basis, EchelonBasis quotient)
        : algebra_(a), copies_(copies), basis_(std::move(basis)), quotient_(std::move(quotient)) {}
    const Algebra* algebra_;
    int copies_;
    EchelonBasis basis_;
    EchelonBasis quotient_;
};

// The category algebra of all surjections between sets of size <= n over
// Q: basis morphisms, structure constants, distinguished idempotents, the
// radical, and the module machinery built from them.
class Algebra {
public:
    // Default size guard: n <= 5.
    static Algebra build(int n, bool force = false);

    int n() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Surjection>& basis() const { return basis_; }
    const Surjection& basis_at(int i) const { return basis_[i]; }

    // Index of g . f, or -1 when the composite does not exist (the product
    // is zero in the algebra).
    int product(int g, int f) const { return prod_[static_cast<size_t>(g) * dim() + f]; }
    std::pair<int, int> hom_range(int r, int k) const;  // [begin, end)
    int index_of(const Surjection& s) const;
    int identity_index(int k) const { return identity_idx_[k]; }

    // Basis morphisms with domain strictly larger than codomain; certified
    // at build time to span a nilpotent two-sided ideal with semisimple
    // quotient of dimension sum k!.
    const std::vector<int>& radical() const { return radical_; }

    using Elem = std::vector<std::pair<int, mpq_class>>;  // sparse, index-sorted
    const Elem& idempotent(const Partition& lambda) const;

    // dim e_beta A e_alpha as the rank of {e_beta f e_alpha}.
    long cartan_entry(const Partition& beta, const Partition& alpha) const;
    CartanMatrix cartan_matrix(bool parallel = true) const;

    ModuleRep projective_module(const Partition& lambda) const;
    ModuleRep simple_module(const Partition& lambda) const;

    Resolution minimal_resolution(const Partition& lambda, int max_len) const;
    long ext_dim(const Partition& lambda, const Partition& mu, int degree) const;
    int global_dimension(bool parallel = true) const;

    // Left action of a basis morphism (or sparse element) on a vector over
    // an ambient direct sum of copies of the algebra.
    QVec act_basis(int g, const QVec& v) const;
    QVec act_elem(const Elem& x, const QVec& v) const;

private:
    Algebra() = default;
    void run_radical_certificates() const;

    struct Mod {  // internal submodule form
        int copies;
        std::vector<Partition> gens;
        EchelonBasis basis;
    };
    const Mod& projective_mod(const Partition& lambda) const;
    EchelonBasis radical_span(const Mod& m) const;
    struct CoverResult {
        std::vector<long> multiplicities;
        std::vector<QVec> generator_images;
        Mod kernel;
    };
    CoverResult cover_and_kernel(const Mod& m) const;

    int n_ = 0;
    std::vector<Surjection> basis_;
    std::vector<int32_t> prod_;
    std::map<std::pair<int, int>, std::pair<int, int>> ranges_;
    std::vector<int> identity_idx_;
    std::vector<int> radical_;
    std::map<Partition, Elem, PartitionLess> idempotents_;

    struct Caches {
        std::mutex mu;
        std::map<Partition, std::shared_ptr<Mod>, PartitionLess> projectives;
        std::map<Partition, Resolution, PartitionLess> resolutions;
    };
    std::shared_ptr<Caches> caches_ = std::make_shared<Caches>();
};

mpz_class algebra_dimension(int n);  // sum over k <= r <= n of k! S(r, k)

struct FullCartanOptions {
    bool parallel = true;
    bool fill_unknown = false;     // closed_form only
    bool force = false;            // oracle guard override
    const Algebra* algebra = nullptr;  // reuse a built oracle
};

CartanMatrix full_cartan(int n, CartanMethod method, const FullCartanOptions& opts = {});

}  // namespace sen
