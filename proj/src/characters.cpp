#include "sen/characters.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sen {

mpz_class zee(const CycleType& mu) {
    mpz_class z = 1;
    int run_value = 0, run_count = 0;
    for (int p : mu.parts()) {
        if (p == run_value) ++run_count;
        else { run_value = p; run_count = 1; }
        z *= mpz_class(run_value) * run_count;
    }
    return z;
}

mpz_class class_size(const CycleType& mu) {
    return factorial(mu.size()) / zee(mu);
}

namespace {

// First-column hook lengths ("beta set") of lambda with rows = length.
std::vector<int> beta_set(const Partition& lambda) {
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.parts()[i] + (len - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[i] - (len - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

}  // namespace

mpz_class character_value(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: |lambda| != |mu|");
    static std::mutex memo_mu;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = memo.find({lambda.parts(), mu.parts()});
        if (it != memo.end()) return it->second;
    }
    mpz_class value;
    if (mu.empty()) {
        value = 1;
    } else {
        // peel a border strip of length equal to the largest part of mu
        int t = mu.parts()[0];
        CycleType rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
        std::vector<int> beta = beta_set(lambda);
        std::set<int> present(beta.begin(), beta.end());
        value = 0;
        for (int b : beta) {
            if (b < t || present.count(b - t)) continue;
            int height = 0;
            for (int c : beta)
                if (c > b - t && c < b) ++height;
            std::vector<int> next = beta;
            next.erase(std::find(next.begin(), next.end(), b));
            next.push_back(b - t);
            mpz_class sub = character_value(from_beta(std::move(next)), rest);
            if (height % 2) value -= sub;
            else value += sub;
        }
    }
    std::lock_guard<std::mutex> lock(memo_mu);
    memo.emplace(std::make_pair(lambda.parts(), mu.parts()), value);
    return value;
}

const std::vector<std::vector<mpz_class>>& character_table(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<mpz_class>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) {
        const auto& parts = partitions_of(k);
        std::vector<std::vector<mpz_class>> table(parts.size(),
                                                  std::vector<mpz_class>(parts.size()));
        for (size_t l = 0; l < parts.size(); ++l)
            for (size_t c = 0; c < parts.size(); ++c)
                table[l][c] = character_value(parts[l], parts[c]);
        it = cache.emplace(k, std::move(table)).first;
    }
    return it->second;
}

ClassFunction::ClassFunction(int k, std::vector<mpq_class> values)
    : degrees_{k}, values_(std::move(values)) {
    if (values_.size() != partitions_of(k).size())
        throw std::invalid_argument("ClassFunction: wrong value count");
}

ClassFunction::ClassFunction(int k, int r, std::vector<mpq_class> values)
    : degrees_{k, r}, values_(std::move(values)) {
    if (values_.size() != partitions_of(k).size() * partitions_of(r).size())
        throw std::invalid_argument("ClassFunction: wrong value count");
}

mpq_class ClassFunction::at(const CycleType& mu) const {
    if (is_product()) throw std::invalid_argument("single-group lookup on a product-group class function");
    return values_[partition_index(mu)];
}

mpq_class ClassFunction::at(const CycleType& mu, const CycleType& nu) const {
    if (!is_product()) throw std::invalid_argument("pair lookup on a single-group class function");
    size_t pr = partitions_of(degrees_[1]).size();
    return values_[partition_index(mu) * pr + partition_index(nu)];
}

mpq_class ClassFunction::at_identity() const {
    if (is_product())
        return at(single_column(degrees_[0]), single_column(degrees_[1]));
    return at(single_column(degrees_[0]));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (!same_group(other)) throw std::invalid_argument("class function group mismatch");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction ClassFunction::trivial(int k) {
    return ClassFunction(k, std::vector<mpq_class>(partitions_of(k).size(), 1));
}

ClassFunction ClassFunction::sign(int k) {
    const auto& classes = partitions_of(k);
    std::vector<mpq_class> vals(classes.size());
    for (size_t i = 0; i < classes.size(); ++i) {
        int transpositions = k - classes[i].length();
        vals[i] = (transpositions % 2 == 0) ? 1 : -1;
    }
    return ClassFunction(k, std::move(vals));
}

ClassFunction ClassFunction::irreducible(int k, const Partition& lambda) {
    if (lambda.size() != k) throw std::invalid_argument("irreducible: |lambda| != k");
    const auto& table = character_table(k);
    const auto& row = table[partition_index(lambda)];
    std::vector<mpq_class> vals(row.size());
    for (size_t i = 0; i < row.size(); ++i) vals[i] = row[i];
    return ClassFunction(k, std::move(vals));
}

ClassFunction ClassFunction::tensor(const ClassFunction& a, const ClassFunction& b) {
    if (a.is_product() || b.is_product())
        throw std::invalid_argument("tensor expects single-group factors");
    std::vector<mpq_class> vals;
    vals.reserve(a.values_.size() * b.values_.size());
    for (const auto& x : a.values_)
        for (const auto& y : b.values_) vals.push_back(x * y);
    return ClassFunction(a.degrees_[0], b.degrees_[0], std::move(vals));
}

ClassFunction ClassFunction::trivial_product(int k, int r) {
    return tensor(trivial(k), trivial(r));
}

mpq_class inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (!a.same_group(b)) throw std::invalid_argument("inner_product: group mismatch");
    mpq_class sum = 0;
    if (!a.is_product()) {
        int k = a.degrees()[0];
        const auto& classes = partitions_of(k);
        for (size_t i = 0; i < classes.size(); ++i)
            sum += mpq_class(class_size(classes[i])) * a.values()[i] * b.values()[i];
        sum /= mpq_class(factorial(k));
    } else {
        int k = a.degrees()[0], r = a.degrees()[1];
        const auto& cmu = partitions_of(k);
        const auto& cnu = partitions_of(r);
        size_t idx = 0;
        for (size_t i = 0; i < cmu.size(); ++i)
            for (size_t j = 0; j < cnu.size(); ++j, ++idx)
                sum += mpq_class(class_size(cmu[i]) * class_size(cnu[j])) * a.values()[idx] *
                       b.values()[idx];
        sum /= mpq_class(factorial(k) * factorial(r));
    }
    return sum;
}

ClassFunction restrict_to_product(const ClassFunction& chi, int a, int b) {
    if (chi.is_product()) throw std::invalid_argument("restrict_to_product: expected S_k class function");
    if (a + b != chi.degrees()[0] || a < 0 || b < 0)
        throw std::invalid_argument("restrict_to_product: a + b must equal k");
    const auto& cmu = partitions_of(a);
    const auto& cnu = partitions_of(b);
    std::vector<mpq_class> vals;
    vals.reserve(cmu.size() * cnu.size());
    for (const auto& mu : cmu)
        for (const auto& nu : cnu) {
            std::vector<int> merged = mu.parts();
            merged.insert(merged.end(), nu.parts().begin(), nu.parts().end());
            std::sort(merged.rbegin(), merged.rend());
            vals.push_back(chi.at(Partition(std::move(merged))));
        }
    return ClassFunction(a, b, std::move(vals));
}

namespace {

// All ways to split the part multiset of mu into (mu1 |- a, mu2), each
// unordered split counted once.
void split_rec(const std::vector<std::pair<int, int>>& runs, size_t i, int need,
               std::vector<int>& taken, const std::vector<int>& mu_parts,
               std::vector<std::pair<Partition, Partition>>& out) {
    if (need < 0) return;
    if (i == runs.size()) {
        if (need != 0) return;
        std::vector<int> m1, m2;
        for (size_t j = 0; j < runs.size(); ++j) {
            for (int c = 0; c < taken[j]; ++c) m1.push_back(runs[j].first);
            for (int c = taken[j]; c < runs[j].second; ++c) m2.push_back(runs[j].first);
        }
        std::sort(m1.rbegin(), m1.rend());
        std::sort(m2.rbegin(), m2.rend());
        out.emplace_back(Partition(std::move(m1)), Partition(std::move(m2)));
        return;
    }
    for (int c = 0; c <= runs[i].second && c * runs[i].first <= need; ++c) {
        taken.push_back(c);
        split_rec(runs, i + 1, need - c * runs[i].first, taken, mu_parts, out);
        taken.pop_back();
    }
}

std::vector<std::pair<Partition, Partition>> part_splits(const CycleType& mu, int a) {
    std::vector<std::pair<int, int>> runs;  // (value, multiplicity)
    for (int p : mu.parts()) {
        if (!runs.empty() && runs.back().first == p) ++runs.back().second;
        else runs.emplace_back(p, 1);
    }
    std::vector<std::pair<Partition, Partition>> out;
    std::vector<int> taken;
    split_rec(runs, 0, a, taken, mu.parts(), out);
    return out;
}

ClassFunction induce_product_formula(const ClassFunction& phi, const ClassFunction& psi) {
    int a = phi.degrees()[0], b = psi.degrees()[0];
    const auto& classes = partitions_of(a + b);
    std::vector<mpq_class> vals(classes.size(), 0);
    for (size_t i = 0; i < classes.size(); ++i) {
        mpq_class z_mu(zee(classes[i]));
        for (const auto& [m1, m2] : part_splits(classes[i], a))
            vals[i] += z_mu / mpq_class(zee(m1) * zee(m2)) * phi.at(m1) * psi.at(m2);
    }
    return ClassFunction(a + b, std::move(vals));
}

ClassFunction induce_product_reciprocity(const ClassFunction& phi, const ClassFunction& psi) {
    int a = phi.degrees()[0], b = psi.degrees()[0];
    ClassFunction pair = ClassFunction::tensor(phi, psi);
    const auto& classes = partitions_of(a + b);
    std::vector<mpq_class> vals(classes.size(), 0);
    for (const Partition& gamma : partitions_of(a + b)) {
        ClassFunction chi = ClassFunction::irreducible(a + b, gamma);
        mpq_class coeff = inner_product(pair, restrict_to_product(chi, a, b));
        if (coeff == 0) continue;
        for (size_t i = 0; i < classes.size(); ++i)
            vals[i] += coeff * chi.values()[i];
    }
    return ClassFunction(a + b, std::move(vals));
}

}  // namespace

ClassFunction induce_product(const ClassFunction& phi, const ClassFunction& psi) {
    if (phi.is_product() || psi.is_product())
        throw std::invalid_argument("induce_product expects single-group factors");
    ClassFunction by_formula = induce_product_formula(phi, psi);
    ClassFunction by_reciprocity = induce_product_reciprocity(phi, psi);
    if (by_formula.values() != by_reciprocity.values())
        throw std::logic_error("induce_product: the two computation routes disagree");
    return by_formula;
}

ClassFunction induce_from_subgroup(const std::vector<Perm>& elements,
                                   const std::vector<mpq_class>& values) {
    if (elements.empty() || elements.size() != values.size())
        throw std::invalid_argument("induce_from_subgroup: empty subgroup or value count mismatch");
    int m = static_cast<int>(elements[0].size());
    if (m > 6) throw std::invalid_argument("induce_from_subgroup: degree above direct-summation guard");
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < elements.size(); ++i) {
        if (static_cast<int>(elements[i].size()) != m || !is_permutation(elements[i]))
            throw std::invalid_argument("induce_from_subgroup: bad element");
        index[elements[i]] = i;
    }
    for (const auto& g : elements)
        for (const auto& h : elements)
            if (!index.count(compose_perm(g, h)))
                throw std::invalid_argument("induce_from_subgroup: elements not closed under composition");
    // chi must be a class function of the subgroup
    for (const auto& g : elements)
        for (const auto& x : elements) {
            Perm conj = compose_perm(compose_perm(x, g), inverse_perm(x));
            if (values[index.at(conj)] != values[index.at(g)])
                throw std::invalid_argument("induce_from_subgroup: values not constant on classes");
        }
    const auto& ambient = symmetric_group(m);
    const auto& classes = partitions_of(m);
    std::vector<mpq_class> vals(classes.size(), 0);
    for (size_t c = 0; c < classes.size(); ++c) {
        Perm g = class_representative(classes[c]);
        mpq_class sum = 0;
        for (const auto& x : ambient) {
            Perm conj = compose_perm(compose_perm(inverse_perm(x), g), x);
            auto it = index.find(conj);
            if (it != index.end()) sum += values[it->second];
        }
        vals[c] = sum / mpq_class(static_cast<long>(elements.size()));
    }
    return ClassFunction(m, std::move(vals));
}

ClassFunction induce_trivial_from_product_subgroup(
    const std::vector<std::pair<Perm, Perm>>& elements, int k, int r) {
    if (elements.empty())
        throw std::invalid_argument("induce_trivial_from_product_subgroup: empty subgroup");
    std::set<std::pair<Perm, Perm>> members(elements.begin(), elements.end());
    for (const auto& [g1, g2] : elements)
        for (const auto& [h1, h2] : elements)
            if (!members.count({compose_perm(g1, h1), compose_perm(g2, h2)}))
                throw std::invalid_argument("induce_trivial_from_product_subgroup: not closed");
    const auto& left = symmetric_group(k);
    const auto& right = symmetric_group(r);
    const auto& cmu = partitions_of(k);
    const auto& cnu = partitions_of(r);
    std::vector<mpq_class> vals(cmu.size() * cnu.size(), 0);
    size_t idx = 0;
    for (const auto& mu : cmu) {
        Perm g = class_representative(mu);
        // precompute the conjugates of g once per mu
        std::vector<Perm> gconj;
        gconj.reserve(left.size());
        for (const auto& x : left)
            gconj.push_back(compose_perm(compose_perm(inverse_perm(x), g), x));
        for (const auto& nu : cnu) {
            Perm h = class_representative(nu);
            long count = 0;
            for (const auto& y : right) {
                Perm hc = compose_perm(compose_perm(inverse_perm(y), h), y);
                for (const auto& gc : gconj)
                    if (members.count({gc, hc})) ++count;
            }
            vals[idx++] = mpq_class(count) / mpq_class(static_cast<long>(elements.size()));
        }
    }
    return ClassFunction(k, r, std::move(vals));
}

std::map<Partition, mpz_class, PartitionLess> decompose(const ClassFunction& chi) {
    if (chi.is_product()) throw std::invalid_argument("decompose: use decompose_product");
    int k = chi.degrees()[0];
    std::map<Partition, mpz_class, PartitionLess> out;
    mpz_class dim_total = 0;
    for (const Partition& lambda : partitions_of(k)) {
        mpq_class c = inner_product(chi, ClassFunction::irreducible(k, lambda));
        if (c.get_den() != 1 || c < 0)
            throw std::invalid_argument("decompose: not a character (multiplicity " +
                                        c.get_str() + " at " + lambda.to_string() + ")");
        if (c != 0) {
            out[lambda] = c.get_num();
            dim_total += c.get_num() * hook_dimension(lambda);
        }
    }
    if (mpq_class(dim_total) != chi.at_identity())
        throw std::invalid_argument("decompose: dimension count mismatch");
    return out;
}

std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairLess> decompose_product(const ClassFunction& chi) {
    if (!chi.is_product()) throw std::invalid_argument("decompose_product: use decompose");
    int k = chi.degrees()[0], r = chi.degrees()[1];
    std::map<std::pair<Partition, Partition>, mpz_class, PartitionPairLess> out;
    mpz_class dim_total = 0;
    for (const Partition& beta : partitions_of(k))
        for (const Partition& alpha : partitions_of(r)) {
            ClassFunction irr = ClassFunction::tensor(ClassFunction::irreducible(k, beta),
                                                      ClassFunction::irreducible(r, alpha));
            mpq_class c = inner_product(chi, irr);
            if (c.get_den() != 1 || c < 0)
                throw std::invalid_argument("decompose_product: not a character");
            if (c != 0) {
                out[{beta, alpha}] = c.get_num();
                dim_total += c.get_num() * hook_dimension(beta) * hook_dimension(alpha);
            }
        }
    if (mpq_class(dim_total) != chi.at_identity())
        throw std::invalid_argument("decompose_product: dimension count mismatch");
    return out;
}

const std::vector<Perm>& dihedral_group() {
    static const std::vector<Perm> elems = {
        {0, 1, 2, 3},  // id
        {1, 0, 2, 3},  // (12)
        {0, 1, 3, 2},  // (34)
        {1, 0, 3, 2},  // (12)(34)
        {2, 3, 0, 1},  // (13)(24)
        {3, 2, 1, 0},  // (14)(23)
        {2, 3, 1, 0},  // (1324)
        {3, 2, 0, 1},  // (1423)
    };
    return elems;
}

const std::vector<mpq_class>& dihedral_pulled_back_sign() {
    static const std::vector<mpq_class> vals = {1, 1, 1, 1, -1, -1, -1, -1};
    return vals;
}

const std::vector<Perm>& dihedral_quotient_map() {
    static const std::vector<Perm> nu = {
        {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 0}, {1, 0},
    };
    return nu;
}

}  // namespace sen
