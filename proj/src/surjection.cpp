#include "sen/surjection.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace sen {

Surjection::Surjection(int r, int k, std::vector<int> imgs)
    : domain(r), codomain(k), images(std::move(imgs)) {
    if (r < 0 || k < 0 || static_cast<int>(images.size()) != r)
        throw std::invalid_argument("Surjection: bad sizes");
    std::vector<bool> hit(k, false);
    for (int v : images) {
        if (v < 0 || v >= k) throw std::invalid_argument("Surjection: image out of range");
        hit[v] = true;
    }
    for (bool h : hit)
        if (!h) throw std::invalid_argument("Surjection: not onto");
}

std::string Surjection::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(images[i] + 1);
    }
    return s + ")";
}

namespace {

void enumerate_rec(int r, int k, int pos, int missing, std::vector<int>& acc,
                   std::vector<Surjection>& out) {
    if (r - pos < missing) return;  // cannot become onto
    if (pos == r) {
        out.emplace_back(r, k, acc);
        return;
    }
    for (int v = 0; v < k; ++v) {
        bool fresh = std::find(acc.begin(), acc.begin() + pos, v) == acc.begin() + pos;
        acc[pos] = v;
        enumerate_rec(r, k, pos + 1, missing - (fresh ? 1 : 0), acc, out);
    }
}

}  // namespace

const std::vector<Surjection>& surjections(int r, int k) {
    if (r < 0 || k < 0 || r > 12) throw std::invalid_argument("surjections: out of supported range");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Surjection>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({r, k});
    if (it == cache.end()) {
        std::vector<Surjection> out;
        if (r == 0 && k == 0) {
            out.emplace_back();
        } else if (r >= k && k >= 1) {
            std::vector<int> acc(r);
            enumerate_rec(r, k, 0, k, acc, out);
        }
        it = cache.emplace(std::make_pair(r, k), std::move(out)).first;
    }
    return it->second;
}

Surjection compose(const Surjection& g, const Surjection& f) {
    if (f.codomain != g.domain) throw std::invalid_argument("compose: codomain/domain mismatch");
    std::vector<int> imgs(f.domain);
    for (int i = 0; i < f.domain; ++i) imgs[i] = g.images[f.images[i]];
    return Surjection(f.domain, g.codomain, std::move(imgs));
}

Surjection collapse_triple(int k) {
    if (k < 1) throw std::invalid_argument("collapse_triple: k must be at least 1");
    std::vector<int> imgs(k + 2);
    for (int i = 0; i < k; ++i) imgs[i] = i;
    imgs[k] = imgs[k + 1] = k - 1;
    return Surjection(k + 2, k, std::move(imgs));
}

Surjection collapse_two_pairs(int k) {
    if (k < 2) throw std::invalid_argument("collapse_two_pairs: k must be at least 2");
    std::vector<int> imgs(k + 2);
    for (int i = 0; i < k - 1; ++i) imgs[i] = i;
    imgs[k - 1] = k - 2;
    imgs[k] = imgs[k + 1] = k - 1;
    return Surjection(k + 2, k, std::move(imgs));
}

Partition kernel_type(const Surjection& f) {
    std::vector<int> fiber(f.codomain, 0);
    for (int v : f.images) ++fiber[v];
    std::sort(fiber.rbegin(), fiber.rend());
    return Partition(std::move(fiber));
}

Surjection act(const Perm& sigma, const Perm& pi, const Surjection& f) {
    if (static_cast<int>(sigma.size()) != f.codomain || static_cast<int>(pi.size()) != f.domain)
        throw std::invalid_argument("act: size mismatch");
    Perm pinv = inverse_perm(pi);
    std::vector<int> imgs(f.domain);
    for (int i = 0; i < f.domain; ++i) imgs[i] = sigma[f.images[pinv[i]]];
    return Surjection(f.domain, f.codomain, std::move(imgs));
}

namespace {

// Orbit closure under the generating pairs (adjacent transpositions on
// either side).
std::set<Surjection> orbit_closure(const Surjection& start) {
    int k = start.codomain, r = start.domain;
    std::vector<std::pair<Perm, Perm>> gens;
    for (int i = 0; i + 1 < k; ++i) {
        Perm s = identity_perm(k);
        std::swap(s[i], s[i + 1]);
        gens.emplace_back(s, identity_perm(r));
    }
    for (int i = 0; i + 1 < r; ++i) {
        Perm s = identity_perm(r);
        std::swap(s[i], s[i + 1]);
        gens.emplace_back(identity_perm(k), s);
    }
    std::set<Surjection> seen{start};
    std::vector<Surjection> frontier{start};
    while (!frontier.empty()) {
        std::vector<Surjection> next;
        for (const auto& f : frontier)
            for (const auto& [s, p] : gens) {
                Surjection g = act(s, p, f);
                if (seen.insert(g).second) next.push_back(g);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace

SecondLevelOrbits second_level_orbits(int k) {
    if (k < 2) throw std::invalid_argument("second_level_orbits: k must be at least 2");
    Partition triple_type = kernel_type(collapse_triple(k));
    Partition pair_type = kernel_type(collapse_two_pairs(k));
    SecondLevelOrbits out;
    for (const Surjection& f : surjections(k + 2, k)) {
        Partition t = kernel_type(f);
        if (t == triple_type) out.triple.push_back(f);
        else if (t == pair_type) out.two_pairs.push_back(f);
        else throw std::logic_error("second_level_orbits: unexpected kernel type");
    }
    std::set<Surjection> o1 = orbit_closure(collapse_triple(k));
    std::set<Surjection> o2 = orbit_closure(collapse_two_pairs(k));
    if (o1 != std::set<Surjection>(out.triple.begin(), out.triple.end()) ||
        o2 != std::set<Surjection>(out.two_pairs.begin(), out.two_pairs.end()))
        throw std::logic_error("second_level_orbits: kernel-type classes are not single orbits");
    return out;
}

ClassFunction hom_permutation_character(int r, int k, bool parallel) {
    const auto& homset = surjections(r, k);
    const auto& cmu = partitions_of(k);
    const auto& cnu = partitions_of(r);
    std::vector<Perm> mu_reps, nu_reps;
    for (const auto& mu : cmu) mu_reps.push_back(class_representative(mu));
    for (const auto& nu : cnu) nu_reps.push_back(class_representative(nu));
    const long total = static_cast<long>(cmu.size() * cnu.size());
    std::vector<mpq_class> vals(total);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long idx = 0; idx < total; ++idx) {
        const Perm& sigma = mu_reps[idx / cnu.size()];
        const Perm& pi = nu_reps[idx % cnu.size()];
        long fixed = 0;
        for (const Surjection& f : homset) {
            bool ok = true;
            for (int i = 0; i < r && ok; ++i)
                ok = sigma[f.images[i]] == f.images[pi[i]];
            if (ok) ++fixed;
        }
        vals[idx] = fixed;
    }
    return ClassFunction(k, r, std::move(vals));
}

const ClassFunction& hom_character_cached(int r, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ClassFunction> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({r, k});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(r, k), hom_permutation_character(r, k, false)).first;
    return it->second;
}

}  // namespace sen
