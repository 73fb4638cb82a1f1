#include "sen/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sen {

Perm identity_perm(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose_perm(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose_perm: size mismatch");
    Perm r(p.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Partition cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

int perm_sign(const Perm& p) {
    Partition t = cycle_type(p);
    int transpositions = static_cast<int>(p.size()) - t.length();
    return transpositions % 2 == 0 ? 1 : -1;
}

Perm class_representative(const Partition& mu) {
    Perm p(mu.size());
    int start = 0;
    for (int len : mu.parts()) {
        for (int j = 0; j < len; ++j) p[start + j] = start + (j + 1) % len;
        start += len;
    }
    return p;
}

const std::vector<Perm>& symmetric_group(int m) {
    if (m < 0 || m > 8) throw std::invalid_argument("symmetric_group: m out of supported range");
    static std::mutex mu;
    static std::map<int, std::vector<Perm>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
        std::vector<Perm> all;
        Perm p = identity_perm(m);
        do {
            all.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        it = cache.emplace(m, std::move(all)).first;
    }
    return it->second;
}

}  // namespace sen
