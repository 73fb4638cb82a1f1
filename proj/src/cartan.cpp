#include "sen/cartan.hpp"

#include "sen/characters.hpp"
#include "sen/surjection.hpp"
#include "sen/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace sen {

SimpleOrder::SimpleOrder(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("SimpleOrder: n must be non-negative");
    for (int k = 0; k <= n; ++k)
        for (const Partition& lambda : partitions_of(k)) items_.push_back({k, lambda});
}

int SimpleOrder::index_of(const Partition& lambda) const {
    int k = lambda.size();
    if (k > n_) throw std::invalid_argument("SimpleOrder: partition above top level");
    int offset = 0;
    for (int j = 0; j < k; ++j) offset += static_cast<int>(partitions_of(j).size());
    return offset + partition_index(lambda);
}

const char* cartan_method_name(CartanMethod m) {
    switch (m) {
        case CartanMethod::character: return "character";
        case CartanMethod::closed_form: return "closed_form";
        case CartanMethod::oracle: return "oracle";
    }
    return "?";
}

void check_cartan_invariants(const CartanMatrix& c) {
    SimpleOrder order(c.n);
    for (int i = 0; i < order.size(); ++i)
        for (int j = 0; j < order.size(); ++j) {
            long v = c.at(i, j);
            if (v == kUnknownEntry && c.method == CartanMethod::closed_form) continue;
            if (v < 0) throw std::logic_error("Cartan matrix has a negative entry");
            int li = order.at(i).level, lj = order.at(j).level;
            if (li > lj && v != 0)
                throw std::logic_error("Cartan matrix not block upper triangular");
            if (li == lj && v != (i == j ? 1 : 0))
                throw std::logic_error("Cartan diagonal block is not the identity");
        }
}

long cartan_entry_character(const Partition& beta, const Partition& alpha) {
    int k = beta.size(), r = alpha.size();
    if (r < k || (k == 0 && r > 0)) return 0;  // empty hom-set
    const ClassFunction& hom = hom_character_cached(r, k);
    ClassFunction pair = ClassFunction::tensor(ClassFunction::irreducible(k, beta),
                                               ClassFunction::irreducible(r, alpha));
    mpq_class m = inner_product(pair, hom);
    if (m.get_den() != 1 || m < 0)
        throw std::logic_error("cartan_entry_character: multiplicity not a non-negative integer");
    return static_cast<long>(m.get_num().get_si());
}

long first_superdiagonal_entry(const Partition& beta, const Partition& alpha) {
    if (alpha.size() != beta.size() + 1)
        throw std::invalid_argument("first_superdiagonal_entry: |alpha| != |beta| + 1");
    long ways = 0;
    for (const Partition& mu : removable_boxes(beta)) {
        const auto strips = add_horizontal_strip(mu, 2);
        ways += std::count(strips.begin(), strips.end(), alpha);
    }
    return ways;
}

const std::vector<Partition>& square_symmetry_trivial_induction() {
    static const std::vector<Partition> parts = {single_row(4), Partition({2, 2})};
    return parts;
}

const std::vector<Partition>& square_symmetry_sign_induction() {
    static const std::vector<Partition> parts = {Partition({3, 1})};
    return parts;
}

long second_superdiagonal_entry(const Partition& beta, const Partition& alpha) {
    int k = beta.size();
    if (alpha.size() != k + 2)
        throw std::invalid_argument("second_superdiagonal_entry: |alpha| != |beta| + 2");
    if (k < 1) throw std::invalid_argument("second_superdiagonal_entry: |beta| must be at least 1");
    // remove one box, then add a three-box horizontal strip
    long m1 = 0;
    for (const Partition& mu : removable_boxes(beta)) {
        const auto strips = add_horizontal_strip(mu, 3);
        m1 += std::count(strips.begin(), strips.end(), alpha);
    }
    // two-pair-collapse route: branch beta over S_{k-2} x S_2, substitute
    // the degree-one characters of the square-symmetry subgroup by their
    // inductions to S_4, then expand up to S_{k+2}
    long m2 = 0;
    if (k >= 2) {
        const Partition two({2}), one_one({1, 1});
        for (const Partition& gamma : partitions_of(k - 2)) {
            long c_trivial = lr_coefficient(gamma, two, beta);
            long c_sign = lr_coefficient(gamma, one_one, beta);
            if (c_trivial != 0)
                for (const Partition& delta : square_symmetry_trivial_induction())
                    m2 += c_trivial * lr_coefficient(gamma, delta, alpha);
            if (c_sign != 0)
                for (const Partition& delta : square_symmetry_sign_induction())
                    m2 += c_sign * lr_coefficient(gamma, delta, alpha);
        }
    }
    return m1 + m2;
}

namespace {

CartanMatrix make_matrix(int n, CartanMethod method) {
    CartanMatrix c;
    c.n = n;
    c.p = SimpleOrder(n).size();
    c.method = method;
    c.entries.assign(static_cast<size_t>(c.p) * c.p, 0);
    return c;
}

}  // namespace

CartanMatrix cartan_character_matrix(int n, const CartanOptions& opts) {
    SimpleOrder order(n);
    CartanMatrix c = make_matrix(n, CartanMethod::character);
    // warm the shared caches before the parallel sweep
    for (int k = 0; k <= n; ++k) {
        character_table(k);
        for (int r = k; r <= n; ++r) hom_character_cached(r, k);
    }
    const int p = order.size();
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int idx = 0; idx < p * p; ++idx) {
        int i = idx / p, j = idx % p;
        c.entries[idx] = cartan_entry_character(order.at(i).lambda, order.at(j).lambda);
    }
    check_cartan_invariants(c);
    return c;
}

CartanMatrix cartan_closed_form_matrix(int n, const CartanOptions& opts) {
    SimpleOrder order(n);
    CartanMatrix c = make_matrix(n, CartanMethod::closed_form);
    const int p = order.size();
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
    for (int idx = 0; idx < p * p; ++idx) {
        int i = idx / p, j = idx % p;
        const Partition& beta = order.at(i).lambda;
        const Partition& alpha = order.at(j).lambda;
        int k = beta.size(), r = alpha.size();
        long v = 0;
        if (r < k || (k == 0 && r > 0)) v = 0;  // empty hom-set
        else if (r == k) v = (beta == alpha) ? 1 : 0;
        else if (r == k + 1) v = first_superdiagonal_entry(beta, alpha);
        else if (r == k + 2) v = second_superdiagonal_entry(beta, alpha);
        else v = kUnknownEntry;  // no closed form at offset >= 3
        c.entries[idx] = v;
    }
    bool has_unknown =
        std::find(c.entries.begin(), c.entries.end(), kUnknownEntry) != c.entries.end();
    if (has_unknown && !opts.fill_unknown)
        throw std::invalid_argument(
            "closed-form method covers offsets 0..2 only; request the unknown-marker fill "
            "policy or use the character method");
    check_cartan_invariants(c);
    return c;
}

QuiverGraph quiver(int n) {
    SimpleOrder order(n);
    QuiverGraph q;
    q.n = n;
    for (int i = 0; i < order.size(); ++i) q.vertices.push_back(order.at(i));
    for (int i = 0; i < order.size(); ++i) {
        const SimpleIndex& src = order.at(i);
        if (src.level == 0) continue;
        for (const Partition& beta : partitions_of(src.level - 1)) {
            long mult = first_superdiagonal_entry(beta, src.lambda);
            if (mult != 0) q.arrows[{i, order.index_of(beta)}] = mult;
        }
    }
    return q;
}

long QuiverGraph::arrow_total() const {
    long t = 0;
    for (const auto& [edge, mult] : arrows) t += mult;
    return t;
}

long longest_path(const QuiverGraph& q) {
    int v = static_cast<int>(q.vertices.size());
    std::vector<int> indegree(v, 0);
    for (const auto& [edge, mult] : q.arrows) ++indegree[edge.second];
    std::vector<int> topo;
    for (int i = 0; i < v; ++i)
        if (indegree[i] == 0) topo.push_back(i);
    for (size_t head = 0; head < topo.size(); ++head)
        for (const auto& [edge, mult] : q.arrows)
            if (edge.first == topo[head] && --indegree[edge.second] == 0)
                topo.push_back(edge.second);
    if (static_cast<int>(topo.size()) != v)
        throw std::invalid_argument("longest_path: graph has a cycle");
    std::vector<long> best(v, 0);
    long answer = 0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (const auto& [edge, mult] : q.arrows)
            if (edge.first == *it) best[*it] = std::max(best[*it], 1 + best[edge.second]);
        answer = std::max(answer, best[*it]);
    }
    return answer;
}

std::string quiver_dot(const QuiverGraph& q) {
    std::string out = "digraph quiver {\n";
    for (const SimpleIndex& v : q.vertices)
        out += "  \"" + v.lambda.to_string() + "\";\n";
    for (const auto& [edge, mult] : q.arrows)
        for (long m = 0; m < mult; ++m)
            out += "  \"" + q.vertices[edge.first].lambda.to_string() + "\" -> \"" +
                   q.vertices[edge.second].lambda.to_string() + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace sen
