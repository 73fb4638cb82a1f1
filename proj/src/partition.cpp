#include "sen/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sen {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.assign(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

bool partition_order_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();  // lexicographically larger comes first
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("inner shape does not fit inside outer shape");
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> acc;
        enumerate_rec(n, n, acc, out);
        if (out.empty()) out.push_back(Partition{});  // n = 0
        it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
}

mpz_class partition_count(int n) {
    if (n < 0) return 0;
    static std::mutex mu;
    static std::vector<mpz_class> table{1};  // p(0) = 1
    std::lock_guard<std::mutex> lock(mu);
    // p(n, max part m) via the classic two-dimensional recurrence
    if (static_cast<int>(table.size()) <= n) {
        int hi = n;
        std::vector<std::vector<mpz_class>> dp(hi + 1, std::vector<mpz_class>(hi + 1));
        for (int m = 0; m <= hi; ++m) dp[0][m] = 1;
        for (int s = 1; s <= hi; ++s)
            for (int m = 1; m <= hi; ++m) {
                dp[s][m] = dp[s][m - 1];
                if (s >= m) dp[s][m] += dp[s - m][m];
            }
        table.resize(hi + 1);
        for (int s = 0; s <= hi; ++s) table[s] = dp[s][hi];
    }
    return table[n];
}

int partition_index(const Partition& p) {
    const auto& list = partitions_of(p.size());
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == p) return static_cast<int>(i);
    throw std::logic_error("partition_index: partition not found");
}

std::vector<Partition> removable_boxes(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& parts = lambda.parts();
    for (int i = 0; i < lambda.length(); ++i) {
        bool corner = (i + 1 == lambda.length()) || parts[i] > parts[i + 1];
        if (!corner) continue;
        std::vector<int> next = parts;
        if (--next[i] == 0) next.erase(next.begin() + i);
        out.push_back(Partition(std::move(next)));
    }
    return out;
}

namespace {

// Interlacing characterization of a horizontal strip: lambda_i <= mu_i and
// mu_{i+1} <= lambda_i for all rows.
void strip_rec(const Partition& lambda, int row, int remaining, int row_cap,
               std::vector<int>& acc, std::vector<Partition>& out) {
    if (row > lambda.length()) {
        if (remaining == 0) {
            std::vector<int> parts = acc;
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out.push_back(Partition(std::move(parts)));
        }
        return;
    }
    int lo = lambda.part(row);
    int hi = std::min(row_cap, lo + remaining);
    // row 0 is unbounded above
    if (row == 0) hi = lo + remaining;
    for (int v = hi; v >= lo; --v) {
        acc.push_back(v);
        strip_rec(lambda, row + 1, remaining - (v - lo), lambda.part(row), acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> add_horizontal_strip(const Partition& lambda, int r) {
    if (r < 0) throw std::invalid_argument("add_horizontal_strip: r must be non-negative");
    std::vector<Partition> out;
    std::vector<int> acc;
    strip_rec(lambda, 0, r, 0, acc, out);
    std::sort(out.begin(), out.end(), partition_order_less);
    return out;
}

mpz_class hook_dimension(const Partition& lambda) {
    int n = lambda.size();
    Partition conj = lambda.conjugate();
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            int arm = lambda.parts()[i] - j - 1;
            int leg = conj.parts()[j] - i - 1;
            hooks *= arm + leg + 1;
        }
    mpz_class dim = factorial(n) / hooks;
    return dim;
}

mpz_class factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

mpz_class stirling2(int r, int k) {
    if (k < 0 || k > r) return 0;
    if (r == 0) return 1;
    std::vector<std::vector<mpz_class>> dp(r + 1, std::vector<mpz_class>(k + 1));
    dp[0][0] = 1;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            dp[i][j] = dp[i - 1][j - 1] + j * dp[i - 1][j];
    return dp[r][k];
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Partition single_row(int k) {
    if (k < 0) throw std::invalid_argument("single_row: negative size");
    return k == 0 ? Partition{} : Partition(std::vector<int>{k});
}

Partition single_column(int k) {
    if (k < 0) throw std::invalid_argument("single_column: negative size");
    return Partition(std::vector<int>(k, 1));
}

Partition hook_two_one(int k) {
    if (k < 2) throw std::invalid_argument("hook_two_one: needs k >= 2");
    std::vector<int> parts{2};
    parts.insert(parts.end(), k - 2, 1);
    return Partition(std::move(parts));
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("partition must look like [3,1]");
    ++i;
    skip_ws();
    while (i < text.size() && text[i] != ']') {
        size_t used = 0;
        int v = std::stoi(text.substr(i), &used);
        parts.push_back(v);
        i += used;
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size() || text[i] != ']') throw std::invalid_argument("unterminated partition literal");
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters after partition literal");
    return Partition(std::move(parts));
}

}  // namespace sen
