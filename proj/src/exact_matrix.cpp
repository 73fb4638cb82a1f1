#include "sen/exact_matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace sen {

namespace {

// Row-scaled integer copy: multiplying a row by a positive constant
// changes neither the rank nor the kernel.
std::vector<std::vector<mpz_class>> integerize(const QMat& m) {
    std::vector<std::vector<mpz_class>> M(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class scale = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            mpq_class v = m.at(i, j) * mpq_class(scale);
            assert(v.get_den() == 1);
            M[i][j] = v.get_num();
        }
    }
    return M;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> m;
    std::vector<int> pivot_cols;  // one per pivot row 0..rank-1
};

// Fraction-free forward elimination: every intermediate entry stays an
// integer (a minor of the input), divisions are exact.
Echelon bareiss_forward(std::vector<std::vector<mpz_class>> M) {
    Echelon e;
    if (M.empty()) return {std::move(M), {}};
    int rows = static_cast<int>(M.size());
    int cols = static_cast<int>(M[0].size());
    mpz_class prev = 1;
    int row = 0;
    std::vector<int> pivots;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (M[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(M[row], M[p]);
        const mpz_class pivot = M[row][col];
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                mpz_class t = M[i][j] * pivot - M[i][col] * M[row][j];
                mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M[i][col] = 0;
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }
    return {std::move(M), std::move(pivots)};
}

}  // namespace

int rank(const QMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Echelon e = bareiss_forward(integerize(m));
    return static_cast<int>(e.pivot_cols.size());
}

std::vector<QVec> nullspace(const QMat& m) {
    int n = m.cols();
    if (n == 0) return {};
    if (m.rows() == 0) {
        std::vector<QVec> basis;
        for (int j = 0; j < n; ++j) {
            QVec v(n, 0);
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    Echelon e = bareiss_forward(integerize(m));
    int r = static_cast<int>(e.pivot_cols.size());
    std::vector<bool> is_pivot(n, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec x(n, 0);
        x[free_col] = 1;
        for (int row = r - 1; row >= 0; --row) {
            int pc = e.pivot_cols[row];
            if (pc > free_col) continue;
            mpq_class sum = 0;
            for (int j = pc + 1; j < n; ++j)
                if (x[j] != 0) sum += mpq_class(e.m[row][j]) * x[j];
            x[pc] = -sum / mpq_class(e.m[row][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

bool EchelonBasis::insert(QVec v) {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("EchelonBasis: vector length mismatch");
    reduce(v);
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (v[j] != 0) { pivot = j; break; }
    if (pivot < 0) return false;
    mpq_class inv = v[pivot];
    for (int j = pivot; j < cols_; ++j)
        if (v[j] != 0) v[j] /= inv;
    // keep earlier rows reduced against the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        mpq_class c = rows_[i][pivot];
        if (c == 0) continue;
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) rows_[i][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

void EchelonBasis::reduce(QVec& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        mpq_class c = v[pivots_[i]];
        if (c == 0) continue;
        const QVec& row = rows_[i];
        for (int j = 0; j < cols_; ++j)
            if (row[j] != 0) v[j] -= c * row[j];
    }
}

bool EchelonBasis::contains(QVec v) const {
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

std::optional<QVec> EchelonBasis::coordinates(const QVec& v) const {
    QVec w = v;
    QVec coords(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        mpq_class c = w[pivots_[i]];
        coords[i] = c;
        if (c == 0) continue;
        const QVec& row = rows_[i];
        for (int j = 0; j < cols_; ++j)
            if (row[j] != 0) w[j] -= c * row[j];
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    return coords;
}

}  // namespace sen
