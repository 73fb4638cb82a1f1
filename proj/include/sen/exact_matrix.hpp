#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace sen {

using QVec = std::vector<mpq_class>;

// Dense exact rational matrix.
class QMat {
public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpq_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const QMat&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<mpq_class> a_;
};

// Rank over Q by fraction-free (Bareiss) elimination on a row-scaled
// integer copy.
int rank(const QMat& m);

// Basis of the right kernel {x : m x = 0}; fraction-free forward
// elimination, rational back substitution.
std::vector<QVec> nullspace(const QMat& m);

// Incremental reduced row echelon form over Q.  Rows are normalized to a
// unit pivot and fully reduced, so stored rows form a canonical basis of
// the span.
class EchelonBasis {
public:
    EchelonBasis() = default;
    explicit EchelonBasis(int cols) : cols_(cols) {}

    // Returns true (and stores the reduced vector) if v enlarges the span.
    bool insert(QVec v);
    // Reduces v against the stored rows in place.
    void reduce(QVec& v) const;
    // Membership: reduces to zero.
    bool contains(QVec v) const;
    // Coefficients of v as a combination of the stored rows; nullopt if v
    // is outside the span.
    std::optional<QVec> coordinates(const QVec& v) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    int cols_ = 0;
    std::vector<QVec> rows_;
    std::vector<int> pivots_;  // pivot column per row, strictly increasing order not required
};

}  // namespace sen
