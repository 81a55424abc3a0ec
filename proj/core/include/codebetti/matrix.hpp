#pragma once

#include <cstddef>
#include <vector>

#include "codebetti/gf.hpp"
#include "codebetti/subset.hpp"

namespace codebetti {

// Dense matrix over a shared Field, entries stored as raw values 0..q-1.
// Row/column *positions* in element access are 0-based like any other C++
// container; pivot lists and column subsets use 1-based ground-set numbering
// (see subset.hpp). Zero-row and zero-column matrices are legal.
class Mat {
  public:
    Mat(FieldPtr field, std::size_t rows, std::size_t cols); // zero-filled

    // Validates against ragged rows (DimensionMismatch) and entries >= q
    // (ValueOutOfField). When rows is empty, cols must be supplied.
    static Mat from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows,
                         std::size_t cols_if_empty = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    unsigned operator()(std::size_t r, std::size_t c) const {
        check_index(r, c);
        return v_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, unsigned value);

    std::vector<std::vector<unsigned>> to_rows() const;

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

  private:
    void check_index(std::size_t r, std::size_t c) const;

    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<unsigned> v_;
};

struct RrefResult {
    Mat mat;                 // same shape as the input, zero rows at bottom
    std::vector<int> pivots; // 1-based pivot columns, strictly increasing
};

// Gauss-Jordan with deterministic leftmost-pivot selection. The reduced
// row-echelon form is the canonical representative of the row space.
RrefResult rref(const Mat& m);

int rank(const Mat& m);

// Canonical (RREF) basis of the right kernel {v : m v^T = 0}, one row per
// basis vector; shape (cols - rank) x cols.
Mat kernel_basis(const Mat& m);

// Rank of the submatrix of the columns listed in sigma (1-based mask).
int column_subset_rank(const Mat& m, Mask sigma);

// Columns listed in sigma, in increasing column order.
Mat select_columns(const Mat& m, Mask sigma);

Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
bool is_zero(const Mat& m);

// True iff the two matrices have the same row space (same field, same width).
bool same_row_space(const Mat& a, const Mat& b);

} // namespace codebetti
