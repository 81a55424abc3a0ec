#include "codebetti/matrix.hpp"

#include <algorithm>

namespace codebetti {

Mat::Mat(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), v_(rows * cols, 0) {
    if (!field_) fail(ErrorKind::Precondition, "matrix needs a field");
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<unsigned>>& rows,
                   std::size_t cols_if_empty) {
    if (!field) fail(ErrorKind::Precondition, "matrix needs a field");
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Mat m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            fail(ErrorKind::DimensionMismatch,
                 "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                     " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

void Mat::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        fail(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                             ") outside " + std::to_string(rows_) + "x" +
                                             std::to_string(cols_));
}

void Mat::set(std::size_t r, std::size_t c, unsigned value) {
    check_index(r, c);
    if (value >= field_->order())
        fail(ErrorKind::ValueOutOfField, "entry " + std::to_string(value) + " not in GF(" +
                                             std::to_string(field_->order()) + ")");
    v_[r * cols_ + c] = value;
}

std::vector<std::vector<unsigned>> Mat::to_rows() const {
    std::vector<std::vector<unsigned>> out(rows_, std::vector<unsigned>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = v_[r * cols_ + c];
    return out;
}

bool Mat::operator==(const Mat& o) const {
    return field_->order() == o.field_->order() && rows_ == o.rows_ && cols_ == o.cols_ &&
           v_ == o.v_;
}

RrefResult rref(const Mat& m) {
    const Field& f = *m.field();
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<unsigned>> a = m.to_rows();
    std::vector<int> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pr = lead;
        while (pr < rows && a[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[lead], a[pr]);
        unsigned piv_inv = f.inv(a[lead][col]);
        for (std::size_t c = col; c < cols; ++c) a[lead][c] = f.mul(a[lead][c], piv_inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a[r][col] == 0) continue;
            unsigned factor = a[r][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] = f.sub(a[r][c], f.mul(factor, a[lead][c]));
        }
        pivots.push_back(static_cast<int>(col) + 1);
        ++lead;
    }
    Mat out(m.field(), rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, a[r][c]);
    return {std::move(out), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Mat kernel_basis(const Mat& m) {
    auto [r, pivots] = rref(m);
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p - 1)] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    const Field& f = *m.field();
    Mat k(m.field(), free_cols.size(), cols);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        std::size_t fc = free_cols[i];
        k.set(i, fc, 1);
        for (std::size_t pi = 0; pi < pivots.size(); ++pi)
            k.set(i, static_cast<std::size_t>(pivots[pi] - 1), f.neg(r(pi, fc)));
    }
    // rows are independent by construction; reduce once more for the
    // canonical RREF ordering
    return rref(k).mat;
}

Mat select_columns(const Mat& m, Mask sigma) {
    auto elements = subset_elements(sigma);
    if (!elements.empty() && elements.back() > static_cast<int>(m.cols()))
        fail(ErrorKind::IndexOutOfRange,
             "column " + std::to_string(elements.back()) + " outside 1.." + std::to_string(m.cols()));
    Mat out(m.field(), m.rows(), elements.size());
    for (std::size_t j = 0; j < elements.size(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r)
            out.set(r, j, m(r, static_cast<std::size_t>(elements[j] - 1)));
    return out;
}

int column_subset_rank(const Mat& m, Mask sigma) {
    if (sigma == 0) return 0;
    return rank(select_columns(m, sigma));
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.field()->order() != b.field()->order())
        fail(ErrorKind::FieldMismatch, "matrices over different fields");
    if (a.cols() != b.rows())
        fail(ErrorKind::DimensionMismatch,
             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                 std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const Field& f = *a.field();
    Mat out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            unsigned acc = 0;
            for (std::size_t l = 0; l < a.cols(); ++l)
                acc = f.add(acc, f.mul(a(i, l), b(l, j)));
            out.set(i, j, acc);
        }
    return out;
}

Mat transpose(const Mat& m) {
    Mat out(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m(r, c));
    return out;
}

bool is_zero(const Mat& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) return false;
    return true;
}

bool same_row_space(const Mat& a, const Mat& b) {
    if (a.field()->order() != b.field()->order() || a.cols() != b.cols()) return false;
    auto ra = rref(a), rb = rref(b);
    if (ra.pivots != rb.pivots) return false;
    for (std::size_t r = 0; r < ra.pivots.size(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (ra.mat(r, c) != rb.mat(r, c)) return false;
    return true;
}

} // namespace codebetti
