#ifndef PIRJOINT_MAT_HPP
#define PIRJOINT_MAT_HPP

#include <cstddef>
#include <vector>

#include "pirjoint/gf.hpp"
#include "pirjoint/poly.hpp"

namespace pirjoint {

/// Dense row-major matrix of field elements.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Elem> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw ParamError("Mat: entries length != rows*cols");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Elem>& entries() const { return a_; }

    std::vector<Elem> row(std::size_t r) const {
        return std::vector<Elem>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> a_;
};

std::size_t mat_rank(const Field& f, Mat m);
/// Determinant of a square matrix (product of pivots, swap-signed).
Elem mat_det(const Field& f, Mat m);

struct SolveResult {
    bool consistent = false;
    std::vector<Elem> x;  // one solution (free variables set to 0) when consistent
    std::size_t rank = 0;
    bool unique = false;  // full column rank
};

/// Gaussian elimination on [A | b]. Inconsistency is a report, not an error.
SolveResult mat_solve(const Field& f, const Mat& a, const std::vector<Elem>& b);

Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
std::vector<Elem> mat_vec(const Field& f, const Mat& a, const std::vector<Elem>& v);
/// Stack matrices with equal column counts on top of each other.
Mat mat_vstack(const std::vector<Mat>& blocks);

/// n x n matrix whose row r is c cyclically right-shifted by r (row 0 = c):
/// entry (r, t) = c[(t - r) mod n].
Mat circulant_from_row(const Field& f, const std::vector<Elem>& c);

/// Entry (i, j) = 1/(alphas[i] - betas[j]). All parameters must be pairwise
/// distinct across the union of the two lists.
Mat cauchy_matrix(const Field& f, const std::vector<Elem>& alphas,
                  const std::vector<Elem>& betas);

}  // namespace pirjoint

#endif
