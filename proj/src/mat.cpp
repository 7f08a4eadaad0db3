#include "pirjoint/mat.hpp"

#include <algorithm>
#include <set>

namespace pirjoint {

namespace {

// Row-reduce in place; returns pivot columns. Fraction-free is unnecessary
// over a field, so this is plain Gauss-Jordan with pivot normalization.
std::vector<std::size_t> reduce(const Field& f, Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Elem inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Elem factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t mat_rank(const Field& f, Mat m) { return reduce(f, m).size(); }

Elem mat_det(const Field& f, Mat m) {
    if (m.rows() != m.cols()) throw ParamError("mat_det: matrix not square");
    const std::size_t n = m.rows();
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m.at(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(c, c));
        const Elem inv = f.inv(m.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            const Elem factor = f.mul(m.at(i, c), inv);
            for (std::size_t j = c; j < n; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
        }
    }
    return det;
}

SolveResult mat_solve(const Field& f, const Mat& a, const std::vector<Elem>& b) {
    if (a.rows() != b.size()) throw ParamError("mat_solve: rows(A) != length(b)");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = reduce(f, aug);

    SolveResult res;
    res.rank = 0;
    for (const auto c : pivots)
        if (c < a.cols()) ++res.rank;
    // A pivot in the b column means some row reads 0 = 1.
    res.consistent = pivots.empty() || pivots.back() < a.cols();
    if (!res.consistent) return res;
    res.unique = res.rank == a.cols();
    res.x.assign(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) res.x[pivots[r]] = aug.at(r, a.cols());
    return res;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw ParamError("mat_mul: shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem v = a.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(k, j)));
        }
    return c;
}

std::vector<Elem> mat_vec(const Field& f, const Mat& a, const std::vector<Elem>& v) {
    if (a.cols() != v.size()) throw ParamError("mat_vec: shape mismatch");
    std::vector<Elem> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] = f.add(out[i], f.mul(a.at(i, j), v[j]));
    return out;
}

Mat mat_vstack(const std::vector<Mat>& blocks) {
    if (blocks.empty()) return Mat();
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw ParamError("mat_vstack: column mismatch");
        rows += b.rows();
    }
    Mat out(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks)
        for (std::size_t i = 0; i < b.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) out.at(r, j) = b.at(i, j);
    return out;
}

Mat circulant_from_row(const Field& /*f*/, const std::vector<Elem>& c) {
    const std::size_t n = c.size();
    if (n == 0) throw ParamError("circulant_from_row: empty row");
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t) m.at(r, t) = c[(t + n - r) % n];
    return m;
}

Mat cauchy_matrix(const Field& f, const std::vector<Elem>& alphas,
                  const std::vector<Elem>& betas) {
    std::set<Elem> seen;
    for (const auto a : alphas)
        if (!seen.insert(a).second)
            throw ParamError("cauchy_matrix: repeated parameter " + std::to_string(a));
    for (const auto b : betas)
        if (!seen.insert(b).second)
            throw ParamError("cauchy_matrix: repeated parameter " + std::to_string(b));
    Mat m(alphas.size(), betas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = 0; j < betas.size(); ++j)
            m.at(i, j) = f.inv(f.sub(alphas[i], betas[j]));
    return m;
}

}  // namespace pirjoint
