#include "rmc/linalg.hpp"

#include <algorithm>

namespace rmc::linalg {

Matrix::Matrix(Level lvl, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : level_(lvl), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (cols_ == 0) fail(Errc::BadDimension, "matrix must have at least one column");
    if (entries_.size() != rows_ * cols_)
        fail(Errc::BadDimension, "entry count does not match dimensions");
    for (const auto& x : entries_)
        if (x.level != lvl) fail(Errc::LevelMismatch, "matrix entry at wrong level");
}

Matrix Matrix::zero(const FieldTower& t, Level lvl, std::size_t rows, std::size_t cols) {
    return Matrix(lvl, rows, cols, std::vector<FieldElement>(rows * cols, t.zero(lvl)));
}

Matrix Matrix::identity(const FieldTower& t, Level lvl, std::size_t n) {
    Matrix I = zero(t, lvl, n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = t.one(lvl);
    return I;
}

Matrix Matrix::from_rows(Level lvl, std::size_t cols,
                         const std::vector<std::vector<FieldElement>>& rows) {
    std::vector<FieldElement> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) fail(Errc::BadDimension, "row length mismatch");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(lvl, rows.size(), cols, std::move(entries));
}

std::vector<FieldElement> Matrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RrefResult rref(const FieldTower& t, Matrix A) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t sel = r;
        while (sel < A.rows() && t.is_zero(A.at(sel, c))) ++sel;
        if (sel == A.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(sel, j), A.at(r, j));
        FieldElement piv_inv = t.inv(A.at(r, c));
        for (std::size_t j = c; j < A.cols(); ++j) A.at(r, j) = t.mul(A.at(r, j), piv_inv);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || t.is_zero(A.at(i, c))) continue;
            FieldElement f = A.at(i, c);
            for (std::size_t j = c; j < A.cols(); ++j)
                A.at(i, j) = t.sub(A.at(i, j), t.mul(f, A.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(A), r, std::move(pivots)};
}

std::size_t rank(const FieldTower& t, const Matrix& A) { return rref(t, A).rank; }

std::vector<std::vector<FieldElement>> kernel(const FieldTower& t, const Matrix& A) {
    RrefResult rr = rref(t, A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<FieldElement> v(A.cols(), t.zero(A.level()));
        v[j] = t.one(A.level());
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
            v[rr.pivots[pi]] = t.neg(rr.R.at(pi, j));
        basis.push_back(std::move(v));
    }
    return basis;
}

FieldElement det(const FieldTower& t, const Matrix& A) {
    if (A.rows() != A.cols()) fail(Errc::NotSquare, "determinant of a non-square matrix");
    Matrix M = A;
    std::size_t n = M.rows();
    FieldElement result = t.one(M.level());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && t.is_zero(M.at(sel, c))) ++sel;
        if (sel == n) return t.zero(M.level());
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(sel, j), M.at(c, j));
            result = t.neg(result);
        }
        result = t.mul(result, M.at(c, c));
        FieldElement piv_inv = t.inv(M.at(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (t.is_zero(M.at(i, c))) continue;
            FieldElement f = t.mul(M.at(i, c), piv_inv);
            for (std::size_t j = c; j < n; ++j)
                M.at(i, j) = t.sub(M.at(i, j), t.mul(f, M.at(c, j)));
        }
    }
    return result;
}

Matrix mul(const FieldTower& t, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) fail(Errc::BadDimension, "inner dimensions do not match");
    if (A.level() != B.level()) fail(Errc::LevelMismatch, "matrix levels differ");
    Matrix C = Matrix::zero(t, A.level(), A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t k = 0; k < A.cols(); ++k) {
            if (t.is_zero(A.at(i, k))) continue;
            for (std::size_t j = 0; j < B.cols(); ++j)
                C.at(i, j) = t.add(C.at(i, j), t.mul(A.at(i, k), B.at(k, j)));
        }
    return C;
}

Matrix add(const FieldTower& t, const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) fail(Errc::BadDimension, "shape mismatch");
    Matrix C = A;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = t.add(A.at(i, j), B.at(i, j));
    return C;
}

Matrix sub(const FieldTower& t, const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) fail(Errc::BadDimension, "shape mismatch");
    Matrix C = A;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = t.sub(A.at(i, j), B.at(i, j));
    return C;
}

Matrix scale(const FieldTower& t, const FieldElement& c, const Matrix& A) {
    Matrix C = A;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = t.mul(c, A.at(i, j));
    return C;
}

Matrix transpose(const Matrix& A) {
    if (A.rows() == 0) fail(Errc::BadDimension, "cannot transpose a zero-row matrix");
    std::vector<FieldElement> entries;
    entries.reserve(A.rows() * A.cols());
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i) entries.push_back(A.at(i, j));
    return Matrix(A.level(), A.cols(), A.rows(), std::move(entries));
}

bool is_zero(const FieldTower& t, const Matrix& A) {
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!t.is_zero(A.at(i, j))) return false;
    return true;
}

std::optional<Matrix> inverse(const FieldTower& t, const Matrix& A) {
    if (A.rows() != A.cols()) fail(Errc::NotSquare, "inverse of a non-square matrix");
    std::size_t n = A.rows();
    Matrix aug = Matrix::zero(t, A.level(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = t.one(A.level());
    }
    RrefResult rr = rref(t, std::move(aug));
    if (rr.rank < n || rr.pivots[n - 1] >= n) return std::nullopt;
    Matrix inv = Matrix::zero(t, A.level(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.R.at(i, n + j);
    return inv;
}

std::optional<std::vector<FieldElement>> solve(const FieldTower& t, const Matrix& A,
                                               const std::vector<FieldElement>& b) {
    if (b.size() != A.rows()) fail(Errc::BadDimension, "right-hand side length mismatch");
    Matrix aug = Matrix::zero(t, A.level(), A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    RrefResult rr = rref(t, std::move(aug));
    std::vector<FieldElement> x(A.cols(), t.zero(A.level()));
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi) {
        if (rr.pivots[pi] == A.cols()) return std::nullopt;  // inconsistent
        x[rr.pivots[pi]] = rr.R.at(pi, A.cols());
    }
    return x;
}

Matrix gram(const FieldTower& t, const std::vector<std::vector<FieldElement>>& vectors,
            const Pairing& pairing) {
    if (vectors.empty()) fail(Errc::BadDimension, "gram of an empty family");
    std::size_t len = vectors.front().size();
    for (const auto& v : vectors)
        if (v.size() != len) fail(Errc::BadDimension, "vectors of unequal length");
    std::size_t n = vectors.size();
    FieldElement probe = pairing(vectors[0], vectors[0]);
    Matrix G = Matrix::zero(t, probe.level, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            FieldElement v = pairing(vectors[i], vectors[j]);
            G.at(i, j) = v;
            G.at(j, i) = v;
        }
    return G;
}

std::vector<FieldElement> vec_mat(const FieldTower& t, const std::vector<FieldElement>& v,
                                  const Matrix& A) {
    if (v.size() != A.rows()) fail(Errc::BadDimension, "vector/matrix shape mismatch");
    std::vector<FieldElement> r(A.cols(), t.zero(A.level()));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (t.is_zero(v[i])) continue;
        for (std::size_t j = 0; j < A.cols(); ++j)
            r[j] = t.add(r[j], t.mul(v[i], A.at(i, j)));
    }
    return r;
}

FieldElement dot(const FieldTower& t, const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b) {
    if (a.size() != b.size() || a.empty()) fail(Errc::BadDimension, "dot of unequal vectors");
    FieldElement s = t.mul(a[0], b[0]);
    for (std::size_t i = 1; i < a.size(); ++i) s = t.add(s, t.mul(a[i], b[i]));
    return s;
}

}  // namespace rmc::linalg
