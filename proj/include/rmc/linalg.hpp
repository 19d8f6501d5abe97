#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rmc/gf.hpp"

namespace rmc::linalg {

using gf::FieldElement;
using gf::FieldTower;
using gf::Level;

/// Dense matrix with entries at a single tower level, row-major.
/// Generator matrices may have zero rows; the column count stays meaningful.
class Matrix {
public:
    Matrix(Level lvl, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static Matrix zero(const FieldTower& t, Level lvl, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldTower& t, Level lvl, std::size_t n);
    static Matrix from_rows(Level lvl, std::size_t cols,
                            const std::vector<std::vector<FieldElement>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Level level() const { return level_; }

    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    std::vector<FieldElement> row(std::size_t i) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    Level level_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> entries_;
};

struct RrefResult {
    Matrix R;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form via exact Gaussian elimination.
RrefResult rref(const FieldTower& t, Matrix A);
std::size_t rank(const FieldTower& t, const Matrix& A);

/// Basis of the right null space {v : A v = 0}; size cols - rank.
std::vector<std::vector<FieldElement>> kernel(const FieldTower& t, const Matrix& A);

/// Exact determinant via elimination. Throws NotSquare.
FieldElement det(const FieldTower& t, const Matrix& A);

Matrix mul(const FieldTower& t, const Matrix& A, const Matrix& B);
Matrix add(const FieldTower& t, const Matrix& A, const Matrix& B);
Matrix sub(const FieldTower& t, const Matrix& A, const Matrix& B);
Matrix scale(const FieldTower& t, const FieldElement& c, const Matrix& A);
Matrix transpose(const Matrix& A);
bool is_zero(const FieldTower& t, const Matrix& A);

/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const FieldTower& t, const Matrix& A);

/// One solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<FieldElement>> solve(const FieldTower& t, const Matrix& A,
                                               const std::vector<FieldElement>& b);

using Pairing = std::function<FieldElement(const std::vector<FieldElement>&,
                                           const std::vector<FieldElement>&)>;

/// Gram matrix of a symmetric pairing: entry (i, j) = pairing(v_i, v_j).
Matrix gram(const FieldTower& t, const std::vector<std::vector<FieldElement>>& vectors,
            const Pairing& pairing);

/// Row vector times matrix.
std::vector<FieldElement> vec_mat(const FieldTower& t, const std::vector<FieldElement>& v,
                                  const Matrix& A);
/// Dot product of two vectors of equal length.
FieldElement dot(const FieldTower& t, const std::vector<FieldElement>& a,
                 const std::vector<FieldElement>& b);

}  // namespace rmc::linalg
