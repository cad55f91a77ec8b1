#ifndef REESKIT_MATRIX_HPP
#define REESKIT_MATRIX_HPP

#include <string>
#include <vector>

#include "reeskit/ideal.hpp"
#include "reeskit/polynomial.hpp"

namespace reeskit {

// Dense matrix of polynomials, row-major.
class poly_matrix {
public:
    poly_matrix() = default;
    poly_matrix(const ring_spec& ring, int rows, int cols);
    static poly_matrix from_strings(const ring_spec& ring,
                                    const std::vector<std::vector<std::string>>& entries);

    const ring_spec& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    polynomial& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const polynomial& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    poly_matrix submatrix(const std::vector<int>& row_idx,
                          const std::vector<int>& col_idx) const;
    poly_matrix drop_last_cols(int k) const;
    // entrywise image under sending the listed variables to 0
    poly_matrix subs_zero(const std::vector<int>& vars) const;

    bool operator==(const poly_matrix& o) const = default;

private:
    ring_spec ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<polynomial> a_;
};

// Determinant of a square matrix: memoized cofactor expansion up to 6x6,
// fraction-free Bareiss elimination above that.
polynomial det(const poly_matrix& m);

// Ideal of all t x t minors, 1 <= t <= min(rows, cols); zero minors are not
// listed as generators.  Generation order (row subsets lex-ascending, then
// column subsets) is deterministic.
ideal minors(const poly_matrix& m, int t);

// Fitting ideal Fitt_i of the cokernel of m, i.e. the ideal of
// (rows - i)-minors; unit ideal when i >= rows, zero ideal when the required
// minor size exceeds the matrix.
ideal fitting_ideal(const poly_matrix& m, int i);

}  // namespace reeskit

#endif
