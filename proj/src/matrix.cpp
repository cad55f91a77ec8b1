#include "reeskit/matrix.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "reeskit/parse.hpp"

namespace reeskit {

poly_matrix::poly_matrix(const ring_spec& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
    a_.assign(static_cast<std::size_t>(rows) * cols, polynomial(ring));
}

poly_matrix poly_matrix::from_strings(const ring_spec& ring,
                                      const std::vector<std::vector<std::string>>& entries) {
    if (entries.empty() || entries.front().empty()) throw error("empty matrix");
    poly_matrix m(ring, static_cast<int>(entries.size()),
                  static_cast<int>(entries.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(entries[i].size()) != m.cols())
            throw error("ragged matrix: row " + std::to_string(i + 1) + " has " +
                        std::to_string(entries[i].size()) + " entries, expected " +
                        std::to_string(m.cols()));
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = parse_polynomial(entries[i][j], ring);
    }
    return m;
}

poly_matrix poly_matrix::submatrix(const std::vector<int>& row_idx,
                                   const std::vector<int>& col_idx) const {
    poly_matrix m(ring_, static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
    return m;
}

poly_matrix poly_matrix::drop_last_cols(int k) const {
    if (k < 0 || k > cols_) throw error("drop_last_cols out of range");
    std::vector<int> rs(rows_), cs(cols_ - k);
    for (int i = 0; i < rows_; ++i) rs[i] = i;
    for (int j = 0; j < cols_ - k; ++j) cs[j] = j;
    return submatrix(rs, cs);
}

poly_matrix poly_matrix::subs_zero(const std::vector<int>& vars) const {
    poly_matrix m(ring_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).subs_zero(vars);
    return m;
}

namespace {

// cofactor expansion over (row subset, column subset) masks, sharing
// sub-determinants across overlapping minors
class det_memo {
public:
    explicit det_memo(const poly_matrix& m) : m_(m) {}

    polynomial get(std::uint32_t rmask, std::uint32_t cmask) {
        std::uint64_t key = (static_cast<std::uint64_t>(rmask) << 32) | cmask;
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        polynomial d = compute(rmask, cmask);
        memo_.emplace(key, d);
        return d;
    }

private:
    const poly_matrix& m_;
    std::unordered_map<std::uint64_t, polynomial> memo_;

    polynomial compute(std::uint32_t rmask, std::uint32_t cmask) {
        int r = std::countr_zero(rmask);  // expand along the first row in the mask
        std::uint32_t rrest = rmask & (rmask - 1);
        if (rrest == 0) {
            int c = std::countr_zero(cmask);
            return m_.at(r, c);
        }
        polynomial acc(m_.ring());
        int sign = 1;
        for (std::uint32_t cm = cmask; cm; cm &= cm - 1) {
            int c = std::countr_zero(cm);
            const polynomial& e = m_.at(r, c);
            if (!e.is_zero()) {
                polynomial sub = get(rrest, cmask & ~(1u << c));
                acc += sign > 0 ? e * sub : -(e * sub);
            }
            sign = -sign;
        }
        return acc;
    }
};

polynomial bareiss_det(const poly_matrix& in) {
    const int n = in.rows();
    const ring_spec& ring = in.ring();
    std::vector<std::vector<polynomial>> a(n, std::vector<polynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = in.at(i, j);
    polynomial prev = polynomial::from_long(ring, 1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!a[i][k].is_zero()) { pivot = i; break; }
        if (pivot < 0) return polynomial(ring);  // zero column: singular
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                polynomial num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw error("Bareiss step failed to divide exactly");
                a[i][j] = std::move(*q);
            }
        prev = a[k][k];
    }
    polynomial d = a[n - 1][n - 1];
    return sign > 0 ? d : -d;
}

}  // namespace

polynomial det(const poly_matrix& m) {
    if (m.rows() != m.cols()) throw error("determinant of a non-square matrix");
    if (m.rows() == 0) return polynomial::from_long(m.ring(), 1);
    if (m.rows() <= 6) {
        det_memo memo(m);
        return memo.get((1u << m.rows()) - 1, (1u << m.cols()) - 1);
    }
    return bareiss_det(m);
}

namespace {

// all size-k subsets of {0..n-1}, lexicographically ascending
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

ideal minors(const poly_matrix& m, int t) {
    if (t < 1 || t > std::min(m.rows(), m.cols()))
        throw error("minor size " + std::to_string(t) + " out of range for a " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    std::vector<polynomial> gens;
    if (t <= 6 && m.rows() <= 32 && m.cols() <= 32) {
        det_memo memo(m);
        for (const auto& rs : subsets(m.rows(), t)) {
            std::uint32_t rmask = 0;
            for (int r : rs) rmask |= 1u << r;
            for (const auto& cs : subsets(m.cols(), t)) {
                std::uint32_t cmask = 0;
                for (int c : cs) cmask |= 1u << c;
                polynomial d = memo.get(rmask, cmask);
                if (!d.is_zero()) gens.push_back(std::move(d));
            }
        }
    } else {
        for (const auto& rs : subsets(m.rows(), t))
            for (const auto& cs : subsets(m.cols(), t)) {
                polynomial d = det(m.submatrix(rs, cs));
                if (!d.is_zero()) gens.push_back(std::move(d));
            }
    }
    return ideal(m.ring(), std::move(gens));
}

ideal fitting_ideal(const poly_matrix& m, int i) {
    if (i < 0) throw error("Fitting index must be nonnegative");
    if (i >= m.rows()) return ideal::unit(m.ring());
    int t = m.rows() - i;
    if (t > std::min(m.rows(), m.cols())) return ideal::zero(m.ring());
    return minors(m, t);
}

}  // namespace reeskit
