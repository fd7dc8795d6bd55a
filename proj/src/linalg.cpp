#include "csp/linalg.hpp"

#include "csp/error.hpp"

namespace csp {

long rational_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) fail(errc::invalid_argument, "rational_rank: ragged matrix");
    long rank = 0;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t pivot = prow;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[prow]);
        for (size_t r = prow + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[prow][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[prow][c];
        }
        ++prow;
        ++rank;
    }
    return rank;
}

std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    size_t rows = a.size();
    if (b.size() != rows) fail(errc::invalid_argument, "solve_unique: rhs length mismatch");
    size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) fail(errc::invalid_argument, "solve_unique: ragged matrix");

    std::vector<size_t> pivot_col;
    size_t prow = 0;
    for (size_t col = 0; col < cols && prow < rows; ++col) {
        size_t pivot = prow;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[prow]);
        std::swap(b[pivot], b[prow]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[prow][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= factor * a[prow][c];
            b[r] -= factor * b[prow];
        }
        pivot_col.push_back(col);
        ++prow;
    }
    for (size_t r = prow; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;        // inconsistent
    if (pivot_col.size() != cols) return std::nullopt;  // underdetermined

    std::vector<Rat> x(cols);
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
    return x;
}

}  // namespace csp
