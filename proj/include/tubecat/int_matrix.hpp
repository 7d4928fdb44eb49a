#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tubecat {

/// Exact sparse integer matrix stored by columns. No zero is ever stored and
/// each column is sorted by row.
class IntMatrix {
public:
    using Entry = std::pair<std::size_t, std::int64_t>;  // (row, value)
    using Triplet = std::tuple<std::size_t, std::size_t, std::int64_t>;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    static IntMatrix identity(std::size_t n);
    /// Duplicate coordinates are summed; zeros are dropped.
    static IntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
    static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
    /// Columns must already be sorted by row and free of zeros.
    static IntMatrix from_columns(std::size_t rows, std::vector<std::vector<Entry>> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept;
    std::int64_t at(std::size_t row, std::size_t col) const;
    std::span<const Entry> column(std::size_t col) const { return columns_.at(col); }

    /// Row-major sorted triplets.
    std::vector<Triplet> triplets() const;
    std::vector<std::vector<std::int64_t>> dense() const;

    IntMatrix scaled(std::int64_t k) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Kronecker product; row index = i_a * b.rows() + i_b, likewise for columns.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// 64-bit arithmetic and restarts with arbitrary precision on overflow.
std::size_t rank_exact(const IntMatrix& a);

/// `rows cols nnz` followed by one `r c v` line per stored entry, row-major,
/// zero-based indices.
std::string to_triplet_text(const IntMatrix& a);
IntMatrix parse_triplet_text(const std::string& text);
/// Dense comma-separated rows.
std::string to_csv(const IntMatrix& a);

}  // namespace tubecat
