#include "tubecat/int_matrix.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "tubecat/error.hpp"

namespace tubecat {

namespace {

void sort_and_merge(std::vector<IntMatrix::Entry>& col) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < col.size();) {
        std::size_t row = col[i].first;
        std::int64_t sum = 0;
        for (; i < col.size() && col[i].first == row; ++i) sum += col[i].second;
        if (sum != 0) col[out++] = {row, sum};
    }
    col.resize(out);
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, 1});
    return m;
}

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
    IntMatrix m(rows, cols);
    for (const auto& [r, c, v] : triplets) {
        if (r >= rows || c >= cols) throw Error(ErrorKind::ShapeMismatch, "triplet outside matrix");
        m.columns_[c].push_back({r, v});
    }
    for (auto& col : m.columns_) sort_and_merge(col);
    return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    const std::size_t rows = dense.size();
    const std::size_t cols = rows ? dense.front().size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (dense[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c) {
            if (dense[r][c] != 0) m.columns_[c].push_back({r, dense[r][c]});
        }
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, std::vector<std::vector<Entry>> columns) {
    IntMatrix m;
    m.rows_ = rows;
    m.cols_ = columns.size();
    m.columns_ = std::move(columns);
    return m;
}

std::size_t IntMatrix::nnz() const noexcept {
    std::size_t total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
}

std::int64_t IntMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw Error(ErrorKind::ShapeMismatch, "index outside matrix");
    const auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? it->second : 0;
}

std::vector<IntMatrix::Triplet> IntMatrix::triplets() const {
    std::vector<Triplet> out;
    for (std::size_t c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : columns_[c]) out.emplace_back(r, c, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::int64_t>> IntMatrix::dense() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_, 0));
    for (std::size_t c = 0; c < cols_; ++c) {
        for (const auto& [r, v] : columns_[c]) out[r][c] = v;
    }
    return out;
}

IntMatrix IntMatrix::scaled(std::int64_t k) const {
    if (k == 0) return IntMatrix(rows_, cols_);
    IntMatrix m = *this;
    for (auto& c : m.columns_) {
        for (auto& e : c) e.second *= k;
    }
    return m;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    std::vector<std::vector<IntMatrix::Entry>> cols(a.cols() * b.cols());
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
        for (std::size_t cb = 0; cb < b.cols(); ++cb) {
            auto& out = cols[ca * b.cols() + cb];
            for (const auto& [ra, va] : a.column(ca)) {
                for (const auto& [rb, vb] : b.column(cb)) out.push_back({ra * b.rows() + rb, va * vb});
            }
        }
    }
    return IntMatrix::from_columns(a.rows() * b.rows(), std::move(cols));
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matmul of non-conformable matrices");
    std::vector<std::vector<IntMatrix::Entry>> cols(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& out = cols[j];
        for (const auto& [k, vb] : b.column(j)) {
            for (const auto& [i, va] : a.column(k)) out.push_back({i, va * vb});
        }
        sort_and_merge(out);
    }
    return IntMatrix::from_columns(a.rows(), std::move(cols));
}

IntMatrix transpose(const IntMatrix& a) {
    std::vector<std::vector<IntMatrix::Entry>> cols(a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (const auto& [r, v] : a.column(c)) cols[r].push_back({c, v});
    }
    return IntMatrix::from_columns(a.cols(), std::move(cols));
}

namespace {

struct Overflow {};

struct CheckedInt {
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
};

template <typename T>
T bareiss_mul(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) return CheckedInt::mul(a, b);
    else return a * b;
}

template <typename T>
T bareiss_sub(const T& a, const T& b) {
    if constexpr (std::is_same_v<T, std::int64_t>) return CheckedInt::sub(a, b);
    else return a - b;
}

// Row echelon elimination on the dense rows; returns the number of pivots.
template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    std::size_t k = 0;
    T prev = 1;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t p = k;
        while (p < rows && m[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[k]);
        const T pivot = m[k][col];
        for (std::size_t i = k + 1; i < rows; ++i) {
            const T factor = m[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                T v = bareiss_sub(bareiss_mul(pivot, m[i][j]), bareiss_mul(factor, m[k][j]));
                m[i][j] = v / prev;
            }
            m[i][col] = 0;
        }
        prev = pivot;
        ++k;
    }
    return k;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& a) {
    // Eliminate along the shorter side.
    const std::vector<std::vector<std::int64_t>> dense = a.rows() <= a.cols() ? a.dense() : transpose(a).dense();
    try {
        return bareiss_rank(dense);
    } catch (const Overflow&) {
        using boost::multiprecision::cpp_int;
        std::vector<std::vector<cpp_int>> big(dense.size());
        for (std::size_t i = 0; i < dense.size(); ++i) big[i].assign(dense[i].begin(), dense[i].end());
        return bareiss_rank(std::move(big));
    }
}

std::string to_triplet_text(const IntMatrix& a) {
    std::ostringstream out;
    out << a.rows() << ' ' << a.cols() << ' ' << a.nnz() << '\n';
    for (const auto& [r, c, v] : a.triplets()) out << r << ' ' << c << ' ' << v << '\n';
    return out.str();
}

IntMatrix parse_triplet_text(const std::string& text) {
    std::istringstream in(text);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(in >> rows >> cols >> nnz)) throw Error(ErrorKind::Parse, "triplet header `rows cols nnz` expected");
    std::vector<IntMatrix::Triplet> triplets;
    for (std::size_t i = 0; i < nnz; ++i) {
        std::size_t r = 0, c = 0;
        std::int64_t v = 0;
        if (!(in >> r >> c >> v)) throw Error(ErrorKind::Parse, "truncated triplet list");
        triplets.emplace_back(r, c, v);
    }
    return IntMatrix::from_triplets(rows, cols, std::move(triplets));
}

std::string to_csv(const IntMatrix& a) {
    std::ostringstream out;
    for (const auto& row : a.dense()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tubecat
