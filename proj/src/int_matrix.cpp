#include "normic/int_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace normic {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row list");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const std::vector<Int>& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::ones_column(std::size_t n) {
    IntMatrix m(n, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, 0) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::mul(const IntMatrix& B) const {
    if (cols_ != B.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix C(rows_, B.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = (*this)(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < B.cols_; ++j) {
                const Int& w = B(k, j);
                if (w != 0) C(i, j) += v * w;
            }
        }
    return C;
}

IntMatrix IntMatrix::sub(const IntMatrix& B) const {
    if (rows_ != B.rows_ || cols_ != B.cols_) throw std::invalid_argument("shape mismatch");
    IntMatrix C(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) C.data_[i] = data_[i] - B.data_[i];
    return C;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix C(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) C(j, i) = (*this)(i, j);
    return C;
}

IntMatrix IntMatrix::hstack(const IntMatrix& B) const {
    if (rows_ != B.rows_) throw std::invalid_argument("hstack row mismatch");
    IntMatrix C(rows_, cols_ + B.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) C(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < B.cols_; ++j) C(i, cols_ + j) = B(i, j);
    }
    return C;
}

IntMatrix IntMatrix::vstack(const IntMatrix& B) const {
    if (cols_ != B.cols_) throw std::invalid_argument("vstack col mismatch");
    IntMatrix C(rows_ + B.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) C(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < B.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) C(rows_ + i, j) = B(i, j);
    return C;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix C(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) C.data_[i] = data_[i] * c;
    return C;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Int> IntMatrix::mul_vec(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("mul_vec size mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::invalid_argument("column range out of bounds");
    IntMatrix C(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) C(i, j) = (*this)(i, first + j);
    return C;
}

IntMatrix IntMatrix::top_rows(std::size_t count) const {
    if (count > rows_) throw std::invalid_argument("row range out of bounds");
    IntMatrix C(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < cols_; ++j) C(i, j) = (*this)(i, j);
    return C;
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(data_[i * cols_ + j], data_[i * cols_ + k]);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) {
        Int& v = data_[i * cols_ + j];
        v = -v;
    }
}

void IntMatrix::addmul_col(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        data_[i * cols_ + dst] += q * data_[i * cols_ + src];
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(data_[i * cols_ + j], data_[k * cols_ + j]);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
        Int& v = data_[i * cols_ + j];
        v = -v;
    }
}

void IntMatrix::addmul_row(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        data_[dst * cols_ + j] += q * data_[src * cols_ + j];
}

std::string IntMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

IntMatrix IntMatrix::read_text(std::istream& in) {
    long long r = 0, c = 0;
    if (!(in >> r >> c) || r < 0 || c < 0)
        throw std::runtime_error("malformed matrix header");
    IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::runtime_error("truncated matrix body");
            try {
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Int(tok);
            } catch (const std::exception&) {
                throw std::runtime_error("invalid integer in matrix body: " + tok);
            }
        }
    return m;
}

IntMatrix IntMatrix::parse_text(const std::string& text) {
    std::istringstream in(text);
    IntMatrix m = read_text(in);
    std::string extra;
    if (in >> extra) throw std::runtime_error("trailing data after matrix");
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_text(); }

}  // namespace normic
