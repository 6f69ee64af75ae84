#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "normic/integer.hpp"

namespace normic {

/// Dense matrix of arbitrary-precision integers, row-major.
/// Empty matrices (0 rows and/or 0 columns) are permitted and represent
/// zero lattices and zero maps.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix column(const std::vector<Int>& v);
    static IntMatrix ones_column(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix mul(const IntMatrix& B) const;
    IntMatrix operator*(const IntMatrix& B) const { return mul(B); }
    IntMatrix sub(const IntMatrix& B) const;
    IntMatrix transpose() const;
    IntMatrix hstack(const IntMatrix& B) const;
    IntMatrix vstack(const IntMatrix& B) const;
    IntMatrix scaled(const Int& c) const;

    std::vector<Int> col(std::size_t j) const;
    std::vector<Int> mul_vec(const std::vector<Int>& v) const;
    IntMatrix columns(std::size_t first, std::size_t count) const;
    IntMatrix top_rows(std::size_t count) const;

    // elementary column/row operations (used by the normal-form algorithms)
    void swap_cols(std::size_t j, std::size_t k);
    void negate_col(std::size_t j);
    void addmul_col(std::size_t dst, std::size_t src, const Int& q);
    void swap_rows(std::size_t i, std::size_t k);
    void negate_row(std::size_t i);
    void addmul_row(std::size_t dst, std::size_t src, const Int& q);

    /// Text format: first line "rows cols", then `rows` lines of `cols`
    /// space-separated decimal integers. Round-trips bit-exactly.
    std::string to_text() const;
    static IntMatrix parse_text(const std::string& text);
    static IntMatrix read_text(std::istream& in);

  private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace normic
