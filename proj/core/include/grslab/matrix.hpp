#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grslab/fq.hpp"
#include "grslab/rng.hpp"

namespace grslab {

// Dense row-major matrix over F_q.  T is stored dense too: sparsity in this
// artifact is a semantic property (row weights), not a storage format.
class MatrixFq {
  public:
    MatrixFq(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixFq identity(PrimeField field, std::size_t n);
    static MatrixFq from_rows(PrimeField field, const std::vector<std::vector<Fe>>& rows);
    static MatrixFq random(PrimeField field, std::size_t rows, std::size_t cols, Rng& rng);
    static MatrixFq random_invertible(PrimeField field, std::size_t n, Rng& rng);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fe& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Fe at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const Fe* row(std::size_t r) const { return a_.data() + r * cols_; }
    Fe* row(std::size_t r) { return a_.data() + r * cols_; }
    std::vector<Fe> row_vec(std::size_t r) const {
        return std::vector<Fe>(row(r), row(r) + cols_);
    }

    MatrixFq mul(const MatrixFq& o) const;
    std::vector<Fe> mul_vec(const std::vector<Fe>& x) const;       // M * x
    std::vector<Fe> mul_row(const std::vector<Fe>& x) const;       // x * M
    MatrixFq transpose() const;
    MatrixFq add(const MatrixFq& o) const;
    std::optional<MatrixFq> inverse() const;
    std::size_t rank() const;

    void append_row(const std::vector<Fe>& r);
    void scale_row(std::size_t r, Fe c);
    // row r += c * row s
    void add_scaled_row(std::size_t r, std::size_t s, Fe c);
    // col c2 += alpha * col c1 (right-multiplication by D(alpha, c1, c2))
    void add_scaled_col(std::size_t c2, std::size_t c1, Fe alpha);
    MatrixFq select_cols(const std::vector<std::size_t>& keep) const;
    MatrixFq select_rows(const std::vector<std::size_t>& keep) const;

    std::size_t row_weight(std::size_t r) const;
    bool is_zero() const;
    bool operator==(const MatrixFq& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    PrimeField field_;
    std::size_t rows_, cols_;
    std::vector<Fe> a_;
};

std::vector<Fe> star(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b);
Fe inner(const PrimeField& f, const std::vector<Fe>& a, const std::vector<Fe>& b);
std::size_t weight(const std::vector<Fe>& v);

}  // namespace grslab
