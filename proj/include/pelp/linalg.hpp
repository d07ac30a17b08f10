#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pelp/gf.hpp"

namespace pelp {

// Dense row-major matrix over a finite field.
class Matrix {
  public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(Field field, std::size_t cols, const std::vector<Word>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<FieldElem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const FieldElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Word row_word(std::size_t r) const;

    void append_row(std::span<const FieldElem> r);
    Matrix transpose() const;
    Matrix select_columns(const std::vector<std::size_t>& cols) const;
    Matrix stack(const Matrix& below) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
// Row vector times matrix.
Word mul_vec(const Word& v, const Matrix& m);
// Matrix times column vector.
Word mul_mat_vec(const Matrix& m, const Word& v);
FieldElem dot(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b);

// Reduced row echelon form with zero rows dropped.
struct Echelon {
    Matrix basis;
    std::vector<std::size_t> pivots;  // pivots[i] is the pivot column of basis row i, strictly increasing
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Rows form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);

struct UniqueSolution {
    Word x;
};
struct NoSolution {};
struct Underdetermined {
    Word particular;
    Matrix kernel;
};
using SolveResult = std::variant<UniqueSolution, NoSolution, Underdetermined>;

SolveResult solve(const Matrix& a, const Word& b);

/*
 * Subspace of F^n held as an RREF basis. All set-level operations return canonical
 * representatives, so equality is structural.
 */
class Subspace {
  public:
    Subspace(Field field, std::size_t n);  // the zero subspace
    static Subspace span(const Matrix& rows);
    static Subspace full(Field field, std::size_t n);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Word& v) const;
    // Coefficients c with v = sum c_i basis_i, or nothing if v is outside.
    std::optional<Word> coordinates(const Word& v) const;
    Word combine(const Word& coords) const;
    Subspace orthogonal() const;
    bool is_subspace_of(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  private:
    explicit Subspace(Echelon e) : basis_(std::move(e.basis)), pivots_(std::move(e.pivots)) {}
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

// Incremental row reduction. Rows stay fully reduced against one another.
class EchelonBuilder {
  public:
    EchelonBuilder(Field field, std::size_t n);

    // Returns true if v was independent of what was inserted before.
    bool insert(std::span<const FieldElem> v);
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == n_; }
    Subspace finish() const;

  private:
    Field field_;
    std::size_t n_;
    std::vector<Word> rows_;
    std::vector<std::size_t> pivot_of_row_;
    std::vector<long> row_of_pivot_;  // -1 if the column carries no pivot
};

}  // namespace pelp
