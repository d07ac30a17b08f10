#include "pelp/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pelp {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, FieldElem{0}) {}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Word>& rows) {
    Matrix m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

Word Matrix::row_word(std::size_t r) const {
    auto s = row(r);
    return Word(s.begin(), s.end());
}

void Matrix::append_row(std::span<const FieldElem> r) {
    if (r.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
    Matrix s(field_, rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(i, cols.at(j));
    return s;
}

Matrix Matrix::stack(const Matrix& below) const {
    if (below.cols_ != cols_) throw std::invalid_argument("matrix: stack width mismatch");
    Matrix s = *this;
    s.data_.insert(s.data_.end(), below.data_.begin(), below.data_.end());
    s.rows_ += below.rows_;
    return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

FieldElem dot(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    FieldElem s = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].value && b[i].value) s = f.add(s, f.mul(a[i], b[i]));
    }
    return s;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElem x = a.at(i, k);
            if (x.value == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
        }
    }
    return c;
}

Word mul_vec(const Word& v, const Matrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
    const Field& f = m.field();
    Word out(m.cols(), f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].value == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
    }
    return out;
}

Word mul_mat_vec(const Matrix& m, const Word& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Word out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.field(), m.row(i), v);
    return out;
}

Echelon rref(const Matrix& input) {
    const Field& f = input.field();
    Matrix m = input;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).value == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r) {
            auto a = m.row(sel), b = m.row(r);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const FieldElem inv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const FieldElem factor = m.at(i, c);
            if (factor.value == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m.at(r, j).value) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix basis(f, 0, m.cols());
    for (std::size_t i = 0; i < r; ++i) basis.append_row(m.row(i));
    return {std::move(basis), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

namespace {

Matrix kernel_from_echelon(const Echelon& e, std::size_t cols) {
    const Field& f = e.basis.field();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix k(f, 0, cols);
    Word v(cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.basis.at(i, free));
        k.append_row(v);
    }
    return k;
}

}  // namespace

Matrix kernel(const Matrix& m) { return kernel_from_echelon(rref(m), m.cols()); }

SolveResult solve(const Matrix& a, const Word& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    const Field& f = a.field();
    const std::size_t n = a.cols();
    Matrix aug(f, a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == n) return NoSolution{};
    Word x(n, f.zero());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.basis.at(i, n);
    if (e.pivots.size() == n) return UniqueSolution{std::move(x)};
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    Matrix coeff = e.basis.select_columns(cols);
    return Underdetermined{std::move(x), kernel_from_echelon({std::move(coeff), e.pivots}, n)};
}

// ---- Subspace ----

Subspace::Subspace(Field field, std::size_t n) : basis_(std::move(field), 0, n) {}

Subspace Subspace::span(const Matrix& rows) { return Subspace(rref(rows)); }

Subspace Subspace::full(Field field, std::size_t n) {
    Matrix id(field, n, n);
    for (std::size_t i = 0; i < n; ++i) id.at(i, i) = field.one();
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(Echelon{std::move(id), std::move(piv)});
}

std::optional<Word> Subspace::coordinates(const Word& v) const {
    if (v.size() != ambient()) throw std::invalid_argument("subspace: vector length mismatch");
    Word c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    if (combine(c) != v) return std::nullopt;
    return c;
}

bool Subspace::contains(const Word& v) const { return coordinates(v).has_value(); }

Word Subspace::combine(const Word& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("subspace: coordinate length mismatch");
    return mul_vec(coords, basis_);
}

Subspace Subspace::orthogonal() const {
    Echelon e{basis_, pivots_};
    return Subspace::span(kernel_from_echelon(e, ambient()));
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    if (dim() > other.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!other.contains(basis_.row_word(i))) return false;
    }
    return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace sum: ambient mismatch");
    return Subspace::span(u.basis().stack(v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw std::invalid_argument("subspace intersection: ambient mismatch");
    return sum(u.orthogonal(), v.orthogonal()).orthogonal();
}

// ---- EchelonBuilder ----

EchelonBuilder::EchelonBuilder(Field field, std::size_t n) : field_(std::move(field)), n_(n), row_of_pivot_(n, -1) {}

bool EchelonBuilder::insert(std::span<const FieldElem> v) {
    if (v.size() != n_) throw std::invalid_argument("echelon builder: vector length mismatch");
    if (full()) return false;
    const Field& f = field_;
    Word w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FieldElem c = w[pivot_of_row_[i]];
        if (c.value == 0) continue;
        const Word& r = rows_[i];
        for (std::size_t j = 0; j < n_; ++j) {
            if (r[j].value) w[j] = f.sub(w[j], f.mul(c, r[j]));
        }
    }
    std::size_t p = 0;
    while (p < n_ && w[p].value == 0) ++p;
    if (p == n_) return false;
    const FieldElem inv = f.inv(w[p]);
    for (std::size_t j = p; j < n_; ++j) w[j] = f.mul(w[j], inv);
    for (auto& r : rows_) {
        const FieldElem c = r[p];
        if (c.value == 0) continue;
        for (std::size_t j = p; j < n_; ++j) {
            if (w[j].value) r[j] = f.sub(r[j], f.mul(c, w[j]));
        }
    }
    row_of_pivot_[p] = static_cast<long>(rows_.size());
    pivot_of_row_.push_back(p);
    rows_.push_back(std::move(w));
    return true;
}

Subspace EchelonBuilder::finish() const {
    Matrix m(field_, 0, n_);
    for (std::size_t c = 0; c < n_; ++c) {
        if (row_of_pivot_[c] >= 0) m.append_row(rows_[static_cast<std::size_t>(row_of_pivot_[c])]);
    }
    // Rows are already reduced; rref just reorders and confirms.
    return Subspace::span(m);
}

}  // namespace pelp
