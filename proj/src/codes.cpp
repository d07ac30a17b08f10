#include "pelp/codes.hpp"

#include <stdexcept>
#include <string>

namespace pelp {

namespace {

void check_same_ambient(const LinearCode& a, const LinearCode& b, const char* what) {
    if (a.length() != b.length() || !(a.field() == b.field())) {
        throw std::invalid_argument(std::string(what) + ": codes differ in field or length");
    }
}

void check_indices(const IndexList& j, std::size_t n, const char* what) {
    for (auto i : j) {
        if (i >= n) {
            throw std::out_of_range(std::string(what) + ": coordinate " + std::to_string(i + 1) + " outside 1.." +
                                    std::to_string(n));
        }
    }
}

}  // namespace

Word star(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b) {
    if (a.size() != b.size()) throw std::invalid_argument("star: length mismatch");
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], b[i]);
    return out;
}

std::size_t weight(const Word& w) {
    std::size_t s = 0;
    for (auto e : w) s += e.value != 0;
    return s;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("distance: length mismatch");
    std::size_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] != b[i];
    return s;
}

IndexList support(const Word& w) {
    IndexList s;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].value) s.push_back(i);
    return s;
}

LinearCode dual(const LinearCode& c) { return LinearCode(c.space().orthogonal()); }

LinearCode puncture(const LinearCode& c, const IndexList& j) {
    if (j.empty()) throw std::invalid_argument("puncture: empty coordinate set");
    check_indices(j, c.length(), "puncture");
    return LinearCode::from_generator(c.generator().select_columns(j));
}

LinearCode shorten(const LinearCode& c, const IndexList& j) {
    check_indices(j, c.length(), "shorten");
    if (j.empty()) return c;
    // messages m with (m G)_J = 0 form the kernel of G_J^T
    const Matrix k = kernel(c.generator().select_columns(j).transpose());
    return LinearCode::from_generator(k * c.generator());
}

IndexList zero_set(const Subspace& s) {
    IndexList z;
    const Matrix& g = s.basis();
    for (std::size_t col = 0; col < g.cols(); ++col) {
        bool all_zero = true;
        for (std::size_t r = 0; r < g.rows() && all_zero; ++r) all_zero = g.at(r, col).value == 0;
        if (all_zero) z.push_back(col);
    }
    return z;
}

IndexList zero_set(const LinearCode& c) { return zero_set(c.space()); }

LinearCode star_product(const LinearCode& a, const LinearCode& b) {
    check_same_ambient(a, b, "star product");
    const Field& f = a.field();
    EchelonBuilder builder(f, a.length());
    for (std::size_t i = 0; i < a.dim() && !builder.full(); ++i) {
        for (std::size_t j = 0; j < b.dim() && !builder.full(); ++j) {
            builder.insert(star(f, a.generator().row(i), b.generator().row(j)));
        }
    }
    return LinearCode(builder.finish());
}

LinearCode power(const LinearCode& c, unsigned i) {
    if (i == 0) throw std::invalid_argument("power: exponent must be at least 1");
    LinearCode p = c;
    for (unsigned e = 1; e < i; ++e) p = star_product(c, p);
    return p;
}

LinearCode stabilizer(const LinearCode& c) {
    // x * g_j in C for every generator g_j  <=>  sum_i H[r][i] g_j[i] x_i = 0 for all r, j
    const Field& f = c.field();
    const std::size_t n = c.length();
    const LinearCode c_dual = dual(c);
    const Matrix& h = c_dual.generator();
    const Matrix& g = c.generator();
    Matrix stacked(f, g.rows() * h.rows(), n);
    for (std::size_t j = 0; j < g.rows(); ++j)
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t i = 0; i < n; ++i) stacked.at(j * h.rows() + r, i) = f.mul(h.at(r, i), g.at(j, i));
    return LinearCode::from_generator(kernel(stacked));
}

bool is_degenerated(const LinearCode& c) {
    if (c.dim() == 0) throw std::invalid_argument("is_degenerated: zero code");
    return stabilizer(c).dim() > 1;
}

bool min_distance_feasible(const LinearCode& c, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        if (count > budget / c.field().order()) return false;
        count *= c.field().order();
    }
    return true;
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
    if (c.dim() == 0) throw std::invalid_argument("min_distance: zero code");
    if (!min_distance_feasible(c, budget)) {
        throw std::length_error("min_distance: q^k exceeds the enumeration budget");
    }
    const Field& f = c.field();
    const std::size_t n = c.length(), k = c.dim();
    const std::uint64_t q = f.order();
    const Matrix& g = c.generator();
    // Odometer over message digits, updating the codeword incrementally.
    std::vector<std::uint64_t> digit(k, 0);
    Word word(n, f.zero());
    std::size_t best = n;
    for (;;) {
        std::size_t pos = 0;
        while (pos < k && digit[pos] + 1 == q) {
            // digit rolls over from q-1 to 0
            const FieldElem old = FieldElem{q - 1};
            for (std::size_t i = 0; i < n; ++i) word[i] = f.sub(word[i], f.mul(old, g.at(pos, i)));
            digit[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        const FieldElem delta = f.sub(FieldElem{digit[pos] + 1}, FieldElem{digit[pos]});
        for (std::size_t i = 0; i < n; ++i) word[i] = f.add(word[i], f.mul(delta, g.at(pos, i)));
        ++digit[pos];
        const std::size_t w = weight(word);
        if (w < best) best = w;
    }
    return best;
}

KneserReport kneser_check(const LinearCode& a, const LinearCode& b) {
    check_same_ambient(a, b, "kneser check");
    const LinearCode ab = star_product(a, b);
    KneserReport r;
    r.lhs = static_cast<long>(ab.dim());
    r.rhs = static_cast<long>(a.dim() + b.dim()) - static_cast<long>(stabilizer(ab).dim());
    r.holds = r.lhs >= r.rhs;
    r.product_degenerated = ab.dim() == 0 || is_degenerated(ab);
    if (!r.product_degenerated) r.cauchy_davenport_holds = r.lhs >= static_cast<long>(a.dim() + b.dim()) - 1;
    return r;
}

}  // namespace pelp
