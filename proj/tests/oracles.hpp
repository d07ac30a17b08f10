#pragma once
// Brute-force reference implementations used by the unit and acceptance tests.
// Everything here enumerates, so it is only meant for tiny fields and lengths.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pelp/codes.hpp"
#include "pelp/poly.hpp"

namespace oracle {

using namespace pelp;
using Key = std::vector<std::uint64_t>;

inline Key key_of(const Word& w) {
    Key k;
    for (auto e : w) k.push_back(e.value);
    return k;
}

// Calls fn on every vector of F^n.
inline void for_each_vector(const Field& f, std::size_t n, const std::function<void(const Word&)>& fn) {
    Word v(n, f.zero());
    for (;;) {
        fn(v);
        std::size_t i = 0;
        while (i < n) {
            if (++v[i].value < f.order()) break;
            v[i].value = 0;
            ++i;
        }
        if (i == n) return;
    }
}

// All codewords obtained by enumerating coefficient tuples on the rows of g.
inline std::set<Key> span_of(const Matrix& g) {
    std::set<Key> out;
    const Field& f = g.field();
    for_each_vector(f, g.rows(), [&](const Word& c) {
        Word v(g.cols(), f.zero());
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t j = 0; j < g.cols(); ++j) v[j] = f.add(v[j], f.mul(c[r], g.at(r, j)));
        out.insert(key_of(v));
    });
    return out;
}

inline std::set<Key> codewords(const LinearCode& c) { return span_of(c.generator()); }

inline std::vector<Word> words_of(const std::set<Key>& s) {
    std::vector<Word> out;
    for (const auto& k : s) {
        Word w;
        for (auto v : k) w.push_back(FieldElem{v});
        out.push_back(w);
    }
    return out;
}

inline LinearCode code_of(const Field& f, std::size_t n, const std::vector<Word>& words) {
    Matrix m(f, 0, n);
    for (const auto& w : words) m.append_row(w);
    return LinearCode::from_generator(m);
}

// Dual by testing every vector of F^n against the generators.
inline LinearCode dual_by_enumeration(const LinearCode& c) {
    const Field& f = c.field();
    std::vector<Word> keep;
    for_each_vector(f, c.length(), [&](const Word& v) {
        for (std::size_t r = 0; r < c.dim(); ++r)
            if (dot(f, c.generator().row(r), v).value) return;
        keep.push_back(v);
    });
    return code_of(f, c.length(), keep);
}

// Span of a*b over all pairs of codewords (not just basis rows).
inline LinearCode star_by_enumeration(const LinearCode& a, const LinearCode& b) {
    const Field& f = a.field();
    std::vector<Word> prods;
    for (const auto& x : words_of(codewords(a)))
        for (const auto& y : words_of(codewords(b))) prods.push_back(star(f, x, y));
    return code_of(f, a.length(), prods);
}

inline LinearCode stabilizer_by_enumeration(const LinearCode& c) {
    const Field& f = c.field();
    const auto words = words_of(codewords(c));
    std::vector<Word> keep;
    for_each_vector(f, c.length(), [&](const Word& x) {
        for (const auto& w : words)
            if (!c.contains(star(f, x, w))) return;
        keep.push_back(x);
    });
    return code_of(f, c.length(), keep);
}

inline std::size_t min_weight_by_enumeration(const LinearCode& c) {
    std::size_t best = c.length() + 1;
    for (const auto& w : words_of(codewords(c))) {
        const std::size_t wt = weight(w);
        if (wt) best = std::min(best, wt);
    }
    return best;
}

inline Word random_word(const Field& f, std::size_t n, std::mt19937_64& rng) {
    Word w(n);
    for (auto& e : w) e = FieldElem{rng() % f.order()};
    return w;
}

inline LinearCode random_code(const Field& f, std::size_t n, std::size_t rows, std::mt19937_64& rng) {
    Matrix m(f, 0, n);
    for (std::size_t r = 0; r < rows; ++r) m.append_row(random_word(f, n, rng));
    return LinearCode::from_generator(m);
}

// RS code as the explicit span of ev_x(x^j), j < k, independent of the library's RS builder.
inline LinearCode rs_by_monomials(const Field& f, const Word& x, std::size_t k) {
    Matrix m(f, 0, x.size());
    for (std::size_t j = 0; j < k; ++j) {
        Word row;
        for (auto xi : x) row.push_back(f.pow(xi, j));
        m.append_row(row);
    }
    return LinearCode::from_generator(m);
}

}  // namespace oracle
