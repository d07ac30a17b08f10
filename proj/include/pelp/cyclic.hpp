#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pelp/codes.hpp"
#include "pelp/pair.hpp"

namespace pelp {

// A subset of Z/nZ, kept sorted and without duplicates.
class IndexSet {
  public:
    IndexSet(std::size_t n, std::vector<std::size_t> elems);
    static IndexSet range(std::size_t n, std::size_t first, std::size_t last);  // inclusive
    std::size_t modulus() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<std::size_t>& elems() const { return elems_; }
    bool contains(std::size_t i) const;
    std::string to_string() const;  // compact run notation, e.g. {0..24,30}
    static IndexSet parse(std::size_t n, const std::string& text);

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.n_ == b.n_ && a.elems_ == b.elems_; }

  private:
    std::size_t n_;
    std::vector<std::size_t> elems_;
};

IndexSet sum_set(const IndexSet& s, const IndexSet& r);
IndexSet scale_set(long a, const IndexSet& r);
// Size of the smallest circular interval containing the set.
std::size_t closure_size(const IndexSet& s);
// Longest run of circularly consecutive elements.
std::size_t longest_run(const IndexSet& s);
// Distance bound for the code with defining set R: longest run + 1.
std::size_t bch_bound(const IndexSet& defining);
// {i : -i not in S}; gen(S) equals the code with this defining set.
IndexSet generating_to_defining(const IndexSet& s);

Matrix root_matrix(const IndexSet& r, const Field& f, FieldElem gamma);
LinearCode code_from_defining_set(const IndexSet& r, const Field& f, FieldElem gamma);
LinearCode code_from_generating_set(const IndexSet& r, const Field& f, FieldElem gamma);

struct RoosCheck {
    bool hypothesis_ok = false;
    std::size_t closure = 0;  // |S bar|
    std::size_t d_roos = 0;
};
RoosCheck roos_check(const IndexSet& s, const IndexSet& r, std::size_t d_r_lower);

bool nondegeneracy_check(const IndexSet& r);

struct CyclicPairReport {
    PelpPair pair;
    IndexSet a_s, b_r, sum;
    std::size_t k = 0;
    long delta = 0;
    std::vector<long> gammas;  // gamma_1 .. gamma_{ell-1}
    long radius = 0;
    RoosCheck roos;
    std::size_t d_r = 0, d_s = 0;
    bool nondegenerate = false;
    // t_AB >= (d_roos - 1)/2 versus k <= (3n + 6 - 3 delta - 2 gamma_1 - 4|S|)/5
    bool comparison_applicable = false;  // exact equivalence needs ell = 2, consecutive R, d_R = |R| + 1
    bool comparison_radius_side = false;
    bool comparison_k_side = false;
};

/*
 * Builds A = gen(aS), B = gen(bR), C~ = code with defining set aS + bR, and derives
 * k, delta, gamma_i and the radius from actual dimensions. d_r_lower defaults to the
 * BCH bound of the defining set bR. Throws std::invalid_argument naming the failed
 * hypothesis.
 */
CyclicPairReport cyclic_pelp_pair(const IndexSet& s, const IndexSet& r, long a, long b, unsigned ell,
                                  const Field& f, FieldElem gamma, std::optional<std::size_t> d_r_lower = {},
                                  std::optional<std::size_t> t = {});

}  // namespace pelp
