#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pelp/linalg.hpp"

namespace pelp {

using IndexList = std::vector<std::size_t>;  // 0-based coordinates, ascending

// A linear code, i.e. a subspace of F^n kept in canonical RREF form.
class LinearCode {
  public:
    explicit LinearCode(Subspace space) : space_(std::move(space)) {}
    static LinearCode from_generator(const Matrix& g) { return LinearCode(Subspace::span(g)); }
    static LinearCode zero(const Field& f, std::size_t n) { return LinearCode(Subspace(f, n)); }
    static LinearCode full(const Field& f, std::size_t n) { return LinearCode(Subspace::full(f, n)); }

    const Field& field() const { return space_.field(); }
    std::size_t length() const { return space_.ambient(); }
    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    const Matrix& generator() const { return space_.basis(); }

    bool contains(const Word& w) const { return space_.contains(w); }
    bool is_subcode_of(const LinearCode& other) const { return space_.is_subspace_of(other.space_); }
    // Message (coordinates w.r.t. the RREF generator) to codeword.
    Word encode(const Word& message) const { return space_.combine(message); }

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.space_ == b.space_; }

  private:
    Subspace space_;
};

Word star(const Field& f, std::span<const FieldElem> a, std::span<const FieldElem> b);
std::size_t weight(const Word& w);
std::size_t hamming_distance(const Word& a, const Word& b);
IndexList support(const Word& w);

LinearCode dual(const LinearCode& c);
// Projection onto the coordinates in J, in the order given.
LinearCode puncture(const LinearCode& c, const IndexList& j);
// Subcode vanishing on J, kept at full length.
LinearCode shorten(const LinearCode& c, const IndexList& j);
IndexList zero_set(const LinearCode& c);
IndexList zero_set(const Subspace& s);

LinearCode star_product(const LinearCode& a, const LinearCode& b);
LinearCode power(const LinearCode& c, unsigned i);
LinearCode stabilizer(const LinearCode& c);
bool is_degenerated(const LinearCode& c);

constexpr std::uint64_t kMinDistanceBudget = std::uint64_t{1} << 24;
// Exhaustive minimum distance; throws std::length_error when q^k exceeds the budget.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kMinDistanceBudget);
bool min_distance_feasible(const LinearCode& c, std::uint64_t budget = kMinDistanceBudget);

struct KneserReport {
    long lhs = 0;  // dim(A*B)
    long rhs = 0;  // dim A + dim B - dim Stab(A*B)
    bool holds = false;
    bool product_degenerated = false;
    bool cauchy_davenport_holds = true;  // dim(A*B) >= dim A + dim B - 1, vacuous when degenerated
};
KneserReport kneser_check(const LinearCode& a, const LinearCode& b);

}  // namespace pelp
