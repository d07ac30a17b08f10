#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pelp/codes.hpp"

namespace pelp {

// Certified lower bound on a minimum distance. `exact` marks bounds known to be attained.
struct DistanceBound {
    std::size_t value = 0;
    bool exact = false;
};

// Family-supplied distance knowledge, used by validation in place of enumeration.
struct DistanceHints {
    std::optional<DistanceBound> a;       // d(A)
    std::optional<DistanceBound> a_dual;  // d(A^perp)
    std::optional<DistanceBound> c;       // d(C)
    std::optional<DistanceBound> b_dual;  // d(B^perp)
};

/*
 * A triple (A, B, C) with power ell and target radius t. C is the code being decoded.
 *
 * Construction precomputes everything that does not depend on the received word:
 * the parity-check matrix of C and, for i = 1..ell, the spaces
 *     W_i = (B^perp * C^(i-1))^perp,   W_1 = B.
 */
class PelpPair {
  public:
    PelpPair(LinearCode a, LinearCode b, LinearCode c, unsigned ell, std::size_t t, DistanceHints hints = {});

    const LinearCode& A() const { return a_; }
    const LinearCode& B() const { return b_; }
    const LinearCode& C() const { return c_; }
    unsigned ell() const { return ell_; }
    std::size_t t() const { return t_; }
    std::size_t length() const { return a_.length(); }
    const Field& field() const { return a_.field(); }
    const DistanceHints& hints() const { return hints_; }

    // 1 <= i <= ell
    const LinearCode& W(unsigned i) const;
    // B^perp * C^(i-1); W(i) is its dual.
    const LinearCode& product_space(unsigned i) const;
    const Matrix& parity_check() const { return parity_; }

  private:
    LinearCode a_, b_, c_;
    unsigned ell_;
    std::size_t t_;
    DistanceHints hints_;
    std::vector<LinearCode> products_;  // products_[i-1] = B^perp * C^(i-1)
    std::vector<LinearCode> w_;
    Matrix parity_;
};

enum class CheckStatus { holds, fails, unverified };
const char* to_string(CheckStatus s);

struct ConditionCheck {
    CheckStatus status = CheckStatus::unverified;
    long lhs = 0;
    long rhs = 0;
    std::string detail;
};

struct PairReport {
    ConditionCheck c1;  // A * B contained in C^perp
    ConditionCheck c2;  // dim A > t
    ConditionCheck c3;  // d(A^perp) > t
    ConditionCheck c4;  // d(A) + d(C) > n
    ConditionCheck c5;  // dim B + sum_{i>=2} dim W_i >= t
    ConditionCheck genuine_ecp;  // d(B^perp) > t
    bool all_hold() const;
    std::vector<std::pair<std::string, const ConditionCheck*>> items() const;
};

PairReport validate_pelp_pair(const PelpPair& pair, std::uint64_t enumeration_budget = kMinDistanceBudget);

}  // namespace pelp
