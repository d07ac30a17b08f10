#pragma once

#include "pelp/codes.hpp"
#include "pelp/pair.hpp"
#include "pelp/poly.hpp"

namespace pelp {

struct RsCode {
    Field field;
    Word x;  // distinct evaluation points
    std::size_t k;
    LinearCode code;

    std::size_t length() const { return x.size(); }
    std::size_t distance() const { return x.size() - k + 1; }
};

// All field elements in increasing packed-index order.
Word full_support_points(const Field& f);

RsCode rs_code(const Field& f, const Word& x, std::size_t k);
// ev_x(f) for deg f < k.
Word rs_encode(const RsCode& c, const Poly& f);

// A = RS(t+1), B = RS(t+k)^perp, C the code itself, with the MDS distances as exact hints.
PelpPair rs_pelp_pair(const RsCode& c, std::size_t t, unsigned ell);

}  // namespace pelp
