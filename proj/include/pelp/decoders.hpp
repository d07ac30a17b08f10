#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pelp/cyclic.hpp"
#include "pelp/hermitian.hpp"
#include "pelp/pair.hpp"
#include "pelp/rs.hpp"

namespace pelp {

enum class Failure {
    none,
    M_zero,
    J_too_large,
    erasure_inconsistent,
    erasure_ambiguous,
    distance_check_failed,
    no_locator,       // key equations have no solution with a nonzero locator
    division_failed,  // locator does not divide, or the quotient violates degree/power constraints
};
const char* to_string(Failure f);
const std::vector<Failure>& all_failures();

struct DecodeOutcome {
    Failure failure = Failure::none;
    Word codeword;  // valid when ok()
    Word error;     // y - codeword
    IndexList located;  // J for the locating-pair decoders
    bool ok() const { return failure == Failure::none; }
};

// ---- locating spaces ----

// M_i inside the coordinate space of A (ambient dimension dim A).
Subspace compute_Mi(const PelpPair& pair, const Word& y, unsigned i);
// M = intersection of M_1..M_ell, coordinate space of A.
Subspace compute_M(const PelpPair& pair, const Word& y);
// Image of a coordinate subspace of A in F^n.
Subspace to_ambient(const PelpPair& pair, const Subspace& coords);

struct ErasureResult {
    Failure failure = Failure::none;
    Word error;
};
// Unique e supported on J with H (y - e)^T = 0.
ErasureResult erasure_solve(const Matrix& parity, const Word& y, const IndexList& j);
ErasureResult erasure_solve(const LinearCode& c, const Word& y, const IndexList& j);

struct PelpTrace {
    std::optional<Subspace> m1;  // in F^n
    std::optional<Subspace> m;   // in F^n
};

DecodeOutcome pelp_decode(const PelpPair& pair, const Word& y, PelpTrace* trace = nullptr);
DecodeOutcome ecp_decode(const PelpPair& pair, const Word& y);

DecodeOutcome wb_decode(const RsCode& c, const Word& y, std::size_t t);
DecodeOutcome power_decode_rs(const RsCode& c, const Word& y, std::size_t t, unsigned ell);
// enforce_degree: require degG >= 2g + 1; disabling it allows exploratory runs below that bound.
DecodeOutcome power_decode_ag(const HermitianCode& c, const Word& y, std::size_t t, unsigned ell,
                              bool enforce_degree = true);

// ---- per-trial oracle checks that need the transmitted codeword ----

struct OracleReport {
    bool supports_nested = true;     // supp(y^i - c^i) inside I_e for i <= ell
    bool chain = true;               // A(I_e) <= M <= M_1 <= A
    bool decomposition = true;       // M_{I_e} equals the intersection formula
    bool shortened_equals_m = false; // A(I_e) = M
    bool equivalent_forms = true;    // A(I_e) = M  <=>  M(I_e) = M  <=>  M_{I_e} = 0
    bool all() const { return supports_nested && chain && decomposition && equivalent_forms; }
};
OracleReport pelp_oracle_checks(const PelpPair& pair, const Word& y, const Word& sent, const PelpTrace& trace);

// ---- Sol <-> M for RS with ell = 2 ----

struct SolMReport {
    std::size_t dim_sol = 0, dim_m = 0;
    bool bijection_ok = false;
};
SolMReport sol_m_isomorphism_check(const RsCode& c, const Word& y, std::size_t t);

// ---- decoding radii ----

using Rational = boost::rational<long long>;

struct Radius {
    Rational exact;
    long long value = 0;  // floor of exact
};

Radius radius_rs(long long n, long long k, long long ell);
Radius radius_ag_pelp(long long n, long long g, long long deg_g, long long ell);
Radius radius_ag_sudan(long long n, long long g, long long deg_g, long long ell);
Radius radius_ag_power(long long n, long long g, long long deg_g, long long ell);
Radius radius_cyclic(const CyclicPairReport& report);
long long floor_rational(const Rational& r);

}  // namespace pelp
