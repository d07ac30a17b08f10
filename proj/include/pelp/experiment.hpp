#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pelp/decoders.hpp"

namespace pelp {

// Counter-based stream: the k-th draw of stream s under seed is a pure function of (seed, s, k).
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next();
    // Uniform in [0, bound), by rejection.
    std::uint64_t below(std::uint64_t bound);

  private:
    std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x);

// y = c + e with |supp(e)| = t exactly, support uniform, values uniform over F^*.
Word corrupt(const Field& f, const Word& c, std::size_t t, CounterRng& rng);
Word corrupt(const Field& f, const Word& c, std::size_t t, std::uint64_t seed);

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    std::string family;  // rs | hermitian | cyclic
    // rs: field GF(p^m), length n (0 = full support), dimension k
    // cyclic: field GF(p^m), modulus n, sets s_set and r_set
    std::uint64_t p = 0;
    unsigned m = 1;
    std::size_t n = 0;
    std::size_t k = 0;
    unsigned q0 = 0;  // hermitian
    long deg_g = 0;   // hermitian
    std::string s_set, r_set;
    long a = 1, b = 1;
    std::optional<std::size_t> d_r;

    std::string algo;  // wb | ecp | power | pelp
    unsigned ell = 1;
    std::vector<std::size_t> ts;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = hardware concurrency
    bool oracle_checks = true;
    bool enforce_degree = true;

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

constexpr std::size_t kFailureKinds = 7;

struct TrialRecord {
    std::size_t trial = 0;
    std::size_t t = 0;
    Failure failure = Failure::none;
    bool success = false;        // returned the transmitted codeword
    bool miscorrection = false;  // returned some other codeword
    std::optional<bool> shortened_equals_m;  // A(I_e) = M, PELP only
    bool oracle_ok = true;       // all per-trial structural checks agreed
    double ms = 0;
};

struct RowStats {
    std::size_t t = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::array<std::size_t, kFailureKinds> failures{};  // indexed like all_failures()
    std::size_t miscorrections = 0;
    std::size_t oracle_checked = 0;
    std::size_t oracle_violations = 0;
    double mean_ms = 0;
    double success_rate() const { return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0; }
};

struct ExperimentReport {
    ExperimentConfig config;
    std::uint64_t q = 0;
    std::size_t n = 0;
    long k_or_deg_g = 0;
    std::vector<RowStats> rows;
    nlohmann::json predictions;
    std::vector<std::vector<TrialRecord>> records;  // per row, in trial order
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

std::string report_csv(const ExperimentReport& r, bool include_timing = true);
nlohmann::json report_json(const ExperimentReport& r);
// CSV text with the timing column removed, for replay comparisons.
std::string strip_timing(const std::string& csv);

extern const char* const kErrorModel;

}  // namespace pelp
