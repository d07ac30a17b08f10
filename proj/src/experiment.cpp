#include "pelp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace pelp {

const char* const kErrorModel = "uniform support of size exactly t, uniform nonzero values";

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : state_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t CounterRng::next() {
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9E3779B97F4A7C15ULL;
    return out;
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rng: empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

Word corrupt(const Field& f, const Word& c, std::size_t t, CounterRng& rng) {
    const std::size_t n = c.size();
    if (t > n) throw std::invalid_argument("corrupt: t exceeds the length");
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
    // partial Fisher-Yates: the first t entries form a uniform t-subset
    for (std::size_t i = 0; i < t; ++i) std::swap(pos[i], pos[i + rng.below(n - i)]);
    Word y = c;
    for (std::size_t i = 0; i < t; ++i) y[pos[i]] = f.add(y[pos[i]], FieldElem{1 + rng.below(f.order() - 1)});
    return y;
}

Word corrupt(const Field& f, const Word& c, std::size_t t, std::uint64_t seed) {
    CounterRng rng(seed, 0);
    return corrupt(f, c, t, rng);
}

// ---- configuration ----

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    try {
        c.family = j.at("family").get<std::string>();
        c.algo = j.at("algo").get<std::string>();
        c.ell = j.value("ell", 1u);
        c.trials = j.value("trials", std::size_t{100});
        c.seed = j.value("seed", std::uint64_t{1});
        c.threads = j.value("threads", 0u);
        c.oracle_checks = j.value("oracle_checks", true);
        c.enforce_degree = j.value("enforce_degree", true);
        if (j.contains("t")) {
            if (j.at("t").is_array()) {
                c.ts = j.at("t").get<std::vector<std::size_t>>();
            } else {
                c.ts = {j.at("t").get<std::size_t>()};
            }
        } else if (j.contains("t_min") && j.contains("t_max")) {
            for (auto t = j.at("t_min").get<std::size_t>(); t <= j.at("t_max").get<std::size_t>(); ++t) c.ts.push_back(t);
        }
        if (c.family == "rs") {
            c.p = j.at("p").get<std::uint64_t>();
            c.m = j.value("m", 1u);
            c.n = j.value("n", std::size_t{0});
            c.k = j.at("k").get<std::size_t>();
        } else if (c.family == "hermitian") {
            c.q0 = j.at("q0").get<unsigned>();
            c.deg_g = j.at("degG").get<long>();
        } else if (c.family == "cyclic") {
            c.p = j.at("p").get<std::uint64_t>();
            c.m = j.value("m", 1u);
            c.n = j.at("n").get<std::size_t>();
            c.s_set = j.at("S").get<std::string>();
            c.r_set = j.at("R").get<std::string>();
            c.a = j.value("a", 1L);
            c.b = j.value("b", 1L);
            if (j.contains("d_r")) c.d_r = j.at("d_r").get<std::size_t>();
        } else {
            throw ConfigError("config: family must be rs, hermitian or cyclic");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (c.algo != "wb" && c.algo != "ecp" && c.algo != "power" && c.algo != "pelp") {
        throw ConfigError("config: algo must be wb, ecp, power or pelp");
    }
    if (c.ts.empty()) throw ConfigError("config: give t, or t_min and t_max");
    if (c.trials == 0) throw ConfigError("config: trials must be positive");
    if (c.ell == 0) throw ConfigError("config: ell must be at least 1");
    return c;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    if (family == "rs" || family == "cyclic") {
        j["p"] = p;
        j["m"] = m;
        j["n"] = n;
    }
    if (family == "rs") j["k"] = k;
    if (family == "hermitian") {
        j["q0"] = q0;
        j["degG"] = deg_g;
    }
    if (family == "cyclic") {
        j["S"] = s_set;
        j["R"] = r_set;
        j["a"] = a;
        j["b"] = b;
        if (d_r) j["d_r"] = *d_r;
    }
    j["algo"] = algo;
    j["ell"] = ell;
    j["t"] = ts;
    j["trials"] = trials;
    j["seed"] = seed;
    j["oracle_checks"] = oracle_checks;
    j["enforce_degree"] = enforce_degree;
    return j;
}

// ---- running ----

namespace {

struct Setup {
    Field field;
    LinearCode code;
    std::optional<RsCode> rs;
    std::optional<HermitianCurve> curve;
    std::optional<HermitianCode> herm;
    std::optional<IndexSet> s, r;
    FieldElem gamma{};
    long k_or_deg_g = 0;
};

Setup build_setup(const ExperimentConfig& cfg) {
    if (cfg.family == "rs") {
        const Field f(cfg.p, cfg.m);
        Word x = full_support_points(f);
        const std::size_t n = cfg.n ? cfg.n : x.size();
        if (n > x.size()) throw ConfigError("config: n exceeds the field size");
        x.resize(n);
        RsCode rs = rs_code(f, x, cfg.k);
        Setup s{f, rs.code, rs, {}, {}, {}, {}, {}, static_cast<long>(cfg.k)};
        return s;
    }
    if (cfg.family == "hermitian") {
        HermitianCurve curve = hermitian_curve(cfg.q0);
        HermitianCode code = one_point_code(curve, cfg.deg_g);
        Setup s{curve.field, code.code, {}, curve, code, {}, {}, {}, cfg.deg_g};
        return s;
    }
    const Field f(cfg.p, cfg.m);
    const FieldElem gamma = f.nth_root_of_unity(cfg.n);
    IndexSet s = IndexSet::parse(cfg.n, cfg.s_set), r = IndexSet::parse(cfg.n, cfg.r_set);
    const IndexSet sum = sum_set(scale_set(cfg.a, s), scale_set(cfg.b, r));
    LinearCode c = code_from_defining_set(sum, f, gamma);
    const long k = static_cast<long>(c.dim());
    return Setup{f, std::move(c), {}, {}, {}, s, r, gamma, k};
}

std::optional<PelpPair> build_pair(const ExperimentConfig& cfg, const Setup& s, std::size_t t) {
    if (cfg.algo != "pelp" && cfg.algo != "ecp") return std::nullopt;
    const unsigned ell = cfg.algo == "ecp" ? 1 : cfg.ell;
    if (cfg.family == "rs") return rs_pelp_pair(*s.rs, t, ell);
    if (cfg.family == "hermitian") return ag_pelp_pair(*s.curve, cfg.deg_g, t, ell).pair;
    return cyclic_pelp_pair(*s.s, *s.r, cfg.a, cfg.b, ell, s.field, s.gamma, cfg.d_r, t).pair;
}

void check_algorithm(const ExperimentConfig& cfg) {
    if (cfg.algo == "wb" && cfg.family != "rs") throw ConfigError("config: wb needs the rs family");
    if (cfg.algo == "power" && cfg.family == "cyclic") throw ConfigError("config: power decoding needs rs or hermitian");
}

nlohmann::json predictions(const ExperimentConfig& cfg, const Setup& s) {
    nlohmann::json p;
    const long long n = static_cast<long long>(s.code.length());
    auto put_radius = [&](const char* key, auto fn) {
        try {
            const Radius r = fn();
            p[key] = {{"value", r.value}, {"exact", std::to_string(r.exact.numerator()) + "/" + std::to_string(r.exact.denominator())}};
        } catch (const std::invalid_argument& e) {
            p[key] = {{"value", nullptr}, {"note", e.what()}};
        }
    };
    if (cfg.family == "rs") {
        const long long k = static_cast<long long>(cfg.k);
        p["half_distance"] = (n - k) / 2;
        put_radius("power_pelp_radius", [&] { return radius_rs(n, k, cfg.ell); });
    } else if (cfg.family == "hermitian") {
        const long long g = static_cast<long long>(s.curve->genus);
        p["genus"] = g;
        p["half_designed_distance"] = (n - cfg.deg_g - 1) / 2;
        put_radius("pelp_radius", [&] { return radius_ag_pelp(n, g, cfg.deg_g, cfg.ell); });
        put_radius("sudan_radius", [&] { return radius_ag_sudan(n, g, cfg.deg_g, cfg.ell); });
        put_radius("power_radius", [&] { return radius_ag_power(n, g, cfg.deg_g, cfg.ell); });
    } else {
        try {
            const CyclicPairReport rep =
                cyclic_pelp_pair(*s.s, *s.r, cfg.a, cfg.b, cfg.ell, s.field, s.gamma, cfg.d_r, cfg.ts.front());
            p["pelp_radius"] = rep.radius;
            p["delta"] = rep.delta;
            p["gammas"] = rep.gammas;
            p["d_roos"] = rep.roos.d_roos;
            p["half_bch_bound"] = (bch_bound(rep.sum) - 1) / 2;
        } catch (const std::invalid_argument& e) {
            p["note"] = e.what();
        }
    }
    return p;
}

std::size_t failure_index(Failure f) {
    const auto& all = all_failures();
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), f) - all.begin());
}

TrialRecord run_trial(const ExperimentConfig& cfg, const Setup& s, const std::optional<PelpPair>& pair, std::size_t t,
                      std::size_t trial) {
    CounterRng rng(cfg.seed, (static_cast<std::uint64_t>(t) << 32) | trial);
    Word msg(s.code.dim());
    for (auto& e : msg) e = FieldElem{rng.below(s.field.order())};
    const Word sent = s.code.encode(msg);
    const Word y = corrupt(s.field, sent, t, rng);

    TrialRecord rec;
    rec.trial = trial;
    rec.t = t;
    PelpTrace trace;
    const auto start = std::chrono::steady_clock::now();
    DecodeOutcome out;
    if (cfg.algo == "wb") {
        out = wb_decode(*s.rs, y, t);
    } else if (cfg.algo == "power") {
        out = s.rs ? power_decode_rs(*s.rs, y, t, cfg.ell) : power_decode_ag(*s.herm, y, t, cfg.ell, cfg.enforce_degree);
    } else if (cfg.algo == "ecp") {
        out = ecp_decode(*pair, y);
    } else {
        out = pelp_decode(*pair, y, &trace);
    }
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rec.failure = out.failure;
    rec.success = out.ok() && out.codeword == sent;
    rec.miscorrection = out.ok() && out.codeword != sent;
    if (out.ok() && (!s.code.contains(out.codeword) || hamming_distance(out.codeword, y) > t)) rec.oracle_ok = false;
    if (cfg.algo == "pelp" && cfg.oracle_checks) {
        const OracleReport o = pelp_oracle_checks(*pair, y, sent, trace);
        rec.shortened_equals_m = o.shortened_equals_m;
        rec.oracle_ok = rec.oracle_ok && o.all() && (rec.success == o.shortened_equals_m);
    }
    return rec;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    check_algorithm(cfg);
    Setup s = [&] {
        try {
            return build_setup(cfg);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }();
    ExperimentReport rep;
    rep.config = cfg;
    rep.q = s.field.order();
    rep.n = s.code.length();
    rep.k_or_deg_g = s.k_or_deg_g;
    rep.predictions = predictions(cfg, s);

    const unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t t : cfg.ts) {
        std::optional<PelpPair> pair;
        try {
            pair = build_pair(cfg, s, t);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("t=") + std::to_string(t) + ": " + e.what());
        }
        std::vector<TrialRecord> recs(cfg.trials);
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (std::size_t i = next++; i < cfg.trials; i = next++) {
                try {
                    recs[i] = run_trial(cfg, s, pair, t, i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = cfg.trials;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
        if (error) {
            try {
                std::rethrow_exception(error);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("t=") + std::to_string(t) + ": " + e.what());
            }
        }

        RowStats row;
        row.t = t;
        row.trials = cfg.trials;
        double total_ms = 0;
        for (const auto& r : recs) {
            row.successes += r.success;
            row.miscorrections += r.miscorrection;
            if (r.failure != Failure::none) ++row.failures[failure_index(r.failure)];
            if (r.shortened_equals_m.has_value()) ++row.oracle_checked;
            row.oracle_violations += !r.oracle_ok;
            total_ms += r.ms;
        }
        row.mean_ms = total_ms / static_cast<double>(cfg.trials);
        rep.rows.push_back(row);
        rep.records.push_back(std::move(recs));
    }
    return rep;
}

// ---- output ----

std::string report_csv(const ExperimentReport& r, bool include_timing) {
    std::ostringstream os;
    os << "# error_model: " << kErrorModel << "; seed=" << r.config.seed << '\n';
    os << "family,q,n,k_or_degG,algo,ell,t,trials,successes";
    for (Failure f : all_failures()) os << ',' << to_string(f);
    os << ",miscorrections,oracle_checked,oracle_violations";
    if (include_timing) os << ",mean_ms";
    os << '\n';
    for (const auto& row : r.rows) {
        os << r.config.family << ',' << r.q << ',' << r.n << ',' << r.k_or_deg_g << ',' << r.config.algo << ','
           << (r.config.algo == "ecp" || r.config.algo == "wb" ? 1u : r.config.ell) << ',' << row.t << ','
           << row.trials << ',' << row.successes;
        for (auto c : row.failures) os << ',' << c;
        os << ',' << row.miscorrections << ',' << row.oracle_checked << ',' << row.oracle_violations;
        if (include_timing) os << ',' << std::fixed << std::setprecision(3) << row.mean_ms;
        os << '\n';
    }
    return os.str();
}

nlohmann::json report_json(const ExperimentReport& r) {
    nlohmann::json j;
    j["config"] = r.config.to_json();
    j["error_model"] = kErrorModel;
    j["q"] = r.q;
    j["n"] = r.n;
    j["k_or_degG"] = r.k_or_deg_g;
    j["predictions"] = r.predictions;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json f;
        for (std::size_t i = 0; i < kFailureKinds; ++i) f[to_string(all_failures()[i])] = row.failures[i];
        j["rows"].push_back({{"t", row.t},
                             {"trials", row.trials},
                             {"successes", row.successes},
                             {"success_rate", row.success_rate()},
                             {"failures", f},
                             {"miscorrections", row.miscorrections},
                             {"oracle_checked", row.oracle_checked},
                             {"oracle_violations", row.oracle_violations},
                             {"mean_ms", row.mean_ms}});
    }
    return j;
}

std::string strip_timing(const std::string& csv) {
    std::istringstream in(csv);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            const auto header_pos = line.find(",mean_ms");
            if (header_pos != std::string::npos) {
                line.erase(header_pos);
            } else if (csv.find(",mean_ms") != std::string::npos) {
                line.erase(line.rfind(','));
            }
        }
        out << line << '\n';
    }
    return out.str();
}

}  // namespace pelp
