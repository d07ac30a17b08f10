// Command-line front end: code construction, encoding, corruption, decoding,
// pair validation, radius tables, Monte Carlo benchmarks and the n = 51 cyclic demo.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pelp/experiment.hpp"
#include "pelp/io.hpp"

using namespace pelp;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDecodeFailure = 3;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        save_text(out_path, text);
    }
}

std::string join_indices(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i].value);
    return s;
}

Word parse_points(const Field& f, const std::string& text) {
    Word out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(f.element(std::stoull(tok)));
    return out;
}

const std::string& meta_at(const CodeFile& cf, const std::string& key) {
    const auto it = cf.meta.find(key);
    if (it == cf.meta.end()) throw ValidationError("code file lacks metadata '" + key + "'");
    return it->second;
}

// Smallest m with n | p^m - 1.
unsigned splitting_degree(std::uint64_t p, std::size_t n) {
    if (n == 0 || p % n == 0) throw ValidationError("cyclic: n must be coprime to p");
    std::uint64_t r = p % n;
    for (unsigned m = 1; m <= 64; ++m) {
        if (r == 1 % n) return m;
        r = (r * p) % n;
    }
    throw ValidationError("cyclic: no splitting field found");
}

// ---- rebuilding family structure from a code file ----

struct Family {
    CodeFile file;
    std::optional<RsCode> rs;
    std::optional<HermitianCode> herm;
};

Family load_family(const std::string& path) {
    Family fam{load_code(path), {}, {}};
    const auto it = fam.file.meta.find("family");
    if (it == fam.file.meta.end()) return fam;
    if (it->second == "rs") {
        const Field& f = fam.file.code.field();
        fam.rs = rs_code(f, parse_points(f, meta_at(fam.file, "points")), std::stoul(meta_at(fam.file, "k")));
        if (!(fam.rs->code == fam.file.code)) throw ValidationError("code file does not match its RS metadata");
    } else if (it->second == "hermitian") {
        const HermitianCurve curve = hermitian_curve(static_cast<unsigned>(std::stoul(meta_at(fam.file, "q0"))));
        fam.herm = one_point_code(curve, std::stol(meta_at(fam.file, "m")));
        if (!(fam.herm->code == fam.file.code)) throw ValidationError("code file does not match its Hermitian metadata");
    }
    return fam;
}

struct CyclicArgs {
    std::size_t n = 0;
    std::uint64_t p = 0;
    unsigned m = 0;
    std::string s, r;
    long a = 1, b = 1;
    std::size_t d_r = 0;
};

CyclicPairReport cyclic_report(const CyclicArgs& c, unsigned ell, std::optional<std::size_t> t) {
    const unsigned m = c.m ? c.m : splitting_degree(c.p, c.n);
    const Field f(c.p, m);
    return cyclic_pelp_pair(IndexSet::parse(c.n, c.s), IndexSet::parse(c.n, c.r), c.a, c.b, ell, f,
                            f.nth_root_of_unity(c.n), c.d_r ? std::optional<std::size_t>(c.d_r) : std::nullopt, t);
}

CyclicArgs cyclic_args_from_meta(const CodeFile& cf) {
    CyclicArgs c;
    c.n = std::stoul(meta_at(cf, "n"));
    c.p = cf.code.field().characteristic();
    c.m = cf.code.field().degree();
    c.s = meta_at(cf, "S");
    c.r = meta_at(cf, "R");
    c.a = std::stol(meta_at(cf, "a"));
    c.b = std::stol(meta_at(cf, "b"));
    if (cf.meta.count("d_r")) c.d_r = std::stoul(cf.meta.at("d_r"));
    return c;
}

// Pair from an explicit pair file, or the family construction recorded in the code metadata.
PelpPair obtain_pair(const Family& fam, const std::string& pair_path, std::size_t t, unsigned ell) {
    if (!pair_path.empty()) {
        PairFile pf = load_pair(pair_path);
        return PelpPair(pf.a, pf.b, fam.file.code, ell ? ell : pf.ell, t ? t : pf.t);
    }
    if (fam.rs) return rs_pelp_pair(*fam.rs, t, ell);
    if (fam.herm) return ag_pelp_pair(fam.herm->curve, fam.herm->m, t, ell).pair;
    if (fam.file.meta.count("family") && fam.file.meta.at("family") == "cyclic") {
        return cyclic_report(cyclic_args_from_meta(fam.file), ell, t).pair;
    }
    throw ValidationError("no --pair given and the code file carries no family metadata");
}

json pair_report_json(const PairReport& r) {
    json j;
    for (const auto& [name, c] : r.items()) {
        j[name] = {{"status", to_string(c->status)}, {"lhs", c->lhs}, {"rhs", c->rhs}, {"detail", c->detail}};
    }
    j["all_hold"] = r.all_hold();
    return j;
}

json cyclic_report_json(const CyclicPairReport& r) {
    return json{{"aS", r.a_s.to_string()},
                {"bR", r.b_r.to_string()},
                {"sum_set", r.sum.to_string()},
                {"sum_size", r.sum.size()},
                {"k", r.k},
                {"delta", r.delta},
                {"gammas", r.gammas},
                {"consistency_2delta_plus_gamma1", r.gammas.empty() ? json(nullptr) : json(2 * r.delta + r.gammas[0])},
                {"radius", r.radius},
                {"closure_size", r.roos.closure},
                {"roos_hypothesis", r.roos.hypothesis_ok},
                {"d_R", r.d_r},
                {"d_S_bch", r.d_s},
                {"d_roos", r.roos.d_roos},
                {"half_d_roos", (r.roos.d_roos - 1) / 2},
                {"bch_bound_C", bch_bound(r.sum)},
                {"nondegenerate", r.nondegenerate},
                {"comparison_applicable", r.comparison_applicable},
                {"comparison_radius_side", r.comparison_radius_side},
                {"comparison_k_side", r.comparison_k_side},
                {"dim_A", r.pair.A().dim()},
                {"dim_B", r.pair.B().dim()},
                {"dim_W2", r.pair.ell() >= 2 ? json(r.pair.W(2).dim()) : json(nullptr)}};
}

json outcome_json(const DecodeOutcome& o, const Field& f) {
    json j{{"status", o.ok() ? "success" : "failure"}, {"reason", to_string(o.failure)}};
    json located = json::array();
    for (auto i : o.located) located.push_back(i + 1);  // 1-based externally
    j["located"] = located;
    if (o.ok()) {
        json cw = json::array(), err = json::array();
        for (auto e : o.codeword) cw.push_back(format_element(f, e));
        for (auto e : o.error) err.push_back(format_element(f, e));
        j["codeword"] = cw;
        j["error"] = err;
        j["error_weight"] = weight(o.error);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Error locating pairs and power decoding toolkit"};
    app.require_subcommand(1);
    std::string out_path;

    // make-code
    auto* make = app.add_subcommand("make-code", "Build a code and write it in code-file format");
    make->require_subcommand(1);
    std::uint64_t rs_p = 0;
    unsigned rs_m = 1;
    std::size_t rs_k = 0, rs_n = 0;
    std::string rs_points;
    auto* make_rs = make->add_subcommand("rs", "Reed-Solomon code");
    make_rs->add_option("--q,--p", rs_p, "field characteristic p (field GF(p^m))")->required();
    make_rs->add_option("--m", rs_m, "extension degree");
    make_rs->add_option("--k", rs_k, "dimension")->required();
    make_rs->add_option("--n", rs_n, "length; uses the first n field elements (default: all)");
    make_rs->add_option("--points", rs_points, "comma-separated packed element indices");
    make_rs->add_option("-o,--out", out_path, "output file");
    unsigned h_q0 = 0;
    long h_m = 0;
    auto* make_h = make->add_subcommand("hermitian", "Hermitian one-point code C_L(m P_inf)");
    make_h->add_option("--q0", h_q0, "curve parameter, field GF(q0^2)")->required();
    make_h->add_option("--m", h_m, "divisor degree")->required();
    make_h->add_option("-o,--out", out_path, "output file");
    CyclicArgs cyc;
    auto* make_c = make->add_subcommand("cyclic", "Cyclic code with defining set aS + bR");
    make_c->add_option("--n", cyc.n, "length")->required();
    make_c->add_option("--p", cyc.p, "characteristic")->required();
    make_c->add_option("--m", cyc.m, "extension degree (default: smallest with n | p^m - 1)");
    make_c->add_option("--S", cyc.s, "set S, e.g. 0..24,30")->required();
    make_c->add_option("--R", cyc.r, "set R")->required();
    make_c->add_option("--a", cyc.a, "multiplier for S");
    make_c->add_option("--b", cyc.b, "multiplier for R");
    make_c->add_option("--d-r", cyc.d_r, "certified lower bound on d_R");
    make_c->add_option("-o,--out", out_path, "output file");

    // encode / corrupt
    std::string code_path, msg_path, word_path, pair_path, y_path, config_path, csv_path, json_path;
    std::uint64_t seed = 1;
    auto* enc = app.add_subcommand("encode", "Encode a message (coordinates in the RREF basis)");
    enc->add_option("--code", code_path, "code file")->required();
    auto* enc_msg = enc->add_option("--msg", msg_path, "message word file");
    enc->add_option("--seed", seed, "draw a uniform message from this seed when --msg is absent");
    enc->add_option("-o,--out", out_path, "output file");
    std::size_t t = 0;
    auto* cor = app.add_subcommand("corrupt", "Add an error of weight exactly t");
    cor->add_option("--word", word_path, "word file")->required();
    cor->add_option("--t", t, "error weight")->required();
    cor->add_option("--seed", seed, "seed");
    cor->add_option("-o,--out", out_path, "output file");

    // decode
    std::string algo;
    unsigned ell = 0;
    bool no_enforce = false;
    auto* dec = app.add_subcommand("decode", "Decode one received word; prints JSON");
    dec->add_option("--algo", algo, "wb | ecp | power | pelp")->required()->check(CLI::IsMember({"wb", "ecp", "power", "pelp"}));
    dec->add_option("--code", code_path, "code file")->required();
    dec->add_option("--pair", pair_path, "pair file (default: family construction from code metadata)");
    dec->add_option("--y", y_path, "received word file")->required();
    dec->add_option("--t", t, "error weight bound")->required();
    dec->add_option("--ell", ell, "power ell (pelp/power; default 1 or the pair file's)");
    dec->add_flag("--no-enforce-degree", no_enforce, "allow AG power decoding with degG < 2g + 1");

    // validate-pair
    auto* val = app.add_subcommand("validate-pair", "Check the five locating-pair conditions");
    val->add_option("--code", code_path, "code file")->required();
    val->add_option("--pair", pair_path, "pair file (default: family construction)");
    val->add_option("--t", t, "target error weight")->required();
    val->add_option("--ell", ell, "power ell");
    val->add_option("-o,--out", out_path, "also write the pair in pair-file format here");

    // radius
    std::string rfamily;
    long long rn = 0, rk = 0, rg = 0, rdeg = 0;
    unsigned rell = 1;
    auto* rad = app.add_subcommand("radius", "Decoding radius formulas");
    rad->add_option("--family", rfamily, "rs | ag | ag_sudan | ag_power | table | cyclic")
        ->required()
        ->check(CLI::IsMember({"rs", "ag", "ag_sudan", "ag_power", "table", "cyclic"}));
    rad->add_option("--n", rn, "length");
    rad->add_option("--k", rk, "dimension (rs)");
    rad->add_option("--g", rg, "genus (ag)");
    rad->add_option("--degG", rdeg, "deg G (ag)");
    rad->add_option("--ell", rell, "power ell");
    rad->add_option("--p", cyc.p, "characteristic (cyclic)");
    rad->add_option("--S", cyc.s, "set S (cyclic)");
    rad->add_option("--R", cyc.r, "set R (cyclic)");
    rad->add_option("--d-r", cyc.d_r, "lower bound on d_R (cyclic)");

    // bench
    unsigned threads = 0;
    auto* bench = app.add_subcommand("bench", "Run a Monte Carlo experiment from a JSON config");
    bench->add_option("--config", config_path, "JSON config")->required();
    bench->add_option("--csv", csv_path, "CSV output (default: stdout)");
    bench->add_option("--json", json_path, "JSON summary output");
    bench->add_option("--threads", threads, "override worker count");
    bool no_timing = false;
    bench->add_flag("--no-timing", no_timing, "omit the mean_ms column");

    // cyclic-demo
    std::size_t demo_trials = 0;
    auto* demo = app.add_subcommand("cyclic-demo", "Report for n=51, GF(5^16), S={0..24,30}, R={0..13,19}");
    demo->add_option("--trials", demo_trials, "also run this many decoding trials at the radius");
    demo->add_option("--seed", seed, "seed for the trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*make_rs) {
            const Field f(rs_p, rs_m);
            Word x = rs_points.empty() ? full_support_points(f) : parse_points(f, rs_points);
            if (rs_points.empty() && rs_n) {
                if (rs_n > x.size()) throw ValidationError("n exceeds the field size");
                x.resize(rs_n);
            }
            const RsCode c = rs_code(f, x, rs_k);
            std::ostringstream os;
            write_code(os, c.code, {{"family", "rs"}, {"k", std::to_string(rs_k)}, {"points", join_indices(x)}});
            emit(out_path, os.str());
        } else if (*make_h) {
            const HermitianCode c = one_point_code(hermitian_curve(h_q0), h_m);
            std::ostringstream os;
            write_code(os, c.code,
                       {{"family", "hermitian"}, {"q0", std::to_string(h_q0)}, {"m", std::to_string(h_m)},
                        {"genus", std::to_string(c.curve.genus)}});
            emit(out_path, os.str());
        } else if (*make_c) {
            if (!cyc.m) cyc.m = splitting_degree(cyc.p, cyc.n);
            const Field f(cyc.p, cyc.m);
            const IndexSet s = IndexSet::parse(cyc.n, cyc.s), r = IndexSet::parse(cyc.n, cyc.r);
            const IndexSet sum = sum_set(scale_set(cyc.a, s), scale_set(cyc.b, r));
            const LinearCode c = code_from_defining_set(sum, f, f.nth_root_of_unity(cyc.n));
            std::map<std::string, std::string> meta{{"family", "cyclic"},     {"n", std::to_string(cyc.n)},
                                                    {"S", s.to_string()},     {"R", r.to_string()},
                                                    {"a", std::to_string(cyc.a)}, {"b", std::to_string(cyc.b)}};
            if (cyc.d_r) meta["d_r"] = std::to_string(cyc.d_r);
            std::ostringstream os;
            write_code(os, c, meta);
            emit(out_path, os.str());
        } else if (*enc) {
            const CodeFile cf = load_code(code_path);
            const Field& f = cf.code.field();
            Word msg;
            if (*enc_msg) {
                msg = load_word(msg_path, &f);
            } else {
                CounterRng rng(seed, 0);
                msg.resize(cf.code.dim());
                for (auto& e : msg) e = FieldElem{rng.below(f.order())};
            }
            if (msg.size() != cf.code.dim()) throw ValidationError("message length must equal k");
            std::ostringstream os;
            write_word(os, f, cf.code.encode(msg));
            emit(out_path, os.str());
        } else if (*cor) {
            std::ifstream in(word_path);
            if (!in) throw std::runtime_error("cannot open " + word_path);
            const Matrix m = read_matrix(in);
            if (m.rows() != 1) throw ValidationError("word file must hold one row");
            std::ostringstream os;
            write_word(os, m.field(), corrupt(m.field(), m.row_word(0), t, seed));
            emit(out_path, os.str());
        } else if (*dec) {
            const Family fam = load_family(code_path);
            const Field& f = fam.file.code.field();
            const Word y = load_word(y_path, &f);
            if (y.size() != fam.file.code.length()) throw ValidationError("received word has the wrong length");
            DecodeOutcome o;
            if (algo == "wb") {
                if (!fam.rs) throw ValidationError("wb needs an RS code file");
                o = wb_decode(*fam.rs, y, t);
            } else if (algo == "power") {
                if (fam.rs) {
                    o = power_decode_rs(*fam.rs, y, t, ell ? ell : 1);
                } else if (fam.herm) {
                    o = power_decode_ag(*fam.herm, y, t, ell ? ell : 1, !no_enforce);
                } else {
                    throw ValidationError("power decoding needs an RS or Hermitian code file");
                }
            } else if (algo == "ecp") {
                o = ecp_decode(obtain_pair(fam, pair_path, t, 1), y);
            } else {
                o = pelp_decode(obtain_pair(fam, pair_path, t, ell ? ell : (pair_path.empty() ? 1 : 0)), y);
            }
            std::cout << outcome_json(o, f).dump(2) << '\n';
            return o.ok() ? kExitOk : kExitDecodeFailure;
        } else if (*val) {
            const Family fam = load_family(code_path);
            const PelpPair pair = obtain_pair(fam, pair_path, t, ell ? ell : (pair_path.empty() ? 1 : 0));
            const PairReport r = validate_pelp_pair(pair);
            json j = pair_report_json(r);
            j["t"] = pair.t();
            j["ell"] = pair.ell();
            std::cout << j.dump(2) << '\n';
            if (!out_path.empty()) {
                std::ostringstream os;
                write_pair(os, pair.A(), pair.B(), pair.ell(), pair.t());
                save_text(out_path, os.str());
            }
            return r.all_hold() ? kExitOk : kExitValidation;
        } else if (*rad) {
            auto rj = [](const Radius& r) {
                return json{{"value", r.value},
                            {"exact", std::to_string(r.exact.numerator()) + "/" + std::to_string(r.exact.denominator())}};
            };
            json j{{"family", rfamily}, {"ell", rell}};
            if (rfamily == "rs") {
                j["n"] = rn;
                j["k"] = rk;
                j["radius"] = rj(radius_rs(rn, rk, rell));
                j["half_distance"] = (rn - rk) / 2;
            } else if (rfamily == "cyclic") {
                cyc.n = static_cast<std::size_t>(rn);
                j["report"] = cyclic_report_json(cyclic_report(cyc, rell, std::nullopt));
            } else {
                j["n"] = rn;
                j["g"] = rg;
                j["degG"] = rdeg;
                if (rfamily == "ag" || rfamily == "table") j["pelp"] = rj(radius_ag_pelp(rn, rg, rdeg, rell));
                if (rfamily == "ag_sudan" || rfamily == "table") j["sudan"] = rj(radius_ag_sudan(rn, rg, rdeg, rell));
                if (rfamily == "ag_power" || rfamily == "table") j["power"] = rj(radius_ag_power(rn, rg, rdeg, rell));
                if (rfamily == "table") j["half_designed_distance"] = (rn - rdeg - 1) / 2;
            }
            std::cout << j.dump(2) << '\n';
        } else if (*bench) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open " + config_path);
            json cj;
            try {
                cj = json::parse(in);
            } catch (const json::exception& e) {
                throw ValidationError(std::string("config is not valid JSON: ") + e.what());
            }
            ExperimentConfig cfg = ExperimentConfig::from_json(cj);
            if (threads) cfg.threads = threads;
            const ExperimentReport rep = run_experiment(cfg);
            emit(csv_path, report_csv(rep, !no_timing));
            if (!json_path.empty()) save_text(json_path, report_json(rep).dump(2) + "\n");
        } else if (*demo) {
            const CyclicArgs c{51, 5, 16, "0..24,30", "0..13,19", 1, 1, 15};
            const CyclicPairReport rep = cyclic_report(c, 2, std::nullopt);
            json j = cyclic_report_json(rep);
            j["validation"] = pair_report_json(validate_pelp_pair(rep.pair));
            if (demo_trials) {
                ExperimentConfig cfg;
                cfg.family = "cyclic";
                cfg.p = 5;
                cfg.m = 16;
                cfg.n = 51;
                cfg.s_set = c.s;
                cfg.r_set = c.r;
                cfg.d_r = 15;
                cfg.algo = "pelp";
                cfg.ell = 2;
                cfg.ts = {static_cast<std::size_t>(rep.radius)};
                cfg.trials = demo_trials;
                cfg.seed = seed;
                const ExperimentReport er = run_experiment(cfg);
                j["trials"] = report_json(er).at("rows");
            }
            std::cout << j.dump(2) << '\n';
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}
