// tcm -- tropical Cayley-Markov dynamics toolkit, command-line front end.
//
// Subcommands: verify, orbit, lyapunov, lambda, markov, semiconj.
// JSON summaries go to stdout, data files to disk (written atomically).
// Exit codes: 0 ok, 1 check failed, 2 bad configuration, 3 I/O error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcm/classical.hpp"
#include "tcm/ergodic.hpp"
#include "tcm/errors.hpp"
#include "tcm/farey.hpp"
#include "tcm/io.hpp"
#include "tcm/kernels.hpp"
#include "tcm/random.hpp"
#include "tcm/torus.hpp"
#include "tcm/tropical.hpp"

using nlohmann::json;
using namespace tcm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitIo = 3;

IntMatrix2 parse_matrix(const std::string& text) {
    std::vector<std::int64_t> entries;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            std::size_t pos = 0;
            entries.push_back(std::stoll(cur, &pos));
            if (pos != cur.size()) throw tcm::ParseError("bad matrix entry: " + cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (entries.size() != 4) throw tcm::ParseError("matrix must be a,b,c,d");
    return IntMatrix2(entries[0], entries[1], entries[2], entries[3]);
}

std::pair<std::string, std::string> split_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw tcm::ParseError("start must be x,y or a named start");
    return {text.substr(0, comma), text.substr(comma + 1)};
}

bool is_named_start(const std::string& s) {
    for (const auto& n : named_start_list()) {
        if (n == s) return true;
    }
    return false;
}

TorusPointQ parse_start_exact(const std::string& text) {
    auto [a, b] = split_pair(text);
    return TorusPointQ(Rat::parse(a), Rat::parse(b));
}

TorusPointD parse_start_float(const std::string& text) {
    if (is_named_start(text)) return named_start(text);
    auto [a, b] = split_pair(text);
    auto to_d = [](const std::string& s) {
        if (s.find('/') != std::string::npos) return Rat::parse(s).to_double();
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw tcm::ParseError("bad coordinate: " + s);
        return v;
    };
    return {to_d(a), to_d(b)};
}

PathWord word_from_options(const std::string& word, const std::string& cf_text,
                           std::size_t n) {
    if (!word.empty() && !cf_text.empty()) {
        throw tcm::ParseError("give either --word or --cf, not both");
    }
    if (!word.empty()) {
        PathWord w(word);
        if (w.size() < n) throw tcm::ParseError("--word shorter than --n");
        return w.prefix(n);
    }
    if (!cf_text.empty()) return cf_to_word(ContinuedFraction::parse(cf_text), n);
    throw tcm::ParseError("need --word or --cf");
}

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
};

json suite_json(const SuiteResult& r) {
    return json{{"suite", r.name}, {"checks", r.checks}, {"failures", r.failures},
                {"pass", r.failures == 0}};
}

TorusPointQ random_torus_point(Xorshift64& rng) {
    return TorusPointQ(rng.torus_coord(), rng.torus_coord());
}

GeneratorWord random_gen_word(Xorshift64& rng, std::size_t max_len) {
    std::string s;
    std::size_t len = max_len == 0 ? 0 : 1 + rng.below(max_len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(rng.next() & 1 ? 's' : 'r');
    return GeneratorWord(s);
}

PathWord random_path_word(Xorshift64& rng, std::size_t max_len) {
    std::string s;
    std::size_t len = max_len == 0 ? 0 : 1 + rng.below(max_len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(rng.next() & 1 ? 'L' : 'R');
    return PathWord(s);
}

SuiteResult run_suite_tropical(std::uint64_t seed, std::size_t samples) {
    SuiteResult r{"tropical"};
    Xorshift64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        TropPoint3 p{rng.rat(), rng.rat(), rng.rat()};
        ++r.checks;
        if (sigma(sigma(p)) != p) ++r.failures;
        if (rho(rho(rho(p))) != p) ++r.failures;
        if (psi(sigma(p)) != psi(p)) ++r.failures;
        if (psi(rho(p)) != psi(p)) ++r.failures;
        TropPoint3 q = trop_markov_step(p);
        if (trop_markov_step(q) != p) ++r.failures;
        if (phi(q) != phi(p)) ++r.failures;
    }
    return r;
}

SuiteResult run_suite_semiconj(std::uint64_t seed, std::size_t samples,
                               std::size_t word_len, std::size_t words) {
    SuiteResult r{"semiconj"};
    Xorshift64 rng(seed);
    std::vector<TorusPointQ> pts;
    for (std::size_t i = 0; i < samples; ++i) pts.push_back(random_torus_point(rng));
    for (std::size_t i = 0; i < words; ++i) {
        GeneratorWord w = random_gen_word(rng, word_len);
        ++r.checks;
        if (semiconj_residual(w, pts) != Rat(0)) ++r.failures;
    }
    return r;
}

SuiteResult run_suite_trees(std::uint64_t seed, std::size_t samples) {
    SuiteResult r{"trees"};
    Xorshift64 rng(seed);
    std::size_t paths = std::min<std::size_t>(samples, 200);
    for (std::size_t i = 0; i < paths; ++i) {
        PathWord w = random_path_word(rng, 20);
        ++r.checks;
        for (const auto& t : markov_path(w)) {
            if (!is_markov(t)) ++r.failures;
        }
        for (const auto& t : euclid_path(w)) {
            auto s = t.sorted();
            if (s.a + s.b != s.c || BigInt::gcd(s.a, s.b) != BigInt(1)) ++r.failures;
        }
        // the two Vieta routes agree on the endpoint triple
        MarkovTriple tip = markov_path(w).back();
        for (int slot = 1; slot <= 3; ++slot) {
            MarkovTriple a = vieta_markov(tip, slot);
            MarkovTriple b = vieta_ratio(tip, slot);
            if (a.x != b.x || a.y != b.y || a.z != b.z) ++r.failures;
        }
    }
    return r;
}

SuiteResult run_suite_torus(std::uint64_t seed, std::size_t samples) {
    SuiteResult r{"torus"};
    Xorshift64 rng(seed);
    const IntMatrix2 cat{2, 1, 1, 1};
    for (std::size_t i = 0; i < samples; ++i) {
        TorusPointQ t = random_torus_point(rng);
        ++r.checks;
        TropPoint3 p = fold(t);
        if (fold(-t) != p) ++r.failures;
        if (psi(p) != Rat(2)) ++r.failures;
        auto pre = unfold(p);
        TropPoint3 img = fold(torus_act(cat, pre.front()));
        for (const auto& q : pre) {
            if (fold(q) != p) ++r.failures;
            if (fold(torus_act(cat, q)) != img) ++r.failures;
        }
    }
    return r;
}

SuiteResult run_suite_cayley(std::uint64_t seed, std::size_t samples) {
    SuiteResult r{"cayley"};
    Xorshift64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        double a = rng.unit() * 10.0 - 5.0;
        double b = rng.unit() * 10.0 - 5.0;
        ++r.checks;
        if (std::fabs(gram_det(cos_param(a, b))) > 1e-9) ++r.failures;
        if (std::fabs(gram_det(cosh_param(a, b))) > 1e-6) ++r.failures;
    }
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical Cayley-Markov dynamics toolkit"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run exact verification suites");
    std::string v_suite = "all";
    std::uint64_t v_seed = kDefaultSeed;
    std::size_t v_samples = 10000;
    std::size_t v_word_len = 20;
    std::size_t v_words = 200;
    verify->add_option("--suite", v_suite,
                       "tropical|semiconj|trees|torus|cayley|all");
    verify->add_option("--seed", v_seed, "PRNG seed");
    verify->add_option("--samples", v_samples, "sample points per suite");
    verify->add_option("--word-len", v_word_len, "max generator word length");
    verify->add_option("--words", v_words, "number of random words (semiconj)");

    // ---- orbit ----
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a torus automorphism");
    std::string o_matrix = "2,1,1,1";
    std::string o_start = "sqrt2";
    std::size_t o_n = 1000;
    std::string o_mode = "float";
    bool o_fold = false;
    std::string o_out;
    std::string o_format = "csv";
    int o_grid = 0;
    orbit_cmd->add_option("--matrix", o_matrix, "a,b,c,d with det +-1");
    orbit_cmd->add_option("--start", o_start, "p/q,p/q or named (sqrt2|sqrt3|golden)");
    orbit_cmd->add_option("--n", o_n, "number of points")->check(CLI::PositiveNumber);
    orbit_cmd->add_option("--mode", o_mode, "exact|float");
    orbit_cmd->add_flag("--fold", o_fold, "fold the orbit onto the tetrahedron");
    orbit_cmd->add_option("--out", o_out, "output file (atomic write)");
    orbit_cmd->add_option("--format", o_format, "csv|json");
    orbit_cmd->add_option("--grid", o_grid, "report box discrepancy on a KxK grid");

    // ---- lyapunov ----
    auto* lyap = app.add_subcommand("lyapunov", "Benettin exponent estimate");
    std::string l_matrix = "2,1,1,1";
    std::string l_start = "sqrt2";
    std::size_t l_n = 100000;
    lyap->add_option("--matrix", l_matrix, "a,b,c,d with det +-1");
    lyap->add_option("--start", l_start, "orbit start");
    lyap->add_option("--n", l_n, "iterations")->check(CLI::PositiveNumber);

    // ---- lambda ----
    auto* lambda_cmd = app.add_subcommand("lambda", "Lyapunov exponent of a tree path");
    std::string la_cf, la_word, la_est = "matrices", la_out, la_format = "csv";
    std::size_t la_n = 100;
    lambda_cmd->add_option("--cf", la_cf, "continued fraction [a0;a1,(period)]");
    lambda_cmd->add_option("--word", la_word, "explicit path word over {L,R}");
    lambda_cmd->add_option("--n", la_n, "truncation length")->check(CLI::PositiveNumber);
    lambda_cmd->add_option("--estimator", la_est, "matrices|euclid|markov");
    lambda_cmd->add_option("--out", la_out, "CSV output file");
    lambda_cmd->add_option("--format", la_format, "csv|json");

    // ---- markov ----
    auto* markov_cmd = app.add_subcommand("markov", "dump a Markov/Euclid tree path");
    std::string m_word, m_cf, m_out, m_format = "csv", m_tree = "markov";
    std::size_t m_n = 10;
    markov_cmd->add_option("--word", m_word, "path word over {L,R}");
    markov_cmd->add_option("--cf", m_cf, "continued fraction encoding the path");
    markov_cmd->add_option("--n", m_n, "path length (letters)");
    markov_cmd->add_option("--tree", m_tree, "markov|euclid");
    markov_cmd->add_option("--out", m_out, "output file");
    markov_cmd->add_option("--format", m_format, "csv|json");

    // ---- semiconj ----
    auto* semi = app.add_subcommand("semiconj", "semi-conjugation residual scan");
    std::size_t s_word_len = 20, s_words = 1000, s_samples = 100;
    std::uint64_t s_seed = kDefaultSeed;
    semi->add_option("--word-len", s_word_len, "max word length");
    semi->add_option("--words", s_words, "number of random words");
    semi->add_option("--samples", s_samples, "rational torus points per word");
    semi->add_option("--seed", s_seed, "PRNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadConfig;
    }

    try {
        if (*verify) {
            std::vector<SuiteResult> results;
            auto want = [&](const char* name) { return v_suite == "all" || v_suite == name; };
            if (want("tropical")) results.push_back(run_suite_tropical(v_seed, v_samples));
            if (want("semiconj")) {
                results.push_back(run_suite_semiconj(
                    v_seed, std::min<std::size_t>(v_samples, 100), v_word_len, v_words));
            }
            if (want("trees")) results.push_back(run_suite_trees(v_seed, v_samples));
            if (want("torus")) results.push_back(run_suite_torus(v_seed, v_samples));
            if (want("cayley")) results.push_back(run_suite_cayley(v_seed, v_samples));
            if (results.empty()) throw tcm::ParseError("unknown suite: " + v_suite);
            json out = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                out.push_back(suite_json(r));
                all_pass = all_pass && r.failures == 0;
            }
            std::cout << json{{"suites", out}, {"pass", all_pass}}.dump() << "\n";
            return all_pass ? kExitOk : kExitCheckFailed;
        }

        if (*orbit_cmd) {
            IntMatrix2 m = parse_matrix(o_matrix);
            json summary;
            summary["matrix"] = json::parse(io::matrix_json(m));
            summary["n"] = o_n;
            summary["folded"] = o_fold;
            ExportFormat fmt = o_format == "json" ? ExportFormat::jsonl : ExportFormat::csv;
            if (o_format != "json" && o_format != "csv") {
                throw tcm::ParseError("format must be csv or json");
            }
            OrbitRecord rec;
            if (o_mode == "exact") {
                if (is_named_start(o_start)) {
                    throw tcm::ParseError("exact mode needs a rational start");
                }
                rec = orbit(m, parse_start_exact(o_start), o_n, o_fold);
                summary["mode"] = "exact";
                // first-return period within the computed orbit, if any
                json period = nullptr;
                for (std::size_t i = 1; i < rec.length; ++i) {
                    if (rec.exact_points[i] == rec.exact_points[0]) {
                        period = i;
                        break;
                    }
                }
                summary["period"] = period;
                if (o_fold) {
                    bool on = true;
                    for (const auto& p : rec.exact_folded) on = on && psi(p) == Rat(2);
                    summary["surface_exact"] = on;
                }
            } else if (o_mode == "float") {
                rec = orbit(m, parse_start_float(o_start), o_n, o_fold);
                summary["mode"] = "float";
                if (o_fold) {
                    summary["surface_residual_max"] = kernels::max_surface_residual(
                        rec.u.data(), rec.v.data(), rec.w.data(), rec.length);
                }
            } else {
                throw tcm::ParseError("mode must be exact or float");
            }
            if (o_grid > 0) summary["discrepancy"] = box_discrepancy(rec, o_grid);
            if (!o_out.empty()) {
                export_orbit(rec, o_out, fmt);
                summary["out"] = o_out;
            }
            std::cout << summary.dump() << "\n";
            return kExitOk;
        }

        if (*lyap) {
            IntMatrix2 m = parse_matrix(l_matrix);
            EstimatorReport rep = benettin_lyapunov(m, parse_start_float(l_start), l_n);
            std::cout << io::report_json(rep) << "\n";
            return kExitOk;
        }

        if (*lambda_cmd) {
            if (la_format != "csv" && la_format != "json") {
                throw tcm::ParseError("format must be csv or json");
            }
            LambdaSeries series;
            if (la_est == "matrices") {
                series = lambda_via_matrices(word_from_options(la_word, la_cf, la_n), la_n);
            } else if (la_est == "euclid") {
                series = lambda_via_euclid(word_from_options(la_word, la_cf, la_n), la_n);
            } else if (la_est == "markov") {
                series = lambda_via_markov(word_from_options(la_word, la_cf, la_n), la_n);
            } else {
                throw tcm::ParseError("estimator must be matrices, euclid or markov");
            }
            json summary{{"estimator", la_est},
                         {"n", la_n},
                         {"tail_estimate", series.tail_estimate}};
            if (la_format == "json") {
                summary["lambda"] = series.values;
                std::string text = summary.dump() + "\n";
                if (!la_out.empty()) {
                    io::atomic_write(la_out, text);
                    std::cout << json{{"out", la_out}, {"tail_estimate", series.tail_estimate}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << text;
                }
            } else {
                std::string csv = io::lambda_csv(series);
                if (!la_out.empty()) {
                    io::atomic_write(la_out, csv);
                    summary["out"] = la_out;
                    std::cout << summary.dump() << "\n";
                } else {
                    std::cout << csv;
                }
            }
            return kExitOk;
        }

        if (*markov_cmd) {
            if (m_format != "csv" && m_format != "json") {
                throw tcm::ParseError("format must be csv or json");
            }
            PathWord w = word_from_options(m_word, m_cf, m_n);
            std::string text;
            if (m_tree == "markov") {
                if (m_n > kMarkovDepthCap) {
                    throw DepthExceeded("markov path depth cap is 30");
                }
                auto path = markov_path(w);
                if (m_format == "json") {
                    json arr = json::array();
                    for (const auto& t : path) arr.push_back(json::parse(io::triple_json(t)));
                    text = arr.dump() + "\n";
                } else {
                    text = io::markov_path_csv(path);
                }
            } else if (m_tree == "euclid") {
                auto path = euclid_path(w);
                if (m_format == "json") {
                    json arr = json::array();
                    for (const auto& t : path) arr.push_back(json::parse(io::triple_json(t)));
                    text = arr.dump() + "\n";
                } else {
                    text = io::euclid_path_csv(path);
                }
            } else {
                throw tcm::ParseError("tree must be markov or euclid");
            }
            if (!m_out.empty()) {
                io::atomic_write(m_out, text);
                std::cout << json{{"out", m_out}, {"rows", m_n + 1}}.dump() << "\n";
            } else {
                std::cout << text;
            }
            return kExitOk;
        }

        if (*semi) {
            Xorshift64 rng(s_seed);
            std::vector<TorusPointQ> pts;
            for (std::size_t i = 0; i < s_samples; ++i) pts.push_back(random_torus_point(rng));
            Rat worst(0);
            for (std::size_t i = 0; i < s_words; ++i) {
                GeneratorWord w = random_gen_word(rng, s_word_len);
                worst = max(worst, semiconj_residual(w, pts));
            }
            bool pass = worst == Rat(0);
            std::cout << json{{"words", s_words},
                              {"samples", s_samples},
                              {"word_len", s_word_len},
                              {"max_residual", worst.to_string()},
                              {"pass", pass}}
                             .dump()
                      << "\n";
            return pass ? kExitOk : kExitCheckFailed;
        }
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DepthExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const tcm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    }
    return kExitOk;
}
