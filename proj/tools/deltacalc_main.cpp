// deltacalc: Dickson/Moore/delta-operator calculator and identity verifier
// over small finite fields, working in the truncated quotients Q_m(n).
//
// Exit codes: 0 = success / all gated checks pass, 1 = a gated verification
// failed, 2 = usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltacalc/delta.hpp"
#include "deltacalc/dickson.hpp"
#include "deltacalc/hmatch.hpp"
#include "deltacalc/identities.hpp"
#include "deltacalc/invariants.hpp"
#include "deltacalc/steenrod.hpp"

using json = nlohmann::ordered_json;

namespace {

struct FieldOpts {
    long q = 0;
    long p = 0;
    int r = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--q", q, "Field size q = p^r (prime power <= 256)");
        cmd->add_option("--p", p, "Field characteristic (alternative to --q)");
        cmd->add_option("--r", r, "Extension degree when --p is used (default 1)");
    }

    dc::FieldPtr resolve() const {
        if (q > 0) {
            long pp = 0;
            for (long d = 2; d * d <= q; ++d)
                if (q % d == 0) {
                    pp = d;
                    break;
                }
            if (pp == 0) return dc::Field::make(q, 1);
            int rr = 0;
            long v = q;
            while (v > 1) {
                if (v % pp != 0) throw dc::UsageError("--q must be a prime power");
                v /= pp;
                ++rr;
            }
            return dc::Field::make(pp, rr);
        }
        if (p > 0) return dc::Field::make(p, r);
        return dc::Field::make(2, 1); // default F_2
    }
};

dc::Convention parse_convention(const std::string& s) {
    if (s == "top_zero") return dc::Convention::top_zero;
    if (s == "top_one") return dc::Convention::top_one;
    throw dc::UsageError("--convention must be top_zero or top_one");
}

std::string monomial_text(const dc::Monomial& mo) {
    std::string s = "(";
    for (int i = 0; i < mo.nvars(); ++i) {
        if (i) s += ",";
        s += std::to_string(mo.exp(i));
    }
    return s + ")";
}

json monomial_json(const dc::Monomial& mo) {
    json a = json::array();
    for (int i = 0; i < mo.nvars(); ++i) a.push_back(mo.exp(i));
    return a;
}

int run(int argc, char** argv) {
    CLI::App app{
        "deltacalc: Dickson invariants, Moore determinants, and the delta_s "
        "operators on the truncated polynomial quotients Q_m(n), with "
        "randomized verification suites for the rank-3 and rank-4 "
        "shift/annihilation identities."};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit machine-readable JSON");

    // dickson
    auto* cmd_dickson = app.add_subcommand(
        "dickson", "Print the Dickson invariants Q_{n,0..n-1} from the V_n recursion");
    FieldOpts fo_dickson;
    fo_dickson.attach(cmd_dickson);
    int dickson_n = 2;
    std::string dickson_conv = "top_zero";
    cmd_dickson->add_option("--n", dickson_n, "Rank n >= 1")->required();
    cmd_dickson->add_option("--convention", dickson_conv,
                            "Top-term convention: top_zero (vanishing top term) or top_one "
                            "(classical Q_{n,n} = 1)");

    // moore
    auto* cmd_moore =
        app.add_subcommand("moore", "Print the Moore determinant L_s = det(x_j^{q^r})");
    FieldOpts fo_moore;
    fo_moore.attach(cmd_moore);
    int moore_s = 2;
    cmd_moore->add_option("--s", moore_s, "Number of variables s >= 1")->required();

    // delta
    auto* cmd_delta = app.add_subcommand(
        "delta", "Apply delta_s(f) = det M_s(f) / L_s^{q-1} at truncation level m");
    FieldOpts fo_delta;
    fo_delta.attach(cmd_delta);
    int delta_s = 1, delta_m = 1;
    std::string delta_f;
    bool delta_numonly = false, delta_reduce = false;
    cmd_delta->add_option("--s", delta_s, "Operator rank s (matrix is (s+1)x(s+1))")->required();
    cmd_delta->add_option("--m", delta_m, "Truncation level m >= 1")->required();
    cmd_delta->add_option("--f", delta_f, "Input polynomial, e.g. \"x1^2*x2 + 3*x3\"")
        ->required();
    cmd_delta->add_flag("--numerator-only", delta_numonly,
                        "Print only the numerator det M_s(f) and denominator L_s^{q-1}");
    cmd_delta->add_flag("--reduce", delta_reduce, "Reduce the exact value into Q_m(n)");

    // verify
    auto* cmd_verify = app.add_subcommand(
        "verify",
        "Randomized verification suites: rank3 (annihilation + shift identities in Q_m(3)), "
        "rank4-6 (Q_{4,j} delta_4(f) = delta_4(Q_{3,j-1}^q f)), rank4-7 (iterated delta_3^2 "
        "shift and Q_{4,2} annihilation), annihilators (report-only delta_{4-s} probes)");
    FieldOpts fo_verify;
    fo_verify.attach(cmd_verify);
    std::string verify_suite, verify_mode = "fractional", verify_conv = "top_zero";
    int verify_m = 1, verify_trials = 5, verify_s = 0;
    std::uint64_t verify_seed = 0;
    bool verify_serial = false;
    cmd_verify->add_option("--suite", verify_suite, "rank3 | rank4-6 | rank4-7 | annihilators")
        ->required();
    cmd_verify->add_option("--m", verify_m, "Truncation level m >= 1");
    cmd_verify->add_option("--trials", verify_trials, "Number of random trials");
    cmd_verify->add_option("--seed", verify_seed, "Master seed; per-trial seeds are derived");
    cmd_verify->add_option("--mode", verify_mode,
                           "fractional (value-level with exactness skips) | numerator "
                           "(truncated numerator identities, no skips)");
    cmd_verify->add_option("--s", verify_s, "Sub-rank for the annihilators suite (0..3)");
    cmd_verify->add_option("--convention", verify_conv, "top_zero | top_one");
    cmd_verify->add_flag("--serial", verify_serial, "Disable OpenMP trial parallelism");

    // hmatch
    auto* cmd_hmatch =
        app.add_subcommand("hmatch", "Matching-hypothesis tools for products f*G in Q_m(4)");
    cmd_hmatch->require_subcommand(1);
    auto* cmd_hcheck = cmd_hmatch->add_subcommand(
        "check", "Exhaustively test the per-pair matching hypothesis on (f, G)");
    FieldOpts fo_hcheck;
    fo_hcheck.attach(cmd_hcheck);
    std::string hcheck_f, hcheck_g;
    int hcheck_k = 3, hcheck_m = 1;
    cmd_hcheck->add_option("--f", hcheck_f, "Polynomial f")->required();
    cmd_hcheck->add_option("--G", hcheck_g, "Polynomial G")->required();
    cmd_hcheck->add_option("--k", hcheck_k, "Number of matched coordinates (k = 4 - s)")
        ->required();
    cmd_hcheck->add_option("--m", hcheck_m, "Truncation level m >= 1");
    auto* cmd_hsearch = cmd_hmatch->add_subcommand(
        "search",
        "Sweep small f against candidate G and report the first (f, G) whose product "
        "V_4^{q-1} G f L_k survives truncation");
    FieldOpts fo_hsearch;
    fo_hsearch.attach(cmd_hsearch);
    int hsearch_m = 1, hsearch_s = 1;
    std::size_t hsearch_budget = 500;
    std::uint64_t hsearch_seed = 0;
    cmd_hsearch->add_option("--m", hsearch_m, "Truncation level m >= 1");
    cmd_hsearch->add_option("--s", hsearch_s, "Sub-rank s (f lives in x_1..x_{4-s})");
    cmd_hsearch->add_option("--budget", hsearch_budget, "Maximum number of f candidates");
    cmd_hsearch->add_option("--seed", hsearch_seed, "Seed for the random top-up phase");

    // steenrod
    auto* cmd_steenrod =
        app.add_subcommand("steenrod", "Milnor-type derivation diagnostics on Dickson algebras");
    cmd_steenrod->require_subcommand(1);
    auto* cmd_probe = cmd_steenrod->add_subcommand(
        "probe",
        "Is St^{Delta_i}(Q_{n,s}) divisible by Q_{n,0}, and does the p-fold normalized "
        "delta_i iterate annihilate Q_{n,s}?");
    FieldOpts fo_probe;
    fo_probe.attach(cmd_probe);
    int probe_i = 1, probe_n = 2, probe_s = 1;
    cmd_probe->add_option("--i", probe_i, "Operator index i >= 1")->required();
    cmd_probe->add_option("--n", probe_n, "Rank n")->required();
    cmd_probe->add_option("--s", probe_s, "Dickson column s (0..n-1)")->required();

    // lrs
    auto* cmd_lrs = app.add_subcommand(
        "lrs", "Candidate invariant-dimension series C_{n,m}(t) from (q,t)-binomials");
    FieldOpts fo_lrs;
    fo_lrs.attach(cmd_lrs);
    int lrs_n = 1, lrs_m = 1;
    bool lrs_at1 = false;
    cmd_lrs->add_option("--n", lrs_n, "Rank n")->required();
    cmd_lrs->add_option("--m", lrs_m, "Truncation level m >= 1")->required();
    cmd_lrs->add_flag("--at-1", lrs_at1, "Evaluate the series at t = 1");

    // invariant-dim
    auto* cmd_invdim = app.add_subcommand(
        "invariant-dim",
        "Dimension of the GL_n(F_q)-fixed subspace of Q_m(n) by direct linear algebra");
    FieldOpts fo_invdim;
    fo_invdim.attach(cmd_invdim);
    int invdim_n = 1, invdim_m = 1;
    bool invdim_serial = false;
    cmd_invdim->add_option("--n", invdim_n, "Rank n")->required();
    cmd_invdim->add_option("--m", invdim_m, "Truncation level m >= 1")->required();
    cmd_invdim->add_flag("--serial", invdim_serial, "Disable OpenMP column parallelism");

    // hilbert-span
    auto* cmd_span = app.add_subcommand(
        "hilbert-span",
        "Graded dimension of the span of delta_{4-s}(f) over a user-supplied family file");
    FieldOpts fo_span;
    fo_span.attach(cmd_span);
    std::string span_family;
    int span_m = 1;
    cmd_span->add_option("--family", span_family, "JSON family file: {\"entries\": [{\"s\": 1, \"polys\": [...]}]}")
        ->required();
    cmd_span->add_option("--m", span_m, "Truncation level m >= 1");

    // reproduce-appendix
    auto* cmd_repro = app.add_subcommand(
        "reproduce-appendix",
        "One-shot run of the rank-4 line (6)/(7) suites over F_2 at m = 1, 2 "
        "(fractional and numerator modes) with the canonical trial counts, "
        "ending in a six-line Summary");
    std::uint64_t repro_seed = 0;
    bool repro_serial = false;
    cmd_repro->add_option("--seed", repro_seed, "Master seed");
    cmd_repro->add_flag("--serial", repro_serial, "Disable OpenMP trial parallelism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cmd_dickson->parsed()) {
        auto field = fo_dickson.resolve();
        auto set = dc::dickson_q(dickson_n, field, parse_convention(dickson_conv));
        if (as_json) {
            json out;
            out["n"] = set.n;
            out["q"] = field->q();
            out["convention"] = dickson_conv;
            out["polys"] = json::array();
            for (const auto& qp : set.polys) out["polys"].push_back(json::parse(qp.to_json()));
            std::cout << out.dump() << "\n";
        } else {
            for (int i = 0; i < set.n; ++i)
                std::cout << "Q_{" << set.n << "," << i << "} = " << set.polys[i].render()
                          << "\n";
        }
        return 0;
    }

    if (cmd_moore->parsed()) {
        auto field = fo_moore.resolve();
        auto L = dc::moore_det(moore_s, field);
        if (as_json) {
            json out;
            out["s"] = moore_s;
            out["q"] = field->q();
            out["poly"] = json::parse(L.to_json());
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "L_" << moore_s << " = " << L.render() << "\n";
        }
        return 0;
    }

    if (cmd_delta->parsed()) {
        auto field = fo_delta.resolve();
        auto f = dc::parse_poly(delta_f, field, delta_s);
        dc::TruncationSpec tspec{std::max(delta_s, f.nvars()), field, delta_m};
        auto res = dc::delta(delta_s, delta_m, f, tspec, delta_reduce);
        bool fractional = res.mode == dc::DeltaMode::fractional;
        if (as_json) {
            json out;
            out["s"] = delta_s;
            out["m"] = delta_m;
            out["q"] = field->q();
            out["mode"] = fractional ? "fractional" : "exact";
            if (!fractional && !delta_numonly) out["value"] = json::parse(res.value.to_json());
            out["numerator"] = json::parse(res.numerator.to_json());
            out["denominator"] = json::parse(res.denominator.to_json());
            std::cout << out.dump() << "\n";
        } else if (delta_numonly || fractional) {
            std::cout << "numerator = " << res.numerator.render() << "\n"
                      << "denominator = " << res.denominator.render() << "\n";
            if (fractional) std::cout << "(not exactly divisible: fractional result)\n";
        } else {
            std::cout << "delta_" << delta_s << "(f) = " << res.value.render() << "\n";
        }
        return 0;
    }

    if (cmd_verify->parsed()) {
        auto field = fo_verify.resolve();
        auto conv = parse_convention(verify_conv);
        dc::CheckMode mode;
        if (verify_mode == "fractional")
            mode = dc::CheckMode::fractional;
        else if (verify_mode == "numerator")
            mode = dc::CheckMode::numerator;
        else
            throw dc::UsageError("--mode must be fractional or numerator");
        dc::VerificationReport rep;
        bool gated = true;
        if (verify_suite == "rank3")
            rep = dc::check_rank3(field, verify_m, verify_trials, verify_seed, mode, conv,
                                  !verify_serial);
        else if (verify_suite == "rank4-6")
            rep = dc::check_rank4_line6(field, verify_m, verify_trials, verify_seed, mode, conv,
                                        !verify_serial);
        else if (verify_suite == "rank4-7")
            rep = dc::check_rank4_line7(field, verify_m, verify_trials, verify_seed, mode, conv,
                                        !verify_serial);
        else if (verify_suite == "annihilators") {
            rep = dc::check_annihilators(field, verify_m, verify_s, verify_trials, verify_seed,
                                         conv);
            gated = false; // diagnostic probe, reported but never gating
        } else
            throw dc::UsageError("--suite must be rank3, rank4-6, rank4-7, or annihilators");
        if (as_json) {
            std::cout << rep.to_json() << "\n";
        } else {
            std::cout << rep.suite << " q=" << field->q() << ",m=" << verify_m << " ["
                      << verify_mode << "]: " << (rep.passed ? "OK" : "FAIL") << " ("
                      << rep.trials << " trials, " << rep.skipped << " skipped, "
                      << rep.failures.size() << " failures)\n";
            for (const auto& fl : rep.failures)
                std::cout << "  [FAIL] " << fl.check << " trial " << fl.trial << " j=" << fl.j
                          << " f=" << fl.f.render() << " residue=" << fl.residue.render()
                          << "\n";
        }
        return (gated && !rep.passed) ? 1 : 0;
    }

    if (cmd_hcheck->parsed()) {
        auto field = fo_hcheck.resolve();
        auto f = dc::parse_poly(hcheck_f, field, 4);
        auto G = dc::parse_poly(hcheck_g, field, 4);
        dc::TruncationSpec tspec{4, field, hcheck_m};
        auto verdict = dc::check_hmatch(f, G, hcheck_k, tspec);
        if (as_json) {
            json out;
            out["k"] = hcheck_k;
            out["q"] = field->q();
            out["m"] = hcheck_m;
            out["holds"] = verdict.holds;
            if (verdict.violation) {
                out["violation"]["alpha"] = monomial_json(verdict.violation->alpha);
                out["violation"]["gamma"] = monomial_json(verdict.violation->gamma);
            }
            std::cout << out.dump() << "\n";
        } else if (verdict.holds) {
            std::cout << "matching hypothesis holds\n";
        } else {
            std::cout << "matching hypothesis fails: alpha="
                      << monomial_text(verdict.violation->alpha) << " gamma="
                      << monomial_text(verdict.violation->gamma) << "\n";
        }
        return 0;
    }

    if (cmd_hsearch->parsed()) {
        auto field = fo_hsearch.resolve();
        dc::TruncationSpec tspec{4, field, hsearch_m};
        auto witness =
            dc::search_counterexample(tspec, hsearch_s, {}, hsearch_budget, hsearch_seed);
        if (as_json) {
            json out;
            out["q"] = field->q();
            out["m"] = hsearch_m;
            out["s"] = hsearch_s;
            out["budget"] = hsearch_budget;
            out["found"] = witness.has_value();
            if (witness) {
                out["f"] = json::parse(witness->f.to_json());
                out["G"] = json::parse(witness->G.to_json());
                out["f_index"] = witness->f_index;
                out["g_index"] = witness->g_index;
                out["residue_monomial"] = monomial_json(witness->residue_monomial);
            }
            std::cout << out.dump() << "\n";
        } else if (witness) {
            std::cout << "counterexample: f = " << witness->f.render()
                      << ", G = " << witness->G.render() << " (f_index " << witness->f_index
                      << ", g_index " << witness->g_index << ", surviving monomial "
                      << monomial_text(witness->residue_monomial) << ")\n";
        } else {
            std::cout << "no counterexample within budget\n";
        }
        return 0;
    }

    if (cmd_probe->parsed()) {
        auto field = fo_probe.resolve();
        auto res = dc::divisibility_probe(probe_i, probe_n, probe_s, field);
        if (as_json) {
            json out;
            out["i"] = probe_i;
            out["n"] = probe_n;
            out["s"] = probe_s;
            out["q"] = field->q();
            out["divisible"] = res.divisible;
            out["p_fold_annihilates"] = res.p_fold_annihilates;
            if (!res.divisible) out["residue"] = json::parse(res.residue.to_json());
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "St^{Delta_" << probe_i << "}(Q_{" << probe_n << "," << probe_s
                      << "}) divisible by Q_{" << probe_n << ",0}: "
                      << (res.divisible ? "yes" : "no") << "\n"
                      << "p-fold normalized iterate annihilates: "
                      << (res.p_fold_annihilates ? "yes" : "no") << "\n";
        }
        return 0;
    }

    if (cmd_lrs->parsed()) {
        auto field = fo_lrs.resolve();
        auto series = dc::lrs_series(lrs_n, lrs_m, field);
        if (as_json) {
            json out;
            out["n"] = lrs_n;
            out["m"] = lrs_m;
            out["q"] = field->q();
            out["series"] = series.render();
            out["at_1"] = series.at_one();
            std::cout << out.dump() << "\n";
        } else if (lrs_at1) {
            std::cout << series.at_one() << "\n";
        } else {
            std::cout << "C_{" << lrs_n << "," << lrs_m << "}(t) = " << series.render() << "\n";
        }
        return 0;
    }

    if (cmd_invdim->parsed()) {
        auto field = fo_invdim.resolve();
        auto group = dc::gl_generators(invdim_n, field);
        dc::TruncationSpec tspec{invdim_n, field, invdim_m};
        auto fs = dc::fixed_space_dim(group, tspec, !invdim_serial);
        if (as_json) {
            json out;
            out["n"] = invdim_n;
            out["m"] = invdim_m;
            out["q"] = field->q();
            out["dim"] = fs.dim;
            out["basis"] = json::array();
            for (const auto& b : fs.basis) out["basis"].push_back(json::parse(b.to_json()));
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "dim Q_" << invdim_m << "(" << invdim_n << ")^{GL}: " << fs.dim << "\n";
            for (const auto& b : fs.basis) std::cout << "  " << b.render() << "\n";
        }
        return 0;
    }

    if (cmd_span->parsed()) {
        auto field = fo_span.resolve();
        std::ifstream in(span_family);
        if (!in) throw dc::UsageError("--family: cannot open file " + span_family);
        std::stringstream buf;
        buf << in.rdbuf();
        auto family = dc::family_from_json(buf.str(), field);
        dc::TruncationSpec tspec{4, field, span_m};
        auto polys = dc::basis_candidate(family, tspec);
        auto series = dc::span_hilbert(polys, tspec);
        if (as_json) {
            json out;
            out["q"] = field->q();
            out["m"] = span_m;
            out["count"] = polys.size();
            out["series"] = series.render();
            out["total_dim"] = series.at_one();
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "span Hilbert series: " << series.render() << "\n"
                      << "total dimension: " << series.at_one() << "\n";
        }
        return 0;
    }

    if (cmd_repro->parsed()) {
        auto f2 = dc::Field::make(2, 1);
        bool parallel = !repro_serial;
        struct Job {
            const char* label;
            dc::VerificationReport rep;
        };
        std::vector<Job> jobs;
        jobs.push_back({" (6) fractional q=2,m=1:",
                        dc::check_rank4_line6(f2, 1, 5, repro_seed, dc::CheckMode::fractional,
                                              dc::Convention::top_zero, parallel)});
        jobs.push_back({" (6) fractional q=2,m=2:",
                        dc::check_rank4_line6(f2, 2, 5, repro_seed, dc::CheckMode::fractional,
                                              dc::Convention::top_zero, parallel)});
        jobs.push_back({" (7) fractional q=2,m=1:",
                        dc::check_rank4_line7(f2, 1, 5, repro_seed, dc::CheckMode::fractional,
                                              dc::Convention::top_zero, parallel)});
        jobs.push_back({" (7) fractional q=2,m=2:",
                        dc::check_rank4_line7(f2, 2, 3, repro_seed, dc::CheckMode::fractional,
                                              dc::Convention::top_zero, parallel)});
        jobs.push_back({" (7) numerator (theoretical) q=2,m=1:",
                        dc::check_rank4_line7(f2, 1, 5, repro_seed, dc::CheckMode::numerator,
                                              dc::Convention::top_zero, parallel)});
        jobs.push_back({" (7) numerator (theoretical) q=2,m=2:",
                        dc::check_rank4_line7(f2, 2, 3, repro_seed, dc::CheckMode::numerator,
                                              dc::Convention::top_zero, parallel)});
        bool all_ok = true;
        for (const auto& j : jobs) all_ok = all_ok && j.rep.passed;
        if (as_json) {
            json out;
            out["seed"] = repro_seed;
            out["passed"] = all_ok;
            out["reports"] = json::array();
            for (const auto& j : jobs) out["reports"].push_back(json::parse(j.rep.to_json()));
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "Summary:\n";
            for (const auto& j : jobs)
                std::cout << j.label << " " << (j.rep.passed ? "OK" : "FAIL") << "\n";
        }
        return all_ok ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dc::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const dc::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const dc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
