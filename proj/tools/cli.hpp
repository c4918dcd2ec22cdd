#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scrollres/scrollres.hpp"

namespace scrollres::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string scroll;
    int max = 6;
    int terms = 8;
    int steps = 4;
    int imax = 3;
    std::string target = "field";
    std::string checks = "complex,minimal,exact";
    std::uint32_t modulus = kDefaultModulus;
    int trials = kDefaultTrials;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string text_dir;
    std::string format;
    bool compare = false;
    bool facets = false;
    std::string fault;
};

inline ScrollSpec scroll_arg(const RunConfig& cfg) {
    try {
        return parse_scroll(cfg.scroll);
    } catch (const ScrollError& e) {
        throw UsageError(std::string("--scroll: ") + e.what());
    }
}

inline ScrollSpec two_block_scroll(const RunConfig& cfg, const std::string& cmd) {
    ScrollSpec spec = scroll_arg(cfg);
    if (spec.k() != 2)
        throw UsageError(cmd + ": explicit resolutions are only constructed for 2-scrolls (k = 2, two blocks); --scroll " + cfg.scroll +
                         " has k = " + std::to_string(spec.k()));
    return spec;
}

inline ResolutionTarget target_arg(const std::string& t) {
    for (auto r : {ResolutionTarget::Field, ResolutionTarget::J, ResolutionTarget::I1, ResolutionTarget::I2})
        if (to_string(r) == t) return r;
    throw UsageError("--target must be one of field, J, I1, I2 (got '" + t + "')");
}

inline Resolution build(const ScrollSpec& spec, ResolutionTarget t, int steps) {
    if (steps < 1) throw UsageError("--steps must be >= 1");
    return t == ResolutionTarget::Field ? field_resolution(spec, steps) : resolution_of(spec, t, steps);
}

/// Writes to --out if given, otherwise to `out`.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

inline std::string join(const std::vector<BigInt>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
    return s;
}

inline int cmd_betti(const RunConfig& cfg, std::ostream& out) {
    const ScrollSpec spec = scroll_arg(cfg);
    if (cfg.max < 0) throw UsageError("--max must be >= 0");
    std::vector<BigInt> b;
    for (int i = 0; i <= cfg.max; ++i) b.push_back(betti(spec, i));
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& x : b) arr.push_back(dec(x));
        emit(cfg, out, Json{{"spec", spec_json(spec)}, {"betti", arr}}.dump(2) + "\n");
    } else {
        emit(cfg, out, join(b, " ") + "\n");
    }
    return kOk;
}

inline int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
    const ScrollSpec spec = scroll_arg(cfg);
    if (cfg.terms < 1) throw UsageError("--terms must be >= 1");
    const RationalForm h = hilbert_series(spec);
    const IntSeries hc = hilbert_coeffs(spec, cfg.terms - 1);
    const IntSeries pc = poincare_coeffs(spec, cfg.terms - 1);
    if (cfg.format == "json") {
        auto arr = [](const std::vector<BigInt>& v) {
            Json a = Json::array();
            for (const auto& x : v) a.push_back(dec(x));
            return a;
        };
        emit(cfg, out,
             Json{{"spec", spec_json(spec)},
                  {"numerator", arr(h.numerator)},
                  {"denominator", arr(h.denominator)},
                  {"hilbert", arr(hc.coeffs)},
                  {"poincare", arr(pc.coeffs)}}
                     .dump(2) +
                 "\n");
    } else {
        std::ostringstream s;
        s << "Hilb(t) = (" << poly_str(h.numerator) << ") / (" << poly_str(h.denominator) << ")\n";
        s << "hilbert: " << join(hc.coeffs, " ") << "\n";
        s << "poincare: " << join(pc.coeffs, " ") << "\n";
        emit(cfg, out, s.str());
    }
    return kOk;
}

inline int cmd_faces(const RunConfig& cfg, std::ostream& out) {
    const ScrollSpec spec = scroll_arg(cfg);
    const FaceVector fv = face_numbers(spec);
    const auto facets = delta_facets(spec);
    auto facet_str = [&](const Face& f) {
        std::string s = "{";
        for (std::size_t t = 0; t < f.size(); ++t) s += (t ? "," : "") + std::string("x") + std::to_string(f[t] + 1);
        return s + "}";
    };
    if (cfg.format == "json") {
        Json fa = Json::array();
        for (const auto& x : fv.f) fa.push_back(dec(x));
        Json j{{"spec", spec_json(spec)}, {"f", fa}};
        if (cfg.facets) {
            Json fs = Json::array();
            for (const auto& f : facets) fs.push_back(facet_str(f));
            j["facets"] = fs;
        }
        emit(cfg, out, j.dump(2) + "\n");
    } else {
        std::string s = "f = " + join(fv.f, ",") + "\n";
        if (cfg.facets)
            for (const auto& f : facets) s += facet_str(f) + "\n";
        emit(cfg, out, s);
    }
    return kOk;
}

inline int cmd_resolve(const RunConfig& cfg, std::ostream& out) {
    const ScrollSpec spec = two_block_scroll(cfg, "resolve");
    const Resolution res = build(spec, target_arg(cfg.target), cfg.steps);
    if (!cfg.text_dir.empty()) {
        std::filesystem::create_directories(cfg.text_dir);
        for (int i = res.first_index(); i <= res.last_index(); ++i) {
            std::ofstream f(std::filesystem::path(cfg.text_dir) / ("step" + std::to_string(i) + ".txt"));
            if (!f) throw UsageError("cannot write into " + cfg.text_dir);
            write_matrix_text(f, res.differential(i));
        }
    }
    if (cfg.format == "text") {
        std::ostringstream s;
        for (int i = res.first_index(); i <= res.last_index(); ++i) {
            const auto& b = res.block(i);
            s << b->label() << ": " << b->rows() << "x" << b->cols() << "\n";
        }
        emit(cfg, out, s.str());
    } else {
        emit(cfg, out, resolution_json(res).dump(2) + "\n");
    }
    return kOk;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) parts.push_back(cur);
    return parts;
}

/// "kind[:step[:entry]]", e.g. "sign-flip:3:10".
inline Resolution apply_fault(const Resolution& res, const std::string& text, std::string& description) {
    const auto parts = split(text, ':');
    if (parts.empty()) throw UsageError("--inject-fault needs a kind");
    const auto kind = parse_fault(parts[0]);
    if (!kind) throw UsageError("unknown fault kind '" + parts[0] + "'");
    int step = std::min(res.last_index(), res.first_index() + 2);
    std::size_t entry = 0;
    try {
        if (parts.size() > 1) step = std::stoi(parts[1]);
        if (parts.size() > 2) entry = std::stoull(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("malformed --inject-fault '" + text + "'");
    }
    if (step < res.first_index() || step > res.last_index()) throw UsageError("--inject-fault step outside the resolution");
    description = to_string(*kind) + " at entry " + std::to_string(entry) + " of " + res.block(step)->label();
    return with_step(res, step, inject_fault(res.spec(), res.differential(step), *kind, entry));
}

inline std::string location(const EntryLocation& e) {
    return "(" + std::to_string(e.step) + ", " + std::to_string(e.row + 1) + ", " + std::to_string(e.col + 1) + ") = " + e.value;
}

inline std::vector<CheckRecord> minor_checks(const ScrollSpec& spec) {
    std::vector<CheckRecord> recs;
    const int n = spec.n(), m = spec.m();
    for (int d = 2; d <= n - 1; ++d) {
        CheckRecord r{"minors", "Phi_" + std::to_string(d), true, "", std::nullopt, std::nullopt};
        for (int i = 1; i <= n; ++i) {
            const auto c = minor_certificate(spec, {MinorFamily::BigPhi, d}, i);
            if (!c.pass) {
                r.pass = false;
                r.details += "x" + std::to_string(i) + ": " + c.note + "; ";
            }
        }
        if (r.pass) r.details = "x_i^" + std::to_string(d - 1) + " certified for all i";
        recs.push_back(r);
    }
    {
        CheckRecord r{"minors", "phi_1", true, "", std::nullopt, std::nullopt};
        for (int i = 1; i <= n; ++i) {
            const auto c = minor_certificate(spec, {MinorFamily::phi1, 0}, i);
            if (!c.pass) {
                r.pass = false;
                r.details += "x" + std::to_string(i) + ": " + c.note + "; ";
            }
        }
        if (r.pass) r.details = "x_i^" + std::to_string(n - 3) + " certified for all i";
        recs.push_back(r);
    }
    {
        CheckRecord r{"minors", "phi_2", true, "", std::nullopt, std::nullopt};
        for (int i = 1; i <= n; ++i) {
            const auto readings = phi2_readings(spec, i);
            std::vector<std::string> good;
            for (const auto& c : readings)
                if (c.pass) good.push_back(c.reading);
            if (i == m || i == m + 1) {
                r.details += "x" + std::to_string(i) + ": readings certifying: ";
                for (std::size_t t = 0; t < good.size(); ++t) r.details += (t ? ", " : "") + good[t];
                if (good.empty()) r.details += "none";
                r.details += "; ";
                if (good.size() != 1) r.pass = false;
            } else if (good.empty()) {
                r.pass = false;
                r.details += "x" + std::to_string(i) + ": " + readings.front().note + "; ";
            }
        }
        recs.push_back(r);
    }
    return recs;
}

inline std::vector<CheckRecord> rank_checks(const ScrollSpec& spec, const RunConfig& cfg) {
    std::vector<CheckRecord> recs;
    const K2Construction K(spec);
    const int n = spec.n();
    const auto phis = K.phis(3);
    std::size_t want = 1;
    for (int i = 0; i <= 3; ++i) {
        const auto rep = probe_rank(spec, phis[static_cast<std::size_t>(i)]->expand(), cfg.trials, cfg.modulus, cfg.seed,
                                    phis[static_cast<std::size_t>(i)]->label(), want);
        recs.push_back({"ranks", rep.matrix_id, rep.pass,
                        "probe rank " + std::to_string(rep.probe_rank) + ", claimed " + std::to_string(want) + ", " +
                            std::to_string(rep.probes) + " probes",
                        cfg.seed, cfg.modulus});
        want *= static_cast<std::size_t>(n - 3);
    }
    for (int d = 2; d <= n - 1; ++d) {
        const auto rep = probe_rank(spec, K.Phi(d)->expand(), cfg.trials, cfg.modulus, cfg.seed, "Phi_" + std::to_string(d),
                                    static_cast<std::size_t>(d - 1));
        recs.push_back({"ranks", rep.matrix_id, rep.pass,
                        "probe rank " + std::to_string(rep.probe_rank) + ", claimed " + std::to_string(d - 1), cfg.seed, cfg.modulus});
    }
    return recs;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const ScrollSpec spec = two_block_scroll(cfg, "verify");
    if (cfg.modulus <= 2 || !is_prime(cfg.modulus)) throw UsageError("--modulus must be a prime > 2");
    if (cfg.trials < 1) throw UsageError("--trials must be >= 1");
    Resolution res = build(spec, target_arg(cfg.target), cfg.steps);
    std::string fault_note;
    if (!cfg.fault.empty()) res = apply_fault(res, cfg.fault, fault_note);
    const std::string tgt = to_string(res.target()) + (fault_note.empty() ? "" : " [" + fault_note + "]");

    std::vector<CheckRecord> recs;
    const auto wanted = split(cfg.checks, ',');
    if (wanted.empty()) throw UsageError("--checks is empty");
    for (const auto& name : wanted) {
        if (name == "complex") {
            const auto c = check_complex(res);
            recs.push_back({"complex", tgt, c.pass,
                            c.pass ? std::to_string(c.products_checked) + " products vanish"
                                   : "first nonzero product entry (step, row, col) " + location(*c.first_failure),
                            std::nullopt, std::nullopt});
        } else if (name == "minimal") {
            const auto c = check_minimality(res);
            recs.push_back({"minimal", tgt, c.pass, c.pass ? "no entry has a constant term" : "unit entry (step, row, col) " + location(*c.offending),
                            std::nullopt, std::nullopt});
        } else if (name == "exact") {
            RankCache cache(res);
            const ProbeOptions opt{cfg.trials, cfg.modulus, cfg.seed, 3};
            for (int i = res.first_index(); i < res.last_index(); ++i) {
                const auto e = check_exactness(cache, i, opt);
                std::string seeds;
                for (auto s : e.seeds) seeds += (seeds.empty() ? "" : ",") + std::to_string(s);
                recs.push_back({"exact", tgt + " d_" + std::to_string(i), e.pass,
                                "rank " + std::to_string(e.rank_here) + " + rank " + std::to_string(e.rank_next) +
                                    (e.pass ? " = " : " != ") + std::to_string(e.cols) + " (seeds " + seeds + ")",
                                e.seeds.back(), cfg.modulus});
            }
        } else if (name == "minors") {
            for (auto& r : minor_checks(spec)) recs.push_back(std::move(r));
        } else if (name == "ranks") {
            for (auto& r : rank_checks(spec, cfg)) recs.push_back(std::move(r));
        } else if (name == "groebner") {
            if (spec.n() > 9) throw UsageError("groebner check is limited to n <= 9");
            const auto g = groebner_consistency(spec, 4);
            recs.push_back({"groebner", spec.label(), g.pass, g.details, std::nullopt, std::nullopt});
        } else {
            throw UsageError("unknown check '" + name + "' (expected complex, minimal, exact, minors, ranks, groebner)");
        }
    }
    for (auto& r : recs) {
        if (!r.seed) r.seed = cfg.seed;
        if (!r.modulus) r.modulus = cfg.modulus;
    }
    bool all = std::all_of(recs.begin(), recs.end(), [](const CheckRecord& r) { return r.pass; });
    if (cfg.format == "text") {
        std::ostringstream s;
        for (const auto& r : recs) s << (r.pass ? "pass " : "FAIL ") << r.name << " " << r.target << ": " << r.details << "\n";
        emit(cfg, out, s.str());
    } else {
        emit(cfg, out, report_json(recs).dump(2) + "\n");
    }
    return all ? kOk : kCheckFailed;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    const ScrollSpec spec = scroll_arg(cfg);
    if (cfg.modulus < 2 || !is_prime(cfg.modulus)) throw UsageError("--modulus " + std::to_string(cfg.modulus) + " is not prime");
    if (cfg.imax < 0) throw UsageError("--imax must be >= 0");
    Json j;
    bool pass = true;
    if (cfg.compare) {
        const auto cmp = compare_with_formula(spec, cfg.imax, cfg.modulus);
        pass = cmp.pass;
        j = betti_table_json(cmp.oracle);
        Json f = Json::array();
        for (const auto& b : cmp.formula) f.push_back(dec(b));
        j["formula"] = f;
        j["verdict"] = pass ? "pass" : "fail";
        j["details"] = cmp.details;
    } else {
        j = betti_table_json(betti_oracle(spec, cfg.imax, cfg.modulus));
    }
    if (cfg.format == "text") {
        std::ostringstream s;
        for (const auto& e : j["entries"]) s << "beta(" << e["i"].get<std::string>() << "," << e["j"].get<std::string>() << ") = "
                                             << e["value"].get<std::string>() << "\n";
        if (cfg.compare) s << j["verdict"].get<std::string>() << ": " << j["details"].get<std::string>() << "\n";
        emit(cfg, out, s.str());
    } else {
        emit(cfg, out, j.dump(2) + "\n");
    }
    return pass ? kOk : kCheckFailed;
}

/// Runs one command line; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Minimal free resolutions of the residue field over rational normal scrolls.\n"
        "Scrolls are given by block sizes m1,...,mk: --scroll 3,3 is the scroll S(2,2)."};
    app.name("scrollres");
    app.require_subcommand(1);
    RunConfig cfg;

    auto scroll_opt = [&](CLI::App* sub) {
        sub->add_option("--scroll", cfg.scroll, "block sizes m1,...,mk (each >= 2); --scroll 3,3 is the scroll S(2,2)")->required();
        sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    };

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers beta_0..beta_max of the residue field (closed sum)");
    scroll_opt(betti_cmd);
    betti_cmd->add_option("--max", cfg.max, "largest homological index")->capture_default_str();
    betti_cmd->add_option("--format", cfg.format, "text or json (default text)")->check(CLI::IsMember({"text", "json"}));

    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series of R and the Poincare series of the residue field");
    scroll_opt(hilbert_cmd);
    hilbert_cmd->add_option("--terms", cfg.terms, "number of series coefficients")->capture_default_str();
    hilbert_cmd->add_option("--format", cfg.format, "text or json (default text)")->check(CLI::IsMember({"text", "json"}));

    auto* faces_cmd = app.add_subcommand("faces", "Face numbers f_{-1}..f_k of the Stanley-Reisner complex of the initial ideal");
    scroll_opt(faces_cmd);
    faces_cmd->add_flag("--facets", cfg.facets, "also list the facets");
    faces_cmd->add_option("--format", cfg.format, "text or json (default text)")->check(CLI::IsMember({"text", "json"}));

    auto* resolve_cmd = app.add_subcommand("resolve", "Differentials of the resolution (k = 2 only)");
    scroll_opt(resolve_cmd);
    resolve_cmd->add_option("--steps", cfg.steps, "last differential index")->capture_default_str();
    resolve_cmd->add_option("--target", cfg.target, "field, J, I1 or I2")->capture_default_str();
    resolve_cmd->add_option("--text-dir", cfg.text_dir, "also write one 'r c element' file per step into this directory");
    resolve_cmd->add_option("--format", cfg.format, "json or text (default json; text lists shapes)")->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check a constructed resolution (k = 2 only)");
    scroll_opt(verify_cmd);
    verify_cmd->add_option("--steps", cfg.steps, "last differential index")->capture_default_str();
    verify_cmd->add_option("--target", cfg.target, "field, J, I1 or I2")->capture_default_str();
    verify_cmd->add_option("--checks", cfg.checks, "comma list of complex, minimal, exact, minors, ranks, groebner")->capture_default_str();
    verify_cmd->add_option("--modulus", cfg.modulus, "prime for rank probes")->capture_default_str();
    verify_cmd->add_option("--trials", cfg.trials, "random points per rank probe")->capture_default_str();
    verify_cmd->add_option("--seed", cfg.seed, "seed for rank probes")->capture_default_str();
    verify_cmd->add_option("--format", cfg.format, "json or text (default json)")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--inject-fault", cfg.fault, "")->group("");

    auto* oracle_cmd = app.add_subcommand("oracle", "Graded Betti numbers recomputed over F_q");
    scroll_opt(oracle_cmd);
    oracle_cmd->add_option("--imax", cfg.imax, "largest homological index")->capture_default_str();
    oracle_cmd->add_option("--modulus", cfg.modulus, "prime field size")->capture_default_str();
    oracle_cmd->add_flag("--compare", cfg.compare, "compare with the closed Betti sum; exit 1 on mismatch");
    oracle_cmd->add_option("--format", cfg.format, "json or text (default json)")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*betti_cmd || *hilbert_cmd || *faces_cmd) {
            if (cfg.format.empty()) cfg.format = "text";
        } else if (cfg.format.empty()) {
            cfg.format = "json";
        }
        if (*betti_cmd) return cmd_betti(cfg, out);
        if (*hilbert_cmd) return cmd_hilbert(cfg, out);
        if (*faces_cmd) return cmd_faces(cfg, out);
        if (*resolve_cmd) return cmd_resolve(cfg, out);
        if (*verify_cmd) return cmd_verify(cfg, out);
        if (*oracle_cmd) return cmd_oracle(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}

}  // namespace scrollres::cli
