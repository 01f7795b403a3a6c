#pragma once

#include <charconv>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cleo/algebra.hpp"
#include "cleo/coherent_states.hpp"
#include "cleo/measures.hpp"
#include "cleo/observables.hpp"
#include "cleo/sga.hpp"

namespace cleo::cli {

enum class command_kind {
    verify_algebra,
    verify_cs,
    verify_unity,
    sweep_q,
    sweep_squeeze,
    dump_state,
    reproduce_figures
};

enum class output_format { csv, json };

inline const std::map<std::string, command_kind>& command_names() {
    static const std::map<std::string, command_kind> names = {
        {"verify-algebra", command_kind::verify_algebra},
        {"verify-cs", command_kind::verify_cs},
        {"verify-unity", command_kind::verify_unity},
        {"sweep-q", command_kind::sweep_q},
        {"sweep-squeeze", command_kind::sweep_squeeze},
        {"dump-state", command_kind::dump_state},
        {"reproduce-figures", command_kind::reproduce_figures}};
    return names;
}

struct run_config {
    command_kind command = command_kind::verify_algebra;
    int lambda = 2;
    std::vector<double> alpha = {0.0, 0.0};
    std::vector<int> mu_list = {0};
    std::complex<double> z = 0.0;
    double z_max = 6.0;
    int steps = 120;
    bool z_real_negative = false;
    int dim = 64;
    double tol_algebra = 1e-9;
    double tol_cs = 1e-10;
    double tol_unity = 1e-6;
    double tol_moments = 1e-8;
    std::string out_path; // empty: stdout for tables/sweeps, cwd for figures
    output_format format = output_format::csv;
};

/// Exit codes: 0 all checks passed, 1 tolerance failure, 2 invalid input.
enum exit_code : int { exit_ok = 0, exit_tolerance = 1, exit_invalid = 2 };

// ---------------------------------------------------------------------------
// Config file (JSON mirroring the flags)
// ---------------------------------------------------------------------------

inline run_config config_from_json(const nlohmann::json& j) {
    run_config c;
    const std::string cmd = j.at("command").get<std::string>();
    const auto it = command_names().find(cmd);
    if (it == command_names().end()) throw invalid_input("unknown command: " + cmd);
    c.command = it->second;
    if (j.contains("lambda")) c.lambda = j["lambda"].get<int>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<std::vector<double>>();
    if (j.contains("mu")) {
        if (j["mu"].is_array())
            c.mu_list = j["mu"].get<std::vector<int>>();
        else
            c.mu_list = {j["mu"].get<int>()};
    }
    if (j.contains("z")) {
        if (j["z"].is_array()) {
            const auto v = j["z"].get<std::vector<double>>();
            c.z = {v.size() > 0 ? v[0] : 0.0, v.size() > 1 ? v[1] : 0.0};
        } else {
            c.z = j["z"].get<double>();
        }
    }
    if (j.contains("zmax")) c.z_max = j["zmax"].get<double>();
    if (j.contains("steps")) c.steps = j["steps"].get<int>();
    if (j.contains("z_real_negative")) c.z_real_negative = j["z_real_negative"].get<bool>();
    if (j.contains("dim")) c.dim = j["dim"].get<int>();
    if (j.contains("tol_algebra")) c.tol_algebra = j["tol_algebra"].get<double>();
    if (j.contains("tol_cs")) c.tol_cs = j["tol_cs"].get<double>();
    if (j.contains("tol_unity")) c.tol_unity = j["tol_unity"].get<double>();
    if (j.contains("tol_moments")) c.tol_moments = j["tol_moments"].get<double>();
    if (j.contains("out")) c.out_path = j["out"].get<std::string>();
    if (j.contains("format")) {
        const std::string f = j["format"].get<std::string>();
        if (f == "csv")
            c.format = output_format::csv;
        else if (f == "json")
            c.format = output_format::json;
        else
            throw invalid_input("unknown format: " + f);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Numeric formatting: 17 significant digits, '.' decimal point, no locale.
// ---------------------------------------------------------------------------

inline std::string fmt17(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string alpha_tag(const std::vector<double>& alpha) {
    std::string s;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) s += ';';
        s += fmt17(alpha[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Sweep output
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols = {
        "lambda",  "alpha",    "mu",      "z_re",       "z_im",     "Q_closed", "Q_oracle",
        "X",       "P",        "Y",       "Q4",         "X_oracle", "P_oracle", "Y_oracle",
        "n_mean",  "n_var",    "H0_mean", "H0sq_mean",  "disp_x",   "disp_p",   "x4",
        "p4",      "Q_disagreement", "error"};
    return cols;
}

inline std::vector<std::string> sweep_row(const algebra_params& p, const sweep_point& pt) {
    const auto& c = pt.closed;
    const auto& o = pt.oracle;
    return {std::to_string(p.lambda()),
            alpha_tag(p.alpha()),
            std::to_string(c.mu),
            fmt17(c.z.real()),
            fmt17(c.z.imag()),
            fmt17(c.mandel_q),
            fmt17(o.mandel_q),
            fmt17(c.x_ratio),
            fmt17(c.p_ratio),
            fmt17(c.y_ratio),
            fmt17(c.q4_ratio),
            fmt17(o.x_ratio),
            fmt17(o.p_ratio),
            fmt17(o.y_ratio),
            fmt17(o.n_mean),
            fmt17(o.n_var),
            fmt17(o.h0_mean),
            fmt17(o.h0sq_mean),
            fmt17(o.disp_x),
            fmt17(o.disp_p),
            fmt17(o.x4),
            fmt17(o.p4),
            fmt17(pt.q_disagreement),
            pt.error};
}

inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }
}

inline void write_rows_json(std::ostream& os, const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < header.size() && i < r.size(); ++i) obj[header[i]] = r[i];
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
}

struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        throw invalid_input("csv: no column named " + name);
    }
};

inline csv_table read_csv(std::istream& is) {
    csv_table t;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty() && is.eof()) break;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);
        if (first) {
            t.header = std::move(fields);
            first = false;
        } else {
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}

inline csv_table read_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw invalid_input("cannot open " + path);
    return read_csv(is);
}

// ---------------------------------------------------------------------------
// Verification tables
// ---------------------------------------------------------------------------

struct check_row {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    bool pass = false;
};

inline check_row make_check(std::string name, double value, double tol) {
    const bool pass = value < tol;
    return {std::move(name), value, tol, pass};
}

inline bool print_table(std::ostream& os, const std::vector<check_row>& rows) {
    bool all = true;
    for (const auto& r : rows) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %-46s %12.4e  (tol %8.1e)  %s", r.name.c_str(), r.value,
                      r.tol, r.pass ? "PASS" : "FAIL");
        os << buf << "\n";
        all = all && r.pass;
    }
    return all;
}

inline std::vector<check_row> algebra_checks(const algebra_params& p, int dim, double tol) {
    const int lambda = p.lambda();
    std::vector<check_row> rows;
    const auto ops = build_operators(p, dim);
    const int cut_a = lambda;
    const int cut_j = 2 * lambda;

    rows.push_back(make_check("[N, a_dag] - a_dag",
                              (commutator(ops.number, ops.raise) - ops.raise).max_abs(cut_a), tol));

    fock_matrix rhs = fock_matrix::identity(dim);
    for (int mu = 0; mu < lambda; ++mu)
        rhs = rhs + cplx(p.alpha()[static_cast<std::size_t>(mu)]) * ops.projectors[static_cast<std::size_t>(mu)];
    rows.push_back(make_check("[a, a_dag] - (I + sum alpha_mu P_mu)",
                              (commutator(ops.lower, ops.raise) - rhs).max_abs(cut_a), tol));

    double shift_res = 0.0;
    for (int mu = 0; mu < lambda; ++mu) {
        const auto& pm = ops.projectors[static_cast<std::size_t>(mu)];
        const auto& pn = ops.projectors[static_cast<std::size_t>((mu + 1) % lambda)];
        shift_res = std::max(shift_res, (ops.raise * pm - pn * ops.raise).max_abs(0));
    }
    rows.push_back(make_check("a_dag P_mu - P_{mu+1} a_dag", shift_res, 1e-15));

    fock_matrix psum(dim);
    for (const auto& pm : ops.projectors) psum = psum + pm;
    rows.push_back(make_check("sum_mu P_mu - I", (psum - fock_matrix::identity(dim)).max_abs(0), 1e-15));

    {
        fock_matrix fn(dim), fn1(dim);
        for (int n = 0; n < dim; ++n) {
            fn(n, n) = structure_function(p, n);
            fn1(n, n) = structure_function(p, n + 1);
        }
        rows.push_back(make_check("a_dag a - F(N)", (ops.raise * ops.lower - fn).max_abs(cut_a), tol));
        rows.push_back(make_check("a a_dag - F(N+1)", (ops.lower * ops.raise - fn1).max_abs(cut_a), tol));
    }

    {
        double h0res = 0.0;
        for (int n = 0; n < dim - 1; ++n)
            h0res = std::max(h0res, std::abs(ops.h0.entry(n, n) - energy(p, n)));
        rows.push_back(make_check("diag H0 - E_n (n <= dim-2)", h0res, tol));
    }

    const auto gen = build_generators(p, dim);
    rows.push_back(make_check("[J0, J+] - J+",
                              (commutator(gen.zero, gen.plus) - gen.plus).max_abs(cut_j), tol));
    rows.push_back(make_check("[J0, J-] + J-",
                              (commutator(gen.zero, gen.minus) + gen.minus).max_abs(cut_j), tol));

    const auto f = f_polynomial(p);
    rows.push_back(make_check("[J+, J-] - f(J0, P_mu)",
                              (commutator(gen.plus, gen.minus) - f.to_operator(p, dim)).max_abs(cut_j),
                              tol));

    double proj_comm = 0.0;
    for (const auto& pm : ops.projectors) {
        proj_comm = std::max(proj_comm, commutator(gen.plus, pm).max_abs(cut_j));
        proj_comm = std::max(proj_comm, commutator(gen.minus, pm).max_abs(cut_j));
        proj_comm = std::max(proj_comm, commutator(gen.zero, pm).max_abs(cut_j));
    }
    rows.push_back(make_check("[J0/J+/J-, P_mu]", proj_comm, 1e-15));

    // Casimir identities cancel entries of size F(n)^lambda down to O(1),
    // so these rows run at a dimension where the residual is meaningful.
    const int dim_c = std::min(dim, (lambda <= 4) ? 20 : 3 * lambda + 3);
    const auto gc = build_generators(p, dim_c);
    const fock_matrix fc = f.to_operator(p, dim_c);
    const fock_matrix hc = h_polynomial(p).to_operator(p, dim_c);
    const fock_matrix c1 = gc.minus * gc.plus + hc;
    const fock_matrix c2 = gc.plus * gc.minus + hc - fc;
    rows.push_back(make_check("C forms: (J-J+ + h) - (J+J- + h - f)", (c1 - c2).max_abs(cut_j), 1e-10));
    rows.push_back(make_check("[C, J+]", commutator(c1, gc.plus).max_abs(cut_j), tol));
    rows.push_back(make_check("[C, J-]", commutator(c1, gc.minus).max_abs(cut_j), tol));

    {
        const auto cd = casimir_diagonal(p, dim_c);
        double crel = 0.0;
        for (int n = 0; n < dim_c - lambda; ++n) {
            const double cmu = casimir_eigenvalue(p, p.sector(n));
            const double ref = std::max(1.0, std::abs(cmu));
            crel = std::max(crel, std::abs(cd[static_cast<std::size_t>(n)] - cmu) / ref);
        }
        rows.push_back(make_check("diag C - c_mu (relative)", crel, 1e-12));
    }

    if (p.alpha_is_zero()) {
        const auto hg = h_polynomial(p);
        const auto [f0, h0p] = alpha_zero_polynomials(lambda);
        double dmax = 0.0;
        for (int mu = 0; mu < lambda; ++mu) {
            for (int i = 0; i <= lambda - 1; ++i)
                dmax = std::max(dmax, std::abs(f0.coeff(i, mu) - f.coeff(i, mu)));
            for (int i = 0; i <= lambda; ++i)
                dmax = std::max(dmax, std::abs(h0p.coeff(i, mu) - hg.coeff(i, mu)));
        }
        rows.push_back(make_check("Stirling-form f, h vs general (alpha = 0)", dmax, 1e-12));
    }
    return rows;
}

inline std::vector<check_row> cs_checks(const algebra_params& p, double tol_cs) {
    std::vector<check_row> rows;
    const double zs[] = {0.1, 1.0, 3.0};
    for (int mu = 0; mu < p.lambda(); ++mu) {
        for (double r : zs) {
            const std::complex<double> z(r * 0.8, r * 0.6); // fixed off-axis phase
            const auto st = make_coherent_state(p, z, mu);
            const int dim = p.lambda() * (st.k_max + 2) + p.lambda();
            char name[96];
            std::snprintf(name, sizeof name, "eigen residual      mu=%d |z|=%g", mu, r);
            rows.push_back(make_check(name, eigen_residual(st, p, dim), tol_cs));
            std::snprintf(name, sizeof name, "norm consistency    mu=%d |z|=%g", mu, r);
            rows.push_back(make_check(
                name, std::abs(st.norm_factor - st.series_norm) / st.norm_factor, 1e-12));
            if (p.alpha_is_zero()) {
                const double ml = std::tgamma(static_cast<double>(mu) + 1.0) *
                                  mittag_leffler(p.lambda(), mu + 1.0, p.lambda() * p.lambda() * std::norm(z));
                std::snprintf(name, sizeof name, "Mittag-Leffler norm mu=%d |z|=%g", mu, r);
                rows.push_back(make_check(name, std::abs(ml - st.norm_factor) / st.norm_factor, 1e-11));
            }
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::complex<double>> sweep_path(const run_config& cfg, bool from_zero) {
    std::vector<std::complex<double>> zs;
    const int n0 = from_zero ? 0 : 1;
    for (int i = n0; i <= cfg.steps; ++i) {
        const double t = cfg.z_max * i / cfg.steps;
        zs.emplace_back(cfg.z_real_negative ? -t : t, 0.0);
    }
    return zs;
}

inline void emit_rows(const run_config& cfg, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows, std::ostream& fallback) {
    auto dump = [&](std::ostream& os) {
        if (cfg.format == output_format::csv)
            write_csv(os, header, rows);
        else
            write_rows_json(os, header, rows);
    };
    if (cfg.out_path.empty()) {
        dump(fallback);
    } else {
        std::ofstream os(cfg.out_path);
        if (!os) throw invalid_input("cannot open output file " + cfg.out_path);
        dump(os);
    }
}

} // namespace detail

inline int cmd_verify_algebra(const run_config& cfg, std::ostream& out) {
    const algebra_params p(cfg.lambda, cfg.alpha);
    out << "verify-algebra: lambda=" << cfg.lambda << " alpha=" << alpha_tag(cfg.alpha)
        << " dim=" << cfg.dim << "\n";
    const auto rows = algebra_checks(p, cfg.dim, cfg.tol_algebra);
    return print_table(out, rows) ? exit_ok : exit_tolerance;
}

inline int cmd_verify_cs(const run_config& cfg, std::ostream& out) {
    const algebra_params p(cfg.lambda, cfg.alpha);
    out << "verify-cs: lambda=" << cfg.lambda << " alpha=" << alpha_tag(cfg.alpha) << "\n";
    const auto rows = cs_checks(p, cfg.tol_cs);
    return print_table(out, rows) ? exit_ok : exit_tolerance;
}

inline int cmd_verify_unity(const run_config& cfg, std::ostream& out) {
    const algebra_params p(cfg.lambda, cfg.alpha);
    const int dim_check = cfg.dim;
    out << "verify-unity: lambda=" << cfg.lambda << " alpha=" << alpha_tag(cfg.alpha)
        << " dim_check=" << dim_check << "\n";
    std::vector<check_row> rows;
    const double dev = verify_unity(p, dim_check);
    rows.push_back(make_check("unity resolution max |M_nn - 1|", dev, cfg.tol_unity));
    for (int mu = 0; mu < p.lambda(); ++mu) {
        const auto spec = weight_spec::select(p, mu);
        const auto errs = verify_moments(spec, 10);
        double worst = 0.0;
        for (double e : errs) worst = std::max(worst, e);
        rows.push_back(make_check("moment condition k<=10, mu=" + std::to_string(mu), worst,
                                  cfg.tol_moments));
    }
    return print_table(out, rows) ? exit_ok : exit_tolerance;
}

inline int cmd_sweep(const run_config& cfg, std::ostream& out, bool squeeze_mode) {
    const algebra_params p(cfg.lambda, cfg.alpha);
    run_config c = cfg;
    if (squeeze_mode && !c.z_real_negative) c.z_real_negative = true;
    const auto path = detail::sweep_path(c, /*from_zero=*/!squeeze_mode);

    std::vector<std::vector<std::string>> rows;
    for (int mu : c.mu_list) {
        const auto pts = sweep(p, mu, path);
        for (const auto& pt : pts) rows.push_back(sweep_row(p, pt));
    }
    detail::emit_rows(c, sweep_columns(), rows, out);
    return exit_ok;
}

inline int cmd_dump_state(const run_config& cfg, std::ostream& out) {
    const algebra_params p(cfg.lambda, cfg.alpha);
    const int mu = cfg.mu_list.empty() ? 0 : cfg.mu_list.front();
    const auto st = make_coherent_state(p, cfg.z, mu);
    nlohmann::json j;
    j["lambda"] = p.lambda();
    j["alpha"] = p.alpha();
    j["mu"] = st.mu;
    j["z"] = {{"re", st.z.real()}, {"im", st.z.imag()}};
    j["y"] = st.y;
    j["norm_factor"] = st.norm_factor;
    j["series_norm"] = st.series_norm;
    j["k_max"] = st.k_max;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : st.coeffs) coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    j["coeffs"] = std::move(coeffs);
    if (cfg.out_path.empty()) {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream os(cfg.out_path);
        if (!os) throw invalid_input("cannot open output file " + cfg.out_path);
        os << j.dump(2) << "\n";
    }
    return exit_ok;
}

struct figure_spec {
    std::string file;
    int lambda;
    std::vector<std::vector<double>> alphas;
    int mu;
    double z_max;
    int steps;
    bool z_real_negative;
    bool from_zero;
};

inline std::vector<figure_spec> figure_specs() {
    const std::vector<std::vector<double>> l2_even = {
        {0.0, 0.0}, {-0.8, 0.8}, {-0.96, 0.96}, {1.0, -1.0}};
    const std::vector<std::vector<double>> l2_odd = {
        {0.0, 0.0}, {0.8, -0.8}, {0.96, -0.96}, {-0.8, 0.8}};
    const std::vector<std::vector<double>> l3 = {{0.0, 0.0, 0.0},
                                                 {0.0, 13.0, -13.0},
                                                 {-0.9, 0.0, 0.9},
                                                 {-0.9, 13.9, -13.0}};
    const std::vector<std::vector<double>> l2_sq = {
        {0.0, 0.0}, {-0.4, 0.4}, {1.0, -1.0}, {3.0, -3.0}};
    return {
        {"fig1a.csv", 2, l2_even, 0, 6.0, 120, false, true},
        {"fig1b.csv", 2, l2_odd, 1, 6.0, 120, false, true},
        {"fig2a.csv", 3, l3, 0, 6.0, 120, false, true},
        {"fig2b.csv", 3, l3, 1, 6.0, 120, false, true},
        {"fig2c.csv", 3, l3, 2, 6.0, 120, false, true},
        {"fig3.csv", 2, l2_sq, 0, 4.0, 160, true, false},
    };
}

inline int cmd_reproduce_figures(const run_config& cfg, std::ostream& out) {
    namespace fs = std::filesystem;
    const fs::path dir = cfg.out_path.empty() ? fs::path(".") : fs::path(cfg.out_path);
    fs::create_directories(dir);
    for (const auto& spec : figure_specs()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& alpha : spec.alphas) {
            const algebra_params p(spec.lambda, alpha);
            run_config c;
            c.z_max = spec.z_max;
            c.steps = spec.steps;
            c.z_real_negative = spec.z_real_negative;
            const auto path = detail::sweep_path(c, spec.from_zero);
            const auto pts = sweep(p, spec.mu, path);
            for (const auto& pt : pts) rows.push_back(sweep_row(p, pt));
        }
        std::ofstream os(dir / spec.file);
        if (!os) throw invalid_input("cannot open output file " + (dir / spec.file).string());
        write_csv(os, sweep_columns(), rows);
        out << "wrote " << (dir / spec.file).string() << "\n";
    }
    return exit_ok;
}

inline void validate_config(const run_config& cfg) {
    const bool uses_grid = cfg.command == command_kind::sweep_q ||
                           cfg.command == command_kind::sweep_squeeze;
    if (uses_grid) {
        if (cfg.steps < 1) throw invalid_input("steps must be >= 1");
        if (!(cfg.z_max > 0.0)) throw invalid_input("zmax must be > 0");
        if (cfg.mu_list.empty()) throw invalid_input("mu list must be nonempty");
    }
    if (uses_grid || cfg.command == command_kind::dump_state) {
        for (int mu : cfg.mu_list)
            if (mu < 0 || mu >= cfg.lambda)
                throw invalid_input("mu must lie in [0, lambda)");
    }
    if (cfg.dim < 1) throw invalid_input("dim must be >= 1");
}

/// Runs one command. Throws cleo::error subclasses on invalid input; the
/// binary maps those to exit code 2 with an error JSON on stderr.
inline int run(const run_config& cfg, std::ostream& out) {
    validate_config(cfg);
    switch (cfg.command) {
    case command_kind::verify_algebra: return cmd_verify_algebra(cfg, out);
    case command_kind::verify_cs: return cmd_verify_cs(cfg, out);
    case command_kind::verify_unity: return cmd_verify_unity(cfg, out);
    case command_kind::sweep_q: return cmd_sweep(cfg, out, false);
    case command_kind::sweep_squeeze: return cmd_sweep(cfg, out, true);
    case command_kind::dump_state: return cmd_dump_state(cfg, out);
    case command_kind::reproduce_figures: return cmd_reproduce_figures(cfg, out);
    }
    throw invalid_input("unknown command");
}

inline nlohmann::json error_json(const std::string& status, const std::string& detail) {
    return nlohmann::json{{"status", status}, {"detail", detail}};
}

} // namespace cleo::cli
