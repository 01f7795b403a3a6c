#include <complex>
#include <fstream>
#include <map>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cleo/cli.hpp"

namespace {

struct common_opts {
    int lambda = 2;
    std::vector<double> alpha;
    std::vector<int> mu = {0};
    std::vector<double> z = {0.0};
    double zmax = 6.0;
    int steps = 120;
    bool z_real_negative = false;
    int dim = 64;
    double tol_algebra = 1e-9;
    double tol_cs = 1e-10;
    double tol_unity = 1e-6;
    double tol_moments = 1e-8;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--lambda", o.lambda, "grading order (>= 2)");
    cmd->add_option("--alpha", o.alpha, "comma-separated alpha_0..alpha_{lambda-1}")->delimiter(',');
    cmd->add_option("--mu", o.mu, "sector index (may repeat / comma list)")->delimiter(',');
    cmd->add_option("--z", o.z, "coherent-state label, re[,im]")->delimiter(',');
    cmd->add_option("--zmax", o.zmax, "sweep endpoint |z|");
    cmd->add_option("--steps", o.steps, "number of sweep steps");
    cmd->add_flag("--z-real-negative", o.z_real_negative, "sweep along real negative z");
    cmd->add_option("--dim", o.dim, "Fock truncation dimension");
    cmd->add_option("--tol-algebra", o.tol_algebra, "tolerance for operator identities");
    cmd->add_option("--tol-cs", o.tol_cs, "tolerance for eigen residuals");
    cmd->add_option("--tol-unity", o.tol_unity, "tolerance for the unity resolution");
    cmd->add_option("--tol-moments", o.tol_moments, "tolerance for moment checks");
    cmd->add_option("--out", o.out, "output file (sweeps) or directory (figures)");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

cleo::cli::run_config to_config(cleo::cli::command_kind kind, const common_opts& o) {
    cleo::cli::run_config c;
    c.command = kind;
    c.lambda = o.lambda;
    c.alpha = o.alpha.empty() ? std::vector<double>(static_cast<std::size_t>(o.lambda), 0.0) : o.alpha;
    c.mu_list = o.mu;
    c.z = {o.z.size() > 0 ? o.z[0] : 0.0, o.z.size() > 1 ? o.z[1] : 0.0};
    c.z_max = o.zmax;
    c.steps = o.steps;
    c.z_real_negative = o.z_real_negative;
    c.dim = o.dim;
    c.tol_algebra = o.tol_algebra;
    c.tol_cs = o.tol_cs;
    c.tol_unity = o.tol_unity;
    c.tol_moments = o.tol_moments;
    c.out_path = o.out;
    c.format = o.format == "json" ? cleo::cli::output_format::json : cleo::cli::output_format::csv;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cleo: C_lambda-extended oscillator coherent states, verification and sweeps"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file mirroring the flags");

    struct sub {
        CLI::App* cmd;
        cleo::cli::command_kind kind;
        common_opts opts;
    };
    const std::map<std::string, std::string> blurbs = {
        {"verify-algebra", "operator-identity residual table"},
        {"verify-cs", "coherent-state residuals and normalization identities"},
        {"verify-unity", "resolution of unity and moment conditions"},
        {"sweep-q", "Mandel-Q sweep over |z|"},
        {"sweep-squeeze", "squeezing ratios along real negative z"},
        {"dump-state", "JSON dump of one coherent state"},
        {"reproduce-figures", "CSV data for the bundled parameter studies"}};

    std::vector<sub> subs;
    // options bind references into opts; the vector must not reallocate
    subs.reserve(cleo::cli::command_names().size());
    for (const auto& [name, kind] : cleo::cli::command_names()) {
        auto* cmd = app.add_subcommand(name, blurbs.at(name));
        subs.push_back({cmd, kind, {}});
        add_common(cmd, subs.back().opts);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        std::cerr << cleo::cli::error_json("invalid_input", e.what()).dump() << "\n";
        return cleo::cli::exit_invalid;
    }

    try {
        cleo::cli::run_config cfg;
        bool have = false;
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw cleo::invalid_input("cannot open config file " + config_path);
            nlohmann::json j;
            is >> j;
            cfg = cleo::cli::config_from_json(j);
            have = true;
        }
        for (auto& s : subs) {
            if (s.cmd->parsed()) {
                cfg = to_config(s.kind, s.opts);
                have = true;
            }
        }
        if (!have) {
            std::cerr << cleo::cli::error_json("invalid_input", "no command given; see --help").dump()
                      << "\n";
            return cleo::cli::exit_invalid;
        }
        const int ec = cleo::cli::run(cfg, std::cout);
        if (ec == cleo::cli::exit_tolerance)
            std::cerr << cleo::cli::error_json("tolerance_failure", "one or more checks failed").dump()
                      << "\n";
        return ec;
    } catch (const cleo::error& e) {
        std::cerr << cleo::cli::error_json("invalid_input", e.what()).dump() << "\n";
        return cleo::cli::exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << cleo::cli::error_json("error", e.what()).dump() << "\n";
        return cleo::cli::exit_invalid;
    }
}
