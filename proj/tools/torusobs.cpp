// torusobs: sphere lattice sets, vanishing orders, ball-kernel observability
// constants, cluster checks, and Turan-type sup-norm measurements, with
// reproducible JSON/CSV reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "torusobs/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes: 0 ok, 2 usage, 3 domain, 4 non-convergence
struct Output {
    std::string text;        // exact bytes for stdout or --out
    nlohmann::json params;   // echoed into the manifest
};

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void apply_thread_env() {
#ifdef _OPENMP
    omp_set_num_threads(torusobs::thread_cap());
#endif
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace torusobs;

    CLI::App app{"toral eigenfunction observability toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json", out_path, manifest_path;
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--manifest", manifest_path, "append a run manifest (JSON lines)");
    app.add_option("--seed", seed, "seed for randomized subcommands");

    // sphere
    auto* sphere_cmd = app.add_subcommand("sphere", "enumerate S_d(sqrt(n))");
    int sp_d = 2;
    std::int64_t sp_n = 0;
    double sp_capR = 0;
    std::int64_t sp_cap_limit = 64;
    sphere_cmd->add_option("--dim", sp_d, "ambient dimension (>= 2)")->required();
    sphere_cmd->add_option("--norm", sp_n, "squared radius n = lambda^2")->required();
    sphere_cmd->add_option("--cap-R", sp_capR, "also report cap statistics at R");
    sphere_cmd->add_option("--cap-limit", sp_cap_limit,
                           "exact cap search point limit");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "vanishing-order bounds and value");
    int gm_d = 2;
    std::int64_t gm_n = 0;
    int gm_nmax = -1;
    double gm_carith = 1.0;
    gamma_cmd->add_option("--dim", gm_d)->required();
    gamma_cmd->add_option("--norm", gm_n)->required();
    gamma_cmd->add_option("--nmax", gm_nmax, "sweep cap (default: from bounds)");
    gamma_cmd->add_option("--carith", gm_carith, "constant in the d>=3 upper bound");

    // observability
    auto* obs_cmd = app.add_subcommand("observability",
                                       "smallest Gram eigenvalue on S_d(sqrt(n))");
    int ob_d = 2;
    std::int64_t ob_n = 0;
    std::string ob_grid = "0.1";
    double ob_tol = 1e-12;
    bool ob_vector = false;
    obs_cmd->add_option("--dim", ob_d)->required();
    obs_cmd->add_option("--norm", ob_n)->required();
    obs_cmd->add_option("--r", ob_grid, "radius or comma-separated grid");
    obs_cmd->add_option("--tol", ob_tol, "Jacobi off-norm tolerance");
    obs_cmd->add_flag("--vector", ob_vector, "include the minimizing eigenvector");

    // cluster
    auto* cl_cmd = app.add_subcommand("cluster", "proximity-graph partition");
    int cl_d = 2;
    std::int64_t cl_n = 0;
    double cl_rho = 1.0;
    bool cl_connes = false;
    cl_cmd->add_option("--dim", cl_d)->required();
    cl_cmd->add_option("--norm", cl_n)->required();
    cl_cmd->add_option("--rho", cl_rho, "edge threshold (strict)");
    cl_cmd->add_flag("--connes", cl_connes,
                     "also report the hyperplane-cluster threshold (d >= 3)");

    // jarnik
    auto* ja_cmd = app.add_subcommand("jarnik", "angular window checks over n");
    std::int64_t ja_lo = 1, ja_hi = 100;
    int ja_m = 2;
    ja_cmd->add_option("--nmin", ja_lo);
    ja_cmd->add_option("--nmax", ja_hi)->required();
    ja_cmd->add_option("--m", ja_m, "max points allowed per window");

    // turan
    auto* tu_cmd = app.add_subcommand("turan", "sup-norm ratio measurements");
    int tu_nmax = 4;
    std::string tu_rlist = "0.2,0.5,1.0";
    int tu_trials = 0;
    int tu_terms = 4;
    tu_cmd->add_option("--nmax", tu_nmax, "extremal family max power (<= 8)");
    tu_cmd->add_option("--r-list", tu_rlist, "comma-separated interval radii");
    tu_cmd->add_option("--trials", tu_trials,
                       "random trials on E = [-0.5, 0.5] (0 = suite only)");
    tu_cmd->add_option("--terms", tu_terms, "terms per random trial");

    // family
    auto* fa_cmd = app.add_subcommand("family", "extremal eigenfunction families");
    std::string fa_name;
    int fa_d = 2;
    std::int64_t fa_index = 1, fa_m = 5;
    double fa_K = 2.0, fa_r = 0.1;
    fa_cmd->add_option("--name", fa_name, "simple | hyperplane | wigert")
        ->required()
        ->check(CLI::IsMember({"simple", "hyperplane", "wigert"}));
    fa_cmd->add_option("--dim", fa_d);
    fa_cmd->add_option("--index", fa_index, "simple family index n");
    fa_cmd->add_option("--K", fa_K, "hyperplane family constant");
    fa_cmd->add_option("--m", fa_m, "wigert prime bound");
    fa_cmd->add_option("--r", fa_r, "ball radius");

    // bounds
    auto* bo_cmd = app.add_subcommand("bounds", "constant-free bound evaluators");
    std::int64_t bo_count = 0;
    double bo_diam = 0, bo_r = 0.1, bo_gamma = 0.5, bo_D = 1.0;
    int bo_N = -1, bo_tables_d = 0;
    bo_cmd->add_option("--count", bo_count, "support size for the decay evaluator");
    bo_cmd->add_option("--diam", bo_diam);
    bo_cmd->add_option("--n", bo_N, "vanishing order");
    bo_cmd->add_option("--r", bo_r);
    bo_cmd->add_option("--tables-dim", bo_tables_d,
                       "emit exponent tables for this dimension (>= 3)");
    bo_cmd->add_option("--gamma", bo_gamma);
    bo_cmd->add_option("--D", bo_D);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    apply_thread_env();

    Output out;
    try {
        if (sphere_cmd->parsed()) {
            if (sp_d < 2) {
                std::cerr << "error: usage: --dim must be >= 2\n";
                return 2;
            }
            if (sp_n < 0) {
                std::cerr << "error: usage: --norm must be >= 0\n";
                return 2;
            }
            const auto s = lattice::enumerate_sphere(sp_d, sp_n);
            out.params = {{"dim", sp_d}, {"norm", sp_n}};
            if (format == "csv") {
                out.text = report::csv(s);
            } else {
                nlohmann::json j = report::to_json(s);
                j["count"] = s.count();
                if (sp_capR > 0) {
                    j["cap"] = report::to_json(
                        lattice::cap_statistics(s, sp_capR, sp_cap_limit));
                    out.params["cap_R"] = sp_capR;
                }
                out.text = report::canonical_json(j);
            }
        } else if (gamma_cmd->parsed()) {
            if (gm_d < 2) {
                std::cerr << "error: usage: --dim must be >= 2\n";
                return 2;
            }
            const auto b = spectral::gamma_bounds(gm_d, gm_n, gm_carith);
            int nmax = gm_nmax;
            if (nmax < 0) {
                double cap = static_cast<double>(b.upper_M);
                if (b.upper_D) cap = std::min(cap, *b.upper_D);
                nmax = std::max(0, static_cast<int>(std::floor(cap)));
            }
            const int gamma = spectral::gamma_max(gm_d, gm_n, nmax);
            nlohmann::json j{{"d", gm_d},
                             {"n", gm_n},
                             {"bounds", report::to_json(b)},
                             {"N_max", nmax},
                             {"gamma", gamma}};
            out.params = {{"dim", gm_d}, {"norm", gm_n}, {"nmax", nmax}};
            out.text = report::canonical_json(j);
        } else if (obs_cmd->parsed()) {
            if (ob_d < 2) {
                std::cerr << "error: usage: --dim must be >= 2\n";
                return 2;
            }
            const auto s = lattice::enumerate_sphere(ob_d, ob_n);
            if (s.points.empty()) throw domain_error("empty eigenspace");
            nlohmann::json rows = nlohmann::json::array();
            for (double r : parse_grid(ob_grid)) {
                const auto g = obs::gram_matrix(s, r);
                const auto e = obs::min_eigenvalue(g, ob_tol);
                nlohmann::json row{{"r", r}, {"m", e.value}, {"sweeps", e.sweeps}};
                if (ob_vector) {
                    nlohmann::json vec = nlohmann::json::array();
                    for (double v : e.vector) vec.push_back(v);
                    row["vector"] = vec;
                }
                rows.push_back(std::move(row));
            }
            nlohmann::json j{{"d", ob_d}, {"n", ob_n}, {"count", s.count()},
                             {"results", rows}};
            out.params = {{"dim", ob_d}, {"norm", ob_n}, {"r", ob_grid}};
            out.text = report::canonical_json(j);
        } else if (cl_cmd->parsed()) {
            if (cl_d < 2) {
                std::cerr << "error: usage: --dim must be >= 2\n";
                return 2;
            }
            const auto s = lattice::enumerate_sphere(cl_d, cl_n);
            const auto p = clusters::partition(s.points, cl_rho);
            nlohmann::json j = report::to_json(p);
            j["d"] = cl_d;
            j["n"] = cl_n;
            j["component_count"] = p.components.size();
            if (cl_connes) j["connes_threshold"] = clusters::connes_threshold(s);
            out.params = {{"dim", cl_d}, {"norm", cl_n}, {"rho", cl_rho}};
            out.text = report::canonical_json(j);
        } else if (ja_cmd->parsed()) {
            const auto checks = clusters::arc_window_sweep(ja_lo, ja_hi, ja_m);
            std::size_t total = 0;
            for (const auto& c : checks) total += c.violations.size();
            std::cerr << "jarnik: swept n in [" << ja_lo << ", " << ja_hi
                      << "], violations " << total << "\n";
            if (format == "csv") {
                out.text = report::csv(checks);
            } else {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& c : checks) arr.push_back(report::to_json(c));
                out.text = report::canonical_json(
                    {{"m", ja_m}, {"checks", arr}, {"total_violations", total}});
            }
            out.params = {{"nmin", ja_lo}, {"nmax", ja_hi}, {"m", ja_m}};
        } else if (tu_cmd->parsed()) {
            out.params = {{"nmax", tu_nmax}, {"r_list", tu_rlist},
                          {"trials", tu_trials}, {"seed", seed}};
            if (tu_trials > 0) {
                std::string text = "trial_id,terms,set,measured_ratio,per_term_exponent,seed\n";
                nlohmann::json arr = nlohmann::json::array();
                const auto E = turan::SetDescriptor::interval(-0.5, 0.5);
                for (int t = 0; t < tu_trials; ++t) {
                    const auto f = turan::random_trial_function(seed, t, tu_terms);
                    const auto rep = turan::turan_ratio(f, E);
                    text += report::csv_row(
                        {t, rep.terms, rep.set_desc, rep.measured_ratio,
                         rep.per_term_exponent ? nlohmann::json(*rep.per_term_exponent)
                                               : nlohmann::json(nullptr),
                         seed});
                    nlohmann::json j = report::to_json(rep);
                    j["trial_id"] = t;
                    arr.push_back(std::move(j));
                }
                out.text = format == "csv"
                               ? text
                               : report::canonical_json({{"trials", arr}});
            } else {
                const auto rows =
                    turan::extremal_scaling_suite(tu_nmax, parse_grid(tu_rlist));
                if (format == "csv") {
                    out.text = report::csv(rows);
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& r : rows)
                        arr.push_back({{"n", r.n},
                                       {"r", r.r},
                                       {"measured", r.measured},
                                       {"analytic", r.analytic},
                                       {"log_diff", r.log_diff}});
                    out.text = report::canonical_json({{"rows", arr}});
                }
            }
        } else if (fa_cmd->parsed()) {
            obs::FamilyReport fr;
            if (fa_name == "simple")
                fr = obs::family_simple(fa_d, fa_index, fa_r);
            else if (fa_name == "hyperplane")
                fr = obs::family_hyperplane(fa_d, fa_K, fa_r);
            else
                fr = obs::family_wigert(fa_m, fa_r);
            out.params = {{"name", fa_name}, {"dim", fa_d}, {"r", fa_r}};
            out.text = format == "csv" ? report::csv(fr, fa_d)
                                       : report::canonical_json(report::to_json(fr));
        } else if (bo_cmd->parsed()) {
            nlohmann::json j;
            if (bo_tables_d >= 3) {
                j["tables"] =
                    report::to_json(obs::exponent_tables(bo_tables_d, bo_r, bo_gamma, bo_D));
            }
            if (bo_count >= 1 && bo_N >= 0)
                j["decay"] = obs::upper_bound_eval(bo_count, bo_diam, bo_N, bo_r);
            if (j.empty()) {
                std::cerr << "error: usage: bounds needs --tables-dim or"
                             " --count/--n\n";
                return 2;
            }
            out.params = {{"r", bo_r}};
            out.text = report::canonical_json(j);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: domain: " << e.what() << "\n";
        return 3;
    } catch (const convergence_error& e) {
        std::cerr << "error: convergence: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }

    if (out_path.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: usage: cannot open --out path\n";
            return 2;
        }
        f << out.text;
    }

    if (!manifest_path.empty()) {
        report::RunManifest m;
        for (int i = 0; i < argc; ++i) m.argv.emplace_back(argv[i]);
        m.params = out.params;
        m.seed = seed;
        m.version = kVersion;
        m.timestamp = timestamp_utc();
        m.output_digest = report::sha256_hex(out.text);
        std::ofstream f(manifest_path, std::ios::app);
        if (!f) {
            std::cerr << "error: usage: cannot open --manifest path\n";
            return 2;
        }
        f << report::canonical_json(m.to_json());
    }
    return 0;
}
