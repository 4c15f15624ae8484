#include "sho/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "sho/errors.hpp"
#include "sho/matrix.hpp"

namespace sho {
namespace {

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string gshort(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fixed_str(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

int thread_cap() {
    if (const char* s = std::getenv("SPIKED_OSC_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// ---- solve ----------------------------------------------------------------

void render_spectrum_text(const JobConfig& cfg, const SpectrumResult& r, std::ostream& out) {
    for (int k = 0; k < cfg.levels; ++k) {
        out << "E[" << k << "] = " << fixed_str(r.eigenvalues[static_cast<size_t>(k)], cfg.digits)
            << "\n";
    }
    if (cfg.optimize_A) {
        out << "A* = " << gshort(r.optimal_A) << " (" << r.evaluations << " evaluations";
        if (r.boundary_A) out << ", at validity boundary";
        out << ")\n";
    } else {
        out << "A = " << gshort(r.optimal_A) << " (fixed)\n";
    }
    if (cfg.digits_given) {
        if (r.not_converged) {
            out << "D = " << r.D_used << ", NOT converged to " << cfg.digits
                << " digits (best: " << r.converged_digits << ")\n";
        } else {
            out << "D = " << r.D_used << ", converged to " << r.converged_digits << " digits\n";
        }
    } else {
        out << "D = " << r.D_used << "\n";
    }
}

void render_spectrum_csv(const JobConfig& cfg, const SpectrumResult& r, std::ostream& out) {
    out << "level,eigenvalue,A,D,converged_digits,evaluations,boundary_A,not_converged\n";
    for (int k = 0; k < cfg.levels; ++k) {
        out << k << "," << g17(r.eigenvalues[static_cast<size_t>(k)]) << "," << g17(r.optimal_A)
            << "," << r.D_used << "," << r.converged_digits << "," << r.evaluations << ","
            << (r.boundary_A ? 1 : 0) << "," << (r.not_converged ? 1 : 0) << "\n";
    }
}

SpectrumResult compute_spectrum(const JobConfig& cfg) {
    const int level = cfg.levels - 1;
    if (cfg.digits_given) {
        const int d_max = cfg.dim_given ? cfg.D : 100;
        return converge_to_digits(cfg.model, cfg.digits, level, d_max);
    }
    if (cfg.levels > cfg.D) throw DomainError("requested levels exceed basis dimension D");
    if (cfg.optimize_A) return minimize_over_A(cfg.model, cfg.D, level);
    return solve_spectrum(cfg.model, cfg.D, false, cfg.fixed_A.value_or(0.0), level);
}

int run_solve(const JobConfig& cfg, std::ostream& out) {
    const SpectrumResult r = compute_spectrum(cfg);
    switch (cfg.output_format) {
        case OutputFormat::text: render_spectrum_text(cfg, r, out); break;
        case OutputFormat::csv: render_spectrum_csv(cfg, r, out); break;
        case OutputFormat::json: out << spectrum_to_json(r).dump(2) << "\n"; break;
    }
    return r.not_converged ? kExitNoConverge : kExitOk;
}

// ---- converge -------------------------------------------------------------

int run_converge(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    const int level = cfg.levels - 1;
    const int d_max = cfg.dim_given ? cfg.D : 100;
    const SpectrumResult r = converge_to_digits(cfg.model, cfg.digits, level, d_max);

    std::optional<ConvergenceReport> rep;
    if (cfg.model.alpha == 4.0) {
        try {
            const BasisContext ctx = make_context(cfg.model, r.optimal_A, r.D_used);
            rep = analyze_convergence(cfg.model, ctx, r.D_used);
        } catch (const Error& e) {
            err << "note: convergence analysis unavailable: " << e.what() << "\n";
        }
    }

    switch (cfg.output_format) {
        case OutputFormat::text: {
            render_spectrum_text(cfg, r, out);
            if (rep) {
                out << "\nconvergence analysis (alpha = 4):\n";
                out << "  second-order perturbation estimate: " << gshort(rep->perturbation_E)
                    << "\n";
                out << "  series tail, partial sum to D:      " << gshort(rep->sum_partial) << "\n";
                if (rep->sum_closed) {
                    out << "  series tail, closed form:           " << gshort(*rep->sum_closed)
                        << "\n";
                } else {
                    out << "  series tail, closed form:           n/a (needs gamma > 3)\n";
                }
                out << "  boundary curve lambda(gamma*) = " << gshort(rep->lambda_of_gamma)
                    << "; lambda = " << gshort(cfg.model.lambda) << " -> "
                    << (rep->regime == Regime::fast ? "fast" : "slow") << " regime\n";
            }
            break;
        }
        case OutputFormat::csv: {
            out << "level,eigenvalue,A,D,converged_digits,evaluations,not_converged,"
                   "perturbation_E,sum_partial,sum_closed,lambda_of_gamma,regime\n";
            const int k = cfg.levels - 1;
            out << k << "," << g17(r.eigenvalues[static_cast<size_t>(k)]) << ","
                << g17(r.optimal_A) << "," << r.D_used << "," << r.converged_digits << ","
                << r.evaluations << "," << (r.not_converged ? 1 : 0) << ",";
            if (rep) {
                out << g17(rep->perturbation_E) << "," << g17(rep->sum_partial) << ",";
                if (rep->sum_closed) out << g17(*rep->sum_closed);
                out << "," << g17(rep->lambda_of_gamma) << ","
                    << (rep->regime == Regime::fast ? "fast" : "slow");
            } else {
                out << ",,,,";
            }
            out << "\n";
            break;
        }
        case OutputFormat::json: {
            nlohmann::json j;
            j["spectrum"] = spectrum_to_json(r);
            j["report"] = rep ? report_to_json(*rep) : nlohmann::json(nullptr);
            out << j.dump(2) << "\n";
            break;
        }
    }
    return r.not_converged ? kExitNoConverge : kExitOk;
}

// ---- matrix ---------------------------------------------------------------

int run_matrix(const JobConfig& cfg, std::ostream& out) {
    double A_used = cfg.fixed_A.value_or(0.0);
    if (cfg.optimize_A) A_used = minimize_over_A(cfg.model, cfg.D, 0).optimal_A;
    const BasisContext ctx = make_context(cfg.model, A_used, cfg.D);
    const HamiltonianMatrix H = build_hamiltonian(cfg.model, ctx);
    switch (cfg.output_format) {
        case OutputFormat::text: out << matrix_to_text(H); break;
        case OutputFormat::json: out << matrix_to_json(H) << "\n"; break;
        case OutputFormat::csv: {
            for (int n = 0; n < H.dim; ++n) out << (n ? "," : "") << "c" << n;
            out << "\n";
            for (int m = 0; m < H.dim; ++m) {
                for (int n = 0; n < H.dim; ++n) out << (n ? "," : "") << g17(H.at(m, n));
                out << "\n";
            }
            break;
        }
    }
    return kExitOk;
}

// ---- oracle ---------------------------------------------------------------

int run_oracle(const JobConfig& cfg, std::ostream& out) {
    const int level = cfg.levels - 1;
    const OracleConfig config = make_default_config(cfg.model, level);
    const OracleResult r = shoot_eigenvalue(cfg.model, level, config);
    switch (cfg.output_format) {
        case OutputFormat::text:
            out << "E_oracle[" << level << "] = " << fixed_str(r.energy, cfg.digits) << "\n";
            out << "richardson = " << gshort(r.richardson_estimate) << ", nodes = " << r.node_count
                << "\n";
            out << "grid: x in [" << gshort(r.config_used.x_min) << ", "
                << gshort(r.config_used.x_max) << "], " << r.config_used.steps
                << " steps, bracket [" << gshort(r.config_used.energy_bracket.first) << ", "
                << gshort(r.config_used.energy_bracket.second) << "]\n";
            break;
        case OutputFormat::csv:
            out << "level,energy,richardson_estimate,node_count,x_min,x_max,steps,"
                   "bracket_lo,bracket_hi,tolerance\n";
            out << level << "," << g17(r.energy) << "," << g17(r.richardson_estimate) << ","
                << r.node_count << "," << g17(r.config_used.x_min) << ","
                << g17(r.config_used.x_max) << "," << r.config_used.steps << ","
                << g17(r.config_used.energy_bracket.first) << ","
                << g17(r.config_used.energy_bracket.second) << ","
                << g17(r.config_used.tolerance) << "\n";
            break;
        case OutputFormat::json: out << oracle_to_json(r).dump(2) << "\n"; break;
    }
    return kExitOk;
}

// ---- table ----------------------------------------------------------------

struct FlatCell {
    size_t row = 0;
    size_t col = 0;
    const TableCell* cell = nullptr;
};

double compute_cell(const TableCell& cell) {
    switch (cell.kind) {
        case CellKind::variational: {
            const SpectrumResult r =
                cell.optimize_A
                    ? minimize_over_A(cell.model, cell.D, cell.level)
                    : solve_spectrum(cell.model, cell.D, false, cell.A_fixed,
                                     cell.level);
            return r.eigenvalues[static_cast<size_t>(cell.level)];
        }
        case CellKind::oracle: {
            const OracleConfig config = make_default_config(cell.model, cell.level);
            return shoot_eigenvalue(cell.model, cell.level, config).energy;
        }
        case CellKind::reference: return std::nan("");
    }
    return std::nan("");
}

const char* kind_name(CellKind k) {
    switch (k) {
        case CellKind::variational: return "variational";
        case CellKind::oracle: return "oracle";
        case CellKind::reference: return "reference";
    }
    return "?";
}

int run_table(const JobConfig& cfg, std::ostream& out) {
    const TableLayout layout = table_layout(cfg.table_id.value());

    std::vector<FlatCell> flat;
    for (size_t ri = 0; ri < layout.rows.size(); ++ri) {
        const TableRow& row = layout.rows[ri];
        for (size_t ci = 0; ci < row.cells.size(); ++ci) {
            if (row.cells[ci]) flat.push_back({ri, ci, &*row.cells[ci]});
        }
    }

    std::vector<double> computed(flat.size(), std::nan(""));
    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= flat.size()) return;
            try {
                computed[i] = compute_cell(*flat[i].cell);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    const size_t n_threads =
        std::min(static_cast<size_t>(thread_cap()), std::max<size_t>(flat.size(), 1));
    std::vector<std::thread> pool;
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    switch (cfg.output_format) {
        case OutputFormat::text: {
            out << layout.title << "\n";
            size_t row_w = 3, col_w = 6;
            for (const TableRow& row : layout.rows) row_w = std::max(row_w, row.label.size());
            for (const std::string& c : layout.columns) col_w = std::max(col_w, c.size());
            char buf[256];
            std::snprintf(buf, sizeof buf, "%-*s  %-*s  %14s  %14s  %10s\n",
                          static_cast<int>(row_w), "row", static_cast<int>(col_w), "column",
                          "computed", "published", "|diff|");
            out << buf;
            for (const FlatCell& f : flat) {
                const TableCell& cell = *f.cell;
                const double v = computed[&f - flat.data()];
                const std::string comp =
                    cell.kind == CellKind::reference ? "-" : fixed_str(v, cell.decimals);
                std::string diff = "-";
                if (cell.kind != CellKind::reference) {
                    char d[32];
                    std::snprintf(d, sizeof d, "%.1e", std::fabs(v - cell.published));
                    diff = d;
                }
                std::snprintf(buf, sizeof buf, "%-*s  %-*s  %14s  %14s  %10s\n",
                              static_cast<int>(row_w), layout.rows[f.row].label.c_str(),
                              static_cast<int>(col_w), layout.columns[f.col].c_str(), comp.c_str(),
                              fixed_str(cell.published, cell.decimals).c_str(), diff.c_str());
                out << buf;
            }
            break;
        }
        case OutputFormat::csv: {
            out << "table,row,column,kind,computed,published,abs_diff\n";
            const std::string name = table_id_name(layout.id);
            for (const FlatCell& f : flat) {
                const TableCell& cell = *f.cell;
                const double v = computed[&f - flat.data()];
                out << name << "," << layout.rows[f.row].label << "," << layout.columns[f.col]
                    << "," << kind_name(cell.kind) << ",";
                if (cell.kind != CellKind::reference) out << g17(v);
                out << "," << g17(cell.published) << ",";
                if (cell.kind != CellKind::reference) out << g17(std::fabs(v - cell.published));
                out << "\n";
            }
            break;
        }
        case OutputFormat::json: {
            nlohmann::json cells = nlohmann::json::array();
            for (const FlatCell& f : flat) {
                const TableCell& cell = *f.cell;
                const double v = computed[&f - flat.data()];
                nlohmann::json jc;
                jc["row"] = layout.rows[f.row].label;
                jc["column"] = layout.columns[f.col];
                jc["kind"] = kind_name(cell.kind);
                jc["published"] = cell.published;
                if (cell.kind != CellKind::reference) {
                    jc["computed"] = v;
                    jc["abs_diff"] = std::fabs(v - cell.published);
                } else {
                    jc["computed"] = nullptr;
                    jc["abs_diff"] = nullptr;
                }
                cells.push_back(std::move(jc));
            }
            nlohmann::json j;
            j["table"] = table_id_name(layout.id);
            j["title"] = layout.title;
            j["cells"] = std::move(cells);
            out << j.dump(2) << "\n";
            break;
        }
    }
    return kExitOk;
}

// ---- CLI wiring -----------------------------------------------------------

struct CommonOpts {
    std::string a_str;
    int level = -1;
    std::string format = "text";
    CLI::Option* a_opt = nullptr;
    CLI::Option* opt_a_flag = nullptr;
    CLI::Option* level_opt = nullptr;
    CLI::Option* levels_opt = nullptr;
    CLI::Option* digits_opt = nullptr;
    CLI::Option* dim_opt = nullptr;
};

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw CLI::ValidationError("--format", "expected one of text, csv, json");
}

void apply_common(JobConfig& cfg, const CommonOpts& o) {
    cfg.output_format = parse_format(o.format);
    cfg.digits_given = o.digits_opt != nullptr && o.digits_opt->count() > 0;
    cfg.dim_given = o.dim_opt != nullptr && o.dim_opt->count() > 0;
    if (o.level_opt->count() > 0 && o.levels_opt->count() > 0)
        throw CLI::ValidationError("--level", "give either --level or --levels, not both");
    if (o.level_opt->count() > 0) {
        if (o.level < 0) throw CLI::ValidationError("--level", "must be >= 0");
        cfg.levels = o.level + 1;
    }
    if (o.a_opt->count() > 0) {
        if (o.a_str == "opt") {
            cfg.optimize_A = true;
        } else {
            try {
                size_t pos = 0;
                const double v = std::stod(o.a_str, &pos);
                if (pos != o.a_str.size()) throw std::invalid_argument(o.a_str);
                cfg.fixed_A = v;
                cfg.optimize_A = false;
            } catch (const std::exception&) {
                throw CLI::ValidationError("--A", "expected a number or 'opt'");
            }
        }
    }
    if (o.opt_a_flag->count() > 0) {
        if (cfg.fixed_A)
            throw CLI::ValidationError("--opt-A", "conflicts with a numeric --A value");
        cfg.optimize_A = true;
    }
}

std::shared_ptr<CommonOpts> add_model_options(CLI::App* sub, JobConfig& cfg) {
    auto o = std::make_shared<CommonOpts>();
    sub->add_option("--alpha", cfg.model.alpha, "spike exponent alpha in lambda/x^alpha")
        ->capture_default_str();
    sub->add_option("--lambda", cfg.model.lambda, "spike coupling lambda >= 0")
        ->capture_default_str();
    sub->add_option("--B", cfg.model.B, "oscillator coefficient B > 0")->capture_default_str();
    sub->add_option("--N", cfg.model.N, "spatial dimension")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
    sub->add_option("--l", cfg.model.l, "angular momentum quantum number (N >= 2)")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    o->dim_opt = sub->add_option("--dim", cfg.D, "basis dimension D")
                     ->capture_default_str()
                     ->check(CLI::PositiveNumber);
    o->a_opt = sub->add_option("--A", o->a_str, "auxiliary parameter: a number, or 'opt'");
    o->opt_a_flag = sub->add_flag("--opt-A", "minimize the bound over A (default)");
    o->level_opt = sub->add_option("--level", o->level, "target eigenvalue index (0-based)");
    o->levels_opt = sub->add_option("--levels", cfg.levels, "number of eigenvalues to report")
                        ->check(CLI::PositiveNumber);
    o->digits_opt = sub->add_option("--digits", cfg.digits, "requested converged digits")
                        ->check(CLI::Range(1, 12));
    sub->add_option("--format", o->format, "output format: text, csv, json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "csv", "json"}));
    return o;
}

}  // namespace

nlohmann::json spectrum_to_json(const SpectrumResult& r) {
    nlohmann::json j;
    j["eigenvalues"] = r.eigenvalues;
    j["optimal_A"] = r.optimal_A;
    j["D_used"] = r.D_used;
    j["converged_digits"] = r.converged_digits;
    j["evaluations"] = r.evaluations;
    j["boundary_A"] = r.boundary_A;
    j["not_converged"] = r.not_converged;
    return j;
}

SpectrumResult spectrum_from_json(const nlohmann::json& j) {
    SpectrumResult r;
    r.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    r.optimal_A = j.at("optimal_A").get<double>();
    r.D_used = j.at("D_used").get<int>();
    r.converged_digits = j.at("converged_digits").get<int>();
    r.evaluations = j.at("evaluations").get<long>();
    r.boundary_A = j.at("boundary_A").get<bool>();
    r.not_converged = j.at("not_converged").get<bool>();
    return r;
}

nlohmann::json oracle_to_json(const OracleResult& r) {
    nlohmann::json j;
    j["energy"] = r.energy;
    j["node_count"] = r.node_count;
    j["richardson_estimate"] = r.richardson_estimate;
    j["config_used"] = {{"x_min", r.config_used.x_min},
                        {"x_max", r.config_used.x_max},
                        {"steps", r.config_used.steps},
                        {"energy_bracket",
                         {r.config_used.energy_bracket.first, r.config_used.energy_bracket.second}},
                        {"tolerance", r.config_used.tolerance}};
    return j;
}

OracleResult oracle_from_json(const nlohmann::json& j) {
    OracleResult r;
    r.energy = j.at("energy").get<double>();
    r.node_count = j.at("node_count").get<int>();
    r.richardson_estimate = j.at("richardson_estimate").get<double>();
    const nlohmann::json& c = j.at("config_used");
    r.config_used.x_min = c.at("x_min").get<double>();
    r.config_used.x_max = c.at("x_max").get<double>();
    r.config_used.steps = c.at("steps").get<long>();
    r.config_used.energy_bracket = {c.at("energy_bracket").at(0).get<double>(),
                                    c.at("energy_bracket").at(1).get<double>()};
    r.config_used.tolerance = c.at("tolerance").get<double>();
    return r;
}

nlohmann::json report_to_json(const ConvergenceReport& r) {
    nlohmann::json j;
    j["perturbation_E"] = r.perturbation_E;
    j["sum_partial"] = r.sum_partial;
    j["sum_closed"] = r.sum_closed ? nlohmann::json(*r.sum_closed) : nlohmann::json(nullptr);
    j["lambda_of_gamma"] = r.lambda_of_gamma;
    j["regime"] = r.regime == Regime::fast ? "fast" : "slow";
    return j;
}

ConvergenceReport report_from_json(const nlohmann::json& j) {
    ConvergenceReport r;
    r.perturbation_E = j.at("perturbation_E").get<double>();
    r.sum_partial = j.at("sum_partial").get<double>();
    if (j.at("sum_closed").is_null())
        r.sum_closed = std::nullopt;
    else
        r.sum_closed = j.at("sum_closed").get<double>();
    r.lambda_of_gamma = j.at("lambda_of_gamma").get<double>();
    r.regime = j.at("regime").get<std::string>() == "fast" ? Regime::fast : Regime::slow;
    return r;
}

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    switch (cfg.subcommand) {
        case Subcommand::solve: return run_solve(cfg, out);
        case Subcommand::table: return run_table(cfg, out);
        case Subcommand::matrix: return run_matrix(cfg, out);
        case Subcommand::oracle: return run_oracle(cfg, out);
        case Subcommand::converge: return run_converge(cfg, out, err);
    }
    return kExitUsage;
}

int run_cli(int argc, char** argv) {
    JobConfig cfg;
    CLI::App app{"spiked-osc: variational bounds and a shooting oracle for the spiked "
                 "harmonic oscillator -d^2/dx^2 + B x^2 + lambda/x^alpha"};
    app.require_subcommand(1);

    CLI::App* solve = app.add_subcommand("solve", "eigenvalue bounds at fixed D or to a digit goal");
    auto solve_opts = add_model_options(solve, cfg);
    solve->callback([&cfg, solve_opts]() {
        cfg.subcommand = Subcommand::solve;
        apply_common(cfg, *solve_opts);
    });

    CLI::App* conv = app.add_subcommand("converge", "digit-goal run plus convergence analysis");
    auto conv_opts = add_model_options(conv, cfg);
    conv->callback([&cfg, conv_opts]() {
        cfg.subcommand = Subcommand::converge;
        apply_common(cfg, *conv_opts);
        if (cfg.fixed_A)
            throw CLI::ValidationError("--A", "converge always optimizes A; drop the fixed value");
    });

    CLI::App* mat = app.add_subcommand("matrix", "print the D x D Hamiltonian matrix");
    auto mat_opts = add_model_options(mat, cfg);
    mat->callback([&cfg, mat_opts]() {
        cfg.subcommand = Subcommand::matrix;
        apply_common(cfg, *mat_opts);
    });

    CLI::App* orc = app.add_subcommand("oracle", "Numerov shooting value for the target level");
    auto orc_opts = add_model_options(orc, cfg);
    orc->callback([&cfg, orc_opts]() {
        cfg.subcommand = Subcommand::oracle;
        apply_common(cfg, *orc_opts);
    });

    CLI::App* tab = app.add_subcommand("table", "reproduce a published table");
    auto tab_fmt = std::make_shared<std::string>("text");
    auto tab_id = std::make_shared<std::string>();
    tab->add_option("--table", *tab_id, "table to reproduce: I, II, III, IV, V, VI")->required();
    tab->add_option("--format", *tab_fmt, "output format: text, csv, json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "csv", "json"}));
    tab->callback([&cfg, tab_fmt, tab_id]() {
        cfg.subcommand = Subcommand::table;
        cfg.output_format = parse_format(*tab_fmt);
        try {
            cfg.table_id = parse_table_id(*tab_id);
        } catch (const DomainError& e) {
            throw CLI::ValidationError("--table", e.what());
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        return run_job(cfg, std::cout, std::cerr);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConverge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConverge;
    }
}

}  // namespace sho
