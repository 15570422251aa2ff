#include "curvlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "curvlab/geometry.hpp"
#include "curvlab/numerics.hpp"
#include "curvlab/report.hpp"
#include "curvlab/spectra.hpp"
#include "curvlab/uncertainty.hpp"
#include "curvlab/verification.hpp"

namespace curvlab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

const std::map<std::string, OutputFormat> kFormats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
const std::map<std::string, UnitMode> kUnits{{"natural", UnitMode::natural}, {"si", UnitMode::si}};

const char* command_name(Command c)
{
    switch (c) {
    case Command::eigen: return "eigen";
    case Command::bound: return "bound";
    case Command::volume: return "volume";
    case Command::verify: return "verify";
    case Command::trial: return "trial";
    case Command::schwarzschild: return "schwarzschild";
    case Command::sweep: return "sweep";
    }
    return "unknown";
}

// Accepts plain numbers and multiples/fractions of pi: "pi", "2pi", "0.9*pi", "pi/2", "-pi/4".
std::string expand_pi(const std::string& text)
{
    const auto at = text.find("pi");
    if (at == std::string::npos)
        return text;
    std::string coefficient = text.substr(0, at);
    if (!coefficient.empty() && coefficient.back() == '*')
        coefficient.pop_back();
    double value = kPi;
    if (coefficient == "-")
        value = -kPi;
    else if (!coefficient.empty())
        value *= std::stod(coefficient);
    const std::string rest = text.substr(at + 2);
    if (!rest.empty()) {
        if (rest.front() != '/' || rest.size() == 1)
            throw CLI::ValidationError("cannot parse number '" + text + "'");
        value /= std::stod(rest.substr(1));
    }
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

const auto kPiNumber = CLI::Validator([](std::string& s) {
    try {
        s = expand_pi(s);
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("cannot parse number '" + s + "'");
    }
    return std::string();
}, "NUMBER|pi expression", "pi");

nlohmann::json config_json(const RunConfig& c)
{
    nlohmann::json j;
    j["command"] = command_name(c.command);
    auto numbers = nlohmann::json::array();
    for (const double K : c.curvatures)
        numbers.push_back(json_number(K));
    j["K"] = numbers;
    auto radii = nlohmann::json::array();
    for (const double r : c.radii)
        radii.push_back(json_number(r));
    j["r0_list"] = radii;
    j["r0"] = c.r0 ? json_number(*c.r0) : nlohmann::json(nullptr);
    j["r"] = c.r ? json_number(*c.r) : nlohmann::json(nullptr);
    j["r_min"] = json_number(c.r_min);
    j["r_max"] = json_number(c.r_max);
    j["steps"] = c.steps;
    j["n"] = c.n;
    j["n_max"] = c.n_max;
    j["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
    j["trials"] = c.trials;
    j["degree"] = c.degree;
    j["r_s"] = json_number(c.r_s);
    j["tolerance"] = json_number(c.tolerance);
    j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
    j["units"] = c.units == UnitMode::natural ? "natural" : "si";
    return j;
}

Report make_report(const RunConfig& config)
{
    Report report;
    report.metadata["tool"] = kToolName;
    report.metadata["version"] = kToolVersion;
    report.metadata["config"] = config_json(config);
    return report;
}

PhysicalConstants constants_for(const RunConfig& config)
{
    return config.units == UnitMode::si ? PhysicalConstants::codata_si() : PhysicalConstants::natural();
}

double single_curvature(const RunConfig& config)
{
    if (config.curvatures.size() != 1)
        throw DomainError("exactly one curvature value is required");
    return config.curvatures.front();
}

double required(const std::optional<double>& value, const char* name)
{
    if (!value)
        throw DomainError(std::string("missing required value ") + name);
    return *value;
}

struct Outcome {
    Report report;
    int code = kSuccess;
};

std::vector<Cell> eigen_row(const GeodesicBall& ball, int n, double tolerance, bool& ok)
{
    const double exact = eigenvalue(ball, n);
    const auto shot = solve_eigenvalue_numeric(ball, n, tolerance);
    const double discrepancy = std::abs(shot.lambda_hat - exact) / std::abs(exact);
    const double norm = weighted_norm_squared(eigenfunction(ball, n));
    ok = ok && discrepancy <= tolerance;
    return {ball.curvature(),
            ball.radius(),
            std::int64_t{n},
            exact,
            shot.lambda_hat,
            discrepancy,
            norm,
            shot.boundary_residual,
            std::int64_t{shot.iterations},
            std::int64_t{shot.interior_zeros}};
}

const std::vector<std::string> kEigenColumns{"K",
                                             "r0",
                                             "n",
                                             "lambda",
                                             "lambda_numeric",
                                             "rel_discrepancy",
                                             "norm_integral",
                                             "boundary_residual",
                                             "iterations",
                                             "interior_zeros"};

Outcome cmd_eigen(const RunConfig& config)
{
    const GeodesicBall ball(CurvatureSpace(single_curvature(config)), required(config.r0, "--r0"));
    Outcome outcome{make_report(config)};
    outcome.report.columns = kEigenColumns;
    bool ok = true;
    outcome.report.rows.push_back(eigen_row(ball, config.n, config.tolerance, ok));
    outcome.code = ok ? kSuccess : kNumericalFailure;
    return outcome;
}

Outcome cmd_sweep(const RunConfig& config)
{
    if (config.n_max < 1)
        throw DomainError("--n-max must be >= 1");
    const std::vector<double> curvatures =
        config.curvatures.empty() ? std::vector<double>(std::begin(kGridCurvatures), std::end(kGridCurvatures))
                                  : config.curvatures;
    std::vector<GeodesicBall> balls;
    for (const double K : curvatures) {
        const CurvatureSpace space(K);
        for (const double r0 : config.radii.empty() ? grid_radii(K) : config.radii)
            balls.emplace_back(space, r0);
    }
    Outcome outcome{make_report(config)};
    outcome.report.columns = kEigenColumns;
    bool ok = true;
    for (const auto& ball : balls)
        for (int n = 1; n <= config.n_max; ++n)
            outcome.report.rows.push_back(eigen_row(ball, n, config.tolerance, ok));
    outcome.code = ok ? kSuccess : kNumericalFailure;
    return outcome;
}

Outcome cmd_bound(const RunConfig& config)
{
    const double hbar = constants_for(config).hbar;
    const BoundTable table = config.r ? bound_table(config.curvatures, *config.r, *config.r, 1, hbar)
                                      : bound_table(config.curvatures, config.r_min, config.r_max, config.steps, hbar);
    Outcome outcome{make_report(config)};
    auto& meta = outcome.report.metadata;
    meta["hbar"] = json_number(table.hbar);
    auto curves = nlohmann::json::array();
    for (const auto& curve : table.curves) {
        nlohmann::json c;
        c["K"] = json_number(curve.K);
        c["radius_limit"] = curve.radius_limit ? json_number(*curve.radius_limit) : nlohmann::json(nullptr);
        c["asymptote"] = curve.asymptote ? json_number(*curve.asymptote) : nlohmann::json(nullptr);
        c["equator"] = curve.equator ? json_number(*curve.equator) : nlohmann::json(nullptr);
        c["rows"] = curve.rows;
        curves.push_back(std::move(c));
    }
    meta["curves"] = std::move(curves);
    outcome.report.columns = {"K", "r", "sigma_p_min", "product"};
    for (const auto& row : table.rows)
        outcome.report.rows.push_back({row.K, row.r, row.sigma_p_min, row.product});
    return outcome;
}

Outcome cmd_volume(const RunConfig& config)
{
    const CurvatureSpace space(single_curvature(config));
    const double r = required(config.r, "--r");
    const double closed = ball_volume(space, r);
    const double quadrature =
        4.0 * kPi * integrate([&](double t) { return volume_weight(space, t); }, 0.0, r, {256, 16});
    Outcome outcome{make_report(config)};
    outcome.report.columns = {"K",           "r", "metric_factor", "volume_weight", "ball_volume", "ball_volume_quadrature",
                              "rel_discrepancy"};
    const double discrepancy = closed == 0.0 ? std::abs(quadrature) : std::abs(quadrature - closed) / closed;
    outcome.report.rows.push_back({space.curvature(), r, metric_factor(space, r), volume_weight(space, r), closed,
                                   quadrature, discrepancy});
    return outcome;
}

Outcome cmd_verify(const RunConfig& config)
{
    if (!(config.tolerance > 0.0))
        throw DomainError("--tolerance must be positive");
    if (config.trials < 0)
        throw DomainError("--trials must be non-negative");
    VerifyOptions options;
    options.tolerance = config.tolerance;
    options.seed = config.seed.value_or(42);
    options.trials = config.trials;
    const auto checks = run_verification(options);
    Outcome outcome{make_report(config)};
    outcome.report.columns = {"check", "passed", "worst", "threshold", "detail"};
    bool all = true;
    for (const auto& check : checks) {
        all = all && check.passed;
        outcome.report.rows.push_back({check.name, check.passed, check.worst, check.threshold, check.detail});
    }
    outcome.report.metadata["all_passed"] = all;
    outcome.code = all ? kSuccess : kNumericalFailure;
    return outcome;
}

Outcome cmd_trial(const RunConfig& config)
{
    if (!config.seed)
        throw DomainError("trial requires --seed");
    const GeodesicBall ball(CurvatureSpace(single_curvature(config)), required(config.r0, "--r0"));
    const auto trial = random_trial_function(ball, *config.seed, config.degree);
    const auto psi = trial.as_radial();
    const double hbar = constants_for(config).hbar;
    const double rq = rayleigh_quotient(psi);
    const double lambda1 = eigenvalue(ball, 1);
    Outcome outcome{make_report(config)};
    auto coefficients = nlohmann::json::array();
    for (const double c : trial.coefficients())
        coefficients.push_back(json_number(c));
    outcome.report.metadata["coefficients"] = std::move(coefficients);
    outcome.report.columns = {"K",    "r0",      "seed",       "degree",  "rayleigh_quotient",
                              "lambda1", "ratio", "sigma_p", "sigma_p_min"};
    outcome.report.rows.push_back({ball.curvature(), ball.radius(), static_cast<std::int64_t>(*config.seed),
                                   std::int64_t{config.degree}, rq, lambda1, rq / lambda1,
                                   momentum_stddev(psi, hbar), momentum_lower_bound(ball, hbar)});
    return outcome;
}

Outcome cmd_schwarzschild(const RunConfig& config)
{
    const PhysicalConstants constants = constants_for(config);
    const double r_s = config.r_s;
    const double closed = schwarzschild_geodesic_radius(r_s);
    const double tol = std::min(config.tolerance, 1e-6);
    const double numeric = schwarzschild_integral_numeric(r_s, tol);
    Outcome outcome{make_report(config)};
    outcome.report.metadata["hbar"] = json_number(constants.hbar);
    outcome.report.metadata["G"] = json_number(constants.G);
    outcome.report.metadata["c"] = json_number(constants.c);
    outcome.report.columns = {"planck_length",   "min_schwarzschild_radius", "r_s", "sigma_p_min",
                              "geodesic_radius", "geodesic_radius_numeric",  "rel_discrepancy"};
    const double discrepancy = std::abs(numeric - closed) / closed;
    outcome.report.rows.push_back({planck_length(constants), min_schwarzschild_radius(constants), r_s,
                                   schwarzschild_momentum_bound(r_s, constants.hbar), closed, numeric, discrepancy});
    outcome.code = discrepancy <= 1e-6 ? kSuccess : kNumericalFailure;
    return outcome;
}

Outcome dispatch(const RunConfig& config)
{
    switch (config.command) {
    case Command::eigen: return cmd_eigen(config);
    case Command::bound: return cmd_bound(config);
    case Command::volume: return cmd_volume(config);
    case Command::verify: return cmd_verify(config);
    case Command::trial: return cmd_trial(config);
    case Command::schwarzschild: return cmd_schwarzschild(config);
    case Command::sweep: return cmd_sweep(config);
    }
    throw std::logic_error("unhandled command");
}

void add_output_options(CLI::App& sub, RunConfig& config)
{
    sub.add_option("--format", config.format, "Output format")->transform(CLI::CheckedTransformer(kFormats));
    sub.add_option("-o,--output", config.output_path, "Write to this file instead of standard output");
}

void add_unit_option(CLI::App& sub, RunConfig& config)
{
    sub.add_option("--units", config.units, "natural (hbar = G = c = 1) or si (CODATA 2018)")
        ->transform(CLI::CheckedTransformer(kUnits));
}

} // namespace

std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::ostream& help_out)
{
    RunConfig config;
    CLI::App app{"Dirichlet spectra and momentum-uncertainty bounds on constant-curvature 3-manifolds", kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto* eigen = app.add_subcommand("eigen", "Closed-form and shooting eigenvalue for one (K, r0, n)");
    eigen->add_option("--K", config.curvatures, "Sectional curvature")->required()->expected(1)->transform(kPiNumber);
    eigen->add_option("--r0", config.r0, "Ball radius")->required()->transform(kPiNumber);
    eigen->add_option("--n", config.n, "Mode index")->check(CLI::PositiveNumber);
    eigen->add_option("--tolerance", config.tolerance, "Relative eigenvalue tolerance");
    add_output_options(*eigen, config);

    auto* sweep = app.add_subcommand("sweep", "Eigenvalue oracle comparison over a (K, r0, n) grid");
    sweep->add_option("--K", config.curvatures, "Curvatures (comma separated)")->delimiter(',')->transform(kPiNumber);
    sweep->add_option("--r0", config.radii, "Radii (comma separated); default five per K")
        ->delimiter(',')
        ->transform(kPiNumber);
    sweep->add_option("--n-max", config.n_max, "Highest mode index");
    sweep->add_option("--tolerance", config.tolerance, "Relative eigenvalue tolerance");
    add_output_options(*sweep, config);

    auto* bound = app.add_subcommand("bound", "Momentum lower bound versus geodesic radius");
    bound->add_option("--K", config.curvatures, "Curvatures (comma separated)")
        ->required()
        ->delimiter(',')
        ->transform(kPiNumber);
    auto* single = bound->add_option("--r", config.r, "Single radius")->transform(kPiNumber);
    bound->add_option("--r-min", config.r_min, "Smallest radius")->transform(kPiNumber)->excludes(single);
    bound->add_option("--r-max", config.r_max, "Largest radius")->transform(kPiNumber)->excludes(single);
    bound->add_option("--steps", config.steps, "Number of radii")->excludes(single);
    add_unit_option(*bound, config);
    add_output_options(*bound, config);

    auto* volume = app.add_subcommand("volume", "Metric factor, volume weight and ball volume");
    volume->add_option("--K", config.curvatures, "Sectional curvature")->required()->expected(1)->transform(kPiNumber);
    volume->add_option("--r", config.r, "Geodesic radius")->required()->transform(kPiNumber);
    add_output_options(*volume, config);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--tolerance", config.tolerance, "Relative tolerance for oracle checks");
    verify->add_option("--seed", config.seed, "Base seed for trial states");
    verify->add_option("--trials", config.trials, "Trial states per configuration");
    add_output_options(*verify, config);

    auto* trial = app.add_subcommand("trial", "Rayleigh quotient of a seeded random trial state");
    trial->add_option("--K", config.curvatures, "Sectional curvature")->required()->expected(1)->transform(kPiNumber);
    trial->add_option("--r0", config.r0, "Ball radius")->required()->transform(kPiNumber);
    trial->add_option("--seed", config.seed, "Seed")->required();
    trial->add_option("--degree", config.degree, "Polynomial degree")->check(CLI::PositiveNumber);
    add_unit_option(*trial, config);
    add_output_options(*trial, config);

    auto* schwarzschild = app.add_subcommand("schwarzschild", "Planck length and the Schwarzschild radius bound");
    schwarzschild->add_option("--rs", config.r_s, "Schwarzschild radius")->transform(kPiNumber);
    schwarzschild->add_option("--tolerance", config.tolerance, "Relative quadrature tolerance (capped at 1e-6)");
    add_unit_option(*schwarzschild, config);
    add_output_options(*schwarzschild, config);

    const std::pair<CLI::App*, Command> commands[] = {
        {eigen, Command::eigen},   {sweep, Command::sweep}, {bound, Command::bound},
        {volume, Command::volume}, {verify, Command::verify}, {trial, Command::trial},
        {schwarzschild, Command::schwarzschild},
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        help_out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        help_out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::CallForVersion&) {
        help_out << kToolVersion << '\n';
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(e.what());
    }
    for (const auto& [sub, command] : commands)
        if (sub->parsed())
            config.command = command;
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    Outcome outcome;
    try {
        outcome = dispatch(config);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ConvergenceError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (config.output_path) {
        file.open(*config.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << *config.output_path << " for writing\n";
            return kUsageError;
        }
        sink = &file;
    }
    if (config.format == OutputFormat::json)
        write_json(outcome.report, *sink);
    else
        write_csv(outcome.report, *sink);
    sink->flush();
    if (outcome.code != kSuccess)
        err << "check failed: see report\n";
    return outcome.code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::optional<RunConfig> config;
    try {
        config = parse_arguments(args, out);
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }
    if (!config)
        return kSuccess;
    return run(*config, out, err);
}

} // namespace curvlab::cli
