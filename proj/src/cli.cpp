#include "iondec/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "iondec/criterion.hpp"
#include "iondec/decoherence.hpp"
#include "iondec/density_matrix.hpp"
#include "iondec/inequivalence.hpp"
#include "iondec/matter_db.hpp"

#ifndef IONDEC_BUNDLED_DATA
#define IONDEC_BUNDLED_DATA "data/salts.csv"
#endif

namespace iondec::cli {

namespace {

using nlohmann::json;

enum class Format { Human, Csv, Json };

class DataFileError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string data;
    Format format = Format::Human;
    std::string output;
    double temperature = kDefaultTemperatureK;
    double n_ions = kDefaultIonCount;

    // table
    std::vector<std::string> salts{"all"};
    // shared single-salt selector
    std::string salt = "NaCl";
    // factor
    double dx = 0.0;
    double t = 0.0;
    std::optional<double> lambda;
    std::optional<double> rate;
    // sim
    double separation_lambda = 100.0;
    std::optional<double> width_lambda;
    std::size_t points = 256;
    double extent_widths = 40.0;
    std::size_t steps = 100;
    double t_end_rate = 3.0;
    double phase = 0.0;
    // xray
    double tau_x = kXRayPeriodSeconds;
    double lambda_x = kXRayWavelengthAngstrom * 1e-10;
    // bcs
    std::optional<double> uniform_u;
    double gap = 0.2;
    double half_band = 1.0;
    std::vector<std::size_t> modes{100, 1000, 10000};
    // classify
    std::optional<double> tau1;
    std::optional<double> tau2;
    double tau_dyn = 0.0;
    bool coherent_phase = false;
    double threshold = kDefaultThresholdRatio;
};

class Database {
public:
    explicit Database(const std::string& flag) : path_(resolve_data_file(flag)) {
        try {
            records_ = load_database_file(path_);
        } catch (const Error& e) {
            throw DataFileError(path_.string() + ": " + e.what());
        }
    }

    const SaltRecord& get(const std::string& name) const {
        if (const auto* r = find_salt(records_, name)) return *r;
        throw ValidationError(name, "salt", "unknown salt; valid names: " + names());
    }

    // Selected records in the published table order, then any others in file order.
    std::vector<const SaltRecord*> select(const std::vector<std::string>& wanted) const {
        std::set<std::string> chosen;
        const bool all = std::find(wanted.begin(), wanted.end(), "all") != wanted.end();
        for (const auto& w : wanted) {
            if (w == "all") continue;
            get(w);
            chosen.insert(w);
        }
        std::vector<const SaltRecord*> out;
        auto take = [&](const SaltRecord& r) {
            if ((all || chosen.count(r.name)) &&
                std::find(out.begin(), out.end(), &r) == out.end()) {
                out.push_back(&r);
            }
        };
        for (const auto& name : table1_order()) {
            if (const auto* r = find_salt(records_, name)) take(*r);
        }
        for (const auto& r : records_) take(r);
        return out;
    }

    std::string names() const {
        std::string s;
        for (const auto& r : records_) s += (s.empty() ? "" : ", ") + r.name;
        return s;
    }

private:
    std::filesystem::path path_;
    std::vector<SaltRecord> records_;
};

Quantity temperature_of(const Options& o) { return {o.temperature, Dim::Temperature}; }

// Fixed-width columns for the human format.
void human_row(std::ostream& os, const std::vector<std::string>& cells, std::size_t width = 16) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(i == 0 ? 8 : width)) << cells[i];
    }
    os << '\n';
}

void csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
}

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

void run_table(const Options& o, std::ostream& os) {
    const Database db(o.data);
    const auto selected = db.select(o.salts);
    struct Row {
        std::string name;
        double t1;
        double t2;
    };
    std::vector<Row> rows;
    for (const auto* r : selected) {
        const auto ctx = make_context(*r, temperature_of(o), o.n_ions);
        rows.push_back({r->name, tau1(ctx).si(), tau2(ctx).si()});
    }
    switch (o.format) {
        case Format::Human:
            human_row(os, {"salt", "tau1/1e-40 s", "tau2/1e-38 s"});
            for (const auto& r : rows) {
                human_row(os, {r.name, format_fixed(r.t1 / 1e-40, 1), format_fixed(r.t2 / 1e-38, 1)});
            }
            break;
        case Format::Csv:
            csv_row(os, {"salt", "tau1_1e-40s", "tau2_1e-38s", "tau1_s", "tau2_s"});
            for (const auto& r : rows) {
                csv_row(os, {r.name, format_fixed(r.t1 / 1e-40, 1), format_fixed(r.t2 / 1e-38, 1),
                             format_shortest(r.t1), format_shortest(r.t2)});
            }
            break;
        case Format::Json: {
            json j = {{"temperature_K", o.temperature}, {"n_ions", o.n_ions}, {"rows", json::array()}};
            for (const auto& r : rows) {
                j["rows"].push_back({{"salt", r.name},
                                     {"tau1_1e-40s", std::round(r.t1 / 1e-40 * 10.0) / 10.0},
                                     {"tau2_1e-38s", std::round(r.t2 / 1e-38 * 10.0) / 10.0},
                                     {"tau1_s", r.t1},
                                     {"tau2_s", r.t2}});
            }
            emit_json(os, j);
            break;
        }
    }
}

struct ScatteringInputs {
    Quantity lambda;
    Quantity rate;
};

// Explicit --lambda/--rate win; missing ones come from the selected salt.
ScatteringInputs scattering_inputs(const Options& o) {
    if (o.lambda && o.rate) return {{*o.lambda, Dim::Length}, {*o.rate, Dim::Rate}};
    const Database db(o.data);
    const auto ctx = make_context(db.get(o.salt), temperature_of(o), o.n_ions);
    return {o.lambda ? Quantity(*o.lambda, Dim::Length) : de_broglie_wavelength(ctx),
            o.rate ? Quantity(*o.rate, Dim::Rate) : scattering_rate(ctx)};
}

void run_factor(const Options& o, std::ostream& os) {
    const auto in = scattering_inputs(o);
    const double f = decoherence_factor({o.dx, Dim::Length}, {o.t, Dim::Time}, in.lambda, in.rate);
    const std::vector<std::string> cells = {format_shortest(o.dx), format_shortest(o.t),
                                            format_shortest(in.lambda.si()), format_shortest(in.rate.si()),
                                            format_shortest(f)};
    switch (o.format) {
        case Format::Human:
            os << "dx = " << cells[0] << " m, t = " << cells[1] << " s, lambda = " << cells[2]
               << " m, Lambda = " << cells[3] << " 1/s\n";
            os << "f = " << cells[4] << '\n';
            break;
        case Format::Csv:
            csv_row(os, {"dx_m", "t_s", "lambda_m", "rate_per_s", "factor"});
            csv_row(os, cells);
            break;
        case Format::Json:
            emit_json(os, {{"dx_m", o.dx}, {"t_s", o.t}, {"lambda_m", in.lambda.si()},
                           {"rate_per_s", in.rate.si()}, {"factor", f}});
            break;
    }
}

void run_sim(const Options& o, std::ostream& os) {
    const auto in = scattering_inputs(o);
    if (!(o.separation_lambda >= 0)) throw ConfigError("--separation-lambda must be >= 0");
    if (o.steps == 0) throw ConfigError("--steps must be >= 1");
    if (!(o.t_end_rate > 0)) throw ConfigError("--t-end-rate must be positive");
    const Quantity separation = in.lambda * o.separation_lambda;
    const double width_lambda =
        o.width_lambda ? *o.width_lambda : (o.separation_lambda > 0 ? o.separation_lambda / 20.0 : 1.0);
    const SuperpositionSpec spec{separation, in.lambda * width_lambda, o.phase};
    const GridSpec grid{o.points, o.extent_widths};
    const Quantity dt = (o.t_end_rate / in.rate) / static_cast<double>(o.steps);

    const auto samples = evolve(prepare_superposition(spec, grid), in.rate, in.lambda, dt, o.steps, separation);
    switch (o.format) {
        case Format::Human:
            human_row(os, {"time_s", "coherence_ratio", "trace", "min_eigenvalue"}, 24);
            for (const auto& s : samples) {
                human_row(os, {format_shortest(s.time), format_shortest(s.coherence_ratio),
                               format_shortest(s.trace), format_shortest(s.min_eigenvalue)},
                          24);
            }
            break;
        case Format::Csv:
            csv_row(os, {"time_s", "coherence_ratio", "trace", "min_eigenvalue"});
            for (const auto& s : samples) {
                csv_row(os, {format_shortest(s.time), format_shortest(s.coherence_ratio),
                             format_shortest(s.trace), format_shortest(s.min_eigenvalue)});
            }
            break;
        case Format::Json: {
            json rows = json::array();
            for (const auto& s : samples) {
                rows.push_back({{"time_s", s.time}, {"coherence_ratio", s.coherence_ratio},
                                {"trace", s.trace}, {"min_eigenvalue", s.min_eigenvalue}});
            }
            emit_json(os, {{"lambda_m", in.lambda.si()}, {"rate_per_s", in.rate.si()},
                           {"separation_m", separation.si()}, {"samples", rows}});
            break;
        }
    }
}

void run_xray(const Options& o, std::ostream& os) {
    const Database db(o.data);
    const auto& salt = db.get(o.salt);
    const auto ctx = make_context(salt, temperature_of(o), o.n_ions);
    const auto check = xray_consistency(ctx, salt, {o.tau_x, Dim::Time}, {o.lambda_x, Dim::Length});
    const double t1 = tau1(ctx).si();
    switch (o.format) {
        case Format::Human:
            os << "salt             " << salt.name << '\n'
               << "tau1             " << format_shortest(t1) << " s\n"
               << "tau_X            " << format_shortest(check.tau_X.si()) << " s\n"
               << "implied n_X      " << format_shortest(check.implied_nX.si()) << " kg/m^3\n"
               << "implied spacing  " << format_shortest(check.implied_spacing.si()) << " m ("
               << format_shortest(to_angstrom(check.implied_spacing)) << " A)\n";
            break;
        case Format::Csv:
            csv_row(os, {"salt", "tau1_s", "tau_x_s", "lambda_x_m", "implied_nx_kg_m3", "implied_spacing_m"});
            csv_row(os, {salt.name, format_shortest(t1), format_shortest(check.tau_X.si()),
                         format_shortest(check.lambda_X.si()), format_shortest(check.implied_nX.si()),
                         format_shortest(check.implied_spacing.si())});
            break;
        case Format::Json: {
            json j = to_json(check);
            j["salt"] = salt.name;
            j["tau1_s"] = t1;
            emit_json(os, j);
            break;
        }
    }
}

void run_bcs(const Options& o, std::ostream& os) {
    if (o.modes.empty()) throw ConfigError("--modes needs at least one value");
    ProfileFamily family;
    if (o.uniform_u) {
        const double u = *o.uniform_u;
        family = [u](std::size_t k) { return BogoliubovProfile::uniform(u, k); };
    } else {
        const double gap = o.gap, band = o.half_band;
        family = [gap, band](std::size_t k) { return BogoliubovProfile::bcs_like(k, gap, band); };
    }
    struct Row {
        std::size_t k;
        double overlap;
        double log_overlap;
    };
    std::vector<Row> rows;
    for (std::size_t k : o.modes) {
        const auto profile = family(k);
        rows.push_back({k, vacuum_overlap(profile), log_vacuum_overlap(profile)});
    }
    std::optional<double> slope;
    if (std::set<std::size_t>(o.modes.begin(), o.modes.end()).size() >= 3) {
        slope = overlap_decay_rate(family, o.modes);
    }
    switch (o.format) {
        case Format::Human:
            human_row(os, {"K", "overlap", "ln_overlap"}, 24);
            for (const auto& r : rows) {
                human_row(os, {std::to_string(r.k), format_shortest(r.overlap), format_shortest(r.log_overlap)}, 24);
            }
            if (slope) os << "d ln(overlap)/dK = " << format_shortest(*slope) << '\n';
            break;
        case Format::Csv:
            csv_row(os, {"K", "overlap", "ln_overlap"});
            for (const auto& r : rows) {
                csv_row(os, {std::to_string(r.k), format_shortest(r.overlap), format_shortest(r.log_overlap)});
            }
            break;
        case Format::Json: {
            json j = {{"profile", o.uniform_u ? "uniform" : "bcs_like"}, {"rows", json::array()}};
            if (o.uniform_u) {
                j["u"] = *o.uniform_u;
            } else {
                j["gap"] = o.gap;
                j["half_band"] = o.half_band;
            }
            for (const auto& r : rows) {
                j["rows"].push_back({{"K", r.k}, {"overlap", r.overlap}, {"ln_overlap", r.log_overlap}});
            }
            if (slope) j["slope"] = *slope;
            emit_json(os, j);
            break;
        }
    }
}

void run_classify(const Options& o, std::ostream& os) {
    std::optional<Quantity> t1, t2;
    if (o.tau1) t1 = Quantity(*o.tau1, Dim::Time);
    if (o.tau2) t2 = Quantity(*o.tau2, Dim::Time);
    if (!t1 || !t2) {
        const Database db(o.data);
        const auto ctx = make_context(db.get(o.salt), temperature_of(o), o.n_ions);
        if (!t1) t1 = tau1(ctx);
        if (!t2) t2 = tau2(ctx);
    }
    const auto report = classify(*t1, *t2, {o.tau_dyn, Dim::Time}, o.coherent_phase, o.threshold);
    switch (o.format) {
        case Format::Human:
            os << "tau1             " << format_shortest(report.tau1.si()) << " s\n"
               << "tau2             " << format_shortest(report.tau2.si()) << " s\n"
               << "tau_dyn          " << format_shortest(report.tau_dyn.si()) << " s\n"
               << "tau_dyn/tau_dec  " << format_shortest(report.ratio_dec) << '\n'
               << "threshold        " << format_shortest(report.threshold_ratio) << '\n'
               << "coherent phase   " << (report.quantum_coherent_phase_observed ? "observed" : "not observed")
               << '\n'
               << "verdict          " << to_string(report.verdict) << '\n';
            break;
        case Format::Csv:
            csv_row(os, {"tau1_s", "tau2_s", "tau_dyn_s", "coherent_phase_observed", "threshold_ratio",
                         "ratio_tau1", "ratio_tau2", "ratio_dec", "verdict"});
            csv_row(os, {format_shortest(report.tau1.si()), format_shortest(report.tau2.si()),
                         format_shortest(report.tau_dyn.si()), report.quantum_coherent_phase_observed ? "true" : "false",
                         format_shortest(report.threshold_ratio), format_shortest(report.ratio_tau1),
                         format_shortest(report.ratio_tau2), format_shortest(report.ratio_dec),
                         to_string(report.verdict)});
            break;
        case Format::Json:
            emit_json(os, to_json(report));
            break;
    }
}

void write_output(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot write output file '" + path + "'");
        f << content;
        if (!f) throw ConfigError("cannot write output file '" + path + "'");
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

std::filesystem::path resolve_data_file(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* dir = std::getenv(kDataDirEnv); dir && *dir) {
        return std::filesystem::path(dir) / kDataFileName;
    }
    return IONDEC_BUNDLED_DATA;
}

std::string format_shortest(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, ptr};
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    return {buf, ptr};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Decoherence times of ions in saturated salt solutions", "iondec"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    const std::map<std::string, Format> formats = {
        {"human", Format::Human}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--data", o.data, "Salt data file (overrides $" + std::string(kDataDirEnv) + ")");
    app.add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats).description(""))
        ->option_text("human|csv|json");
    app.add_option("-o,--output", o.output, "Write output to this file instead of stdout");
    app.add_option("--temperature", o.temperature, "Temperature in K")->check(CLI::PositiveNumber);
    app.add_option("--n-ions", o.n_ions, "Number of ions N")->check(CLI::Range(1.0, 1e300));

    auto* table = app.add_subcommand("table", "Decoherence times tau1, tau2 per salt");
    table->add_option("--salts", o.salts, "Salt names or 'all'")->delimiter(',');

    auto* factor = app.add_subcommand("factor", "Decoherence factor f(dx, t)");
    factor->add_option("--dx", o.dx, "Separation |x - x'| in m")->required();
    factor->add_option("--t", o.t, "Time in s")->required();
    factor->add_option("--lambda", o.lambda, "de Broglie wavelength in m (default: from --salt)");
    factor->add_option("--rate", o.rate, "Scattering rate in 1/s (default: from --salt)");
    factor->add_option("--salt", o.salt, "Salt supplying lambda and rate");

    auto* sim = app.add_subcommand("sim", "Evolve a two-packet reduced density matrix");
    sim->add_option("--salt", o.salt, "Salt supplying lambda and rate");
    sim->add_option("--lambda", o.lambda, "de Broglie wavelength in m");
    sim->add_option("--rate", o.rate, "Scattering rate in 1/s");
    sim->add_option("--separation-lambda", o.separation_lambda, "Packet separation in units of lambda");
    sim->add_option("--width-lambda", o.width_lambda, "Packet width in units of lambda (default separation/20)");
    sim->add_option("--points", o.points, "Grid points");
    sim->add_option("--extent-widths", o.extent_widths, "Grid length in packet widths");
    sim->add_option("--steps", o.steps, "Number of time steps");
    sim->add_option("--t-end-rate", o.t_end_rate, "End time in units of 1/Lambda");
    sim->add_option("--phase", o.phase, "Relative phase of the second packet (rad)");

    auto* xray = app.add_subcommand("xray", "X-ray diffraction consistency check");
    xray->add_option("--salt", o.salt, "Salt");
    xray->add_option("--tau-x", o.tau_x, "X-ray oscillation time in s");
    xray->add_option("--lambda-x", o.lambda_x, "X-ray wavelength in m");

    auto* bcs = app.add_subcommand("bcs", "Normal/BCS-like vacuum overlap versus mode count");
    bcs->add_option("--uniform-u", o.uniform_u, "Use U_k = u for every mode");
    bcs->add_option("--gap", o.gap, "Gap of the BCS-like profile");
    bcs->add_option("--band", o.half_band, "Half-width of the BCS-like band");
    bcs->add_option("--modes", o.modes, "Mode counts K")->delimiter(',');

    auto* cls = app.add_subcommand("classify", "Apply the decoherence criterion");
    cls->add_option("--salt", o.salt, "Salt supplying tau1, tau2");
    cls->add_option("--tau1", o.tau1, "tau1 in s (overrides --salt)");
    cls->add_option("--tau2", o.tau2, "tau2 in s (overrides --salt)");
    cls->add_option("--tau-dyn", o.tau_dyn, "Characteristic dynamics/observation time in s")->required();
    cls->add_flag("--coherent-phase", o.coherent_phase, "An ordered quantum phase (e.g. a crystal) is observed");
    cls->add_option("--threshold", o.threshold, "tau_dyn/tau_dec threshold");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    std::ostringstream buffer;
    try {
        if (table->parsed()) run_table(o, buffer);
        else if (factor->parsed()) run_factor(o, buffer);
        else if (sim->parsed()) run_sim(o, buffer);
        else if (xray->parsed()) run_xray(o, buffer);
        else if (bcs->parsed()) run_bcs(o, buffer);
        else if (cls->parsed()) run_classify(o, buffer);

        if (o.output.empty()) out << buffer.str();
        else write_output(o.output, buffer.str());
    } catch (const DataFileError& e) {
        err << "error: data file: " << e.what() << '\n';
        return kExitDataFile;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace iondec::cli
