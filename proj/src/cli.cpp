#include <tanperiod/cli.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <tanperiod/errors.hpp>
#include <tanperiod/field.hpp>
#include <tanperiod/half_return.hpp>
#include <tanperiod/oracle.hpp>
#include <tanperiod/period.hpp>

namespace tanperiod::cli
{

namespace
{

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string input;
    int order = 8;
    std::string grid = "1e-3:1e-1:12";
    double tol = 1e-12;
    std::string out;
    std::string format = "json";
};

struct Report {
    Json body;
    // Rows for --format csv of simulate/compare; empty for the other commands.
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int status = ok;
};

std::string fmt(long double v)
{
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

Json exact_list(std::span<const ExactScalar> v)
{
    Json out = Json::array();
    for (const ExactScalar &c : v) {
        out.push_back(c.to_string());
    }
    return out;
}

Json exact_list(const Series1 &s)
{
    return exact_list(s.coefficients());
}

// Series value tagged with the order through which it is known.
Json series_json(const Series1 &s)
{
    return Json{{"order", s.order()}, {"coefficients", exact_list(s)}};
}

void write_json(const Json &j, std::ostream &os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto &[key, value] : j.items()) {
            os << (first ? "" : ",\n") << inner << Json(key).dump() << ": ";
            write_json(value, os, indent + 2);
            first = false;
        }
        os << "\n" << pad << "}";
        return;
    }
    case Json::value_t::array: {
        const bool flat = std::none_of(j.begin(), j.end(), [](const Json &e) { return e.is_structured(); });
        if (j.empty() || flat) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                os << (i ? ", " : "");
                write_json(j[i], os, indent);
            }
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << (i ? ",\n" : "") << inner;
            write_json(j[i], os, indent + 2);
        }
        os << "\n" << pad << "]";
        return;
    }
    case Json::value_t::number_float:
        os << fmt(j.get<double>());
        return;
    default:
        os << j.dump();
    }
}

std::string csv_cell(const Json &v)
{
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_number_float()) {
        s = fmt(v.get<double>());
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char c : s) {
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        }
        return q + "\"";
    }
    return s;
}

std::string render(const Report &r, const std::string &format)
{
    std::ostringstream os;
    if (format == "json") {
        write_json(r.body, os, 0);
        os << "\n";
        return os.str();
    }
    auto line = [&os](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << "\n";
    };
    if (!r.csv_header.empty()) {
        line(r.csv_header);
        for (const auto &row : r.csv_rows) {
            line(row);
        }
        return os.str();
    }
    line({"key", "value"});
    const Json flat = r.body.flatten();
    for (const auto &[key, value] : flat.items()) {
        line({csv_cell(Json(key)), csv_cell(value)});
    }
    return os.str();
}

SimulationConfig make_config(const Options &o)
{
    const auto parts = [&] {
        std::vector<std::string> p;
        std::stringstream ss(o.grid);
        std::string item;
        while (std::getline(ss, item, ':')) {
            p.push_back(item);
        }
        return p;
    }();
    if (parts.size() != 3) {
        throw UsageError("--grid expects a:b:n");
    }
    SimulationConfig cfg;
    try {
        std::size_t used = 0;
        const long double a = std::stold(parts[0], &used);
        const bool a_ok = used == parts[0].size();
        const long double b = std::stold(parts[1], &used);
        const bool b_ok = used == parts[1].size();
        const int n = std::stoi(parts[2], &used);
        if (!a_ok || !b_ok || used != parts[2].size()) {
            throw UsageError("--grid expects a:b:n");
        }
        cfg.x_grid = SimulationConfig::log_grid(a, b, n);
    } catch (const std::logic_error &) {
        throw UsageError("--grid expects a:b:n");
    } catch (const OracleError &e) {
        throw UsageError(std::string("--grid: ") + e.what());
    }
    cfg.abs_tol = o.tol;
    cfg.rel_tol = o.tol;
    cfg.event_tol = o.tol / 10.0;
    try {
        cfg.validate();
    } catch (const OracleError &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

Json classification_json(const ConditionReport &r)
{
    Json j;
    j["conditions"] = {{"C1", r.verdicts.c1}, {"C2", r.verdicts.c2}, {"C3", r.verdicts.c3}};
    j["k_plus"] = r.k_plus ? Json(*r.k_plus) : Json();
    j["k_minus"] = r.k_minus ? Json(*r.k_minus) : Json();
    if (r.classification) {
        j["delta"] = r.classification->delta;
        j["a_plus"] = r.classification->a_plus.to_string();
        j["a_minus"] = r.classification->a_minus.to_string();
    }
    if (r.failure) {
        j["failure"] = *r.failure;
    }
    return j;
}

int clamp_order(int requested, int max_order, Json &warnings, std::ostream &err)
{
    if (requested <= max_order) {
        return requested;
    }
    const std::string w = "order " + std::to_string(requested) + " exceeds the trustworthy order "
                          + std::to_string(max_order) + " of this field; using " + std::to_string(max_order);
    warnings.push_back(w);
    err << "warning: " << w << "\n";
    return max_order;
}

Json center_json(const CenterReport &c)
{
    Json j;
    j["order"] = c.order;
    j["is_center_to_order"] = c.is_center_to_order;
    j["first_mismatch_index"] = c.first_mismatch_index ? Json(*c.first_mismatch_index) : Json();
    j["phi"] = c.phi ? series_json(*c.phi) : Json();
    return j;
}

bool involution_holds(const HalfReturnData &h)
{
    const Series1 d = involution_defect(h.phi());
    return d.valuation() > d.order();
}

Report cmd_classify(const ConditionReport &cond)
{
    Report r;
    r.body["command"] = "classify";
    r.body["classification"] = classification_json(cond);
    r.status = cond.failure ? rejected : ok;
    return r;
}

Report cmd_halfreturn(const PiecewiseField &field, const Classification &cls, const Options &o, std::ostream &err)
{
    Report r;
    Json warnings = Json::array();
    const int max_order
        = std::min(max_alpha_order(field, cls, Side::plus), max_alpha_order(field, cls, Side::minus));
    const int order = clamp_order(o.order, max_order, warnings, err);
    const CenterReport c = center_check(field, cls, order);

    r.body["command"] = "halfreturn";
    r.body["order"] = order;
    r.body["alpha"] = {{"plus", exact_list(c.plus.alpha)}, {"minus", exact_list(c.minus.alpha)}};
    r.body["center"] = center_json(c);
    r.body["involution"] = {{"plus", involution_holds(c.plus)}, {"minus", involution_holds(c.minus)}};
    r.body["warnings"] = warnings;
    return r;
}

Report not_center_report(const std::string &command, const NotCenterError &e, int order, std::ostream &err)
{
    Report r;
    r.body["command"] = command;
    r.body["order"] = order;
    r.body["error"] = e.what();
    r.body["first_mismatch_index"] = e.first_mismatch_index();
    err << "error: " << e.what() << " (first mismatch at index " << e.first_mismatch_index() << ")\n";
    r.status = not_center;
    return r;
}

Report cmd_period(const PiecewiseField &field, const Classification &cls, const Options &o, std::ostream &err)
{
    Json warnings = Json::array();
    const int order = clamp_order(o.order, max_period_order(field, cls), warnings, err);
    const CenterReport c = center_check(field, cls, order);
    PeriodData pd;
    try {
        pd = period_constants(field, cls, c);
    } catch (const NotCenterError &e) {
        Report r = not_center_report("period", e, order, err);
        r.body["center"] = center_json(c);
        r.body["warnings"] = warnings;
        return r;
    }
    const auto [t0, t1] = corollary_values(field);

    Report r;
    r.body["command"] = "period";
    r.body["order"] = order;
    r.body["That"] = exact_list(pd.t_hat);
    r.body["T_plus"] = series_json(pd.t_plus);
    r.body["T_minus"] = series_json(pd.t_minus);
    r.body["phi"] = series_json(pd.phi);
    r.body["corollary"] = {{"T0", t0.to_string()},
                           {"T1", t1.to_string()},
                           {"match", pd.t_hat[0] == t0 && pd.t_hat[1] == t1}};
    r.body["warnings"] = warnings;
    return r;
}

Report cmd_simulate(const PiecewiseField &field, const Options &o)
{
    const SimulationConfig cfg = make_config(o);
    const std::vector<OrbitMeasurement> ms = measure_grid(field, cfg);
    Report r;
    r.body["command"] = "simulate";
    r.body["tolerances"] = {{"step", static_cast<double>(cfg.abs_tol)}, {"event", static_cast<double>(cfg.event_tol)}};
    r.csv_header = {"x0", "landing_x_plus", "landing_x_minus", "time_plus", "time_minus", "period"};
    Json rows = Json::array();
    for (const OrbitMeasurement &m : ms) {
        rows.push_back({{"x0", static_cast<double>(m.x0)},
                        {"landing_x_plus", static_cast<double>(m.landing_x_plus)},
                        {"landing_x_minus", static_cast<double>(m.landing_x_minus)},
                        {"time_plus", static_cast<double>(m.time_plus)},
                        {"time_minus", static_cast<double>(m.time_minus)},
                        {"period", static_cast<double>(m.period)}});
        r.csv_rows.push_back(
            {fmt(m.x0), fmt(m.landing_x_plus), fmt(m.landing_x_minus), fmt(m.time_plus), fmt(m.time_minus), fmt(m.period)});
    }
    r.body["measurements"] = rows;
    return r;
}

Report cmd_compare(const PiecewiseField &field, const Classification &cls, const Options &o, std::ostream &err)
{
    const SimulationConfig cfg = make_config(o);
    Json warnings = Json::array();
    const int order = clamp_order(o.order, max_period_order(field, cls), warnings, err);
    ConvergenceReport rep;
    try {
        rep = convergence_report(field, order, cfg);
    } catch (const NotCenterError &e) {
        Report r = not_center_report("compare", e, order, err);
        r.body["warnings"] = warnings;
        return r;
    }

    Report r;
    r.body["command"] = "compare";
    r.body["order"] = order;
    r.body["That"] = exact_list(rep.period.t_hat);
    r.body["saturated"] = rep.saturated;
    r.body["slope"] = rep.slope ? Json(static_cast<double>(*rep.slope)) : Json();
    r.csv_header = {"x", "numeric", "series", "residual", "saturated"};
    Json rows = Json::array();
    for (const ConvergenceRow &row : rep.rows) {
        rows.push_back({{"x", static_cast<double>(row.x)},
                        {"numeric", static_cast<double>(row.numeric)},
                        {"series", static_cast<double>(row.series)},
                        {"residual", static_cast<double>(row.residual)},
                        {"saturated", row.saturated}});
        r.csv_rows.push_back(
            {fmt(row.x), fmt(row.numeric), fmt(row.series), fmt(row.residual), row.saturated ? "true" : "false"});
    }
    r.body["rows"] = rows;
    r.body["warnings"] = warnings;
    return r;
}

Report dispatch(const Options &o, std::ostream &err)
{
    const PiecewiseField field = load_field_file(o.input);
    const ConditionReport cond = check_conditions(field);
    if (o.command == "classify") {
        Report r = cmd_classify(cond);
        if (cond.failure) {
            err << "classification rejected: " << *cond.failure << "\n";
        }
        return r;
    }
    if (cond.failure) {
        Report r;
        r.body["command"] = o.command;
        r.body["classification"] = classification_json(cond);
        r.body["error"] = *cond.failure;
        r.status = rejected;
        err << "classification rejected: " << *cond.failure << "\n";
        return r;
    }
    const Classification &cls = *cond.classification;
    if (o.command == "halfreturn") {
        return cmd_halfreturn(field, cls, o, err);
    }
    if (o.command == "period") {
        return cmd_period(field, cls, o, err);
    }
    if (o.command == "simulate") {
        return cmd_simulate(field, o);
    }
    return cmd_compare(field, cls, o, err);
}

void add_common(CLI::App *sub, Options &o)
{
    sub->add_option("--input", o.input, "Field document (JSON)")->required();
    sub->add_option("--order", o.order, "Series order N")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--grid", o.grid, "Log-spaced grid a:b:n")->capture_default_str();
    sub->add_option("--tol", o.tol, "Step tolerance; the event tolerance is tol/10")->capture_default_str();
    sub->add_option("--out", o.out, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "Report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app("Period constants and half-return maps of tangential Filippov centers", "tanperiod");
    app.require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> commands{
        {"classify", "Check the monodromy conditions at the origin"},
        {"halfreturn", "Half-return map coefficients of both sides and the center test"},
        {"period", "Period constants of a center"},
        {"simulate", "Numeric half orbits and periods on a grid"},
        {"compare", "Numeric period against the truncated period series"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *sub = app.add_subcommand(name, help);
        add_common(sub, o);
        sub->callback([&o, n = name] { o.command = n; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage;
    }

    Report report;
    try {
        report = dispatch(o, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return no_input;
    } catch (const ClassificationError &e) {
        err << "classification rejected: " << e.what() << "\n";
        return rejected;
    } catch (const NotCenterError &e) {
        err << "error: " << e.what() << "\n";
        return not_center;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return data_error;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }

    const std::string text = render(report, o.format);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        f << text;
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return cant_create;
        }
    }
    return report.status;
}

} // namespace tanperiod::cli
