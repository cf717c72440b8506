#include "diag12/cli.hpp"

#include <charconv>
#include <sstream>

#include <CLI11.hpp>

#include "diag12/report_json.hpp"
#include "diag12/units.hpp"

namespace diag12::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t digit_count(std::uint64_t v) { return std::to_string(v).size(); }

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void rstrip(std::string& line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
}

void require_positive(std::int64_t n, const char* what) {
    if (n <= 0) throw UsageError(std::string(what) + " must be a positive integer, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
    std::int64_t n = 0;
    bool highlight_ones = false;
    std::string format = "text";
};

CommandOutcome run_table(const TableArgs& args, const CliSettings& settings) {
    require_positive(args.n, "modulus");
    const auto n = static_cast<std::uint64_t>(args.n);
    if (n > settings.limits.table_budget) {
        throw BudgetExceeded("Z_" + std::to_string(n) + " exceeds the table budget of " +
                                 std::to_string(settings.limits.table_budget),
                             n, settings.limits.table_budget);
    }
    const std::uint64_t one = 1 % n;
    auto cell = [&](std::uint64_t a, std::uint64_t b) {
        std::uint64_t v = modarith::mul(a, b, n);
        std::string s = std::to_string(v);
        if (args.highlight_ones && v == one) s += '*';
        return s;
    };

    std::ostringstream out;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> off_diagonal;
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = 0; b < n; ++b) {
            if (a != b && modarith::mul(a, b, n) == one) off_diagonal.emplace_back(a, b);
        }
    }

    if (args.format == "csv") {
        out << "a\\b";
        for (std::uint64_t b = 0; b < n; ++b) out << ',' << b;
        out << '\n';
        for (std::uint64_t a = 0; a < n; ++a) {
            out << a;
            for (std::uint64_t b = 0; b < n; ++b) out << ',' << cell(a, b);
            out << '\n';
        }
        return {kExitOk, out.str(), {}};
    }

    const std::size_t cell_width = digit_count(n - 1) + (args.highlight_ones ? 1 : 0);
    const std::size_t label_width = std::max<std::size_t>(3, digit_count(n - 1));
    std::string line = pad_left("a\\b", label_width) + " |";
    for (std::uint64_t b = 0; b < n; ++b) {
        std::string h = std::to_string(b);
        if (args.highlight_ones) h += ' ';
        line += ' ' + pad_left(h, cell_width);
    }
    rstrip(line);
    out << line << '\n' << std::string(label_width + 1, '-') << '+' << std::string(n * (cell_width + 1), '-') << '\n';
    for (std::uint64_t a = 0; a < n; ++a) {
        line = pad_left(std::to_string(a), label_width) + " |";
        for (std::uint64_t b = 0; b < n; ++b) {
            std::string c = cell(a, b);
            // Keep the '*' marker in the rightmost column of the cell.
            if (args.highlight_ones && c.back() != '*') c += ' ';
            line += ' ' + pad_left(c, cell_width);
        }
        rstrip(line);
        out << line << '\n';
    }
    out << "diagonal: " << yes_no(off_diagonal.empty());
    if (args.highlight_ones && !off_diagonal.empty()) {
        out << " (off-diagonal ones at";
        for (std::size_t i = 0; i < off_diagonal.size(); ++i) {
            out << (i == 0 ? " " : ", ") << '(' << off_diagonal[i].first << ',' << off_diagonal[i].second << ')';
        }
        out << ')';
    }
    out << '\n';
    return {kExitOk, out.str(), {}};
}

// ---------------------------------------------------------------------------
// check / survey

struct CheckArgs {
    std::int64_t n = 0;
    bool poly = false;
    std::size_t vars = 1;
    std::optional<std::uint64_t> degree;
    std::optional<std::string> method;
    std::optional<std::string> expect;
    bool json = false;
};

DiagonalReport decide(std::int64_t n, bool poly, std::size_t vars, std::optional<std::uint64_t> degree,
                      const std::string& method, const DiagonalLimits& limits) {
    if (method == "table") return diagonal_zn_table(n, limits);
    if (method == "involution") return diagonal_zn_involution(n, limits);
    if (method == "enumerate") return diagonal_poly_enumerate(n, vars, degree.value_or(2), limits);
    return poly ? diagonal_poly_theorem(n, vars) : diagonal_zn_theorem(n);
}

std::string resolve_method(bool poly, const std::optional<std::uint64_t>& degree,
                           const std::optional<std::string>& requested) {
    if (!requested) {
        if (!poly) return "table";
        return degree ? "enumerate" : "theorem";
    }
    const std::string& m = *requested;
    if ((m == "table" || m == "involution") && poly) {
        throw UsageError("--method " + m + " decides Z_n and cannot be combined with --poly");
    }
    if (m == "enumerate" && !poly) throw UsageError("--method enumerate requires --poly");
    if (m == "theorem" && degree) throw UsageError("--degree only applies to --method enumerate");
    return m;
}

std::string report_text(const DiagonalReport& report) {
    std::ostringstream out;
    out << "ring: " << report.ring.to_string() << '\n';
    out << "method: " << method_name(report.method) << '\n';
    out << "verdict: " << yes_no(report.verdict) << '\n';
    if (report.witness) out << "witness: " << describe(*report.witness) << '\n';
    if (report.search_bound_note) out << "note: " << *report.search_bound_note << '\n';
    return out.str();
}

CommandOutcome run_check(const CheckArgs& args, const CliSettings& settings) {
    require_positive(args.n, "modulus");
    if (args.poly) require_positive(static_cast<std::int64_t>(args.vars), "--vars");
    const std::string method = resolve_method(args.poly, args.degree, args.method);
    DiagonalReport report = decide(args.n, args.poly, args.vars, args.degree, method, settings.limits);

    CommandOutcome outcome;
    outcome.stdout_payload = args.json ? report_to_json(report).dump(2) + "\n" : report_text(report);
    if (args.expect) {
        const bool expected = *args.expect == "yes";
        if (expected != report.verdict) {
            outcome.exit_code = kExitNegative;
            outcome.stderr_diagnostics = "expected verdict " + *args.expect + " but got " + yes_no(report.verdict) + "\n";
        }
    } else if (!report.verdict) {
        outcome.exit_code = kExitNegative;
    }
    return outcome;
}

struct SurveyArgs {
    std::int64_t max_n = 0;
    bool poly = false;
    std::size_t vars = 1;
    std::optional<std::uint64_t> degree;
    bool json = false;
};

CommandOutcome run_survey(const SurveyArgs& args, const CliSettings& settings) {
    require_positive(args.max_n, "--max-n");
    if (args.poly) require_positive(static_cast<std::int64_t>(args.vars), "--vars");
    const std::string method = resolve_method(args.poly, args.degree, std::nullopt);

    std::vector<DiagonalReport> reports;
    std::vector<std::int64_t> positives;
    for (std::int64_t n = 1; n <= args.max_n; ++n) {
        reports.push_back(decide(n, args.poly, args.vars, args.degree, method, settings.limits));
        if (reports.back().verdict) positives.push_back(n);
    }

    std::ostringstream out;
    if (args.json) {
        nlohmann::ordered_json doc;
        doc["schema"] = kReportSchemaVersion;
        doc["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
        doc["positives"] = positives;
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << r.ring.to_string() << ": " << yes_no(r.verdict);
            if (r.witness) out << "; " << describe(*r.witness);
            out << '\n';
        }
        out << "method: " << method_name(reports.front().method) << '\n';
        out << "positives:";
        for (auto n : positives) out << ' ' << n;
        out << '\n';
    }
    return {kExitOk, out.str(), {}};
}

// ---------------------------------------------------------------------------
// invert

struct InvertArgs {
    std::int64_t n = 0;
    std::int64_t vars = 0;
    std::string text;
};

CommandOutcome run_invert(const InvertArgs& args) {
    require_positive(args.n, "modulus");
    require_positive(args.vars, "variable count");
    const RingSpec ring = RingSpec::make(args.n);
    const Polynomial f = parse_polynomial(args.text, ring, static_cast<std::size_t>(args.vars));
    if (auto diagnosis = diagnose_unit(f)) {
        return {kExitNegative, "not a unit: " + diagnosis->describe(ring.modulus()) + "\n", {}};
    }
    const UnitCertificate cert = invert_unit(f);
    std::string out = to_string(cert.inverse()) + "\n";
    // The certificate has already checked the product.
    out += "product = 1 (mod " + std::to_string(ring.modulus()) + ")\n";
    return {kExitOk, std::move(out), {}};
}

} // namespace

std::optional<std::uint64_t> parse_budget(std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return std::nullopt;
    return value;
}

CommandOutcome run_command(const std::vector<std::string>& args, const CliSettings& settings) {
    CLI::App app{"Multiplication tables, units and the diagonal property of Z_n[x1..xm]", "diag12"};
    app.require_subcommand(1);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Print the multiplication table of Z_n");
    table->add_option("n", table_args.n, "Modulus")->required();
    table->add_flag("--highlight-ones", table_args.highlight_ones, "Mark cells equal to 1");
    table->add_option("--format", table_args.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Decide the diagonal property of Z_n or Z_n[x1..xm]");
    check->add_option("n", check_args.n, "Modulus")->required();
    auto* check_poly = check->add_flag("--poly", check_args.poly, "Decide the polynomial ring");
    check->add_option("--vars", check_args.vars, "Number of variables")->needs(check_poly);
    check->add_option("--degree", check_args.degree, "Degree bound for enumeration")->needs(check_poly);
    check->add_option("--method", check_args.method, "Decision method")
        ->check(CLI::IsMember({"theorem", "enumerate", "table", "involution"}));
    check->add_option("--expect", check_args.expect, "Expected verdict")->check(CLI::IsMember({"yes", "no"}));
    check->add_flag("--json", check_args.json, "Emit the report as JSON");

    InvertArgs invert_args;
    auto* invert = app.add_subcommand("invert", "Invert a unit of Z_n[x1..xm]");
    invert->add_option("n", invert_args.n, "Modulus")->required();
    invert->add_option("m", invert_args.vars, "Number of variables")->required();
    invert->add_option("polynomial", invert_args.text, "Polynomial, e.g. \"2*x1 + 1\"")->required();

    SurveyArgs survey_args;
    auto* survey = app.add_subcommand("survey", "Decide the diagonal property for n = 1..N");
    survey->add_option("--max-n", survey_args.max_n, "Largest modulus")->required();
    auto* survey_poly = survey->add_flag("--poly", survey_args.poly, "Survey polynomial rings");
    survey->add_option("--vars", survey_args.vars, "Number of variables")->needs(survey_poly);
    survey->add_option("--degree", survey_args.degree, "Enumerate up to this degree instead of the theorem")
        ->needs(survey_poly);
    survey->add_flag("--json", survey_args.json, "Emit JSON");

    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
    }

    try {
        if (table->parsed()) return run_table(table_args, settings);
        if (check->parsed()) return run_check(check_args, settings);
        if (invert->parsed()) return run_invert(invert_args);
        return run_survey(survey_args, settings);
    } catch (const UsageError& e) {
        return {kExitUsage, {}, std::string("error: ") + e.what() + "\n" + app.help()};
    } catch (const BudgetExceeded& e) {
        return {kExitUsage, {}, std::string("budget exceeded: ") + e.what() + "\n"};
    } catch (const ParseError& e) {
        return {kExitUsage, {}, "parse error at position " + std::to_string(e.position()) + ": " + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace diag12::cli
