#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <revert/error.hpp>
#include <revert/inversion.hpp>
#include <revert/parser.hpp>
#include <revert/radius.hpp>
#include <revert/serialize.hpp>
#include <revert/taylor.hpp>

namespace revert::cli
{

namespace
{

enum class Format { Text, Json, Csv };

struct Options {
    std::string expr;
    std::string center = "0";
    std::size_t order = 0;
    std::string methods;
    bool use_float = false;
    std::string format = "text";
    std::optional<std::size_t> radius_window;
    bool quiet = false;
};

struct RunConfig {
    std::string expr_text;
    Rational center;
    std::size_t order = 0;
    std::set<MethodKind> methods;
    // The order the user listed them in; `radius` uses the first.
    std::vector<MethodKind> listed;
    NumericKind mode = NumericKind::Exact;
    Format format = Format::Text;
    std::optional<std::size_t> radius_window;
    bool quiet = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_for(ErrorCode code)
{
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnknownFunction:
        case ErrorCode::NonIntegerExponent:
        case ErrorCode::InvalidArgument:
            return Usage;
        case ErrorCode::PoleAtCenter:
        case ErrorCode::NonRationalExpansion:
        case ErrorCode::DomainError:
            return Expansion;
        case ErrorCode::DerivativeVanishesAtCenter:
            return VanishingDerivative;
        case ErrorCode::InsufficientOrder:
        case ErrorCode::InsufficientData:
            return NotEnoughTerms;
        default:
            return Numeric;
    }
}

Format parse_format(const std::string &name)
{
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    return Format::Text;
}

// "new,lb" -> both; "all" -> every backend. Empty selects `fallback`.
std::vector<MethodKind> parse_methods(const std::string &csv, std::vector<MethodKind> fallback)
{
    if (csv.empty()) {
        return fallback;
    }
    std::vector<MethodKind> out;
    auto add = [&out](MethodKind m) {
        if (std::find(out.begin(), out.end(), m) == out.end()) {
            out.push_back(m);
        }
    };
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        if (item == "all") {
            for (auto m : all_methods) {
                add(m);
            }
            continue;
        }
        try {
            add(parse_method(item));
        } catch (const Error &) {
            throw UsageError("unknown method '" + item + "' (expected new, lb, newton or all)");
        }
    }
    if (out.empty()) {
        throw UsageError("--method lists no methods");
    }
    return out;
}

RunConfig make_config(const Options &o, std::vector<MethodKind> default_methods)
{
    RunConfig c;
    c.expr_text = o.expr;
    try {
        c.center = Rational::parse(o.center);
    } catch (const Error &e) {
        throw UsageError("--center: " + std::string(e.what()));
    }
    c.order = o.order;
    c.listed = parse_methods(o.methods, std::move(default_methods));
    c.methods = std::set<MethodKind>(c.listed.begin(), c.listed.end());
    c.mode = o.use_float ? NumericKind::Float : NumericKind::Exact;
    c.format = parse_format(o.format);
    c.radius_window = o.radius_window;
    c.quiet = o.quiet;
    return c;
}

TruncatedSeries expand(const RunConfig &c)
{
    return taylor_series(parse(c.expr_text), c.center, c.order, c.mode);
}

void write_json(std::ostream &out, const Json &j)
{
    out << j.dump(2) << '\n';
}

void csv_header(std::ostream &out, NumericKind mode)
{
    out << (mode == NumericKind::Exact ? "method,index,numerator,denominator\n" : "method,index,value\n");
}

void csv_rows(std::ostream &out, MethodKind method, std::span<const Coefficient> coeffs)
{
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out << method_name(method) << ',' << k << ',';
        if (coeffs[k].is_exact()) {
            const auto &r = coeffs[k].rational();
            out << r.numerator().get_str() << ',' << r.denominator().get_str() << '\n';
        } else {
            out << format_double(coeffs[k].float_value()) << '\n';
        }
    }
}

class Runner
{
public:
    Runner(RunConfig config, std::ostream &out, std::ostream &err)
        : c_(std::move(config)), out_(out), err_(err)
    {
    }

    int invert_cmd()
    {
        const auto f = expand(c_);
        std::vector<InversionResult> results;
        for (auto m : c_.methods) {
            auto g = invert(f, c_.order, m);
            if (c_.radius_window) {
                g.radius_estimate = estimate_radius(g.series, *c_.radius_window);
            }
            results.push_back(std::move(g));
        }
        switch (c_.format) {
            case Format::Json: {
                Json arr = Json::array();
                for (const auto &g : results) {
                    arr.push_back(to_json(g));
                }
                write_json(out_, arr);
                break;
            }
            case Format::Csv:
                csv_header(out_, c_.mode);
                for (const auto &g : results) {
                    csv_rows(out_, g.method, g.series.coeffs());
                }
                break;
            case Format::Text:
                for (const auto &g : results) {
                    comment() << "method " << method_name(g.method) << ": inverse about u0 = " << g.u0.to_display()
                              << ", z0 = " << g.z0.to_display() << ", f'(z0) = " << g.f_prime_at_z0.to_display()
                              << ", order " << c_.order << '\n';
                    out_ << method_name(g.method) << ':';
                    for (const auto &b : g.series.coeffs()) {
                        out_ << ' ' << b.to_display();
                    }
                    out_ << '\n';
                    if (g.radius_estimate) {
                        out_ << "radius " << format_double(*g.radius_estimate) << '\n';
                    }
                }
                break;
        }
        return Ok;
    }

    int compare_cmd()
    {
        if (c_.methods.size() < 2) {
            throw UsageError("compare needs at least two methods");
        }
        const auto report = compare_methods(expand(c_), c_.order, c_.methods);
        switch (c_.format) {
            case Format::Json:
                write_json(out_, to_json(report));
                break;
            case Format::Csv:
                csv_header(out_, c_.mode);
                for (const auto &r : report.results) {
                    csv_rows(out_, r.method, r.coeffs);
                }
                break;
            case Format::Text:
                comment() << "coefficients of the inverse series, order " << report.order << '\n';
                for (const auto &r : report.results) {
                    out_ << method_name(r.method) << ':';
                    for (const auto &b : r.coeffs) {
                        out_ << ' ' << b.to_display();
                    }
                    out_ << '\n';
                }
                out_ << "agreement " << (report.agreement ? "true" : "false") << '\n';
                if (report.first_divergence) {
                    out_ << "first_divergence " << *report.first_divergence << '\n';
                }
                if (report.max_abs_diff) {
                    out_ << "max_abs_diff " << format_double(*report.max_abs_diff) << '\n';
                }
                break;
        }
        if (!report.agreement) {
            err_ << "error: methods disagree";
            if (report.first_divergence) {
                err_ << " at coefficient " << *report.first_divergence;
            }
            err_ << '\n';
            return VerificationFailed;
        }
        return Ok;
    }

    int radius_cmd()
    {
        const auto window = c_.radius_window.value_or(default_radius_window);
        const auto method = c_.listed.front();
        auto g = invert(expand(c_), c_.order, method);
        g.radius_estimate = estimate_radius(g.series, window);
        switch (c_.format) {
            case Format::Json:
                write_json(out_, to_json(g));
                break;
            case Format::Csv:
                out_ << "method,order,window,radius_estimate\n"
                     << method_name(method) << ',' << c_.order << ',' << window << ','
                     << format_double(*g.radius_estimate) << '\n';
                break;
            case Format::Text:
                comment() << "radius of convergence estimate of the inverse series (method " << method_name(method)
                          << ", order " << c_.order << ", window " << window << ")\n";
                out_ << format_double(*g.radius_estimate) << '\n';
                break;
        }
        return Ok;
    }

    int roundtrip_cmd()
    {
        const auto f = expand(c_);
        std::vector<std::pair<MethodKind, std::optional<std::size_t>>> outcomes;
        for (auto m : c_.methods) {
            outcomes.emplace_back(m, roundtrip_failure(invert(f, c_.order, m), f));
        }
        bool ok = true;
        switch (c_.format) {
            case Format::Json: {
                Json arr = Json::array();
                for (const auto &[m, fail] : outcomes) {
                    Json j;
                    j["method"] = method_name(m);
                    j["order"] = c_.order;
                    j["ok"] = !fail.has_value();
                    j["first_failure"] = fail ? Json(*fail) : Json(nullptr);
                    arr.push_back(std::move(j));
                }
                write_json(out_, arr);
                break;
            }
            case Format::Csv:
                out_ << "method,order,ok,first_failure\n";
                for (const auto &[m, fail] : outcomes) {
                    out_ << method_name(m) << ',' << c_.order << ',' << (fail ? "false" : "true") << ','
                         << (fail ? std::to_string(*fail) : "") << '\n';
                }
                break;
            case Format::Text:
                comment() << "g(f(z)) = z to order " << c_.order << '\n';
                for (const auto &[m, fail] : outcomes) {
                    out_ << method_name(m) << ": ";
                    if (fail) {
                        out_ << "FAIL at order " << *fail << '\n';
                    } else {
                        out_ << "ok\n";
                    }
                }
                break;
        }
        for (const auto &[m, fail] : outcomes) {
            if (fail) {
                ok = false;
                err_ << "error: round trip with method " << method_name(m) << " fails at order " << *fail << '\n';
            }
        }
        return ok ? Ok : VerificationFailed;
    }

    // Wall time per method over orders 1, 2, 4, ... up to --order.
    int bench_cmd()
    {
        const auto parsed = parse(c_.expr_text);
        std::vector<std::size_t> orders;
        for (std::size_t n = 1; n < c_.order; n *= 2) {
            orders.push_back(n);
        }
        orders.push_back(c_.order);

        Json rows = Json::array();
        if (c_.format == Format::Csv) {
            out_ << "order,method,seconds\n";
        } else if (c_.format == Format::Text) {
            comment() << "wall time in seconds per inversion (informational)\n";
        }
        for (auto n : orders) {
            const auto f = taylor_series(parsed, c_.center, n, c_.mode);
            for (auto m : c_.methods) {
                const auto start = std::chrono::steady_clock::now();
                (void)invert(f, n, m);
                const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
                switch (c_.format) {
                    case Format::Json:
                        rows.push_back({{"order", n}, {"method", method_name(m)}, {"seconds", dt.count()}});
                        break;
                    case Format::Csv:
                        out_ << n << ',' << method_name(m) << ',' << format_double(dt.count()) << '\n';
                        break;
                    case Format::Text:
                        out_ << n << ' ' << method_name(m) << ' ' << format_double(dt.count()) << '\n';
                        break;
                }
            }
        }
        if (c_.format == Format::Json) {
            write_json(out_, rows);
        }
        return Ok;
    }

private:
    // Descriptive lines, left out under --quiet.
    std::ostream &comment()
    {
        if (c_.quiet) {
            null_.str("");
            return null_;
        }
        return out_ << "# ";
    }

    RunConfig c_;
    std::ostream &out_;
    std::ostream &err_;
    std::ostringstream null_;
};

bool all_digits(const std::string &v)
{
    return !v.empty() && v.size() < 10 && v.find_first_not_of("0123456789") == std::string::npos;
}

CLI::Validator integer_at_least(unsigned long low)
{
    return CLI::Validator(
        [low](const std::string &v) {
            return all_digits(v) && std::stoul(v) >= low ? std::string()
                                                         : "must be an integer of at least " + std::to_string(low);
        },
        ">=" + std::to_string(low));
}

CLI::Validator positive_integer()
{
    return CLI::Validator(
        [](const std::string &v) {
            return all_digits(v) && std::stoul(v) >= 1 ? std::string() : std::string("must be a positive integer");
        },
        "POSITIVE");
}

void report(std::ostream &err, Format format, std::string_view code, const std::string &message, int status)
{
    if (format == Format::Json) {
        Json j;
        j["error"] = {{"code", code}, {"message", message}, {"exit", status}};
        err << j.dump() << '\n';
    } else {
        err << "error [" << code << "]: " << message << '\n';
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Taylor series inversion: coefficients of the inverse function g = f^-1 about u0 = f(z0)", "revert"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&opts](CLI::App *sub) {
        sub->add_option("--expr", opts.expr, "Expression in z, e.g. \"z*exp(z)\"")->required();
        sub->add_option("--center", opts.center, "Expansion point z0 (rational, default 0)");
        sub->add_option("--order", opts.order, "Number of inverse coefficients N")
            ->required()
            ->check(positive_integer());
        sub->add_option("--method", opts.methods, "Comma-separated list of new, lb, newton or all");
        sub->add_flag("--float", opts.use_float, "Use binary64 coefficients instead of exact rationals");
        sub->add_option("--format", opts.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--radius-window", opts.radius_window, "Coefficients used by the radius estimate")
            ->check(integer_at_least(4));
        sub->add_flag("--quiet", opts.quiet, "Print the payload only");
    };

    using Command = int (Runner::*)();
    struct Sub {
        const char *name;
        const char *help;
        std::vector<MethodKind> defaults;
        Command command;
    };
    const std::vector<MethodKind> every(std::begin(all_methods), std::end(all_methods));
    const std::vector<Sub> subs{
        {"invert", "Print the inverse series", {MethodKind::NewFormula}, &Runner::invert_cmd},
        {"compare", "Run several methods and check that they agree", every, &Runner::compare_cmd},
        {"radius", "Estimate the radius of convergence of the inverse series", {MethodKind::NewFormula},
         &Runner::radius_cmd},
        {"roundtrip", "Check g(f(z)) = z for each method", every, &Runner::roundtrip_cmd},
        {"bench", "Time each method over increasing orders", every, &Runner::bench_cmd},
    };
    std::vector<CLI::App *> apps;
    for (const auto &s : subs) {
        apps.push_back(app.add_subcommand(s.name, s.help));
        add_common(apps.back());
    }

    std::vector<std::string> argv_store{"revert"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError &e) {
        report(err, parse_format(opts.format), "UsageError", e.what(), Usage);
        return Usage;
    }

    const Format format = parse_format(opts.format);
    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (apps[i]->parsed()) {
                Runner runner(make_config(opts, subs[i].defaults), out, err);
                return (runner.*subs[i].command)();
            }
        }
        return Usage;
    } catch (const UsageError &e) {
        report(err, format, "UsageError", e.what(), Usage);
        return Usage;
    } catch (const Error &e) {
        const int status = exit_for(e.code());
        report(err, format, code_name(e.code()), e.what(), status);
        return status;
    } catch (const std::exception &e) {
        report(err, format, "InternalError", e.what(), Numeric);
        return Numeric;
    }
}

} // namespace revert::cli
