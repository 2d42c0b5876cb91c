// Command-line front end: weighted means, deformed norms and pairings,
// deformed integrals, and unit-circle point clouds.
//
// Exit codes: 0 on success (divergent limit results included), 2 on parse,
// dimension, or input errors, 3 when a limit-parameter mean violates the
// weight normalization.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <nearlin/io.hpp>
#include <nearlin/nearlin.hpp>

namespace {

using namespace nearlin;
using io::json;

// "alpha=RE[+IMi]" | "inf@THETA" | "-inf@THETA" | "zero@THETA"
LimitParam parse_param(const std::string& s) {
    auto tail_after = [&](const char* head) -> std::optional<std::string> {
        std::string h(head);
        if (s.rfind(h, 0) != 0) return std::nullopt;
        return s.substr(h.size());
    };
    auto full_double = [&](const std::string& text) {
        const char* c = text.c_str();
        char* end = nullptr;
        double x = std::strtod(c, &end);
        if (end == c || *end != '\0') throw std::invalid_argument("bad parameter: " + s);
        return x;
    };

    if (auto rest = tail_after("alpha=")) {
        const char* c = rest->c_str();
        char* end = nullptr;
        double re = std::strtod(c, &end);
        if (end == c) throw std::invalid_argument("bad parameter: " + s);
        if (*end == '\0') return AutoParam(re);
        char* end2 = nullptr;
        double im = std::strtod(end, &end2);
        if (end2 == end || end2[0] != 'i' || end2[1] != '\0')
            throw std::invalid_argument("bad parameter: " + s);
        return AutoParam(Cplx(re, im));
    }
    if (auto rest = tail_after("inf@")) return PosInfParam{Direction(full_double(*rest))};
    if (auto rest = tail_after("-inf@")) return NegInfParam{Direction(full_double(*rest))};
    if (auto rest = tail_after("zero@")) return ZeroParam{Direction(full_double(*rest))};
    throw std::invalid_argument("bad parameter: " + s +
                                " (want alpha=RE[+IMi], inf@THETA, -inf@THETA, or zero@THETA)");
}

// "-" reads stdin; a leading '[' or '{' is inline text; anything else is a path.
std::string slurp(const std::string& source) {
    if (source == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    if (!source.empty() && (source[0] == '[' || source[0] == '{')) return source;
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open input: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double env_tolerance() {
    const char* raw = std::getenv("NEARLIN_TOL");
    if (!raw) return kDefaultTol;
    char* end = nullptr;
    double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol > 0.0))
        throw std::invalid_argument(std::string("bad NEARLIN_TOL: ") + raw);
    return tol;
}

void print_complex(const Cplx& z, const std::string& format) {
    if (format == "csv")
        std::cout << "re,im\n" << io::format_double(z.real()) << ',' << io::format_double(z.imag())
                  << '\n';
    else
        std::cout << io::cplx_json(z).dump() << '\n';
}

void print_limit(const LimitValue& v, const std::string& format) {
    if (format == "csv") {
        if (is_divergent(v)) {
            const auto& d = std::get<DivergenceSignal>(v);
            std::cout << "divergent,r,theta\ntrue," << io::format_double(d.r) << ','
                      << io::format_double(d.theta) << '\n';
        } else {
            print_complex(limit_value(v), format);
        }
        return;
    }
    std::cout << io::limit_json(v).dump() << '\n';
}

void print_value(double x, const std::string& format) {
    if (format == "csv")
        std::cout << "value\n" << io::format_double(x) << '\n';
    else
        std::cout << json{{"value", x}}.dump() << '\n';
}

void run_mean(const std::string& input, const std::string& param_text, const std::string& format,
              double tol) {
    std::istringstream in(slurp(input));
    WeightedFamily family = io::parse_family_csv(in);
    print_limit(mean(family, parse_param(param_text), tol), format);
}

void run_norm(const std::string& input, const std::string& kind, double p, double q,
              const std::string& format) {
    if (kind == "lpq") {
        Mat m = io::parse_mat(json::parse(slurp(input)));
        print_value(lpq_norm(m, p, q), format);
        return;
    }
    Vec u = io::parse_vec(json::parse(slurp(input)));
    if (kind == "lp") {
        LpSpace space(u.size(), p);
        print_value(lp_norm(space, u), format);
    } else if (kind == "linf") {
        print_value(linf_norm(LpSpace(u.size(), 2.0), u), format);
    } else if (kind == "lneginf") {
        print_value(lneginf_seminorm(LpSpace(u.size(), 2.0), u), format);
    } else {
        throw std::invalid_argument("unknown norm kind: " + kind);
    }
}

void run_pair(const std::string& left, const std::string& right, const std::string& kind, double p,
              double q, double theta, const std::string& format, double tol) {
    if (kind == "lpq") {
        Mat a = io::parse_mat(json::parse(slurp(left)));
        Mat b = io::parse_mat(json::parse(slurp(right)));
        print_complex(lpq_pairing(a, b, p, q), format);
        return;
    }
    Vec u = io::parse_vec(json::parse(slurp(left)));
    Vec v = io::parse_vec(json::parse(slurp(right)));
    if (kind == "lp") {
        LpSpace space(u.size(), p);
        print_complex(lp_pairing(space, u, v), format);
    } else if (kind == "linf") {
        LpSpace space(u.size(), 2.0);
        print_complex(linf_pairing(space, u, v, Direction(theta), tol), format);
    } else if (kind == "lneginf") {
        LpSpace space(u.size(), 2.0);
        print_complex(lneginf_pairing(space, u, v, Direction(theta), tol), format);
    } else {
        throw std::invalid_argument("unknown pairing kind: " + kind);
    }
}

void run_integrate(const std::string& input, const std::string& param_text,
                   const std::string& format) {
    std::istringstream in(slurp(input));
    SampledFunction f = io::parse_function_csv(in);
    LimitParam param = parse_param(param_text);
    const auto* fin = std::get_if<AutoParam>(&param);
    if (!fin) throw std::invalid_argument("integrate needs a finite parameter alpha=...");
    print_complex(alpha_integral(*fin, f), format);
}

PairingSpec parse_space(const std::string& s) {
    if (s == "example32") return PairingSpec::mixed_two();
    if (s.rfind("lp:", 0) == 0) {
        const char* c = s.c_str() + 3;
        char* end = nullptr;
        double p = std::strtod(c, &end);
        if (end == c || *end != '\0') throw std::invalid_argument("bad space: " + s);
        return PairingSpec::lp(2, p);
    }
    throw std::invalid_argument("unknown space: " + s + " (want example32 or lp:P)");
}

std::array<double, 2> parse_center(const std::string& s) {
    const char* c = s.c_str();
    char* end = nullptr;
    double x = std::strtod(c, &end);
    if (end == c || *end != ',') throw std::invalid_argument("bad center: " + s);
    char* end2 = nullptr;
    double y = std::strtod(end + 1, &end2);
    if (end2 == end + 1 || *end2 != '\0') throw std::invalid_argument("bad center: " + s);
    return {x, y};
}

void run_circle(const std::string& space_text, const std::string& center_text, std::size_t n,
                const std::string& format, double tol) {
    PairingSpec spec = parse_space(space_text);
    auto cloud = trace_unit_circle(spec, parse_center(center_text), n, std::max(tol, 1e-12));
    if (format == "json") {
        json out = json::array();
        for (const auto& pt : cloud) out.push_back(json::array({pt[0], pt[1]}));
        std::cout << out.dump() << '\n';
        return;
    }
    std::cout << "x1,x2\n";
    for (const auto& pt : cloud)
        std::cout << io::format_double(pt[0]) << ',' << io::format_double(pt[1]) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deformed field arithmetic: means, norms, pairings, integrals, circles"};
    app.require_subcommand(1);

    std::string format_mean = "json", format_norm = "json", format_pair = "json",
                format_int = "json", format_circle = "csv";
    std::string input = "-", left, right;
    std::string kind = "lp";
    std::string param_text;
    std::string space_text = "example32";
    std::string center_text = "0,0";
    double p = 2.0, q = 2.0, theta = 0.0;
    std::size_t n = 256;
    double tol = kDefaultTol;

    auto add_format = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--format", target, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* mean_cmd = app.add_subcommand("mean", "weighted generalized mean of a CSV family");
    mean_cmd->add_option("input", input, "family CSV: path or - for stdin");
    mean_cmd->add_option("--param", param_text, "alpha=RE[+IMi] | inf@THETA | -inf@THETA | zero@THETA")
        ->required();
    mean_cmd->callback([&] { run_mean(input, param_text, format_mean, tol); });

    CLI::App* norm_cmd = app.add_subcommand("norm", "norm of a JSON vector or matrix");
    norm_cmd->add_option("input", input, "JSON vector/matrix: path, inline, or - for stdin");
    norm_cmd->add_option("--kind", kind, "lp | lpq | linf | lneginf");
    norm_cmd->add_option("--p", p, "coordinate exponent");
    norm_cmd->add_option("--q", q, "aggregation exponent (lpq)");
    norm_cmd->callback([&] { run_norm(input, kind, p, q, format_norm); });

    CLI::App* pair_cmd = app.add_subcommand("pair", "pairing of two JSON vectors or matrices");
    pair_cmd->add_option("left", left, "JSON input: path, inline, or - for stdin")->required();
    pair_cmd->add_option("right", right, "JSON input: path, inline, or - for stdin")->required();
    pair_cmd->add_option("--kind", kind, "lp | lpq | linf | lneginf");
    pair_cmd->add_option("--p", p, "coordinate exponent");
    pair_cmd->add_option("--q", q, "aggregation exponent (lpq)");
    pair_cmd->add_option("--theta", theta, "limit direction for linf/lneginf");
    pair_cmd->callback(
        [&] { run_pair(left, right, kind, p, q, theta, format_pair, tol); });

    CLI::App* int_cmd = app.add_subcommand("integrate", "deformed integral of a sampled function");
    int_cmd->add_option("input", input, "function CSV: path or - for stdin");
    int_cmd->add_option("--param", param_text, "finite parameter alpha=RE[+IMi]");
    int_cmd->add_option("--p", p, "shorthand for --param alpha=P");
    int_cmd->callback([&] {
        if (param_text.empty()) param_text = "alpha=" + io::format_double(p);
        run_integrate(input, param_text, format_int);
    });

    CLI::App* circle_cmd = app.add_subcommand("circle", "unit-circle point cloud of a 2d geometry");
    circle_cmd->add_option("--space", space_text, "example32 | lp:P");
    circle_cmd->add_option("--center", center_text, "center as X,Y");
    circle_cmd->add_option("--n", n, "number of sample rays")->check(CLI::PositiveNumber);
    circle_cmd->callback(
        [&] { run_circle(space_text, center_text, n, format_circle, tol); });

    add_format(mean_cmd, format_mean);
    add_format(norm_cmd, format_norm);
    add_format(pair_cmd, format_pair);
    add_format(int_cmd, format_int);
    add_format(circle_cmd, format_circle);

    try {
        tol = env_tolerance();
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const normalization_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
