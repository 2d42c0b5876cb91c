#pragma once

// JSON and CSV adapters shared by the command-line tool and the tests.
// Vectors and matrices travel as JSON arrays of [re, im] pairs; weighted
// families as CSV columns value_re, value_im, weight_re, weight_im; sampled
// functions as CSV rows x, re, im on a uniform midpoint grid.

#include <cctype>
#include <istream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "integral.hpp"
#include "limit.hpp"
#include "lp_space.hpp"
#include "means.hpp"

namespace nearlin::io {

using json = nlohmann::json;

inline json cplx_json(Cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json limit_json(const LimitValue& v) {
    if (is_divergent(v)) {
        const auto& d = std::get<DivergenceSignal>(v);
        return json{{"divergent", true}, {"r", d.r}, {"theta", d.theta}};
    }
    return cplx_json(limit_value(v));
}

inline Cplx parse_cplx(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object() && j.contains("re"))
        return {j["re"].get<double>(), j.value("im", 0.0)};
    throw std::invalid_argument("expected a number, an [re, im] pair, or an {re, im} object");
}

inline Vec parse_vec(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty JSON array");
    Vec out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(parse_cplx(e));
    return out;
}

inline Mat parse_mat(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty() || !(j[0][0].is_array() || j[0][0].is_number()))
        throw std::invalid_argument("expected a JSON array of rows of [re, im] pairs");
    Mat out;
    out.reserve(j.size());
    for (const auto& row : j) out.push_back(parse_vec(row));
    check_matrix(out);
    return out;
}

inline json vec_json(const Vec& v) {
    json out = json::array();
    for (const Cplx& z : v) out.push_back(json::array({z.real(), z.imag()}));
    return out;
}

inline std::string format_double(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != ' ' && ch != '\t') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

inline bool is_header(const std::vector<std::string>& fields) {
    for (const std::string& f : fields)
        for (char ch : f)
            if (std::isalpha(static_cast<unsigned char>(ch)) && ch != 'e' && ch != 'E')
                return true;
    return false;
}

inline double to_double(const std::string& s) {
    std::size_t pos = 0;
    double x = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad numeric field: " + s);
    return x;
}

}  // namespace detail

// CSV columns value_re, value_im, weight_re, weight_im (header optional).
inline WeightedFamily parse_family_csv(std::istream& in) {
    WeightedFamily family;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        auto fields = detail::split_csv(line);
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (first && detail::is_header(fields)) {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() != 4)
            throw std::invalid_argument("family rows need value_re,value_im,weight_re,weight_im");
        family.push_back({{detail::to_double(fields[0]), detail::to_double(fields[1])},
                          {detail::to_double(fields[2]), detail::to_double(fields[3])}});
    }
    return family;
}

// CSV rows x, re, im; x must form a uniform midpoint grid.
inline SampledFunction parse_function_csv(std::istream& in) {
    std::vector<double> xs;
    std::vector<Cplx> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        auto fields = detail::split_csv(line);
        if (fields.size() == 1 && fields[0].empty()) continue;
        if (first && detail::is_header(fields)) {
            first = false;
            continue;
        }
        first = false;
        if (fields.size() != 3) throw std::invalid_argument("function rows need x,re,im");
        xs.push_back(detail::to_double(fields[0]));
        values.push_back({detail::to_double(fields[1]), detail::to_double(fields[2])});
    }
    if (xs.size() < 2) throw std::invalid_argument("need at least 2 sample rows");
    double h = xs[1] - xs[0];
    if (!(h > 0.0)) throw std::invalid_argument("sample abscissae must increase");
    double a = xs[0] - 0.5 * h;
    double b = xs.back() + 0.5 * h;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        double expect = a + (static_cast<double>(k) + 0.5) * h;
        if (std::abs(xs[k] - expect) > 1e-9 * (1.0 + std::abs(expect)))
            throw std::invalid_argument("sample abscissae must form a uniform grid");
    }
    return SampledFunction(a, b, std::move(values));
}

inline std::string function_csv(const SampledFunction& f) {
    std::ostringstream os;
    os << "x,re,im\n";
    for (std::size_t k = 0; k < f.samples.size(); ++k)
        os << format_double(f.node(k)) << ',' << format_double(f.samples[k].real()) << ','
           << format_double(f.samples[k].imag()) << '\n';
    return os.str();
}

inline std::string family_csv(const WeightedFamily& fam) {
    std::ostringstream os;
    os << "value_re,value_im,weight_re,weight_im\n";
    for (const WeightedEntry& e : fam)
        os << format_double(e.value.real()) << ',' << format_double(e.value.imag()) << ','
           << format_double(e.weight.real()) << ',' << format_double(e.weight.imag()) << '\n';
    return os.str();
}

}  // namespace nearlin::io
