#include "specstep/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace specstep {
namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

double parse_field(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) {
        throw std::runtime_error("trace CSV: unparsable number '" + text + "'");
    }
    return v;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_problem_json(const std::string& path, const QuadraticProblem& problem) {
    json j;
    j["n"] = problem.dimension();
    j["spectrum"] = problem.spectrum();
    j["x_star"] = problem.minimizer();
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

QuadraticProblem read_problem_json(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.contains("n") || !j.contains("spectrum") || !j.contains("x_star")) {
        throw std::runtime_error("problem file " + path +
                                 " must contain n, spectrum and x_star");
    }
    const int n = j.at("n").get<int>();
    auto spectrum = j.at("spectrum").get<std::vector<double>>();
    auto x_star = j.at("x_star").get<std::vector<double>>();
    if (static_cast<int>(spectrum.size()) != n) {
        throw std::runtime_error("problem file " + path +
                                 ": spectrum length does not match n");
    }
    return QuadraticProblem::from_spectrum(std::move(spectrum), std::move(x_star));
}

void write_trace_csv(const std::string& path, const SolveTrace& trace) {
    auto out = open_out(path);
    out << "k,f,gnorm,alpha,contraction\n";
    for (const TraceRecord& r : trace.records) {
        out << r.k << ',' << format_double(r.f) << ',' << format_double(r.gnorm)
            << ',' << format_double(r.alpha) << ',' << format_double(r.contraction)
            << '\n';
    }
}

std::vector<TraceRecord> read_trace_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line != "k,f,gnorm,alpha,contraction") {
        throw std::runtime_error("trace CSV " + path + ": unexpected header");
    }
    std::vector<TraceRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5) {
            throw std::runtime_error("trace CSV " + path + ": malformed row");
        }
        TraceRecord r;
        r.k = static_cast<int>(parse_field(fields[0]));
        r.f = parse_field(fields[1]);
        r.gnorm = parse_field(fields[2]);
        r.alpha = parse_field(fields[3]);
        r.contraction = parse_field(fields[4]);
        r.min_eig_contraction = std::numeric_limits<double>::quiet_NaN();
        records.push_back(r);
    }
    return records;
}

void write_trace_json(const std::string& path, const SolveTrace& trace,
                      const std::string& method_name) {
    json j;
    j["method"] = method_name;
    j["status"] = to_string(trace.status);
    j["iterations"] = trace.iterations;
    json records = json::array();
    for (const TraceRecord& r : trace.records) {
        records.push_back({{"k", r.k},
                           {"f", r.f},
                           {"gnorm", r.gnorm},
                           {"alpha", r.alpha},
                           {"contraction", r.contraction},
                           {"min_eig_contraction", r.min_eig_contraction}});
    }
    j["records"] = std::move(records);
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

void write_stability_grid_json(const std::string& path,
                               std::span<const StabilityCell> cells) {
    json grid = json::array();
    for (const StabilityCell& cell : cells) {
        json c;
        c["lambda"] = cell.lambda;
        c["p"] = cell.p;
        c["kind"] = to_string(cell.kind);
        if (cell.positive.exists) {
            c["eps_star"] = cell.positive.value;
            c["criterion"] = cell.criterion;
            c["mu_abs"] = cell.mu_abs;
        } else {
            c["eps_star"] = nullptr;
            c["criterion"] = nullptr;
            c["mu_abs"] = nullptr;
        }
        c["at_threshold"] = cell.positive.at_threshold;
        c["label"] = to_string(cell.label);
        c["empirical_label"] = to_string(cell.empirical);
        c["empirical_limit"] = std::isfinite(cell.empirical_limit)
                                   ? json(cell.empirical_limit)
                                   : json(nullptr);
        c["pole"] = cell.hit_pole;
        c["agreement"] = cell.agreement;
        grid.push_back(std::move(c));
    }
    auto out = open_out(path);
    out << grid.dump(2) << "\n";
}

}  // namespace specstep
