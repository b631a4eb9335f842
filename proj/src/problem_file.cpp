#include "dirac/problem_file.hpp"

#include "dirac/error.hpp"
#include "dirac/parser.hpp"

#include <fstream>
#include <sstream>

namespace dirac {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) out.push_back(trim(part));
    return out;
}

}  // namespace

std::pair<Rational, Rational> ProblemFile::resolved_interval() const {
    if (interval) return *interval;
    Rational lo(0), hi(0);
    for (const auto& c : conds) {
        for (const auto& [key, f] : c.op().eval_diff_part()) {
            lo = meet(lo, key.first);
            hi = join(hi, key.first);
        }
        for (const auto& [a, fg] : c.op().eval_int_part()) {
            lo = meet(lo, a);
            hi = join(hi, a);
        }
    }
    if (lo == hi) hi = lo + Rational(1);
    return {lo, hi};
}

ProblemFile parse_problem(std::string_view text) {
    ProblemFile pf;
    bool have_T = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'", 0);
        std::string key = trim(std::string_view(line).substr(0, colon));
        std::string value = trim(std::string_view(line).substr(colon + 1));
        try {
            if (key == "T") {
                pf.T = parse_operator(value);
                have_T = true;
            } else if (key == "cond") {
                pf.conds.emplace_back(parse_operator(value));
            } else if (key == "fundamental") {
                for (const auto& part : split_commas(value)) pf.fundamental.push_back(as_poly(parse_expr(part)));
            } else if (key == "interval") {
                auto parts = split_commas(value);
                if (parts.size() != 2) throw DomainError("interval needs two endpoints");
                pf.interval = {as_poly(parse_expr(parts[0])).constant_value(),
                               as_poly(parse_expr(parts[1])).constant_value()};
                auto [a, b] = *pf.interval;
                if (!(a < b)) throw DomainError("interval needs alpha < beta");
            } else if (key == "force") {
                pf.force = as_piecewise(parse_expr(value));
            } else {
                throw DomainError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
        } catch (const Error& e) {
            throw DomainError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_T) throw DomainError("problem file has no 'T:' line");
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace dirac
