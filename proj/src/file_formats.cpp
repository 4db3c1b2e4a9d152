#include "maglab/file_formats.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <vector>

namespace maglab {

namespace {

[[noreturn]] void parse_fail(const std::string& source, std::size_t line,
                             const std::string& what) {
    throw Error(Errc::input_parse_error,
                source + ":" + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

/// Non-blank content lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = strip(raw);
        if (!s.empty()) out.emplace_back(lineno, std::move(s));
    }
    return out;
}

std::vector<double> parse_doubles(const std::string& source, std::size_t lineno,
                                  const std::string& line) {
    std::vector<double> values;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok == "inf" || tok == "Inf" || tok == "INF") {
            values.push_back(std::numeric_limits<double>::infinity());
            continue;
        }
        double v = 0.0;
        const char* first = tok.data();
        const char* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            parse_fail(source, lineno, "cannot parse number '" + tok + "'");
        }
        values.push_back(v);
    }
    return values;
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::input_parse_error, "cannot open '" + path + "'");
    }
    return in;
}

}  // namespace

PointCloud read_point_cloud(std::istream& in, const std::string& source) {
    const auto lines = content_lines(in);
    if (lines.empty()) {
        throw Error(Errc::input_parse_error, source + ": missing header line");
    }

    const auto& [header_line, header] = lines.front();
    std::size_t dim = 0;
    double p = 0.0;
    bool have_dim = false, have_p = false;
    std::istringstream hs(header);
    std::string tok;
    while (hs >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            parse_fail(source, header_line, "expected key=value, got '" + tok + "'");
        }
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "dim") {
            const auto parsed = parse_doubles(source, header_line, val);
            if (parsed.size() != 1 || parsed[0] < 1 ||
                parsed[0] != std::floor(parsed[0])) {
                parse_fail(source, header_line, "dim must be a positive integer");
            }
            dim = static_cast<std::size_t>(parsed[0]);
            have_dim = true;
        } else if (key == "p") {
            const auto parsed = parse_doubles(source, header_line, val);
            if (parsed.size() != 1 || !(parsed[0] >= 1.0)) {
                parse_fail(source, header_line, "p must be >= 1 (or inf)");
            }
            p = parsed[0];
            have_p = true;
        } else {
            parse_fail(source, header_line, "unknown header key '" + key + "'");
        }
    }
    if (!have_dim || !have_p) {
        parse_fail(source, header_line, "header must set both dim and p");
    }

    PointCloud cloud;
    cloud.dim = dim;
    cloud.p = p;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lineno, text] = lines[i];
        auto values = parse_doubles(source, lineno, text);
        if (values.size() != dim) {
            parse_fail(source, lineno,
                       "expected " + std::to_string(dim) + " coordinates, got " +
                           std::to_string(values.size()));
        }
        cloud.points.push_back(std::move(values));
    }
    return cloud;
}

PointCloud load_point_cloud(const std::string& path) {
    auto in = open_or_fail(path);
    return read_point_cloud(in, path);
}

SquareMatrix read_distance_matrix(std::istream& in, const std::string& source) {
    const auto lines = content_lines(in);
    if (lines.empty()) {
        throw Error(Errc::input_parse_error, source + ": missing header line");
    }

    const auto& [header_line, header] = lines.front();
    if (header.rfind("n=", 0) != 0) {
        parse_fail(source, header_line, "expected header n=<count>");
    }
    const auto parsed = parse_doubles(source, header_line, header.substr(2));
    if (parsed.size() != 1 || parsed[0] < 0 || parsed[0] != std::floor(parsed[0])) {
        parse_fail(source, header_line, "n must be a nonnegative integer");
    }
    const auto n = static_cast<std::size_t>(parsed[0]);

    if (lines.size() != n + 1) {
        throw Error(Errc::input_parse_error,
                    source + ": expected " + std::to_string(n) + " matrix rows, got " +
                        std::to_string(lines.size() - 1));
    }
    SquareMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [lineno, text] = lines[i + 1];
        const auto row = parse_doubles(source, lineno, text);
        if (row.size() != n) {
            parse_fail(source, lineno,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(row.size()));
        }
        for (std::size_t j = 0; j < n; ++j) d(i, j) = row[j];
    }
    return d;
}

SquareMatrix load_distance_matrix(const std::string& path) {
    auto in = open_or_fail(path);
    return read_distance_matrix(in, path);
}

IntervalUnion read_interval_union(std::istream& in, const std::string& source) {
    std::vector<Interval> raw;
    for (const auto& [lineno, text] : content_lines(in)) {
        const auto values = parse_doubles(source, lineno, text);
        if (values.size() != 2) {
            parse_fail(source, lineno, "expected an 'a b' pair");
        }
        if (!(values[0] <= values[1])) {
            parse_fail(source, lineno, "interval endpoints out of order");
        }
        raw.push_back({values[0], values[1]});
    }
    return normalize_intervals(std::move(raw));
}

IntervalUnion load_interval_union(const std::string& path) {
    auto in = open_or_fail(path);
    return read_interval_union(in, path);
}

}  // namespace maglab
