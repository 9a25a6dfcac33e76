#pragma once

// CSV and JSON forms of a comparison matrix.
//
// CSV: n lines of n comma-separated positive numbers, row-major, no header.
// JSON: {"n": n, "rows": [[...], ...]}.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "pcm/comparison_matrix.hpp"

namespace pcm {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view token, std::size_t line) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("line " + std::to_string(line) + ": '" + std::string(token) +
                             "' is not a number",
                         line);
    }
    return value;
}

inline std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ec == std::errc{} ? ptr : buf);
}

}  // namespace detail

/// Parses CSV text. Blank lines are ignored. Reciprocity is checked with `tol`
/// and the lower triangle is rebuilt from the upper one.
inline ComparisonMatrix parse_csv(std::string_view text, double tol = kReciprocityTolerance) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = detail::trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;

        std::vector<double> row;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            row.push_back(detail::parse_number(rest.substr(0, comma), line_no));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(rows.front().size()) + " values, got " +
                                 std::to_string(row.size()),
                             line_no);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", 0);
    const std::size_t n = rows.size();
    if (rows.front().size() != n) {
        throw ParseError("matrix is not square: " + std::to_string(n) + " rows of " +
                             std::to_string(rows.front().size()) + " values",
                         line_no);
    }
    if (n < 2) throw ParseError("matrix order must be at least 2", line_no);

    std::vector<double> entries;
    entries.reserve(n * n);
    for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
    return ComparisonMatrix::from_entries(n, entries, tol);
}

/// Shortest round-trip decimal form, one row per line, no trailing newline.
inline std::string serialize_csv(const ComparisonMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        if (i) out += '\n';
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += detail::format_number(m(i, j));
        }
    }
    return out;
}

inline nlohmann::json to_json(const ComparisonMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        rows.push_back(std::vector<double>(m.row(i).begin(), m.row(i).end()));
    }
    return {{"n", m.order()}, {"rows", std::move(rows)}};
}

inline ComparisonMatrix matrix_from_json(const nlohmann::json& j, double tol = kReciprocityTolerance) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows")) {
        throw ParseError("matrix JSON needs fields \"n\" and \"rows\"", 0);
    }
    const auto n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n) throw ParseError("\"rows\" must hold n arrays", 0);
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = rows[i];
        if (!r.is_array() || r.size() != n) {
            throw ParseError("row " + std::to_string(i + 1) + " must hold n numbers", i + 1);
        }
        for (const auto& v : r) {
            if (!v.is_number()) throw ParseError("row " + std::to_string(i + 1) + ": not a number", i + 1);
            entries.push_back(v.get<double>());
        }
    }
    return ComparisonMatrix::from_entries(n, entries, tol);
}

}  // namespace pcm
