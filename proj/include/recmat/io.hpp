#pragma once

/**
 * @file io.hpp
 * @brief Text encodings of triangles and verification reports.
 *
 * Triangle CSV: one line per row, cells in canonical polynomial text joined by
 * commas. Triangle JSON: {"family": ..., "depth": N, "rows": [[...], ...]}.
 * Reports are emitted as newline-delimited JSON objects or CSV lines.
 */

#include "recmat/identities.hpp"
#include "recmat/poly.hpp"
#include "recmat/triangle.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace recmat {

using PolyRows = std::vector<std::vector<Poly>>;

inline PolyRows rows_of(const Triangle& t) { return t.rows(); }

inline std::string triangle_to_csv(const PolyRows& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += row[k].to_string();
        }
        out += '\n';
    }
    return out;
}

inline PolyRows triangle_from_csv(std::string_view text) {
    PolyRows rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Poly> row;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            row.push_back(parse_poly(std::string_view(line).substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::ordered_json triangle_to_json(const PolyRows& rows, const std::string& family) {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["depth"] = static_cast<int>(rows.size()) - 1;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const Poly& p : row) r.push_back(p.to_string());
        arr.push_back(std::move(r));
    }
    j["rows"] = std::move(arr);
    return j;
}

inline PolyRows triangle_from_json(const nlohmann::ordered_json& j) {
    PolyRows rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Poly> row;
        for (const auto& cell : r) row.push_back(parse_poly(cell.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::ordered_json report_to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["params"] = std::move(params);
    j["lhs"] = r.lhs.to_string();
    j["rhs"] = r.rhs.to_string();
    j["equal"] = r.equal;
    return j;
}

inline VerifyReport report_from_json(const nlohmann::ordered_json& j) {
    VerifyReport r;
    r.identity_id = j.at("identity").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.parameters.emplace_back(k, v.get<long long>());
    r.lhs = parse_poly(j.at("lhs").get<std::string>());
    r.rhs = parse_poly(j.at("rhs").get<std::string>());
    r.equal = j.at("equal").get<bool>();
    return r;
}

inline std::string params_to_string(const VerifyReport& r) {
    std::string s;
    for (const auto& [k, v] : r.parameters) {
        if (!s.empty()) s += ';';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

inline const char* kReportCsvHeader = "identity,params,equal,lhs,rhs";

inline std::string report_to_csv(const VerifyReport& r) {
    return r.identity_id + "," + params_to_string(r) + "," + (r.equal ? "true" : "false") + "," +
           r.lhs.to_string() + "," + r.rhs.to_string();
}

}  // namespace recmat
