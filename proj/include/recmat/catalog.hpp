#pragma once

/**
 * @file catalog.hpp
 * @brief Embedded reference data: OEIS prefixes and the printed example tables.
 */

#include <map>
#include <string>
#include <vector>

namespace recmat {

struct CatalogEntry {
    std::string description;
    /// Sequence terms, or a triangle flattened row by row.
    std::vector<long long> values;
};

/// Reference prefixes keyed by OEIS id.
///
/// A001003 is stored starting at s_0 = 1, s_1 = 3, i.e. the column 0 of the
/// sigma = 3, tau = 2 triangle. OEIS lists the same numbers with offset 0 and
/// an extra leading 1 (a(0) = a(1) = 1), so the stored list is a(1), a(2), ....
inline const std::map<std::string, CatalogEntry>& sequence_catalog() {
    static const std::map<std::string, CatalogEntry> catalog{
        {"A000108",
         {"Catalan numbers C_0, C_1, ...", {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796}}},
        {"A001003",
         {"Little Schroeder numbers s_0 = 1, s_1 = 3, ... (OEIS a(1), a(2), ...)",
          {1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859}}},
        {"A039598",
         {"Shapiro's Catalan triangle B(n,k) = (k+1)/(n+1) C(2n+2, n-k), by rows",
          {1, 2, 1, 5, 4, 1, 14, 14, 6, 1, 42, 48, 27, 8, 1, 132, 165, 110, 44, 10, 1}}},
        {"A110440",
         {"Little Schroeder triangle s(n,k) = s(n-1,k-1) + 3 s(n-1,k) + 2 s(n-1,k+1), by rows",
          {1, 3, 1, 11, 6, 1, 45, 31, 9, 1, 197, 156, 60, 12, 1, 903, 785, 360, 98, 15, 1}}},
        {"A033184",
         {"Ballot numbers C(n,k) = (k+1)/(n+1) C(2n-k, n), by rows",
          {1, 1, 1, 2, 2, 1, 5, 5, 3, 1, 14, 14, 9, 4, 1, 42, 42, 28, 14, 5, 1}}},
    };
    return catalog;
}

/// Printed example tables; polynomial cells in canonical text form.
struct ReferenceTable {
    std::string name;
    std::vector<std::vector<std::string>> rows;
    /// Row sums (weighted by the family's tau^k) where the table prints them.
    std::vector<long long> row_sums;
};

inline const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables{
        {"shapiro",
         {{"1"}, {"2", "1"}, {"5", "4", "1"}, {"14", "14", "6", "1"}, {"42", "48", "27", "8", "1"},
          {"132", "165", "110", "44", "10", "1"}},
         {}},
        {"shapiro-minors",
         {{"1"}, {"3", "1"}, {"14", "10", "1"}, {"84", "90", "21", "1"}, {"594", "825", "308", "36", "1"}},
         {1, 4, 25, 196, 1764}},
        {"schroder",
         {{"1"}, {"3", "1"}, {"11", "6", "1"}, {"45", "31", "9", "1"}, {"197", "156", "60", "12", "1"},
          {"903", "785", "360", "98", "15", "1"}},
         {}},
        {"schroder-minors",
         {{"1"}, {"7", "1"}, {"71", "23", "1"}, {"913", "456", "48", "1"}, {"13777", "9060", "1560", "82", "1"}},
         {1, 9, 121, 2025, 38809}},
        {"narayana",
         {{"1"},
          {"z+1", "1"},
          {"z^2+3z+1", "2z+2", "1"},
          {"z^3+6z^2+6z+1", "3z^2+8z+3", "3z+3", "1"},
          {"z^4+10z^3+20z^2+10z+1", "4z^3+20z^2+20z+4", "6z^2+15z+6", "4z+4", "1"}},
         {}},
        {"xy0",
         {{"1"},
          {"x", "1"},
          {"x^2", "x+y", "1"},
          {"x^3", "x^2+xy+y^2", "x+2y", "1"},
          {"x^4", "x^3+x^2y+xy^2+y^3", "x^2+2xy+3y^2", "x+3y", "1"}},
         {}},
    };
    return tables;
}

}  // namespace recmat
