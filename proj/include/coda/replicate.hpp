#pragma once

/**
 * @file replicate.hpp
 * @brief Row-by-row replication of the published coboundary tables,
 *        cohomology tables, coefficient formulas and stabilizer
 *        conditions. Expected values are encoded verbatim with their
 *        citations; mismatches are reported, never corrected.
 */

#include "coda/homology.hpp"

#include <string>
#include <vector>

namespace coda {

struct UnknownTableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableRow {
    std::string input;
    std::string expected;
    std::string computed;
    std::string citation;
    bool match = false;
};

struct TableReport {
    std::string table_id;
    std::vector<TableRow> rows;
    bool ok() const;
    size_t mismatches() const;
};

std::vector<std::string> replicate_ids();
TableReport replicate(const std::string& table_id, int depth = 12);
std::vector<TableReport> replicate_all(int depth = 12);

std::string to_json(const TableReport& report);
std::string to_json(const CohomologyReport& report);

}  // namespace coda
