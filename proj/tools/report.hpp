#pragma once

#include "ccstats/bigint.hpp"
#include "ccstats/distribution.hpp"
#include "ccstats/field.hpp"

#include "json.hpp"

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace ccstats::cli {

using nlohmann::json;

/// Fixed float formatting so that output is byte-identical across runs and
/// worker counts.
std::string fmt_double(double value);

json rat_json(const BigRat& value);
std::string csv_rat(const BigRat& value);

json field_json(const Field& field);
json table_json(const DistributionTable& table);

/// Where a command writes its report: a file when --out is given, stdout
/// otherwise.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path);
    ~OutputTarget();
    std::ostream& stream();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Minimal CSV emission: fields joined by commas, one row per line. Values
/// containing commas are not expected (rationals use "num/den").
void csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace ccstats::cli
