#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace meanwidth {

/// One computed quantity as emitted by the command-line tool.
struct OutputRecord {
  std::string quantity;
  double value = 0.0;
  std::optional<double> error_estimate;
  std::string method;
  std::string provenance;  // theorem | paper_conjecture | monte_carlo
  std::optional<std::int64_t> n;

  bool operator==(const OutputRecord&) const = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

enum class OutputFormat { json, csv, pretty };

/// JSON: an array of objects with absent fields as null.
/// CSV: header `quantity,value,error_estimate,method,provenance,n`, reals
/// with 17 significant digits, absent fields empty.
/// Pretty: aligned columns, reals with 12 significant digits.
void write_records(std::ostream& out, std::span<const OutputRecord> records, OutputFormat format);

std::vector<OutputRecord> parse_json_records(std::string_view text);

}  // namespace meanwidth
