#include "meanwidth/records.hpp"

#include <cstdio>
#include <iomanip>

namespace meanwidth {

namespace {

std::string format_real(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"quantity", r.quantity},
                     {"value", r.value},
                     {"error_estimate", nullptr},
                     {"method", r.method},
                     {"provenance", r.provenance},
                     {"n", nullptr}};
  if (r.error_estimate) j["error_estimate"] = *r.error_estimate;
  if (r.n) j["n"] = *r.n;
}

void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("quantity").get_to(r.quantity);
  j.at("value").get_to(r.value);
  j.at("method").get_to(r.method);
  j.at("provenance").get_to(r.provenance);
  r.error_estimate.reset();
  r.n.reset();
  if (j.contains("error_estimate") && !j["error_estimate"].is_null()) {
    r.error_estimate = j["error_estimate"].get<double>();
  }
  if (j.contains("n") && !j["n"].is_null()) r.n = j["n"].get<std::int64_t>();
}

void write_records(std::ostream& out, std::span<const OutputRecord> records, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : records) arr.push_back(r);
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "quantity,value,error_estimate,method,provenance,n\n";
      for (const auto& r : records) {
        out << r.quantity << ',' << format_real(r.value, 17) << ','
            << (r.error_estimate ? format_real(*r.error_estimate, 17) : "") << ',' << r.method
            << ',' << r.provenance << ',' << (r.n ? std::to_string(*r.n) : "") << '\n';
      }
      break;
    case OutputFormat::pretty: {
      std::size_t width = 8;
      for (const auto& r : records) width = std::max(width, r.quantity.size());
      for (const auto& r : records) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.quantity
            << std::setw(22) << format_real(r.value, 12);
        out << std::setw(14)
            << (r.error_estimate ? "+/- " + format_real(*r.error_estimate, 3) : std::string());
        out << std::setw(12) << r.method << r.provenance;
        if (r.n) out << "  n=" << *r.n;
        out << '\n';
      }
      break;
    }
  }
}

std::vector<OutputRecord> parse_json_records(std::string_view text) {
  return nlohmann::json::parse(text).get<std::vector<OutputRecord>>();
}

}  // namespace meanwidth
