#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "cli.hpp"
#include "json.hpp"

namespace walsh::cli {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string render(const Cell& c, int precision) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return std::to_string(v); },
                        [precision](double v) { return format_number(v, precision); },
                        [](const std::string& v) { return v; },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                    },
                    c);
}

// Doubles go through the same decimal text as the CSV so both encodings agree.
nlohmann::ordered_json to_json(const Cell& c, int precision) {
  return std::visit(Overloaded{
                        [](std::int64_t v) { return nlohmann::ordered_json(v); },
                        [precision](double v) {
                          if (!std::isfinite(v)) return nlohmann::ordered_json(format_number(v, precision));
                          return nlohmann::ordered_json(std::strtod(format_number(v, precision).c_str(), nullptr));
                        },
                        [](const std::string& v) { return nlohmann::ordered_json(v); },
                        [](bool v) { return nlohmann::ordered_json(v); },
                    },
                    c);
}

}  // namespace

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t, int precision) {
  for (const auto& [key, value] : t.meta) os << "# " << key << ": " << render(value, precision) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i], precision);
    os << '\n';
  }
  if (!t.summary.empty()) os << "# summary: " << t.summary << '\n';
}

void write_json(std::ostream& os, const Table& t, int precision) {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : t.meta) doc["meta"][key] = to_json(value, precision);
  if (!t.summary.empty()) doc["meta"]["summary"] = t.summary;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      r[t.columns[i]] = to_json(row[i], precision);
    }
    doc["rows"].push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace walsh::cli
