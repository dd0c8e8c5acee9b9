#include "alcove_cli/render.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "alcove/qpoly.hpp"

namespace alcove::cli {
namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

bool all_scalars(const Json& arr) {
  for (const auto& e : arr) {
    if (e.is_structured()) return false;
  }
  return true;
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, rows);
  } else if (v.is_array() && all_scalars(v)) {
    std::string cell;
    for (std::size_t i = 0; i < v.size(); ++i) cell += (i ? ";" : "") + scalar_text(v[i]);
    rows.emplace_back(path, cell);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(path, scalar_text(v));
  }
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_csv(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::ostringstream out;
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << csv_cell(k) << ',' << csv_cell(v) << '\n';
  return out.str();
}

std::string render_markdown(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::ostringstream out;
  out << "| key | value |\n|---|---|\n";
  for (const auto& [k, v] : rows) out << "| " << md_cell(k) << " | " << md_cell(v) << " |\n";
  return out.str();
}

std::string render(const Json& doc, Format format) {
  switch (format) {
    case Format::kCsv: return render_csv(doc);
    case Format::kMarkdown: return render_markdown(doc);
    case Format::kJson: break;
  }
  return doc.dump(2) + "\n";
}

void attach_q_values(Json& doc, long q0) {
  if (doc.is_object()) {
    if (doc.contains("terms") && doc.contains("text") && doc["terms"].is_array()) {
      QPolynomial p;
      for (const auto& t : doc["terms"]) p.add_term(t[0].get<long>(), Integer(t[1].get<std::string>()));
      doc["value_at_q"] = to_string(p.evaluate(Integer(q0)));
      return;
    }
    for (auto& [k, child] : doc.items()) attach_q_values(child, q0);
  } else if (doc.is_array()) {
    for (auto& child : doc) attach_q_values(child, q0);
  }
}

}  // namespace alcove::cli
