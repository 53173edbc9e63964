#include "ctri/triangle_io.hpp"

#include <sstream>
#include <stdexcept>

namespace ctri {

std::string to_text(const Triangle& t) {
  std::ostringstream os;
  os << t.palette() << ' ' << t.depth() << '\n';
  for (const Row& r : t.rows()) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ' ';
      os << r[i];
    }
    os << '\n';
  }
  return os.str();
}

namespace {

Color checked_color(long long v) {
  if (v < 1 || v > 0xFFFF) throw std::invalid_argument("color value out of range: " + std::to_string(v));
  return static_cast<Color>(v);
}

}  // namespace

Triangle triangle_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty triangle text");
  std::istringstream header(line);
  int n = 0, depth = 0;
  if (!(header >> n >> depth) || n < 1 || depth < 1) {
    throw std::invalid_argument("triangle header must read \"n N\" with n, N >= 1");
  }
  std::vector<Row> rows;
  for (int k = 1; k <= depth; ++k) {
    if (!std::getline(is, line)) throw std::invalid_argument("missing line for level " + std::to_string(k));
    std::istringstream ls(line);
    std::vector<Color> e;
    long long v = 0;
    while (ls >> v) e.push_back(checked_color(v));
    if (!ls.eof()) throw std::invalid_argument("non-numeric token on level " + std::to_string(k));
    rows.emplace_back(n, k, std::move(e));
  }
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("trailing content after level " + std::to_string(depth));
    }
  }
  return Triangle(std::move(rows));
}

nlohmann::json to_json(const Triangle& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& r : t.rows()) {
    rows.push_back(std::vector<int>(r.entries().begin(), r.entries().end()));
  }
  return {{"n", t.palette()}, {"N", t.depth()}, {"rows", rows}};
}

Triangle triangle_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int depth = j.at("N").get<int>();
  const auto& rows_json = j.at("rows");
  if (!rows_json.is_array() || static_cast<int>(rows_json.size()) != depth) {
    throw std::invalid_argument("\"rows\" must be an array of N rows");
  }
  std::vector<Row> rows;
  for (int k = 1; k <= depth; ++k) {
    std::vector<Color> e;
    for (const auto& v : rows_json[static_cast<std::size_t>(k - 1)]) e.push_back(checked_color(v.get<long long>()));
    rows.emplace_back(n, k, std::move(e));
  }
  return Triangle(std::move(rows));
}

Triangle parse_triangle(const std::string& content) {
  const auto pos = content.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && content[pos] == '{') {
    return triangle_from_json(nlohmann::json::parse(content));
  }
  return triangle_from_text(content);
}

}  // namespace ctri
