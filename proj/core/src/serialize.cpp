#include "hecke/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace hecke {

namespace {

using nlohmann::json;

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses "[a,b,c]" (brackets optional) into integers; whitespace tolerated.
std::vector<Integer> parse_integer_list(std::string_view text, const char* what) {
  text = strip(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError(std::string("unterminated ") + what + ": " + std::string(text));
    text = strip(text.substr(1, text.size() - 2));
  }
  std::vector<Integer> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = strip(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    std::size_t digits_from = (!item.empty() && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
    if (item.size() == digits_from ||
        !std::all_of(item.begin() + static_cast<std::ptrdiff_t>(digits_from), item.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(std::string("bad entry '") + std::string(item) + "' in " + what);
    std::string digits(item.substr(item[0] == '+' ? 1 : 0));
    out.emplace_back(digits);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<int> to_ints(const std::vector<Integer>& v, const char* what) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const Integer& x : v) {
    if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
      throw ParseError(std::string(what) + " entry out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    auto v = parse_integer_list(j.get<std::string>(), "integer");
    if (v.size() == 1) return v[0];
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json poly_to_json(const PolyZ& p) {
  json arr = json::array();
  for (const Integer& c : p.coeffs()) arr.push_back(integer_to_json(c));
  return arr;
}

PolyZ poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array, got " + j.dump());
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return PolyZ(std::move(c));
}

json tree_to_json(std::span<const PolyZ> leaves, int m) {
  if (m == 0) return poly_to_json(leaves[0]);
  const std::size_t B = factorial(m);
  json arr = json::array();
  for (int k = 0; k <= m; ++k) arr.push_back(tree_to_json(leaves.subspan(static_cast<std::size_t>(k) * B, B), m - 1));
  return arr;
}

void tree_from_json(const json& j, int m, std::vector<PolyZ>& out) {
  if (m == 0) {
    out.push_back(poly_from_json(j));
    return;
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(m + 1))
    throw ParseError("nested node of rank " + std::to_string(m) + " needs " + std::to_string(m + 1) + " children");
  for (const auto& c : j) tree_from_json(c, m - 1, out);
}

}  // namespace

std::string format_poly(const PolyZ& p) { return poly_to_json(p).dump(); }

PolyZ parse_poly(std::string_view text) { return PolyZ(parse_integer_list(text, "polynomial")); }

std::string format_tower(const Tower& t) {
  std::string out = "[";
  for (int j = 1; j <= t.size(); ++j) {
    if (j > 1) out += ',';
    out += std::to_string(t.digit(j));
  }
  return out + "]";
}

Tower parse_tower(std::string_view text) {
  try {
    return Tower(to_ints(parse_integer_list(text, "tower"), "tower"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Permutation parse_permutation(std::string_view text, int degree) {
  text = strip(text);
  try {
    if (!text.empty() && text.front() == '(') {
      std::vector<std::vector<int>> cycles;
      int max_point = 0;
      while (!text.empty()) {
        if (text.front() != '(') throw ParseError("expected '(' in cycle notation");
        std::size_t close = text.find(')');
        if (close == std::string_view::npos) throw ParseError("unterminated cycle");
        auto cycle = to_ints(parse_integer_list(text.substr(1, close - 1), "cycle"), "cycle");
        for (int x : cycle) max_point = std::max(max_point, x);
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        text = strip(text.substr(close + 1));
      }
      return Permutation::from_cycles(std::max({degree, max_point, 1}), cycles);
    }
    Permutation p(to_ints(parse_integer_list(text, "permutation"), "permutation"));
    return degree > p.degree() ? p.extended(degree) : p;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_cycles(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::string format_images(const Permutation& p) {
  std::string out = "[";
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out + "]";
}

std::string render_tower_diagram(const Tower& t) {
  const int m = t.size();
  if (m == 0) return "(identity)\n";
  const int height = *std::max_element(t.digits().begin(), t.digits().end());
  const int width = static_cast<int>(std::to_string(m).size()) + 1;
  auto cell = [&](const std::string& s) { return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s; };
  std::string out;
  for (int row = height; row >= 1; --row) {
    for (int j = 1; j <= m; ++j) out += row <= t.digit(j) ? cell(std::to_string(j - row + 1)) : cell(".");
    out += '\n';
  }
  out += std::string(static_cast<std::size_t>(width * m), '-') + '\n';
  for (int j = 1; j <= m; ++j) out += cell(std::to_string(j));
  out += '\n';
  return out;
}

std::vector<int> diagram_column_heights(std::string_view diagram) {
  std::istringstream in{std::string(diagram)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    std::string_view s = strip(line);
    if (s == "(identity)") return {};
    if (!s.empty() && s.front() == '-') break;
    std::istringstream cells{line};
    std::vector<std::string> row;
    for (std::string c; cells >> c;) row.push_back(c);
    rows.push_back(std::move(row));
  }
  std::string index_line;
  std::getline(in, index_line);
  std::istringstream idx{index_line};
  int m = 0;
  for (std::string c; idx >> c;) ++m;
  std::vector<int> heights(static_cast<std::size_t>(m), 0);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m) throw ParseError("diagram row width differs from column count");
    for (int j = 0; j < m; ++j)
      if (row[static_cast<std::size_t>(j)] != ".") ++heights[static_cast<std::size_t>(j)];
  }
  return heights;
}

std::string to_json(const SimpleElement& h) {
  json coeffs = json::array();
  for (std::size_t r = 0; r < h.dimension(); ++r)
    if (!h.coeff(r).is_zero()) coeffs.push_back({{"rank", r}, {"poly", poly_to_json(h.coeff(r))}});
  json j = {{"repr", "simple"}, {"m", h.m()}, {"coeffs", std::move(coeffs)}};
  return j.dump();
}

std::string to_json(const NestedElement& h) {
  json j = {{"repr", "nested"}, {"m", h.m()}, {"tree", tree_to_json(h.leaves(), h.m())}};
  return j.dump();
}

HeckeElement parse_hecke_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("repr") || !j.contains("m") || !j["m"].is_number_integer())
    throw ParseError("Hecke element JSON needs \"repr\" and integer \"m\"");
  const int m = j["m"].get<int>();
  if (m < 0 || m > 9) throw ParseError("rank m = " + std::to_string(m) + " outside [0, 9]");
  const std::string repr = j["repr"].get<std::string>();
  if (repr == "simple") {
    SimpleElement h(m);
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("simple element needs a \"coeffs\" array");
    for (const auto& entry : j["coeffs"]) {
      if (!entry.is_object() || !entry.contains("rank") || !entry.contains("poly") || !entry["rank"].is_number_integer())
        throw ParseError("coefficient entries need \"rank\" and \"poly\"");
      const auto r = entry["rank"].get<std::int64_t>();
      if (r < 0 || static_cast<std::uint64_t>(r) >= h.dimension())
        throw ParseError("rank " + std::to_string(r) + " outside [0, " + std::to_string(h.dimension()) + ")");
      h.coeff(static_cast<std::uint64_t>(r)) = poly_from_json(entry["poly"]);
    }
    return h;
  }
  if (repr == "nested") {
    if (!j.contains("tree")) throw ParseError("nested element needs a \"tree\"");
    std::vector<PolyZ> leaves;
    tree_from_json(j["tree"], m, leaves);
    return NestedElement(m, std::move(leaves));
  }
  throw ParseError("unknown repr '" + repr + "'");
}

SimpleElement as_simple(const HeckeElement& h) {
  if (auto s = std::get_if<SimpleElement>(&h)) return *s;
  return nested_to_simple(std::get<NestedElement>(h));
}

NestedElement as_nested(const HeckeElement& h) {
  if (auto n = std::get_if<NestedElement>(&h)) return *n;
  return simple_to_nested(std::get<SimpleElement>(h));
}

std::string format_terms(const SimpleElement& h) {
  std::string out;
  for (std::size_t r = 0; r < h.dimension(); ++r) {
    const PolyZ& c = h.coeff(r);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string T = "T" + format_tower(unrank(r, h.m()));
    if (c == one_elem()) {
      out += T;
    } else if (std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const Integer& x) { return x != 0; }) == 1) {
      out += to_string(c) + " " + T;
    } else {
      out += "(" + to_string(c) + ") " + T;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hecke
