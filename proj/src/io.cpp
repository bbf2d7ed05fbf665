#include "interp/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace interp::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string read_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw ParseError("cannot read '" + std::string(path) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(std::string(text), &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  if (used != text.size()) throw ParseError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  return v;
}

SeriesQ preset(std::string_view name, int order) {
  if (order < 0) throw ParseError("preset order must be >= 0");
  static const std::map<std::string, SeriesQ (*)(int), std::less<>> table{
      {"geom", presets::geom}, {"id", presets::id},   {"one", presets::one},
      {"expx", presets::expx}, {"xe", presets::xe},   {"xsq", presets::xsq},
  };
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown preset '" + std::string(name) + "'");
  return it->second(order);
}

json rat_list(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

std::vector<Rat> rats_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<Rat> out;
  for (const auto& e : j) out.push_back(rat_from_json(e));
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string csv_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + r[i];
    out += '\n';
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "pretty") return Format::pretty;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty coefficient list");
  std::vector<Rat> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_rat(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

SeriesQ parse_series(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty series");
  if (text.front() == '@') return parse_series(read_file(text.substr(1)));
  if (text.front() == '{') return series_from_json(parse_json(text));
  if (text.starts_with("preset:")) {
    text.remove_prefix(7);
    const auto at = text.find('@');
    if (at == std::string_view::npos) throw ParseError("preset needs '@order'");
    return preset(trim(text.substr(0, at)), parse_int(text.substr(at + 1), "preset order"));
  }
  int val = 0;
  if (text.starts_with("val=")) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("'val=' prefix needs a ';'");
    val = parse_int(text.substr(4, semi - 4), "valuation");
    text.remove_prefix(semi + 1);
  }
  return SeriesQ(val, parse_rat_list(text));
}

std::string series_text(const SeriesQ& a) {
  std::string out = a.val() != 0 ? "val=" + std::to_string(a.val()) + ";" : "";
  for (int k = a.val(); k <= a.order(); ++k) out += (k > a.val() ? "," : "") + to_string(a.coef(k));
  return out;
}

json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

json to_json(const SeriesQ& a) {
  json c = json::array();
  for (const auto& q : a.coeffs()) c.push_back(to_json(q));
  return {{"val", a.val()}, {"order", a.order()}, {"coeffs", c}, {"param", nullptr}};
}

json to_json(const SeriesP& a) {
  json c = json::array();
  for (const auto& p : a.coeffs()) c.push_back(rat_list(p.coeffs()));
  const std::string param = param_of(a);
  return {{"val", a.val()}, {"order", a.order()}, {"coeffs", c}, {"param", param.empty() ? json(nullptr) : json(param)}};
}

SeriesQ series_from_json(const json& j) {
  if (field(j, "param").is_string()) throw RingMismatch("expected a series over Q, got one in '" + j.at("param").get<std::string>() + "'");
  return SeriesQ(int_field(j, "val"), rats_from_json(field(j, "coeffs"), "coeffs"), int_field(j, "order"));
}

SeriesP series_p_from_json(const json& j) {
  const json& pj = field(j, "param");
  const std::string param = pj.is_string() ? pj.get<std::string>() : "";
  std::vector<Poly> c;
  for (const auto& e : field(j, "coeffs")) c.emplace_back(rats_from_json(e, "polynomial coefficient"), param);
  return SeriesP(int_field(j, "val"), std::move(c), int_field(j, "order"));
}

json to_json(const GroupElem& g) { return {{"A", to_json(g.A())}, {"alpha", to_json(g.alpha())}}; }

json to_json(const TriMatQ& m) {
  json rows = json::array();
  for (const auto& r : m.rows()) rows.push_back(rat_list(r));
  return {{"n", m.n()}, {"rows", rows}};
}

TriMatQ trimat_from_json(const json& j) {
  const int n = int_field(j, "n");
  const json& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("matrix needs n rows");
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) r.push_back(rats_from_json(row, "matrix row"));
  return TriMatQ::from_rows(std::move(r));
}

json to_json(const PolyMat& p) {
  json polys = json::array();
  for (const auto& q : p.polys()) polys.push_back(rat_list(q.coeffs()));
  return {{"K", p.K()}, {"polys", polys}};
}

PolyMat polymat_from_json(const json& j) {
  const int k = int_field(j, "K");
  const json& polys = field(j, "polys");
  if (!polys.is_array() || static_cast<int>(polys.size()) != k + 1) throw ParseError("PolyMat needs K+1 polynomials");
  std::vector<Poly> p;
  for (const auto& e : polys) p.emplace_back(rats_from_json(e, "polynomial"), "u");
  return PolyMat(std::move(p));
}

PolyMat parse_polymat(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '@') return polymat_from_json(parse_json(read_file(text.substr(1))));
  return polymat_from_json(parse_json(text));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string render(const SeriesQ& a, Format f) {
  switch (f) {
    case Format::json:
      return to_json(a).dump() + "\n";
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{{"exponent", "coefficient"}};
      for (int k = a.val(); k <= a.order(); ++k) rows.push_back({std::to_string(k), to_string(a.coef(k))});
      return csv_rows(rows);
    }
    case Format::pretty:
      break;
  }
  return to_string(a) + "\n";
}

std::string render(const SeriesP& a, Format f) {
  switch (f) {
    case Format::json:
      return to_json(a).dump() + "\n";
    case Format::csv: {
      const std::string param = param_of(a);
      std::vector<std::vector<std::string>> rows{{"exponent", (param.empty() ? "param" : param) + "_degree", "coefficient"}};
      for (int k = a.val(); k <= a.order(); ++k) {
        const Poly& p = a.coef(k);
        for (int d = 0; d <= p.degree(); ++d)
          if (!is_zero(p.coeff(d))) rows.push_back({std::to_string(k), std::to_string(d), to_string(p.coeff(d))});
      }
      return csv_rows(rows);
    }
    case Format::pretty:
      break;
  }
  std::string out;
  for (int k = a.val(); k <= a.order(); ++k) out += "x^" + std::to_string(k) + ": " + to_string(a.coef(k)) + "\n";
  return out;
}

std::string render(const GroupElem& g, Format f) {
  switch (f) {
    case Format::json:
      return to_json(g).dump() + "\n";
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{{"exponent", "A", "alpha"}};
      for (int k = 0; k <= g.order(); ++k) rows.push_back({std::to_string(k), to_string(g.A().coef(k)), to_string(g.alpha().coef(k))});
      return csv_rows(rows);
    }
    case Format::pretty:
      break;
  }
  return "A     = " + to_string(g.A()) + "\nalpha = " + to_string(g.alpha()) + "\n";
}

std::string render(const TriMatQ& m, Format f) {
  switch (f) {
    case Format::json:
      return to_json(m).dump() + "\n";
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (int i = 0; i < m.n(); ++i) {
        std::vector<std::string> r;
        for (int j = 0; j < m.n(); ++j) r.push_back(j <= i ? to_string(m.at(i, j)) : "0");
        rows.push_back(std::move(r));
      }
      return csv_rows(rows);
    }
    case Format::pretty:
      break;
  }
  return to_string(m) + "\n";
}

std::string render(const PolyMat& p, Format f) {
  switch (f) {
    case Format::json:
      return to_json(p).dump() + "\n";
    case Format::csv: {
      std::vector<std::vector<std::string>> rows{{"diagonal", "u_degree", "coefficient"}};
      for (int k = 0; k <= p.K(); ++k)
        for (int d = 0; d <= p.p(k).degree(); ++d)
          if (!is_zero(p.p(k).coeff(d))) rows.push_back({std::to_string(k), std::to_string(d), to_string(p.p(k).coeff(d))});
      return csv_rows(rows);
    }
    case Format::pretty:
      break;
  }
  return to_string(p);
}

}  // namespace interp::io
