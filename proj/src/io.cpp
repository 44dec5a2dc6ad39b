#include "gimel/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gimel/errors.hpp"

namespace gimel {

namespace {

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::MalformedInput, "fixture field '" + field + "': " + what);
}

int parse_degree_key(const std::string& key, const std::string& field) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    schema_error(field, "key '" + key + "' is not an integer degree");
  }
}

std::string rational_field(const Json& j, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  schema_error(field, "expected a rational string");
}

}  // namespace

GradedFreeComplex fixture_from_json(const Json& j) {
  if (!j.is_object()) schema_error("<root>", "expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) schema_error("n", "missing or not an integer");
  int n = j["n"].get<int>();
  if (n < 2) schema_error("n", "must be at least 2");
  std::string ring = j.value("ring", "equivariant");
  RingCtx ctx = RingCtx::equivariant(n);
  if (ring == "specialized") {
    if (!j.contains("potential") || !j["potential"].is_string()) schema_error("potential", "required for a specialized ring");
    ctx = RingCtx::specialized_from_string(j["potential"].get<std::string>());
    if (ctx.n() != n) schema_error("potential", "degree does not match n");
  } else if (ring != "equivariant") {
    schema_error("ring", "must be 'equivariant' or 'specialized'");
  }
  GradedFreeComplex c(ctx);
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_error("name", "expected a string");
    c.name = j["name"].get<std::string>();
  }
  if (!j.contains("modules") || !j["modules"].is_object()) schema_error("modules", "missing or not an object");
  for (const auto& [key, labels] : j["modules"].items()) {
    std::string field = "modules." + key;
    int deg = parse_degree_key(key, field);
    if (!labels.is_array()) schema_error(field, "expected a list of integer labels");
    auto& dst = c.modules[deg];
    for (const auto& l : labels) {
      if (!l.is_number_integer()) schema_error(field, "q-label " + l.dump() + " is not an integer");
      dst.push_back(l.get<int>());
    }
  }
  if (j.contains("differentials")) {
    if (!j["differentials"].is_object()) schema_error("differentials", "expected an object");
    for (const auto& [key, rows] : j["differentials"].items()) {
      std::string field = "differentials." + key;
      int deg = parse_degree_key(key, field);
      if (!rows.is_array()) schema_error(field, "expected a row-major matrix");
      std::size_t nr = c.rank(deg + 1), nc = c.rank(deg);
      if (rows.size() != nr) {
        schema_error(field, "has " + std::to_string(rows.size()) + " rows, expected rank of degree " +
                                std::to_string(deg + 1) + " = " + std::to_string(nr));
      }
      PolyMatrix m(nr, nc);
      for (std::size_t r = 0; r < nr; ++r) {
        if (!rows[r].is_array() || rows[r].size() != nc) {
          schema_error(field, "row " + std::to_string(r) + " must have " + std::to_string(nc) + " entries");
        }
        for (std::size_t col = 0; col < nc; ++col) {
          const auto& e = rows[r][col];
          std::string text;
          if (e.is_string()) {
            text = e.get<std::string>();
          } else if (e.is_number_integer()) {
            text = std::to_string(e.get<long long>());
          } else {
            schema_error(field, "entry [" + std::to_string(r) + "][" + std::to_string(col) + "] is not a polynomial string");
          }
          try {
            m.at(r, col) = ctx.parse(text);
          } catch (const Error& err) {
            schema_error(field + "[" + std::to_string(r) + "][" + std::to_string(col) + "]", err.what());
          }
        }
      }
      if (nr && nc) c.set_d(deg, std::move(m));
    }
  }
  return c;
}

Json fixture_to_json(const GradedFreeComplex& c) {
  Json j;
  if (!c.name.empty()) j["name"] = c.name;
  j["n"] = c.ctx.n();
  j["ring"] = c.ctx.is_equivariant() ? "equivariant" : "specialized";
  if (c.ctx.is_specialized()) j["potential"] = c.ctx.potential_string();
  Json modules = Json::object();
  for (const auto& [deg, labels] : c.modules) {
    if (!labels.empty()) modules[std::to_string(deg)] = labels;
  }
  j["modules"] = modules;
  Json diffs = Json::object();
  for (const auto& [deg, m] : c.differentials) {
    if (m.rows() == 0 || m.cols() == 0) continue;
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < m.cols(); ++col) row.push_back(c.ctx.to_string(m.at(r, col)));
      rows.push_back(row);
    }
    diffs[std::to_string(deg)] = rows;
  }
  j["differentials"] = diffs;
  return j;
}

GradedFreeComplex load_fixture(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  }
  try {
    GradedFreeComplex c = fixture_from_json(j);
    if (c.name.empty()) c.name = path;
    return c;
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void save_fixture(const GradedFreeComplex& c, const std::string& path) {
  write_text_file(path, dump_json(fixture_to_json(c)));
}

Json piecewise_to_json(const PiecewiseLinear& f) {
  Json j;
  Json ts = Json::array(), vs = Json::array();
  for (const auto& t : f.breakpoints()) ts.push_back(to_string(t));
  for (const auto& v : f.values()) vs.push_back(to_string(v));
  j["breakpoints"] = ts;
  j["values"] = vs;
  return j;
}

PiecewiseLinear piecewise_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
    throw Error(ErrorKind::MalformedInput, "piecewise function needs 'breakpoints' and 'values'");
  }
  std::vector<Rational> ts, vs;
  for (const auto& t : j["breakpoints"]) ts.push_back(parse_rational(rational_field(t, "breakpoints")));
  for (const auto& v : j["values"]) vs.push_back(parse_rational(rational_field(v, "values")));
  return PiecewiseLinear(ts, vs);
}

Json report_to_json(const GimelReport& r) {
  Json j;
  j["n"] = r.n;
  j["name"] = r.name;
  j["gimel"] = piecewise_to_json(r.gimel);
  j["gamma"] = piecewise_to_json(r.gamma);
  j["r"] = to_string(r.r);
  j["u"] = to_string(r.u);
  j["slope0"] = to_string(r.slope0);
  j["value1"] = to_string(r.value1);
  j["s"] = to_string(r.s);
  j["genus_bound"] = to_string(r.genus_bound);
  j["genus_bound_ceil"] = r.genus_bound_ceil.get_si();
  return j;
}

GimelReport report_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::MalformedInput, "report must be an object");
  auto need = [&j](const char* key) -> const Json& {
    if (!j.contains(key)) throw Error(ErrorKind::MalformedInput, std::string("report is missing '") + key + "'");
    return j[key];
  };
  GimelReport r;
  r.n = need("n").get<int>();
  r.name = j.value("name", "");
  r.gimel = piecewise_from_json(need("gimel"));
  r.gamma = piecewise_from_json(need("gamma"));
  r.r = parse_rational(rational_field(need("r"), "r"));
  r.u = parse_rational(rational_field(need("u"), "u"));
  r.slope0 = parse_rational(rational_field(need("slope0"), "slope0"));
  r.value1 = parse_rational(rational_field(need("value1"), "value1"));
  r.s = parse_rational(rational_field(need("s"), "s"));
  r.genus_bound = parse_rational(rational_field(need("genus_bound"), "genus_bound"));
  r.genus_bound_ceil = ceil(r.genus_bound);
  return r;
}

GimelReport load_report(const std::string& path) {
  try {
    return report_from_json(Json::parse(read_text_file(path)));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string plot_csv(const PiecewiseLinear& f) {
  std::set<Rational> ts(f.breakpoints().begin(), f.breakpoints().end());
  for (int i = 0; i < 100; ++i) {
    Rational t(i, 99);
    t.canonicalize();
    ts.insert(t);
  }
  std::ostringstream out;
  out << "t,value\n";
  for (const auto& t : ts) out << to_decimal(t, 12) << "," << to_decimal(f(t), 12) << "\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gimel
