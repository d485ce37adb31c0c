#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json_value.hpp"
#include "qnum/analysis.hpp"
#include "qnum/modular.hpp"
#include "qnum/qirrational.hpp"
#include "qnum/qrational.hpp"
#include "qnum/snake.hpp"

namespace qnum {

inline std::string data_path(const std::string& name) { return std::string(QNUM_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Partial quotients from a file with one integer per line; blank lines and '#' comments skipped.
inline std::vector<integer> read_cf_file(const std::string& path, std::size_t limit = SIZE_MAX) {
  std::istringstream in(read_file(path));
  std::vector<integer> out;
  std::string line;
  std::size_t lineno = 0;
  while (out.size() < limit && std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    try {
      out.push_back(parse_integer(line.substr(start, end - start + 1)));
    } catch (const error&) {
      throw error(errc::parse_error, path + ":" + std::to_string(lineno) + ": not an integer");
    }
  }
  return out;
}

struct fixture {
  std::string name;
  std::string kind;
  std::string source;  // "reference" or "derived"
  std::string note;
  json::value input;
  json::value expected;
};

inline std::vector<fixture> load_fixtures(const std::string& path = data_path("fixtures.json")) {
  const json::value doc = json::parse(read_file(path));
  std::vector<fixture> out;
  for (const auto& f : doc.at("fixtures").as_array()) {
    fixture x{f.at("name").as_string(), f.at("kind").as_string(), f.at("source").as_string(), "", f.at("input"),
              f.at("expected")};
    if (const auto* n = f.find("note")) x.note = n->as_string();
    out.push_back(std::move(x));
  }
  return out;
}

inline json::value to_json(const std::vector<fixture>& fs) {
  json::value::array arr;
  for (const auto& f : fs) {
    json::value v;
    v.set("name", f.name);
    v.set("kind", f.kind);
    v.set("source", f.source);
    if (!f.note.empty()) v.set("note", f.note);
    v.set("input", f.input);
    v.set("expected", f.expected);
    arr.push_back(std::move(v));
  }
  return json::value::object{{"schemaVersion", "1"}, {"fixtures", std::move(arr)}};
}

/// Recompute the value a fixture describes.
inline json::value compute_fixture(const fixture& f) {
  const json::value& in = f.input;
  auto order = [&] { return static_cast<long>(in.at("order").as_integer()); };
  if (f.kind == "q_rational") return json::from_rational_function(q_rational(parse_fraction(in.as_string())).value);
  if (f.kind == "left_q_rational")
    return json::from_rational_function(left_q_rational(parse_fraction(in.as_string())).value);
  if (f.kind == "q_irrational") {
    if (const auto* p = in.find("period"))
      return json::from_series(q_irrational(cf_stream::periodic({}, json::to_integers(*p)), order()));
    const auto terms = read_cf_file(data_path(in.at("file").as_string()),
                                    static_cast<std::size_t>(in.at("terms").as_integer()));
    return json::from_series(q_irrational(cf_stream::prefix(terms), order()));
  }
  if (f.kind == "q_deform") {
    const qmatrix m = q_deform(generator_word::parse(in.as_string()));
    return json::value::object{{"a", json::from_polynomial(m.a())},
                               {"b", json::from_polynomial(m.b())},
                               {"c", json::from_polynomial(m.c())},
                               {"d", json::from_polynomial(m.d())}};
  }
  if (f.kind == "decompose") {
    const auto e = json::to_integers(in);
    return decompose(matrix_z(e.at(0), e.at(1), e.at(2), e.at(3))).to_string();
  }
  if (f.kind == "trace") return json::from_polynomial(trace_poly(q_deform(generator_word::parse(in.as_string()))));
  if (f.kind == "metallic") {
    const surd s = metallic(static_cast<long>(in.as_integer()));
    return json::value::object{
        {"P", json::from_polynomial(s.P)}, {"Q", json::from_polynomial(s.Q)}, {"R", json::from_polynomial(s.R)}};
  }
  if (f.kind == "hankel") {
    const long shift = static_cast<long>(in.at("shift").as_integer());
    const long count = static_cast<long>(in.at("count").as_integer());
    const auto coeffs = target_coefficients(in.at("target").as_string(), static_cast<std::size_t>(shift + 2 * count + 2));
    return json::from_integers(hankel(coeffs, shift, count).values);
  }
  if (f.kind == "sequence")
    return json::from_integers(
        target_coefficients(in.at("target").as_string(), static_cast<std::size_t>(in.at("count").as_integer())));
  if (f.kind == "vieta_sum")
    return json::from_series(vieta_check(parse_cubic_equation(in.at("equation").as_string()), order()).b_series);
  if (f.kind == "q_binomial") {
    const auto nm = json::to_integers(in);
    return json::from_polynomial(q_binomial(static_cast<long>(nm.at(0)), static_cast<long>(nm.at(1))));
  }
  if (f.kind == "snake_paths")
    return json::from_polynomial(count_paths_by_area(snake_graph(parse_fraction(in.as_string()))));
  throw error(errc::parse_error, "fixture '" + f.name + "' has unknown kind '" + f.kind + "'");
}

struct fixture_result {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline fixture_result check_fixture(const fixture& f) {
  try {
    const json::value got = compute_fixture(f);
    if (got == f.expected) return {f.name, true, ""};
    return {f.name, false, "expected " + f.expected.dump() + ", got " + got.dump()};
  } catch (const std::exception& e) {
    return {f.name, false, e.what()};
  }
}

/// Fixture set with every derived entry recomputed; reference entries are left untouched.
inline std::vector<fixture> regenerate_derived(std::vector<fixture> fs) {
  for (auto& f : fs)
    if (f.source == "derived") f.expected = compute_fixture(f);
  return fs;
}

}  // namespace qnum
