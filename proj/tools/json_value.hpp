#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qnum/continued_fraction.hpp"
#include "qnum/error.hpp"
#include "qnum/integer.hpp"
#include "qnum/polynomial.hpp"
#include "qnum/series.hpp"

namespace qnum::json {

/// JSON value with exact integers and insertion-ordered objects.
class value {
 public:
  using array = std::vector<value>;
  using object = std::vector<std::pair<std::string, value>>;

  value() = default;
  value(std::nullptr_t) {}
  value(bool b) : v_(b) {}
  value(int i) : v_(integer(i)) {}
  value(long i) : v_(integer(i)) {}
  value(unsigned long i) : v_(integer(i)) {}
  value(integer i) : v_(std::move(i)) {}
  value(double d) : v_(d) {}
  value(const char* s) : v_(std::string(s)) {}
  value(std::string s) : v_(std::move(s)) {}
  value(array a) : v_(std::move(a)) {}
  value(object o) : v_(std::move(o)) {}

  bool is_null() const { return std::holds_alternative<std::monostate>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_integer() const { return std::holds_alternative<integer>(v_); }
  bool is_double() const { return std::holds_alternative<double>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_array() const { return std::holds_alternative<array>(v_); }
  bool is_object() const { return std::holds_alternative<object>(v_); }

  bool as_bool() const { return get<bool>("boolean"); }
  const integer& as_integer() const { return get<integer>("integer"); }
  double as_double() const { return is_integer() ? static_cast<double>(as_integer()) : get<double>("number"); }
  const std::string& as_string() const { return get<std::string>("string"); }
  const array& as_array() const { return get<array>("array"); }
  array& as_array() { return std::get<array>(v_); }
  const object& as_object() const { return get<object>("object"); }

  /// Member lookup; throws ParseError if absent.
  const value& at(std::string_view key) const {
    for (const auto& [k, v] : as_object())
      if (k == key) return v;
    throw error(errc::parse_error, "missing key '" + std::string(key) + "'");
  }
  const value* find(std::string_view key) const {
    if (!is_object()) return nullptr;
    for (const auto& [k, v] : as_object())
      if (k == key) return &v;
    return nullptr;
  }

  void set(std::string key, value v) {
    if (is_null()) v_ = object{};
    auto& o = std::get<object>(v_);
    for (auto& [k, old] : o)
      if (k == key) {
        old = std::move(v);
        return;
      }
    o.emplace_back(std::move(key), std::move(v));
  }
  void push(value v) {
    if (is_null()) v_ = array{};
    std::get<array>(v_).push_back(std::move(v));
  }

  friend bool operator==(const value&, const value&) = default;

  /// Canonical text: no whitespace, keys in insertion order, integers in full.
  std::string dump() const {
    std::string out;
    write(out, -1, 0);
    return out;
  }
  /// Indented text for humans; still round-trips.
  std::string pretty() const {
    std::string out;
    write(out, 2, 0);
    return out;
  }

 private:
  template <typename T>
  const T& get(const char* what) const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw error(errc::parse_error, std::string("expected ") + what);
  }

  static void write_string(std::string& out, const std::string& s) {
    out += nlohmann::json(s).dump();
  }

  void write(std::string& out, int indent, int depth) const {
    auto newline = [&](int d) {
      if (indent < 0) return;
      out += '\n';
      out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, std::monostate>) out += "null";
          else if constexpr (std::is_same_v<T, bool>) out += x ? "true" : "false";
          else if constexpr (std::is_same_v<T, integer>) out += x.str();
          else if constexpr (std::is_same_v<T, double>) out += nlohmann::json(x).dump();
          else if constexpr (std::is_same_v<T, std::string>) write_string(out, x);
          else if constexpr (std::is_same_v<T, array>) {
            out += '[';
            const bool flat = std::all_of(x.begin(), x.end(), [](const value& e) { return !e.is_array() && !e.is_object(); });
            for (std::size_t i = 0; i < x.size(); ++i) {
              if (i) out += indent >= 0 && flat ? ", " : ",";
              if (!flat) newline(depth + 1);
              x[i].write(out, indent, depth + 1);
            }
            if (!flat && !x.empty()) newline(depth);
            out += ']';
          } else {
            out += '{';
            for (std::size_t i = 0; i < x.size(); ++i) {
              if (i) out += ',';
              newline(depth + 1);
              write_string(out, x[i].first);
              out += indent >= 0 ? ": " : ":";
              x[i].second.write(out, indent, depth + 1);
            }
            if (!x.empty()) newline(depth);
            out += '}';
          }
        },
        v_);
  }

  std::variant<std::monostate, bool, integer, double, std::string, array, object> v_;
};

namespace detail {

class builder : public nlohmann::json_sax<nlohmann::json> {
 public:
  bool null() override { return add(value(nullptr)); }
  bool boolean(bool b) override { return add(value(b)); }
  bool number_integer(number_integer_t i) override { return add(value(integer(i))); }
  bool number_unsigned(number_unsigned_t u) override { return add(value(integer(u))); }
  bool number_float(number_float_t d, const string_t& raw) override {
    if (raw.find_first_of(".eE") == std::string::npos) return add(value(parse_integer(raw)));
    return add(value(d));
  }
  bool string(string_t& s) override { return add(value(s)); }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override {
    stack_.push_back({value(value::object{}), {}});
    return true;
  }
  bool key(string_t& k) override {
    stack_.back().second = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override {
    stack_.push_back({value(value::array{}), {}});
    return true;
  }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override {
    message_ = "JSON parse error at byte " + std::to_string(pos) + ": " + e.what();
    return false;
  }

  value result;
  std::string message_;

 private:
  bool add(value v) {
    if (stack_.empty()) {
      result = std::move(v);
      return true;
    }
    auto& [top, pending_key] = stack_.back();
    if (top.is_array()) top.push(std::move(v));
    else top.set(pending_key, std::move(v));
    return true;
  }
  bool close() {
    value done = std::move(stack_.back().first);
    stack_.pop_back();
    return add(std::move(done));
  }

  std::vector<std::pair<value, std::string>> stack_;
};

}  // namespace detail

inline value parse(const std::string& text) {
  detail::builder b;
  if (!nlohmann::json::sax_parse(text, &b)) throw error(errc::parse_error, b.message_.empty() ? "invalid JSON" : b.message_);
  return b.result;
}

// ---------------------------------------------------------------- value encodings

inline value from_integers(const std::vector<integer>& v) {
  value::array a;
  for (const auto& x : v) a.emplace_back(x);
  return a;
}

inline std::vector<integer> to_integers(const value& v) {
  std::vector<integer> out;
  for (const auto& x : v.as_array()) out.push_back(x.as_integer());
  return out;
}

/// {"coeffs":[...]} low degree first.
inline value from_polynomial(const polynomial& p) { return value::object{{"coeffs", from_integers(p.coeffs())}}; }

inline polynomial to_polynomial(const value& v) { return polynomial(to_integers(v.at("coeffs"))); }

/// {"valuation":v,"order":o,"coeffs":[...]}
inline value from_series(const series& s) {
  return value::object{{"valuation", s.valuation()}, {"order", s.order()}, {"coeffs", from_integers(s.coeffs())}};
}

inline series to_series(const value& v) {
  const series s(static_cast<long>(v.at("valuation").as_integer()), to_integers(v.at("coeffs")));
  if (const value* o = v.find("order"); o && integer(s.order()) != o->as_integer())
    throw error(errc::parse_error, "series order does not match its coefficient count");
  return s;
}

inline value from_rational_function(const rational_function& f) {
  return value::object{{"num", from_integers(f.num().coeffs())}, {"den", from_integers(f.den().coeffs())}};
}

inline rational_function to_rational_function(const value& v) {
  return rational_function::reduce(polynomial(to_integers(v.at("num"))), polynomial(to_integers(v.at("den"))));
}

inline value from_continued_fraction(const continued_fraction& cf) {
  return value::object{{"kind", cf.kind() == cf_kind::regular ? "regular" : "negative"}, {"terms", from_integers(cf.terms())}};
}

}  // namespace qnum::json
