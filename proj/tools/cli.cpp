#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "fixtures.hpp"
#include "json_value.hpp"
#include "qnum/analysis.hpp"
#include "qnum/modular.hpp"
#include "qnum/qirrational.hpp"
#include "qnum/qrational.hpp"
#include "qnum/snake.hpp"
#include "verify.hpp"

namespace qnum::cli {
namespace {

// ---------------------------------------------------------------- rendering

std::string latex_terms(const std::vector<std::pair<long, integer>>& terms) {
  std::string out;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    const integer mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out.empty() ? "0" : out;
}

std::string latex(const polynomial& p) {
  std::vector<std::pair<long, integer>> t;
  for (std::size_t i = 0; i < p.size(); ++i) t.emplace_back(static_cast<long>(i), p[i]);
  return latex_terms(t);
}

std::string latex(const series& s) {
  std::vector<std::pair<long, integer>> t;
  for (long e = s.valuation(); e <= s.order(); ++e) t.emplace_back(e, s.coefficient(e));
  return latex_terms(t) + " + O(q^{" + std::to_string(s.order() + 1) + "})";
}

std::string latex(const rational_function& f) {
  if (f.is_infinity()) return "\\infty";
  if (f.is_polynomial()) return latex(f.num());
  return "\\frac{" + latex(f.num()) + "}{" + latex(f.den()) + "}";
}

std::string latex(const fraction& x) {
  if (x.is_infinity()) return "\\infty";
  if (x.is_integer()) return x.num().str();
  const std::string body = "\\frac{" + abs(x.num()).str() + "}{" + x.den().str() + "}";
  return x.num() < 0 ? "-" + body : body;
}

std::string series_text(const series& s) { return s.to_string(); }

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

/// What a subcommand produces; the chosen --format picks one rendering.
struct output {
  json::value result;
  json::value provenance = json::value::object{};
  std::string text;
  std::string latex;
  std::string dot;
  bool ok = true;
};

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct globals {
  std::string format = "text";
  long order = 32;
  long depth = 10;
  long max_den = 60;
  unsigned seed = 1;
};

// ---------------------------------------------------------------- input parsing

std::vector<integer> parse_integer_list(const std::string& s) {
  std::vector<integer> out;
  std::string body = s;
  for (char& c : body)
    if (c == '[' || c == ']' || c == ';') c = ',';
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    const auto b = item.find_last_not_of(" \t");
    out.push_back(parse_integer(item.substr(a, b - a + 1)));
  }
  if (out.empty()) throw error(errc::parse_error, "empty integer list '" + s + "'");
  return out;
}

std::pair<fraction, fraction> parse_interval(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw error(errc::parse_error, "interval must be lo,hi");
  return {parse_fraction(s.substr(0, comma)), parse_fraction(s.substr(comma + 1))};
}

std::string resolve_data_file(const std::string& path) {
  if (std::filesystem::exists(path)) return path;
  const std::string alt = data_path(path);
  if (std::filesystem::exists(alt)) return alt;
  throw error(errc::parse_error, "cannot open " + path);
}

/// A word ("T3 S T-1"), a matrix JSON object, or "a,b,c,d".
std::pair<generator_word, std::optional<matrix_z>> parse_word_or_matrix(const std::string& s) {
  if (s.find('T') != std::string::npos || s.find('S') != std::string::npos) return {generator_word::parse(s), std::nullopt};
  std::vector<integer> e;
  if (s.find('{') != std::string::npos) {
    const json::value v = json::parse(s);
    for (const char* k : {"a", "b", "c", "d"}) e.push_back(v.at(k).as_integer());
  } else {
    e = parse_integer_list(s);
  }
  if (e.size() != 4) throw error(errc::parse_error, "matrix needs four entries");
  const matrix_z m(e[0], e[1], e[2], e[3]);
  return {decompose(m), m};
}

std::vector<integer> sequence_source(const std::string& target, const std::string& file, std::size_t n) {
  if (!file.empty()) {
    const json::value v = json::parse(read_file(resolve_data_file(file)));
    return json::to_integers(v);
  }
  return target_coefficients(target, n);
}

// ---------------------------------------------------------------- JSON pieces

json::value fraction_json(const fraction& x) { return x.to_string(); }

json::value qmatrix_json(const qmatrix& m) {
  return json::value::object{{"a", json::from_polynomial(m.a())},
                             {"b", json::from_polynomial(m.b())},
                             {"c", json::from_polynomial(m.c())},
                             {"d", json::from_polynomial(m.d())}};
}

json::value periodicity_json(const periodicity_report& p) {
  return json::value::object{{"kind", to_string(p.kind)}, {"period", p.period}, {"checkedLength", p.checked_length}};
}

json::value radius_json(const radius_report& r) {
  json::value v;
  v.set("value", r.infinite ? json::value(nullptr) : json::value(r.value));
  v.set("infinite", r.infinite);
  v.set("method", to_string(r.method));
  v.set("certified", r.certified);
  v.set("aboveGeneralBound", r.above_general_bound);
  if (r.nearest_singularity)
    v.set("nearestSingularity", json::value::array{r.nearest_singularity->real(), r.nearest_singularity->imag()});
  return v;
}

json::value surd_json(const surd& s) {
  return json::value::object{{"P", json::from_polynomial(s.P)},
                             {"Q", json::from_polynomial(s.Q)},
                             {"R", json::from_polynomial(s.R)},
                             {"quadratic", json::value::object{{"A", json::from_polynomial(s.A)},
                                                                {"B", json::from_polynomial(s.B)},
                                                                {"C", json::from_polynomial(s.C)}}}};
}

// ---------------------------------------------------------------- subcommands

output cmd_rat(const std::string& xs, const std::string& method) {
  const fraction x = parse_fraction(xs);
  output o;
  o.result.set("input", fraction_json(x));
  if (method == "all") {
    const rational_function ref = q_rational(x).value;
    json::value per;
    bool agree = true;
    for (qmethod m : all_qmethods) {
      const rational_function v = q_rational(x, m).value;
      agree = agree && v == ref;
      per.set(to_string(m), json::from_rational_function(v));
      o.text += to_string(m) + ": " + v.to_string() + "\n";
    }
    o.result.set("value", json::from_rational_function(ref));
    o.result.set("methods", per);
    o.result.set("agree", agree);
    o.text += agree ? "all methods agree\n" : "METHODS DISAGREE\n";
    o.ok = agree;
    o.latex = "\\left[" + latex(x) + "\\right]_q = " + latex(ref) + "\n";
    o.provenance.set("methods", "negcf,regcf,recurrence,farey");
    return o;
  }
  const qmethod m = parse_qmethod(method);
  const rational_function v = q_rational(x, m).value;
  o.result.set("num", json::from_integers(v.num().coeffs()));
  o.result.set("den", json::from_integers(v.den().coeffs()));
  if (!x.is_infinity()) o.result.set("cf", json::from_continued_fraction(cf_regular(x)));
  o.text = "[" + x.to_string() + "]_q = " + v.to_string() + "\n";
  o.latex = "\\left[" + latex(x) + "\\right]_q = " + latex(v) + "\n";
  o.provenance.set("method", to_string(m));
  return o;
}

output cmd_left(const std::string& xs) {
  const fraction x = parse_fraction(xs);
  const rational_function v = left_q_rational(x).value;
  output o;
  o.result.set("input", fraction_json(x));
  o.result.set("num", json::from_integers(v.num().coeffs()));
  o.result.set("den", json::from_integers(v.den().coeffs()));
  o.text = "[" + x.to_string() + "]_q^flat = " + v.to_string() + "\n";
  o.latex = "\\left[" + latex(x) + "\\right]_q^{\\flat} = " + latex(v) + "\n";
  o.provenance.set("method", "A_q((q-1)/q)");
  return o;
}

struct stream_options {
  std::string periodic, preperiod, cf, cf_file, algebraic, interval, rational;
  long terms = 0;
};

std::pair<cf_stream, std::string> make_stream(const stream_options& s) {
  const int given = !s.periodic.empty() + !s.cf.empty() + !s.cf_file.empty() + !s.algebraic.empty() + !s.rational.empty();
  if (given != 1) throw usage_error("give exactly one of --periodic, --cf, --cf-file, --algebraic, --rational");
  if (!s.periodic.empty()) {
    const std::vector<integer> pre = s.preperiod.empty() ? std::vector<integer>{} : parse_integer_list(s.preperiod);
    return {cf_stream::periodic(pre, parse_integer_list(s.periodic)), "periodic"};
  }
  if (!s.cf.empty()) return {cf_stream::prefix(parse_integer_list(s.cf)), "prefix"};
  if (!s.cf_file.empty()) {
    const std::size_t limit = s.terms > 0 ? static_cast<std::size_t>(s.terms) : SIZE_MAX;
    return {cf_stream::prefix(read_cf_file(resolve_data_file(s.cf_file), limit)), "prefix-file"};
  }
  if (!s.rational.empty()) return {cf_stream::of(parse_fraction(s.rational)), "rational"};
  if (s.interval.empty()) throw usage_error("--algebraic needs --interval lo,hi");
  const auto [lo, hi] = parse_interval(s.interval);
  return {cf_stream::algebraic({parse_polynomial(s.algebraic), lo, hi}), "algebraic"};
}

output cmd_irr(const stream_options& so, long order) {
  auto [stream, source] = make_stream(so);
  const series s = q_irrational(stream, order);
  output o;
  o.result = json::from_series(s);
  o.text = series_text(s) + "\n";
  o.latex = latex(s) + "\n";
  o.provenance.set("source", source);
  o.provenance.set("order", order);
  return o;
}

output cmd_metallic(const std::string& ks, const std::string& period, long order) {
  if (ks.empty() == period.empty()) throw usage_error("give either k or --period");
  const surd s = period.empty() ? metallic(static_cast<long>(parse_integer(ks))) : quadratic_fixed_point(parse_integer_list(period));
  const series v = s.expand(order);
  output o;
  o.result = surd_json(s);
  o.result.set("series", json::from_series(v));
  const auto [rat, irr] = s.residual();
  o.ok = rat.is_zero() && irr.is_zero();
  o.result.set("residualZero", o.ok);
  o.text = s.to_string() + "\nsolves (" + s.A.to_string() + ")*X^2 + (" + s.B.to_string() + ")*X + (" + s.C.to_string() +
           ") = 0\n" + series_text(v) + "\n";
  o.latex = "\\frac{" + latex(s.P) + " + \\sqrt{" + latex(s.Q) + "}}{" + latex(s.R) + "}\n";
  o.provenance.set("source", period.empty() ? "metallic" : "fixed-point");
  o.provenance.set("order", order);
  return o;
}

output cmd_radius(const std::string& metallic_k, const std::string& rational, const std::string& period,
                  const stream_options& so, long order) {
  radius_report r;
  std::string source;
  if (!metallic_k.empty()) {
    r = radius(metallic(static_cast<long>(parse_integer(metallic_k))));
    source = "metallic " + metallic_k;
  } else if (!rational.empty()) {
    const fraction x = parse_fraction(rational);
    r = radius(q_rational(x));
    source = "rational " + x.to_string();
  } else if (!period.empty()) {
    r = radius(quadratic_fixed_point(parse_integer_list(period)));
    source = "period " + period;
  } else {
    auto [stream, kind] = make_stream(so);
    r = radius(q_irrational(stream, std::max(order, 63L)));
    source = kind;
  }
  output o;
  o.result = radius_json(r);
  o.text = "R = " + (r.infinite ? std::string("inf") : fmt_double(r.value)) + " (" + to_string(r.method) +
           (r.certified ? ", certified" : ", estimate") + ")\n";
  o.provenance.set("source", source);
  o.provenance.set("certified", r.certified);
  return o;
}

output cmd_farey(long depth) {
  const auto tree = farey_tree(static_cast<std::size_t>(depth));
  std::map<fraction, std::size_t> level;
  for (const auto& n : tree) level[n.x] = n.depth;
  output o;
  json::value::array nodes;
  std::ostringstream dot;
  dot << "digraph farey {\n  node [shape=box];\n";
  for (const auto& n : tree) {
    json::value v;
    v.set("x", fraction_json(n.x));
    v.set("value", json::from_rational_function(n.value));
    v.set("leftParent", fraction_json(n.left_parent));
    v.set("rightParent", fraction_json(n.right_parent));
    v.set("depth", static_cast<long>(n.depth));
    v.set("edgeWeight", static_cast<long>(n.edge_weight));
    nodes.push_back(std::move(v));
    o.text += std::string(2 * n.depth, ' ') + n.x.to_string() + "  " + n.value.to_string() + "  (q^" +
              std::to_string(n.edge_weight) + ")\n";
    dot << "  \"" << n.x.to_string() << "\" [label=\"" << n.x.to_string() << "\\n" << n.value.to_string() << "\"];\n";
    if (n.depth > 0) {
      const auto depth_of = [&](const fraction& f) {
        const auto it = level.find(f);
        return it == level.end() ? -1L : static_cast<long>(it->second);
      };
      const fraction parent = depth_of(n.left_parent) > depth_of(n.right_parent) ? n.left_parent : n.right_parent;
      dot << "  \"" << parent.to_string() << "\" -> \"" << n.x.to_string() << "\" [label=\"q^" << n.edge_weight
          << "\"];\n";
    }
  }
  dot << "}\n";
  o.result = json::value(std::move(nodes));
  o.dot = dot.str();
  o.provenance.set("depth", depth);
  return o;
}

output cmd_diff(const std::string& xs, const std::string& ys) {
  const fraction x = parse_fraction(xs), y = parse_fraction(ys);
  const polynomial d = diff_poly(x, y);
  bool positive = !d.is_zero();
  for (std::size_t i = d.valuation(); positive && i < d.size(); ++i) positive = d[i] > 0;
  const bool monomial = d.degree() == static_cast<long>(d.valuation());
  const bool neighbours = !x.is_infinity() && abs(x.num() * y.den() - x.den() * y.num()) == 1;
  output o;
  o.result.set("x", fraction_json(x));
  o.result.set("y", fraction_json(y));
  o.result.set("diff", json::from_polynomial(d));
  o.result.set("positive", positive);
  o.result.set("monomial", monomial);
  o.result.set("farey_neighbours", neighbours);
  o.ok = positive && (x.is_infinity() || monomial == neighbours);
  o.text = "N_x M_y - M_x N_y = " + d.to_string() + "\npositive: " + (positive ? "yes" : "no") +
           "\nmonomial: " + (monomial ? "yes" : "no") + "\n";
  o.latex = latex(d) + "\n";
  return o;
}

output cmd_snake(const std::string& xs, bool ascii) {
  const fraction x = parse_fraction(xs);
  const grid_region g = snake_graph(x);
  const polynomial paths = count_paths_by_area(g);
  const polynomial num = q_rational(x).num();
  output o;
  o.result.set("input", fraction_json(x));
  o.result.set("cf", json::from_continued_fraction(cf_regular(x, cf_parity::even)));
  json::value::array boxes;
  for (const auto& [bx, by] : g.boxes) boxes.emplace_back(json::value::array{bx, by});
  o.result.set("boxes", std::move(boxes));
  o.result.set("paths", json::from_polynomial(paths));
  o.result.set("matchesNumerator", paths == num);
  o.ok = paths == num;
  if (ascii) o.text += g.ascii();
  o.text += "paths: " + paths.to_string() + "\n";
  o.latex = latex(paths) + "\n";
  return o;
}

output cmd_qbinom(long n, long m) {
  const polynomial c = q_binomial(n, m);
  const shape_report s = check_shape(c);
  output o;
  o.result = json::from_polynomial(c);
  o.result.set("unimodal", s.unimodal);
  o.result.set("palindromic", s.palindromic);
  o.text = c.to_string() + "\n";
  o.latex = "\\binom{" + std::to_string(n) + "}{" + std::to_string(m) + "}_q = " + latex(c) + "\n";
  return o;
}

output cmd_trace(const std::string& input) {
  const auto [word, matrix] = parse_word_or_matrix(input);
  const qmatrix m = q_deform(word);
  const polynomial tr = trace_poly(m);
  const matrix_z z = matrix ? *matrix : word.to_matrix();
  output o;
  o.result.set("word", word.to_string());
  o.result.set("matrix", qmatrix_json(m));
  o.result.set("trace", json::from_polynomial(tr));
  o.result.set("palindromic", tr.is_palindromic_up_to_shift());
  o.result.set("class", to_string(classify(z)));
  o.ok = tr.is_palindromic_up_to_shift();
  o.text = "word: " + word.to_string() + "\ntrace: " + tr.to_string() + "\nclass: " + to_string(classify(z)) + "\n";
  o.latex = "\\operatorname{tr} = " + latex(tr) + "\n";
  return o;
}

output cmd_hankel(const std::string& target, const std::string& file, long shift, long count) {
  const auto coeffs = sequence_source(target, file, static_cast<std::size_t>(shift + 2 * count + 2));
  const hankel_sequence h = hankel(coeffs, shift, count);
  const periodicity_report p = detect_periodicity(h.values);
  output o;
  o.result.set("shift", shift);
  o.result.set("values", json::from_integers(h.values));
  o.result.set("periodicity", periodicity_json(p));
  for (std::size_t i = 0; i < h.values.size(); ++i) o.text += (i ? ", " : "") + h.values[i].str();
  o.text += "\n" + to_string(p.kind) + (p.kind == periodicity::none ? "" : " with period " + std::to_string(p.period)) + "\n";
  o.provenance.set("source", file.empty() ? target : file);
  o.provenance.set("convention", "a_1 is the constant coefficient");
  return o;
}

output cmd_somos(const std::string& target, const std::string& file, long shift, long count, bool raw) {
  std::vector<integer> d;
  if (raw) {
    if (file.empty()) throw usage_error("--raw needs --file");
    d = sequence_source("", file, 0);
  } else {
    d = hankel(sequence_source(target, file, static_cast<std::size_t>(shift + 2 * count + 2)), shift, count).values;
  }
  const somos_report s = somos4_check(d);
  output o;
  o.result.set("values", json::from_integers(d));
  o.result.set("holds", s.holds);
  o.result.set("firstViolation", s.first_violation ? json::value(static_cast<long>(*s.first_violation)) : json::value());
  o.ok = s.holds;
  o.text = s.holds ? "Somos-4 holds on " + std::to_string(d.size()) + " terms\n"
                   : "Somos-4 fails at n = " + std::to_string(*s.first_violation) + "\n";
  return o;
}

output cmd_vieta(const std::string& eq, long order, bool emit_b) {
  const vieta_report r = vieta_check(parse_cubic_equation(eq), order);
  output o;
  o.result.set("equation", to_string(r.equation));
  o.result.set("order", order);
  json::value::array roots;
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    roots.emplace_back(json::value::object{{"interval", json::value::array{fraction_json(r.roots[i].lo), fraction_json(r.roots[i].hi)}},
                                           {"series", json::from_series(r.root_series[i].truncated(order))}});
  o.result.set("roots", std::move(roots));
  o.result.set("productResidual", r.product_residual);
  o.result.set("pairResidual", r.pair_residual);
  o.result.set("holds", r.holds());
  if (emit_b) o.result.set("b", json::from_series(r.b_series));
  o.ok = r.holds();
  o.text = to_string(r.equation) + " through q^" + std::to_string(order) + ": product residual " +
           r.product_residual.str() + ", pair residual " + r.pair_residual.str() + "\n";
  if (emit_b) {
    o.text += "b = " + series_text(r.b_series) + "\n";
    o.latex = "b(q) = " + latex(r.b_series) + "\n";
  }
  o.provenance.set("roots", "isolated on a 1/10000 grid, continued fractions by sign tests");
  return o;
}

output cmd_stabilize(const std::string& xs, const std::string& side, long count, long order) {
  const fraction x = parse_fraction(xs);
  if (side != "left" && side != "right") throw usage_error("--side must be left or right");
  const auto r = stabilization_experiment(x, side == "left" ? approach_side::left : approach_side::right,
                                          static_cast<std::size_t>(count), order);
  output o;
  o.result.set("x", fraction_json(x));
  o.result.set("side", side);
  json::value::array seq;
  for (const auto& y : r.sequence) seq.emplace_back(y.to_string());
  o.result.set("sequence", std::move(seq));
  o.result.set("limit", json::from_series(r.limit));
  o.result.set("stableOrder", r.stable_order);
  o.result.set("matchesRight", r.matches_right);
  o.result.set("matchesLeft", r.matches_left);
  o.text = "limit: " + series_text(r.limit) + "\nstable through q^" + std::to_string(r.stable_order) +
           "\nmatches [x]_q: " + (r.matches_right ? "yes" : "no") + "\nmatches [x]_q^flat: " +
           (r.matches_left ? "yes" : "no") + "\n";
  o.latex = latex(r.limit) + "\n";
  return o;
}

output cmd_verify(const std::string& suite, const verify_limits& limits, const std::string& regenerate) {
  if (limits.max_den > verify_ceilings.max_den || limits.depth > verify_ceilings.depth ||
      limits.order > verify_ceilings.order || limits.count > verify_ceilings.count)
    throw usage_error("limits above the supported ceilings (max-den 200, depth 16, order 400, count 100000)");
  output o;
  if (!regenerate.empty()) {
    const auto fs = regenerate_derived(load_fixtures());
    std::ofstream(regenerate) << to_json(fs).pretty() << "\n";
    o.text = "wrote " + std::to_string(fs.size()) + " fixtures to " + regenerate + "\n";
    o.result.set("written", regenerate);
    return o;
  }
  std::vector<std::string> suites;
  if (suite == "all") suites = suite_names();
  else suites.push_back(suite);
  json::value::array reports;
  std::ostringstream text;
  for (const auto& name : suites) {
    const suite_result r = run_suite(name, limits);
    o.ok = o.ok && r.ok();
    json::value::array failures;
    for (const auto& f : r.failures) failures.emplace_back(f);
    reports.emplace_back(json::value::object{
        {"name", name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", std::move(failures)}});
    text << std::left << std::setw(17) << name << std::right << std::setw(8) << r.passed << " passed" << std::setw(6)
         << r.failed << " failed" << std::setw(9) << std::fixed << std::setprecision(2) << r.seconds << " s\n";
    for (const auto& f : r.failures) text << "    " << f << "\n";
  }
  o.result.set("suites", std::move(reports));
  o.result.set("ok", o.ok);
  o.text = text.str();
  o.provenance = json::value::object{{"maxDen", limits.max_den},
                                     {"depth", limits.depth},
                                     {"order", limits.order},
                                     {"count", limits.count},
                                     {"seed", static_cast<long>(limits.seed)}};
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qnum: q-deformed rational and irrational numbers"};
  app.require_subcommand(1);
  globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "latex", "dot"}));
  app.add_option("--order", g.order, "Series order (default 32)")->check(CLI::Range(0L, 100000L));
  app.add_option("--depth", g.depth, "Farey tree depth (default 10)")->check(CLI::Range(0L, 20L));
  app.add_option("--max-den", g.max_den, "Denominator bound for enumerations (default 60)")->check(CLI::Range(1L, 100000L));
  app.add_option("--seed", g.seed, "Seed for randomized suites");

  std::function<output()> action;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string x, y, method = "negcf";
  auto* rat = sub("rat", "q-rational [x]_q");
  rat->add_option("x", x, "Fraction n/m or inf")->required();
  rat->add_option("--method", method, "negcf|regcf|recurrence|farey|all");
  rat->callback([&] { action = [&] { return cmd_rat(x, method); }; });

  auto* left = sub("left", "Left q-rational [x]_q^flat");
  left->add_option("x", x)->required();
  left->callback([&] { action = [&] { return cmd_left(x); }; });

  stream_options so;
  auto add_stream = [&](CLI::App* s) {
    s->add_option("--periodic", so.periodic, "Repeating partial quotients, e.g. 1 or 1,2");
    s->add_option("--preperiod", so.preperiod, "Partial quotients before the period");
    s->add_option("--cf", so.cf, "Known prefix of partial quotients");
    s->add_option("--cf-file", so.cf_file, "File with one partial quotient per line");
    s->add_option("--terms", so.terms, "Use only the first N terms of --cf-file");
    s->add_option("--algebraic", so.algebraic, "Polynomial in x, e.g. x^2-x-1");
    s->add_option("--interval", so.interval, "Isolating interval lo,hi for --algebraic");
    s->add_option("--rational", so.rational, "Exact rational value");
  };
  auto* irr = sub("irr", "Series of a q-irrational from its continued fraction");
  add_stream(irr);
  irr->callback([&] { action = [&] { return cmd_irr(so, g.order); }; });

  std::string k, period;
  auto* met = sub("metallic", "Closed form of a metallic or periodic q-number");
  met->add_option("k", k, "Metallic index");
  met->add_option("--period", period, "Period of a purely periodic continued fraction");
  met->callback([&] { action = [&] { return cmd_metallic(k, period, std::min(g.order, 400L)); }; });

  std::string rad_metallic;
  auto* rad = sub("radius", "Radius of convergence at q = 0");
  rad->add_option("--metallic", rad_metallic, "Metallic index");
  add_stream(rad);
  rad->callback([&] {
    action = [&] {
      std::string rational;
      std::swap(rational, so.rational);
      std::swap(period, so.periodic);
      if (!so.preperiod.empty() && !period.empty()) std::swap(period, so.periodic);
      return cmd_radius(rad_metallic, rational, period, so, g.order);
    };
  });

  auto* far = sub("farey", "Weighted Farey tree");
  far->callback([&] { action = [&] { return cmd_farey(g.depth); }; });

  auto* dif = sub("diff", "N_x M_y - M_x N_y for x > y");
  dif->add_option("x", x)->required();
  dif->add_option("y", y)->required();
  dif->callback([&] { action = [&] { return cmd_diff(x, y); }; });

  bool ascii = false;
  auto* sn = sub("snake", "Snake graph and its area-weighted path count");
  sn->add_option("x", x)->required();
  sn->add_flag("--ascii", ascii, "Draw the region");
  sn->callback([&] { action = [&] { return cmd_snake(x, ascii); }; });

  long n = 0, m = 0;
  auto* qb = sub("qbinom", "Gaussian binomial (n choose m)_q");
  qb->add_option("n", n)->required();
  qb->add_option("m", m)->required();
  qb->callback([&] { action = [&] { return cmd_qbinom(n, m); }; });

  std::string word;
  auto* tr = sub("trace", "Trace of a deformed matrix (word, a,b,c,d or JSON)");
  tr->add_option("word", word)->required();
  tr->callback([&] { action = [&] { return cmd_trace(word); }; });

  std::string target = "golden", file;
  long shift = 0, count = 0;
  bool raw = false;
  auto* hk = sub("hankel", "Shifted Hankel determinants");
  hk->add_option("--target", target, "golden|silver|metallic-<k>|catalan|motzkin");
  hk->add_option("--file", file, "JSON array of integers a_1, a_2, ...");
  hk->add_option("--shift", shift)->check(CLI::NonNegativeNumber);
  hk->add_option("--count", count, "Number of determinants (default 12)");
  hk->callback([&] { action = [&] { return cmd_hankel(target, file, shift, count > 0 ? count : 12); }; });

  auto* so4 = sub("somos", "Somos-4 check on a Hankel sequence");
  so4->add_option("--target", target);
  so4->add_option("--file", file);
  so4->add_option("--shift", shift)->check(CLI::NonNegativeNumber);
  so4->add_option("--count", count, "Number of determinants (default 40)");
  so4->add_flag("--raw", raw, "Check the file's sequence itself");
  so4->callback([&] { action = [&] { return cmd_somos(target, file, shift, count > 0 ? count : 40, raw); }; });

  std::string equation;
  bool emit_b = false;
  auto* vi = sub("vieta", "Vieta identities for the heptagon and nonagon cubics");
  vi->add_option("equation", equation, "heptagon|nonagon")->required();
  vi->add_flag("--emit-b", emit_b, "Print the root sum");
  vi->callback([&] { action = [&] { return cmd_vieta(equation, g.order, emit_b); }; });

  std::string side = "right";
  auto* st = sub("stabilize", "Limit of q-rationals along a one-sided sequence");
  st->add_option("x", x)->required();
  st->add_option("--side", side, "left|right");
  st->add_option("--count", count, "Sequence length (default order + 4)");
  st->callback([&] { action = [&] { return cmd_stabilize(x, side, count > 0 ? count : g.order + 4, g.order); }; });

  std::string suite, regenerate;
  long vcount = 1000;
  auto* ve = sub("verify", "Batched property suites");
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  ve->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  ve->add_option("--count", vcount, "Random cases per randomized suite");
  ve->add_option("--regenerate", regenerate, "Write fixtures with derived entries recomputed to this path");
  ve->callback([&] {
    action = [&] {
      return cmd_verify(suite, verify_limits{g.max_den, g.depth, g.order, vcount, g.seed}, regenerate);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  output o;
  try {
    o = action();
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == errc::internal ? 1 : 2;
  }

  if (g.format == "json") {
    json::value env;
    env.set("schemaVersion", "1");
    env.set("command", command);
    env.set("result", o.result);
    env.set("provenance", o.provenance);
    out << env.pretty() << "\n";
  } else if (g.format == "latex") {
    if (o.latex.empty()) {
      err << "error: latex output is not available for '" << command << "'\n";
      return 2;
    }
    out << o.latex;
  } else if (g.format == "dot") {
    if (o.dot.empty()) {
      err << "error: dot output is only available for 'farey'\n";
      return 2;
    }
    out << o.dot;
  } else {
    out << o.text;
  }
  return o.ok ? 0 : 1;
}

}  // namespace qnum::cli
