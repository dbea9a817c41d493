#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "chahn/asymptotics.hpp"
#include "chahn/error.hpp"
#include "chahn/harness.hpp"
#include "chahn/params.hpp"
#include "chahn/polynomial.hpp"
#include "chahn/zeros.hpp"

namespace chahn::cli {

using Json = nlohmann::ordered_json;
using asymptotics::Side;

namespace {

constexpr const char* kCsvVersion = "# chahn-csv v1";

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string component_decimal(double mantissa, std::int64_t exp2) {
  if (mantissa == 0.0) return "0.000000e+00";
  double lg = std::log10(std::abs(mantissa)) + static_cast<double>(exp2) * std::log10(2.0);
  double k = std::floor(lg);
  double m = std::pow(10.0, lg - k);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", m);
  if (std::string(buf).rfind("10.", 0) == 0) {
    m /= 10.0;
    k += 1.0;
    std::snprintf(buf, sizeof buf, "%.6f", m);
  }
  char out[96];
  std::snprintf(out, sizeof out, "%s%se%+03lld", mantissa < 0.0 ? "-" : "", buf, static_cast<long long>(k));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

Complex complex_or_throw(const std::string& s, const char* what) {
  const auto z = parse_complex(s);
  if (!z) throw ParseFailure(std::string("cannot parse ") + what + " '" + s + "'");
  return *z;
}

Params params_from(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 4) throw ParseFailure("--params needs four comma-separated values");
  Complex v[4];
  for (int i = 0; i < 4; ++i) v[i] = complex_or_throw(parts[i], "parameter");
  return make_params(v[0], v[1], v[2], v[3]);
}

std::vector<int> ints_from(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) throw ParseFailure("bad integer list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

Side side_from(const std::string& s) {
  if (s == "plus") return Side::Plus;
  if (s == "minus") return Side::Minus;
  throw ParseFailure("--side must be plus or minus");
}

const char* side_name(Side s) { return s == Side::Plus ? "plus" : "minus"; }

const char* region_name(asymptotics::Region r) {
  switch (r) {
    case asymptotics::Region::Outer: return "outer";
    case asymptotics::Region::OscPlus: return "osc-plus";
    case asymptotics::Region::OscMinus: return "osc-minus";
    case asymptotics::Region::TurnPlus: return "turn-plus";
    case asymptotics::Region::TurnMinus: return "turn-minus";
  }
  return "";
}

const char* kind_name(harness::RowKind k) {
  switch (k) {
    case harness::RowKind::Convergence: return "convergence";
    case harness::RowKind::Consistency: return "consistency";
    case harness::RowKind::Orthogonality: return "orthogonality";
    case harness::RowKind::ZeroAccuracy: return "zero-accuracy";
  }
  return "";
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string optional_csv(const std::optional<double>& v) { return v ? shortest(*v) : std::string(); }

struct Config {
  std::string params = "0.5,0.5,0.5,0.5";
  std::string format = "json";
  std::string out_path;
  int oracle_bound = 40;
  double t_min = 0.05;
  double s_max = 8.0;
  double delta_series = 1e-3;

  asymptotics::Thresholds thresholds() const { return {t_min, s_max, delta_series}; }
};

// A table of strings for CSV output; JSON output builds documents directly.
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& out, const Table& t) {
  out << kCsvVersion << ' ' << t.name << '\n';
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

std::vector<std::string> value_cells(const ScaledValue& v) {
  return {shortest(v.mantissa().real()), shortest(v.mantissa().imag()), std::to_string(v.exp2()), decimal_string(v)};
}

const std::vector<std::string> kValueHeader = {"mantissa_re", "mantissa_im", "exp2", "decimal"};

Json params_json(const Params& p) {
  return Json::array({render_complex(p.a()), render_complex(p.b()), render_complex(p.c()), render_complex(p.d())});
}

Json row_json(const harness::ReportRow& r) {
  Json j;
  j["kind"] = kind_name(r.kind);
  j["n"] = r.n;
  j["index"] = r.index;
  j["side"] = side_name(r.side);
  j["point"] = r.point;
  j["exact"] = value_json(r.exact);
  j["approx"] = value_json(r.approx);
  j["rel_error"] = r.rel_error;
  j["empirical_order"] = optional_json(r.empirical_order);
  j["scaled_deviation"] = optional_json(r.scaled_deviation);
  return j;
}

Table rows_table(const std::string& name, const std::vector<harness::ReportRow>& rows) {
  Table t;
  t.name = name;
  t.header = {"kind", "n", "index", "side", "point"};
  for (const char* prefix : {"exact_", "approx_"})
    for (const auto& h : kValueHeader) t.header.push_back(prefix + h);
  for (const char* h : {"rel_error", "empirical_order", "scaled_deviation"}) t.header.emplace_back(h);
  for (const auto& r : rows) {
    std::vector<std::string> cells = {kind_name(r.kind), std::to_string(r.n), std::to_string(r.index),
                                      side_name(r.side), shortest(r.point)};
    for (const auto& c : value_cells(r.exact)) cells.push_back(c);
    for (const auto& c : value_cells(r.approx)) cells.push_back(c);
    cells.push_back(shortest(r.rel_error));
    cells.push_back(optional_csv(r.empirical_order));
    cells.push_back(optional_csv(r.scaled_deviation));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

struct Output {
  Json doc;
  Table table;
};

void emit(const Config& cfg, const Output& o, std::ostream& out) {
  std::ostringstream buf;
  if (cfg.format == "csv") {
    write_csv(buf, o.table);
  } else {
    buf << o.doc.dump(2) << '\n';
  }
  if (cfg.out_path.empty()) {
    out << buf.str();
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw ParseFailure("cannot open output file " + cfg.out_path);
  f << buf.str();
}

// eval ----------------------------------------------------------------------

Output do_eval(const Config& cfg, int n, const std::string& x_text) {
  const Params p = params_from(cfg.params);
  const Complex x = complex_or_throw(x_text, "--x");
  const MonicValue mv = monic_eval(n, x, p);
  const ScaledValue pn = mv.value / monic_factor(n, p);
  const ScaledValue w = weight(x, p);

  Output o;
  o.doc["command"] = "eval";
  o.doc["n"] = n;
  o.doc["x"] = render_complex(x);
  o.doc["params"] = params_json(p);
  o.doc["monic"] = value_json(mv.value);
  o.doc["monic_derivative"] = value_json(mv.derivative);
  o.doc["p_n"] = value_json(pn);
  o.doc["weight"] = value_json(w);
  o.table.name = "eval";
  o.table.header = {"quantity"};
  for (const auto& h : kValueHeader) o.table.header.push_back(h);
  auto add = [&o](const char* name, const ScaledValue& v) {
    std::vector<std::string> cells = {name};
    for (const auto& c : value_cells(v)) cells.push_back(c);
    o.table.rows.push_back(std::move(cells));
  };
  add("monic", mv.value);
  add("monic_derivative", mv.derivative);
  add("p_n", pn);
  add("weight", w);

  if (n <= cfg.oracle_bound) {
    OracleOptions opts;
    opts.max_degree = cfg.oracle_bound;
    try {
      const OracleResult r = oracle_3f2(n, x, p, opts);
      o.doc["p_n_oracle"] = value_json(r.value);
      o.doc["oracle_condition"] = r.condition;
      add("p_n_oracle", r.value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CancellationLoss) throw;
      o.doc["p_n_oracle"] = nullptr;
    }
  }
  return o;
}

// approx --------------------------------------------------------------------

Output do_approx(const Config& cfg, int n, const std::optional<std::string>& t_text, const std::optional<double>& s,
                 std::string method, const std::string& side_text) {
  const Params p = params_from(cfg.params);
  const auto th = cfg.thresholds();
  Side side = side_from(side_text);
  if (method != "auto" && method != "outer" && method != "osc" && method != "uniform" && method != "plancherel") {
    throw ParseFailure("--method must be outer, osc, uniform, plancherel or auto");
  }
  std::optional<Complex> t;
  if (t_text) t = complex_or_throw(*t_text, "--t");
  std::optional<asymptotics::Region> region;
  if (method == "auto") {
    if (!t && s) {
      method = "plancherel";
    } else if (!t) {
      throw ParseFailure("approx needs --t or --s");
    } else {
      region = asymptotics::classify(*t, n, th);
      switch (*region) {
        case asymptotics::Region::Outer: method = "outer"; break;
        case asymptotics::Region::OscPlus:
        case asymptotics::Region::OscMinus: method = "osc"; break;
        case asymptotics::Region::TurnPlus:
        case asymptotics::Region::TurnMinus: method = "uniform"; break;
      }
    }
  }
  auto real_t = [&]() {
    if (!t) throw ParseFailure("--method " + method + " needs --t");
    if (t->imag() != 0.0) throw Error(ErrorCode::DomainError, "approx: --method " + method + " needs real t");
    return t->real();
  };

  ScaledValue approx, exact;
  Complex x;
  const char* quantity = "monic";
  if (method == "outer") {
    if (!t) throw ParseFailure("--method outer needs --t");
    approx = asymptotics::outer_approx(n, *t, p);
    x = static_cast<double>(n) * *t;
    exact = monic_eval(n, x, p).value;
  } else if (method == "osc") {
    const double tr = real_t();
    side = tr > 0.0 ? Side::Plus : Side::Minus;
    approx = asymptotics::osc_approx(n, tr, side, p, th);
    x = static_cast<double>(n) * tr;
    exact = monic_eval(n, x, p).value;
  } else if (method == "uniform") {
    const double tr = real_t();
    if (tr < 0.0) side = Side::Minus;
    approx = asymptotics::uniform_approx(n, std::abs(tr), side, p, th);
    x = asymptotics::uniform_x(n, std::abs(tr), side, p);
    exact = normalized_monic(n, x, p);
    quantity = "normalized";
  } else {
    if (!s) throw ParseFailure("--method plancherel needs --s");
    approx = asymptotics::plancherel(n, *s, side, p, th);
    x = asymptotics::plancherel_x(n, *s, side, p);
    exact = normalized_monic(n, x, p);
    quantity = "normalized";
  }
  const double rel = relative_difference(exact, approx);

  Output o;
  o.doc["command"] = "approx";
  o.doc["n"] = n;
  if (t) o.doc["t"] = render_complex(*t);
  if (s && method == "plancherel") o.doc["s"] = *s;
  o.doc["params"] = params_json(p);
  o.doc["method"] = method;
  o.doc["region"] = region ? Json(region_name(*region)) : Json(nullptr);
  o.doc["side"] = side_name(side);
  o.doc["quantity"] = quantity;
  o.doc["x"] = render_complex(x);
  o.doc["approx"] = value_json(approx);
  o.doc["exact"] = value_json(exact);
  o.doc["rel_error"] = rel;
  o.table.name = "approx";
  o.table.header = {"method", "side", "quantity", "x", "which"};
  for (const auto& h : kValueHeader) o.table.header.push_back(h);
  for (const auto& [which, v] : {std::pair<const char*, ScaledValue>{"approx", approx}, {"exact", exact}}) {
    std::vector<std::string> cells = {method, side_name(side), quantity, render_complex(x), which};
    for (const auto& c : value_cells(v)) cells.push_back(c);
    o.table.rows.push_back(std::move(cells));
  }
  return o;
}

// zeros ---------------------------------------------------------------------

Output do_zeros(const Config& cfg, int n, bool estimates_only, const std::optional<int>& k,
                const std::string& side_text) {
  const Params p = params_from(cfg.params);
  const Side side = side_from(side_text);
  Output o;
  o.doc["command"] = "zeros";
  o.doc["n"] = n;
  o.doc["params"] = params_json(p);
  o.doc["side"] = side_name(side);

  std::vector<int> ks;
  if (k) {
    ks.push_back(*k);
  } else {
    for (int i = 1; i <= std::min(10, n); ++i) ks.push_back(i);
  }
  Json est = Json::array();
  Table t;
  t.name = "zeros";
  t.header = {"kind", "index", "x", "residual_mantissa", "residual_exp2", "provenance"};
  for (int kk : ks) {
    const double e = zeros::edge_estimate(n, kk, side, p);
    est.push_back(Json{{"k", kk}, {"x", e}});
    t.rows.push_back({"estimate", std::to_string(kk), shortest(e), "", "", "estimate"});
  }
  o.doc["estimates"] = est;
  if (!estimates_only) {
    const zeros::ZeroSet set = zeros::all_zeros(n, p);
    Json zs = Json::array();
    for (std::size_t i = 0; i < set.zeros.size(); ++i) {
      const char* prov = set.provenance[i] == zeros::Provenance::Refined ? "refined" : "estimate";
      zs.push_back(Json{{"index", i + 1}, {"x", set.zeros[i]}, {"residual", value_json(set.residuals[i])},
                        {"provenance", prov}});
      t.rows.push_back({"zero", std::to_string(i + 1), shortest(set.zeros[i]),
                        shortest(set.residuals[i].mantissa().real()), std::to_string(set.residuals[i].exp2()), prov});
    }
    o.doc["zeros"] = zs;
  }
  o.table = std::move(t);
  return o;
}

// validate ------------------------------------------------------------------

Output rows_output(const std::string& what, const Params& p, const std::vector<harness::ReportRow>& rows) {
  Output o;
  o.doc["command"] = "validate";
  o.doc["table"] = what;
  o.doc["params"] = params_json(p);
  Json arr = Json::array();
  double worst = 0.0;
  for (const auto& r : rows) {
    arr.push_back(row_json(r));
    worst = std::max(worst, r.rel_error);
  }
  o.doc["max_rel_error"] = worst;
  o.doc["rows"] = arr;
  o.table = rows_table(what, rows);
  return o;
}

harness::Regime regime_from(const std::string& s) {
  if (s == "outer") return harness::Regime::Outer;
  if (s == "osc") return harness::Regime::Osc;
  if (s == "uniform") return harness::Regime::Uniform;
  if (s == "plancherel") return harness::Regime::Plancherel;
  throw ParseFailure("--regime must be outer, osc, uniform or plancherel");
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  text.remove_suffix(1);
  // The split is at the last sign that is not the leading one and not part
  // of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  auto imag_of = [](std::string_view s) -> std::optional<double> {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split_at == std::string_view::npos) {
    const auto im = imag_of(text);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  const auto re = parse_real(text.substr(0, split_at));
  const auto im = imag_of(text.substr(split_at));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::string render_complex(Complex z) {
  std::string s = shortest(z.real());
  if (z.imag() == 0.0 && !std::signbit(z.imag())) return s;
  const double im = z.imag();
  s += std::signbit(im) ? '-' : '+';
  s += shortest(std::abs(im));
  s += 'i';
  return s;
}

std::string decimal_string(const ScaledValue& v) {
  const Complex m = v.mantissa();
  if (m.imag() == 0.0) return component_decimal(m.real(), v.exp2());
  return "(" + component_decimal(m.real(), v.exp2()) + ", " + component_decimal(m.imag(), v.exp2()) + ")";
}

Json value_json(const ScaledValue& v) {
  Json j;
  j["mantissa_re"] = v.mantissa().real();
  j["mantissa_im"] = v.mantissa().imag();
  j["exp2"] = v.exp2();
  j["decimal"] = decimal_string(v);
  return j;
}

ScaledValue value_from_json(const Json& j) {
  return ScaledValue::from_parts(Complex(j.at("mantissa_re").get<double>(), j.at("mantissa_im").get<double>()),
                                 j.at("exp2").get<std::int64_t>());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous Hahn polynomials: exact values, asymptotics, zeros and validation tables"};
  app.name("chahn");
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--params", cfg.params, "a,b,c,d as complex literals (re, re+imi, re-imi)");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out_path, "write to this file instead of stdout");
  app.add_option("--oracle-bound", cfg.oracle_bound, "largest degree for the hypergeometric oracle");
  app.add_option("--t-min", cfg.t_min, "smallest |t| accepted by the asymptotic formulas");
  app.add_option("--s-max", cfg.s_max, "turning window size in Airy units");
  app.add_option("--delta-series", cfg.delta_series, "switch to series for |t - 1/2| below this");

  int n = 0;
  std::string x_text;
  auto* eval = app.add_subcommand("eval", "exact monic value, derivative, p_n and weight");
  eval->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--x", x_text, "point (complex literal)")->required();

  std::optional<std::string> t_text;
  std::optional<double> s_value;
  std::string method = "auto";
  std::string side_text = "plus";
  auto* approx = app.add_subcommand("approx", "asymptotic approximation next to the exact value");
  approx->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  approx->add_option("--t", t_text, "rescaled point x/n (complex literal)");
  approx->add_option("--s", s_value, "Airy-scale offset from the turning point");
  approx->add_option("--method", method, "outer|osc|uniform|plancherel|auto");
  approx->add_option("--side", side_text, "plus or minus turning point");

  bool estimates_only = false;
  std::optional<int> k_value;
  auto* zeros_cmd = app.add_subcommand("zeros", "edge estimates and the refined zero set");
  zeros_cmd->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
  zeros_cmd->add_flag("--estimates-only", estimates_only, "skip the full zero set");
  zeros_cmd->add_option("--k", k_value, "single edge index");
  zeros_cmd->add_option("--side", side_text, "plus or minus edge");

  auto* validate = app.add_subcommand("validate", "validation tables");
  validate->require_subcommand(1);
  validate->fallthrough();
  int max_n = 3;
  auto* ortho = validate->add_subcommand("orthogonality", "normalized Gram matrix defects");
  ortho->add_option("--max-n", max_n, "largest degree")->check(CLI::Range(0, 20));
  std::string regime = "outer";
  std::string ns_text = "20,40,80,160";
  std::optional<double> point;
  auto* conv = validate->add_subcommand("convergence", "error against n for one regime");
  conv->add_option("--regime", regime, "outer|osc|uniform|plancherel");
  conv->add_option("--t,--s", point, "t for outer/osc/uniform, s for plancherel");
  conv->add_option("--ns", ns_text, "comma-separated degrees");
  conv->add_option("--side", side_text, "plus or minus");
  int k_max = 1;
  std::string zero_ns = "40,80,160";
  auto* zacc = validate->add_subcommand("zero-accuracy", "refined edge zeros against the Airy estimates");
  zacc->add_option("--ns", zero_ns, "comma-separated degrees");
  zacc->add_option("--k", k_max, "largest edge index")->check(CLI::Range(1, 10));
  zacc->add_option("--side", side_text, "plus or minus");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 3;
  }

  try {
    Output o;
    if (*eval) {
      o = do_eval(cfg, n, x_text);
    } else if (*approx) {
      o = do_approx(cfg, n, t_text, s_value, method, side_text);
    } else if (*zeros_cmd) {
      o = do_zeros(cfg, n, estimates_only, k_value, side_text);
    } else if (*ortho) {
      const Params p = params_from(cfg.params);
      o = rows_output("orthogonality", p, harness::orthogonality_report(max_n, p));
    } else if (*conv) {
      const Params p = params_from(cfg.params);
      const harness::Regime r = regime_from(regime);
      const double pt = point.value_or(r == harness::Regime::Osc ? 0.3 : (r == harness::Regime::Plancherel ? 0.0 : 1.0));
      o = rows_output("convergence", p,
                      harness::convergence_table(r, pt, ints_from(ns_text), p, side_from(side_text), cfg.thresholds()));
    } else if (*zacc) {
      const Params p = params_from(cfg.params);
      o = rows_output("zero-accuracy", p, harness::zero_accuracy_report(ints_from(zero_ns), k_max, p, side_from(side_text)));
    }
    emit(cfg, o, out);
  } catch (const ParseFailure& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace chahn::cli
