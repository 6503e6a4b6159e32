// Command-line front end: single-state queries, grid sweeps, uncertainty
// reports, validation runs and the quantity catalogue.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hosc/hosc.hpp>

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// JSON serialization with every floating value printed as %.17g.
void write_json(const ojson& j, std::string& out) {
  switch (j.type()) {
    case ojson::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += ojson(it.key()).dump();
        out += ':';
        write_json(it.value(), out);
      }
      out += '}';
      break;
    }
    case ojson::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_json(j[i], out);
      }
      out += ']';
      break;
    }
    case ojson::value_t::number_float: out += format_real(j.get<double>()); break;
    default: out += j.dump(); break;
  }
}

std::string to_text(const ojson& j) {
  std::string s;
  write_json(j, s);
  return s;
}

ojson optional_real(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

ojson state_json(const std::optional<hosc::State>& s) {
  if (!s) return nullptr;
  return ojson::parse(hosc::to_json(*s).dump());
}

double oracle_tol_from_env() {
  const char* env = std::getenv("HO_ORACLE_TOL");
  if (!env) return hosc::default_oracle_tol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || !(v > 0.0))
    throw hosc::ParseError(std::string("HO_ORACLE_TOL must be a positive real, got '") + env + "'");
  return v;
}

/// Runs a command body, mapping library errors to exit codes.
template <typename F>
int guarded_main(F&& body) {
  try {
    return body();
  } catch (const hosc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hosc::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const hosc::UnsupportedError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const hosc::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string state, quantity, engine = "closed", space = "position", regime = "rydberg", mode = "q_limit";
  double k = 2.0, q = 2.0, alpha = 0.0;
  int n = 1;
};

hosc::QuantityParams make_params(const ComputeArgs& a, double tol) {
  hosc::QuantityParams p;
  p.k = a.k;
  p.q = a.q;
  p.n = a.n;
  p.alpha = a.alpha;
  p.regime = hosc::parse_regime(a.regime);
  p.shannon_mode = hosc::parse_shannon_mode(a.mode);
  p.tol = tol;
  return p;
}

ojson eval_record(const std::optional<hosc::State>& state, const std::string& quantity, hosc::Space space,
                  hosc::Engine engine, const hosc::EvalResult& r) {
  ojson j;
  j["state"] = state_json(state);
  j["quantity"] = quantity;
  j["space"] = hosc::space_name(space);
  j["engine"] = hosc::engine_name(engine);
  j["value"] = r.value;
  j["error_estimate"] = optional_real(r.error_estimate);
  j["order_note"] = r.order_note.empty() ? ojson(nullptr) : ojson(r.order_note);
  return j;
}

int cmd_compute(const ComputeArgs& a) {
  const double tol = oracle_tol_from_env();
  const auto params = make_params(a, tol);
  const auto engine = hosc::parse_engine(a.engine);
  const auto space = hosc::parse_space(a.space);
  const auto& info = hosc::quantity_info(a.quantity);
  std::optional<hosc::State> state;
  if (!a.state.empty()) state = hosc::parse_state(a.state);
  else if (info.needs_state) throw hosc::ParseError("quantity " + a.quantity + " needs --state");
  try {
    const auto r = hosc::evaluate(a.quantity, state, engine, space, params);
    std::cout << to_text(eval_record(state, a.quantity, space, engine, r)) << "\n";
    return 0;
  } catch (const hosc::ConvergenceError& e) {
    auto j = eval_record(state, a.quantity, space, engine, {e.best_value(), e.abs_error(), {}});
    j["converged"] = false;
    std::cout << to_text(j) << "\n";
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitConvergence;
  }
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct EngineSpec {
  hosc::Engine engine = hosc::Engine::Closed;
  hosc::Regime regime = hosc::Regime::Rydberg;
  hosc::ShannonMode mode = hosc::ShannonMode::QLimit;
  std::string label;
};

struct QuantitySpec {
  std::string id;
  hosc::QuantityParams params;
  std::string label;
};

struct SweepState {
  std::optional<hosc::State> state;
  std::map<std::string, double> axes;  // D, omega, nr, l, m, N
};

struct SweepRow {
  size_t state_index = 0;
  const QuantitySpec* quantity = nullptr;
  const EngineSpec* engine = nullptr;
  std::optional<hosc::EvalResult> result;
  std::string error;
};

/// A list of numbers, or {"from","to","step"} expanded inclusively.
std::vector<double> number_range(const nlohmann::json& v, const char* what) {
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (!e.is_number()) throw hosc::ParseError(std::string(what) + ": range entries must be numbers");
      out.push_back(e.get<double>());
    }
  } else if (v.is_object()) {
    const double from = hosc::detail::json_real(hosc::detail::require_key(v, "from"), what);
    const double to = hosc::detail::json_real(hosc::detail::require_key(v, "to"), what);
    const double step = v.contains("step") ? hosc::detail::json_real(v["step"], what) : 1.0;
    if (!(step > 0.0)) throw hosc::ParseError(std::string(what) + ": step must be positive");
    for (long i = 0;; ++i) {
      const double x = from + i * step;
      if (x > to + 1e-12 * std::max(1.0, std::fabs(to))) break;
      out.push_back(x);
    }
  } else {
    throw hosc::ParseError(std::string(what) + ": expected a number, a list or a {from,to,step} range");
  }
  if (out.empty()) throw hosc::ParseError(std::string(what) + ": range is empty");
  return out;
}

std::vector<int> int_range(const nlohmann::json& v, const char* what) {
  std::vector<int> out;
  for (double x : number_range(v, what)) {
    if (x != std::floor(x)) throw hosc::ParseError(std::string(what) + ": expected integers");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::vector<SweepState> expand_states(const nlohmann::json& spec) {
  std::vector<SweepState> out;
  if (spec.is_null()) {
    out.push_back({});
    return out;
  }
  const std::string kind = hosc::detail::require_key(spec, "kind").get<std::string>();
  const auto omegas = spec.contains("omega") ? number_range(spec["omega"], "omega") : std::vector<double>{1.0};
  if (kind == "hyper") {
    const auto dims = int_range(hosc::detail::require_key(spec, "D"), "D");
    const auto nrs = int_range(hosc::detail::require_key(spec, "nr"), "nr");
    if (spec.contains("mu")) {
      // Either one mu tuple or a list of tuples.
      const auto& mu_spec = spec["mu"];
      const nlohmann::json mu_list =
          mu_spec.is_array() && !mu_spec.empty() && mu_spec.front().is_number() ? nlohmann::json::array({mu_spec}) : mu_spec;
      for (int D : dims)
        for (double w : omegas)
          for (int nr : nrs)
            for (const auto& mu : mu_list) {
              hosc::HyperState s(hosc::OscillatorSpec(w, D), nr, hosc::detail::json_int_list(mu, "mu"));
              out.push_back({s, {{"D", D}, {"omega", w}, {"nr", nr}, {"l", s.l()}, {"m", s.m()}}});
            }
      return out;
    }
    const auto ls = spec.contains("l") ? int_range(spec["l"], "l") : std::vector<int>{0};
    for (int D : dims)
      for (double w : omegas)
        for (int nr : nrs)
          for (int l : ls) {
            std::vector<int> ms;
            if (spec.contains("m")) ms = int_range(spec["m"], "m");
            else ms = {D == 2 ? l : 0};
            for (int m : ms) {
              if (std::abs(m) > l || (D == 2 && m != l)) continue;
              const auto s = hosc::HyperState::with_lm(hosc::OscillatorSpec(w, D), nr, l, m);
              out.push_back({s, {{"D", D}, {"omega", w}, {"nr", nr}, {"l", l}, {"m", m}}});
            }
          }
  } else if (kind == "cartesian") {
    if (spec.contains("n")) {
      for (double w : omegas)
        for (const auto& n : spec["n"]) {
          hosc::CartesianState c(w, hosc::detail::json_int_list(n, "n"));
          out.push_back({c, {{"D", c.dim()}, {"omega", w}, {"N", c.N()}}});
        }
    } else {
      // Uniform tuples: every axis carries the same quantum number.
      const auto dims = int_range(hosc::detail::require_key(spec, "D"), "D");
      const auto fills = spec.contains("n_fill") ? int_range(spec["n_fill"], "n_fill") : std::vector<int>{0};
      for (int D : dims)
        for (double w : omegas)
          for (int f : fills) {
            hosc::CartesianState c(w, std::vector<int>(D, f));
            out.push_back({c, {{"D", D}, {"omega", w}, {"N", c.N()}}});
          }
    }
  } else {
    throw hosc::ParseError("states.kind must be hyper or cartesian");
  }
  if (out.empty()) throw hosc::ParseError("states: the range spec selects no admissible state");
  return out;
}

std::string number_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<QuantitySpec> parse_quantities(const nlohmann::json& v, double tol) {
  if (!v.is_array() || v.empty()) throw hosc::ParseError("quantities must be a non-empty list");
  std::vector<QuantitySpec> out;
  for (const auto& e : v) {
    QuantitySpec q;
    q.params.tol = tol;
    if (e.is_string()) {
      q.id = e.get<std::string>();
    } else if (e.is_object()) {
      q.id = hosc::detail::require_key(e, "id").get<std::string>();
      if (e.contains("k")) q.params.k = hosc::detail::json_real(e["k"], "k");
      if (e.contains("q")) q.params.q = hosc::detail::json_real(e["q"], "q");
      if (e.contains("n")) q.params.n = hosc::detail::json_int(e["n"], "n");
      if (e.contains("alpha")) q.params.alpha = hosc::detail::json_real(e["alpha"], "alpha");
    } else {
      throw hosc::ParseError("quantities entries must be ids or objects");
    }
    const auto& info = hosc::quantity_info(q.id);
    q.label = q.id;
    const std::string ps = info.params;
    if (ps.find('k') != std::string::npos) q.label += "(k=" + number_label(q.params.k) + ")";
    if (ps == "q") q.label += "(q=" + number_label(q.params.q) + ")";
    if (ps.find('n') != std::string::npos && ps.find("alpha") == std::string::npos)
      q.label += "(n=" + std::to_string(q.params.n) + ")";
    if (ps.find("alpha") != std::string::npos)
      q.label += "(n=" + std::to_string(q.params.n) + ",alpha=" + number_label(q.params.alpha) + ")";
    out.push_back(q);
  }
  return out;
}

std::vector<EngineSpec> parse_engines(const nlohmann::json& v) {
  if (!v.is_array() || v.empty()) throw hosc::ParseError("engines must be a non-empty list");
  std::vector<EngineSpec> out;
  for (const auto& e : v) {
    EngineSpec s;
    if (e.is_string()) {
      s.engine = hosc::parse_engine(e.get<std::string>());
    } else if (e.is_object()) {
      s.engine = hosc::parse_engine(hosc::detail::require_key(e, "engine").get<std::string>());
      if (e.contains("regime")) s.regime = hosc::parse_regime(e["regime"].get<std::string>());
      if (e.contains("mode")) s.mode = hosc::parse_shannon_mode(e["mode"].get<std::string>());
    } else {
      throw hosc::ParseError("engines entries must be names or objects");
    }
    s.label = hosc::engine_name(s.engine);
    if (s.engine == hosc::Engine::Asymptotic) {
      s.label += std::string(":") + hosc::regime_name(s.regime);
      if (e.is_object() && e.contains("mode")) s.label += std::string(":") + e["mode"].get<std::string>();
    }
    out.push_back(s);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string svg_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

/// Static SVG line plot: one series per (quantity, engine) label.
std::string render_svg(const std::string& x_axis, const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series) {
  const double W = 720, H = 480, L = 80, R = 220, T = 30, B = 60;
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& [name, pts] : series)
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, x), xmax = std::max(xmax, x);
      ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  const bool logx = xmin > 0.0 && xmax / xmin >= 100.0;
  auto tx = [&](double x) { return logx ? std::log10(x) : x; };
  double ax = tx(xmin), bx = tx(xmax);
  if (ax == bx) ax -= 0.5, bx += 0.5;
  if (ymin == ymax) ymin -= 0.5, ymax += 0.5;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad, ymax += pad;
  auto px = [&](double x) { return L + (tx(x) - ax) / (bx - ax) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << H << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n"
    << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = ax + (bx - ax) * i / 4.0, fy = ymin + (ymax - ymin) * i / 4.0;
    const double xv = logx ? std::pow(10.0, fx) : fx;
    const double sx = L + (W - L - R) * i / 4.0, sy = py(fy);
    o << "<text x=\"" << svg_number(sx) << "\" y=\"" << H - B + 18 << "\" font-size=\"11\" text-anchor=\"middle\">"
      << number_label(xv) << "</text>\n"
      << "<text x=\"" << L - 6 << "\" y=\"" << svg_number(sy + 4) << "\" font-size=\"11\" text-anchor=\"end\">"
      << number_label(fy) << "</text>\n";
  }
  o << "<text x=\"" << svg_number(L + (W - L - R) / 2) << "\" y=\"" << H - 15 << "\" font-size=\"13\" text-anchor=\"middle\">"
    << x_axis << (logx ? " (log scale)" : "") << "</text>\n"
    << "<text x=\"18\" y=\"" << svg_number(T + (H - T - B) / 2) << "\" font-size=\"13\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 18 " << svg_number(T + (H - T - B) / 2) << ")\">value</text>\n";
  for (size_t i = 0; i < series.size(); ++i) {
    const char* c = colors[i % 8];
    o << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    for (size_t j = 0; j < series[i].second.size(); ++j)
      o << (j ? " " : "") << svg_number(px(series[i].second[j].first)) << "," << svg_number(py(series[i].second[j].second));
    o << "\"/>\n";
    for (const auto& [x, y] : series[i].second)
      o << "<circle cx=\"" << svg_number(px(x)) << "\" cy=\"" << svg_number(py(y)) << "\" r=\"2.5\" fill=\"" << c << "\"/>\n";
    const double ly = T + 16.0 * i + 8;
    o << "<line x1=\"" << W - R + 12 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 32 << "\" y2=\"" << ly << "\" stroke=\"" << c
      << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << W - R + 36 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">" << series[i].first << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

int cmd_sweep(const std::string& config_path, int threads) {
  const double tol = oracle_tol_from_env();
  std::ifstream in(config_path);
  if (!in) throw hosc::ParseError("cannot open config file " + config_path);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw hosc::ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  std::vector<SweepState> states;
  if (cfg.contains("states") && cfg["states"].is_array()) {
    // A list of range specs is expanded in order and concatenated.
    for (const auto& spec : cfg["states"]) {
      auto part = expand_states(spec);
      states.insert(states.end(), part.begin(), part.end());
    }
    if (states.empty()) throw hosc::ParseError("states: empty list");
  } else {
    states = expand_states(cfg.contains("states") ? cfg["states"] : nlohmann::json());
  }
  const auto quantities = parse_quantities(hosc::detail::require_key(cfg, "quantities"), tol);
  const auto engines = parse_engines(hosc::detail::require_key(cfg, "engines"));
  const auto space = hosc::parse_space(cfg.value("space", std::string("position")));
  const std::string output = cfg.value("output", std::string("json"));
  if (output != "json" && output != "csv") throw hosc::ParseError("output must be json or csv");
  for (const auto& q : quantities)
    if (hosc::quantity_info(q.id).needs_state && !states.front().state)
      throw hosc::ParseError("quantity " + q.id + " needs a states range");

  std::vector<SweepRow> rows;
  for (size_t s = 0; s < states.size(); ++s)
    for (const auto& q : quantities)
      for (const auto& e : engines) rows.push_back({s, &q, &e, std::nullopt, {}});

  // Rows are independent; workers claim indices and results land in their fixed slots.
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < rows.size();) {
      auto& row = rows[i];
      auto params = row.quantity->params;
      params.regime = row.engine->regime;
      params.shannon_mode = row.engine->mode;
      try {
        row.result = hosc::evaluate(row.quantity->id, states[row.state_index].state, row.engine->engine, space, params);
      } catch (const hosc::ConvergenceError& e) {
        row.result = hosc::EvalResult{e.best_value(), e.abs_error(), {}};
        row.error = std::string("convergence: ") + e.what();
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const int n_threads = std::max(1, std::min<int>(threads, static_cast<int>(rows.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Residual of every non-closed row against the closed row of the same state and quantity.
  std::vector<std::optional<double>> residual(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].result || rows[i].engine->engine == hosc::Engine::Closed) continue;
    for (const auto& r : rows)
      if (r.state_index == rows[i].state_index && r.quantity == rows[i].quantity &&
          r.engine->engine == hosc::Engine::Closed && r.result && r.error.empty() && r.result->value != 0.0) {
        residual[i] = std::fabs(rows[i].result->value / r.result->value - 1.0);
        break;
      }
  }

  std::ostringstream out;
  if (output == "csv") out << "row,state,quantity,engine,space,value,error_estimate,order_note,residual,error\n";
  bool any_failed = false;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const auto& st = states[row.state_index].state;
    any_failed = any_failed || !row.error.empty();
    const std::string state_text = st ? to_text(state_json(*st)) : "";
    if (output == "csv") {
      auto real_field = [](const std::optional<double>& v) { return v && std::isfinite(*v) ? format_real(*v) : ""; };
      out << i << ',' << csv_field(state_text) << ',' << csv_field(row.quantity->label) << ','
          << csv_field(row.engine->label) << ',' << hosc::space_name(space) << ','
          << (row.result ? real_field(row.result->value) : "") << ','
          << (row.result ? real_field(row.result->error_estimate) : "") << ','
          << csv_field(row.result ? row.result->order_note : "") << ',' << real_field(residual[i]) << ','
          << csv_field(row.error) << '\n';
    } else {
      ojson j;
      j["row"] = i;
      j["state"] = state_json(st);
      j["quantity"] = row.quantity->label;
      j["engine"] = row.engine->label;
      j["space"] = hosc::space_name(space);
      j["value"] = row.result ? optional_real(row.result->value) : ojson(nullptr);
      j["error_estimate"] = row.result ? optional_real(row.result->error_estimate) : ojson(nullptr);
      j["order_note"] = row.result && !row.result->order_note.empty() ? ojson(row.result->order_note) : ojson(nullptr);
      j["residual"] = optional_real(residual[i]);
      j["error"] = row.error.empty() ? ojson(nullptr) : ojson(row.error);
      out << to_text(j) << '\n';
    }
  }
  if (cfg.contains("output_file")) {
    std::ofstream f(cfg["output_file"].get<std::string>(), std::ios::binary);
    if (!f) throw hosc::ParseError("cannot write output_file");
    f << out.str();
  } else {
    std::cout << out.str();
  }

  if (cfg.contains("plot")) {
    const auto& plot = cfg["plot"];
    const std::string axis = hosc::detail::require_key(plot, "x_axis").get<std::string>();
    const std::string file = hosc::detail::require_key(plot, "file").get<std::string>();
    std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
    for (const auto& q : quantities)
      for (const auto& e : engines) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& row : rows) {
          if (row.quantity != &q || row.engine != &e || !row.result || !row.error.empty()) continue;
          const auto& axes = states[row.state_index].axes;
          auto it = axes.find(axis);
          if (it == axes.end()) throw hosc::ParseError("plot.x_axis '" + axis + "' is not a state range key");
          if (std::isfinite(row.result->value)) pts.emplace_back(it->second, row.result->value);
        }
        series.emplace_back(q.label + " [" + e.label + "]", pts);
      }
    std::ofstream f(file, std::ios::binary);
    if (!f) throw hosc::ParseError("cannot write plot file " + file);
    f << render_svg(axis, series);
  }
  return any_failed ? kExitFailure : 0;
}

// ---------------------------------------------------------------------------
// uncertainty, validate, list-quantities
// ---------------------------------------------------------------------------

int cmd_uncertainty(const std::string& state_text, const std::string& relation, double q) {
  hosc::RelationParams p;
  p.q = q;
  p.tol = oracle_tol_from_env();
  const auto state = hosc::parse_state(state_text);
  std::vector<hosc::RelationReport> reports;
  if (relation.empty()) reports = hosc::check_all(state, p);
  else reports.push_back(hosc::check(relation, state, p));
  for (const auto& r : reports) {
    ojson j;
    j["relation_id"] = r.relation_id;
    j["state"] = state_json(state);
    j["lhs"] = r.lhs;
    j["bound"] = r.bound;
    j["slack"] = r.slack;
    j["satisfied"] = r.satisfied;
    j["saturated"] = r.saturated;
    std::cout << to_text(j) << "\n";
  }
  return 0;
}

int cmd_validate(bool full, const std::string& report_path) {
  hosc::ValidationOptions o;
  o.preset = full ? hosc::Preset::Full : hosc::Preset::Quick;
  o.oracle_tol = oracle_tol_from_env();
  const auto results = hosc::run_validation(o);
  ojson j;
  j["preset"] = full ? "full" : "quick";
  j["checks"] = ojson::array();
  std::map<std::string, int> counts = {{"pass", 0}, {"fail", 0}, {"paper_discrepancy", 0}, {"note", 0}};
  for (const auto& r : results) {
    ojson c;
    c["id"] = r.id;
    c["criterion"] = r.criterion;
    c["status"] = hosc::status_name(r.status);
    c["max_deviation"] = r.max_deviation;
    c["tolerance"] = r.tolerance;
    c["detail"] = r.detail;
    j["checks"].push_back(c);
    ++counts[hosc::status_name(r.status)];
  }
  ojson summary;
  for (const char* k : {"pass", "fail", "paper_discrepancy", "note"}) summary[k] = counts[k];
  j["summary"] = summary;
  std::string text;
  write_json(j, text);
  text += "\n";
  if (report_path.empty() || report_path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(report_path, std::ios::binary);
    if (!f) throw hosc::ParseError("cannot write report file " + report_path);
    f << text;
    for (const auto& r : results)
      std::cerr << hosc::status_name(r.status) << "  " << r.id << "\n";
  }
  return hosc::validation_passed(results) ? 0 : kExitFailure;
}

int cmd_list_quantities() {
  for (const auto& q : hosc::quantity_registry()) {
    ojson j;
    j["id"] = q.id;
    j["params"] = q.params;
    j["engines"] = q.engines;
    j["needs_state"] = q.needs_state;
    j["anchor"] = q.anchor;
    std::cout << to_text(j) << "\n";
  }
  for (const char* r : hosc::relation_ids()) {
    ojson j;
    j["relation"] = r;
    j["command"] = "uncertainty";
    std::cout << to_text(j) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispersion and entropy measures of D-dimensional harmonic oscillator states"};
  app.require_subcommand(0, 1);
  bool list_flag = false;
  app.add_flag("--list-quantities", list_flag, "List quantity ids with their anchors");

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Evaluate one quantity for one state with one engine");
  compute->add_option("--state", ca.state, "State JSON, e.g. {\"kind\":\"hyper\",\"D\":3,\"omega\":1,\"nr\":0,\"mu\":[0,0]}");
  compute->add_option("--quantity", ca.quantity, "Quantity id (see list-quantities)")->required();
  compute->add_option("--engine", ca.engine, "closed | oracle | asymptotic");
  compute->add_option("--space", ca.space, "position | momentum");
  compute->add_option("--k", ca.k, "Moment order");
  compute->add_option("--q", ca.q, "Renyi or norm order");
  compute->add_option("--n", ca.n, "Polynomial degree (state-free quantities)");
  compute->add_option("--alpha", ca.alpha, "Laguerre parameter");
  compute->add_option("--regime", ca.regime, "Asymptotic regime: rydberg | high_dim");
  compute->add_option("--mode", ca.mode, "High-dimensional Shannon mode: q_limit | as_published");

  std::string config;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* sweep = app.add_subcommand("sweep", "Evaluate a grid of states, quantities and engines");
  sweep->add_option("--config", config, "SweepConfig JSON file")->required();
  sweep->add_option("--threads", threads, "Worker threads (output order does not depend on it)");

  std::string ustate, relation;
  double uq = 2.0;
  auto* unc = app.add_subcommand("uncertainty", "Check uncertainty relations for a state");
  unc->add_option("--state", ustate, "State JSON")->required();
  unc->add_option("--relation", relation, "Relation id (default: all applicable)");
  unc->add_option("--q", uq, "Renyi order for renyi_conjugate");

  bool quick = false, full = false;
  std::string report;
  auto* val = app.add_subcommand("validate", "Run the cross-engine validation suite");
  auto* qf = val->add_flag("--quick", quick, "Quick preset (default)");
  val->add_flag("--full", full, "Full preset")->excludes(qf);
  val->add_option("--report", report, "Report file (default: stdout)");

  auto* list = app.add_subcommand("list-quantities", "List quantity ids with their anchors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (compute->parsed()) return guarded_main([&] { return cmd_compute(ca); });
  if (sweep->parsed()) return guarded_main([&] { return cmd_sweep(config, threads); });
  if (unc->parsed()) return guarded_main([&] { return cmd_uncertainty(ustate, relation, uq); });
  if (val->parsed()) return guarded_main([&] { return cmd_validate(full, report); });
  if (list->parsed() || list_flag) return guarded_main([&] { return cmd_list_quantities(); });
  std::cerr << app.help();
  return kExitParse;
}
