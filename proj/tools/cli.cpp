#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include <CLI11.hpp>

#include "glf/eisenstein.hpp"
#include "glf/lfun.hpp"
#include "glf/modforms.hpp"
#include "glf/resolvent.hpp"
#include "glf/verify.hpp"
#include "table.hpp"

namespace glf::cli {

namespace {

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw ParameterError("not a finite number: '" + text + "'");
  return v;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t') out += c;
  return out;
}

struct Context {
  std::string command;
  std::string budget_name = "default";
  verify::Budget budget;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();
  std::ostream* err = nullptr;
};

void warn_near_singular_set(const Context& ctx, Complex z) {
  const modforms::HalfPlanePoint p(z);
  if (modforms::in_singular_set(p, 1e-6) && !modforms::in_singular_set(p, 1e-12))
    *ctx.err << "warning: z = " << format_complex(z)
             << " is close to the orbit of the imaginary axis; quadrature near the pole may be slow\n";
}

lfun::QuadratureSpec quad_with_t0(const Context& ctx, double t0) {
  auto q = ctx.budget.quad;
  q.t0 = t0;
  return q;
}

struct Outcome {
  Table table;
  bool pass = true;
};

Outcome eval_lz(const Context& ctx, Complex z, Complex s, double t0) {
  warn_near_singular_set(ctx, z);
  const auto r = lfun::L_z(modforms::HalfPlanePoint(z), s, quad_with_t0(ctx, t0));
  Outcome o;
  o.table.columns = {"z", "s", "t0", "L_z", "err_est", "subdivisions"};
  o.table.add({z, s, t0, r.value, r.err_est, static_cast<std::int64_t>(r.diagnostics.at("subdivisions"))});
  return o;
}

Outcome eval_le2(const Context& ctx, Complex s, double t0) {
  const auto r = lfun::L_E2hat(s, quad_with_t0(ctx, t0));
  const Complex cf = lfun::L_E2hat_closed_form(s);
  Outcome o;
  o.table.columns = {"s", "t0", "L_E2hat", "err_est", "closed_form", "rel_diff"};
  o.table.add({s, t0, r.value, r.err_est, cf, std::abs(r.value - cf) / std::abs(cf)});
  return o;
}

Outcome eval_eisenstein(const Context& ctx, int k, Complex w, Complex tau) {
  const auto r = eisenstein::eval_E_realanalytic(k, w, modforms::HalfPlanePoint(tau), ctx.budget.lattice);
  Outcome o;
  o.table.columns = {"k", "w", "tau", "E", "err_est"};
  o.table.add({static_cast<std::int64_t>(k), w, tau, r.value, r.err_est});
  return o;
}

Outcome eval_resolvent(const Context& ctx, const std::string& kind, Complex w, Complex z, Complex tau) {
  const modforms::HalfPlanePoint zp(z), tp(tau);
  EvalResult r;
  if (kind == "G")
    r = resolvent::Gw_truncated(w, zp, tp, ctx.budget.resolvent);
  else if (kind == "calG")
    r = resolvent::calGw(w, zp, tp, ctx.budget.resolvent);
  else
    throw ParameterError("--kind must be G or calG");
  Outcome o;
  o.table.columns = {"kind", "w", "z", "tau", "value", "err_est"};
  o.table.add({kind, w, z, tau, r.value, r.err_est});
  return o;
}

Outcome run_verify(const Context& ctx, std::vector<std::string> names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names.clear();
    for (const auto& s : verify::suites()) names.push_back(s.name);
  }
  Outcome o;
  o.table.columns = {"suite", "criterion", "theorem", "test", "status", "residual", "tolerance", "note"};
  for (const auto& n : names) {
    const auto res = verify::run_suite(n, ctx.budget);
    *ctx.err << (res.pass() ? "PASS " : "FAIL ") << res.name << " (" << res.checks.size() << " checks, "
             << std::llround(res.seconds * 1000.0) << " ms)\n";
    for (const auto& c : res.checks) {
      o.table.add({res.name, static_cast<std::int64_t>(res.criterion), c.theorem, c.test,
                   std::string(c.pass ? "pass" : "fail"), c.residual, c.tolerance, c.note});
      o.pass = o.pass && c.pass;
    }
  }
  return o;
}

Outcome run_limit(const Context& ctx, Complex s, double x, const std::vector<double>& ys) {
  const auto rep = lfun::limit_experiment(s, x, ys, ctx.budget.quad);
  Outcome o;
  o.table.columns = {"y", "L_z", "R", "A", "target", "rel_error"};
  for (std::size_t i = 0; i < rep.y.size(); ++i)
    o.table.add({rep.y[i], rep.Lz[i], rep.residual[i], rep.A, rep.target, rep.rel_error});
  return o;
}

// Uniform double in [0, 1) from the top 53 bits, independent of the
// standard library's distribution implementations.
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

Outcome run_sweep(const Context& ctx, Complex s, int count, const std::string& zlist) {
  std::vector<Complex> zs;
  if (!zlist.empty()) {
    std::size_t start = 0;
    while (start <= zlist.size()) {
      const std::size_t semi = zlist.find(';', start);
      const std::string item = zlist.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      if (!strip(item).empty()) zs.push_back(parse_complex(item));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
  } else {
    if (count < 1) throw ParameterError("--count must be positive");
    std::mt19937_64 gen(ctx.seed);
    while (static_cast<int>(zs.size()) < count) {
      const double u = unit(gen) - 0.5;
      const double v = 0.8 + 2.2 * unit(gen);
      if (u * u + v * v < 1.0) continue;
      // keep away from the imaginary axis and its images on the boundary
      if (std::abs(u) < 0.02 || std::abs(std::abs(u) - 0.5) < 0.02 || u * u + v * v < 1.04) continue;
      zs.emplace_back(u, v);
    }
  }
  Outcome o;
  o.table.columns = {"z", "s", "L_z(s)", "L_z(2-s)", "fe_residual", "err_est"};
  for (const Complex z : zs) {
    warn_near_singular_set(ctx, z);
    const modforms::HalfPlanePoint p(z);
    const auto a = lfun::L_z(p, s, ctx.budget.quad);
    const auto b = lfun::L_z(p, 2.0 - s, ctx.budget.quad);
    o.table.add({z, s, a.value, b.value, std::abs(a.value + b.value) / std::max(std::abs(a.value), 1.0),
                 a.err_est + b.err_est});
  }
  return o;
}

std::filesystem::path output_path(const std::string& opt, const std::string& command, Format f) {
  const char* dir = std::getenv("LZ_OUTPUT_DIR");
  const std::string ext = f == Format::Csv ? ".csv" : f == Format::Json ? ".json" : ".txt";
  if (opt == "-") return {};
  if (!opt.empty()) {
    std::filesystem::path p(opt);
    if (p.is_relative() && dir && *dir) p = std::filesystem::path(dir) / p;
    return p;
  }
  if (dir && *dir) return std::filesystem::path(dir) / (command + ext);
  return {};
}

void emit(std::ostream& os, const Context& ctx, Format f, const Outcome& o) {
  switch (f) {
    case Format::Csv:
      write_csv(os, o.table);
      break;
    case Format::Text:
      write_text(os, o.table);
      break;
    case Format::Json: {
      nlohmann::json j = to_json(o.table);
      j["schema_version"] = 1;
      j["command"] = ctx.command;
      j["budget"] = ctx.budget_name;
      j["seed"] = ctx.seed;
      j["params"] = ctx.params;
      j["status"] = o.pass ? "ok" : "fail";
      os << j.dump(2) << "\n";
      break;
    }
  }
}

void emit_error(std::ostream& out, std::ostream& err, const Context& ctx, Format f, const std::string& kind,
                const std::string& message) {
  if (f == Format::Json) {
    nlohmann::json j{{"schema_version", 1},
                     {"command", ctx.command},
                     {"status", "error"},
                     {"error", {{"kind", kind}, {"message", message}}}};
    out << j.dump(2) << "\n";
  } else {
    Table t;
    t.columns = {"status", "kind", "message"};
    t.add({std::string("error"), kind, message});
    write_csv(err, t);
  }
}

}  // namespace

Complex parse_complex(const std::string& raw) {
  const std::string t = strip(raw);
  if (t.empty()) throw ParameterError("empty complex number");
  if (const auto comma = t.find(','); comma != std::string::npos)
    return {parse_real(t.substr(0, comma)), parse_real(t.substr(comma + 1))};
  if (t.back() != 'i' && t.back() != 'j') return {parse_real(t), 0.0};
  const std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imag_part = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string::npos) return {0.0, imag_part(body)};
  return {parse_real(body.substr(0, split)), imag_part(body.substr(split))};
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  const std::string t = strip(text);
  while (true) {
    const std::size_t comma = t.find(',', start);
    out.push_back(parse_real(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized L-functions of weight two meromorphic modular forms", "glf"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text", output, budget = "default";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--output,-o", output, "output file; '-' forces stdout (default: $LZ_OUTPUT_DIR/<command>.<ext> "
                                        "if set, else stdout)");
  app.add_option("--seed", seed, "seed for randomized grids");
  app.add_option("--budget", budget, "fast, default or paranoid")
      ->check(CLI::IsMember({"fast", "default", "paranoid"}));

  std::string z = "0.27+1.31i", s = "1.4", w = "1.5", tau = "0.37+0.9i", kind = "calG", ylist = "16,32,64";
  std::string zlist;
  double t0 = 1.0, x = 0.3;
  int k = 0, count = 8;
  std::vector<std::string> suite_names;
  bool list = false;

  auto* lz = app.add_subcommand("eval-lz", "L_z(s)");
  lz->add_option("--z", z, "point of the upper half-plane")->required();
  lz->add_option("--s", s, "complex s not in {0, 1, 2}")->required();
  lz->add_option("--t0", t0, "split point");

  auto* le2 = app.add_subcommand("eval-le2", "L(E2hat, s) and its closed form");
  le2->add_option("--s", s)->required();
  le2->add_option("--t0", t0);

  auto* eis = app.add_subcommand("eval-eisenstein", "E_k(w; tau) by the lattice sum");
  eis->add_option("--k", k, "even weight >= 0");
  eis->add_option("--w", w)->required();
  eis->add_option("--tau", tau)->required();

  auto* res = app.add_subcommand("eval-resolvent", "G_w(z, tau) or calG_w(z, tau)");
  res->add_option("--kind", kind, "G or calG")->check(CLI::IsMember({"G", "calG"}));
  res->add_option("--w", w)->required();
  res->add_option("--z", z)->required();
  res->add_option("--tau", tau)->required();

  auto* ver = app.add_subcommand("verify", "run theorem checks and print a traceability table");
  ver->add_option("--suite", suite_names, "suite name, repeatable; 'all' runs every suite");
  ver->add_flag("--list", list, "list suites and exit");

  auto* lim = app.add_subcommand("limit", "large-y limit experiment for L_{x+iy}(s)");
  lim->add_option("--s", s);
  lim->add_option("--x", x);
  lim->add_option("--y", ylist, "comma-separated heights");

  auto* sw = app.add_subcommand("sweep", "L_z(s) and the s -> 2 - s residual over a set of points");
  sw->add_option("--s", s);
  sw->add_option("--count", count, "number of random points in the fundamental domain");
  sw->add_option("--z-list", zlist, "semicolon-separated points instead of random ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Format fmt = parse_format(format);
  Context ctx;
  ctx.budget_name = budget;
  ctx.seed = seed;
  ctx.err = &err;
  for (auto* sub : app.get_subcommands()) ctx.command = sub->get_name();

  try {
    ctx.budget = verify::budget_preset(budget);
    Outcome o;
    if (lz->parsed()) {
      const Complex zc = parse_complex(z), sc = parse_complex(s);
      ctx.params = {{"z", to_json(zc)}, {"s", to_json(sc)}, {"t0", t0}};
      o = eval_lz(ctx, zc, sc, t0);
    } else if (le2->parsed()) {
      const Complex sc = parse_complex(s);
      ctx.params = {{"s", to_json(sc)}, {"t0", t0}};
      o = eval_le2(ctx, sc, t0);
    } else if (eis->parsed()) {
      const Complex wc = parse_complex(w), tc = parse_complex(tau);
      ctx.params = {{"k", k}, {"w", to_json(wc)}, {"tau", to_json(tc)}};
      o = eval_eisenstein(ctx, k, wc, tc);
    } else if (res->parsed()) {
      const Complex wc = parse_complex(w), zc = parse_complex(z), tc = parse_complex(tau);
      ctx.params = {{"kind", kind}, {"w", to_json(wc)}, {"z", to_json(zc)}, {"tau", to_json(tc)}};
      o = eval_resolvent(ctx, kind, wc, zc, tc);
    } else if (ver->parsed()) {
      if (list) {
        o.table.columns = {"suite", "criterion", "title"};
        for (const auto& info : verify::suites())
          o.table.add({info.name, static_cast<std::int64_t>(info.criterion), info.title});
      } else {
        ctx.params = {{"suites", suite_names}};
        o = run_verify(ctx, suite_names);
      }
    } else if (lim->parsed()) {
      const Complex sc = parse_complex(s);
      const auto ys = parse_real_list(ylist);
      ctx.params = {{"s", to_json(sc)}, {"x", x}, {"y", ys}};
      o = run_limit(ctx, sc, x, ys);
    } else if (sw->parsed()) {
      const Complex sc = parse_complex(s);
      ctx.params = {{"s", to_json(sc)}, {"count", count}, {"z_list", zlist}};
      o = run_sweep(ctx, sc, count, zlist);
    }

    const auto path = output_path(output, ctx.command, fmt);
    if (path.empty()) {
      emit(out, ctx, fmt, o);
    } else {
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream f(path);
      if (!f) throw ParameterError("cannot open " + path.string());
      emit(f, ctx, fmt, o);
      err << "wrote " << path.string() << "\n";
    }
    return o.pass ? 0 : 1;
  } catch (const Error& e) {
    emit_error(out, err, ctx, fmt, e.kind(), e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(out, err, ctx, fmt, "Error", e.what());
    return 2;
  }
}

}  // namespace glf::cli
