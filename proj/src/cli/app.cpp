#include "newton_mu/cli.hpp"
#include "newton_mu/diagram.hpp"
#include "newton_mu/json_io.hpp"
#include "newton_mu/oracles.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

namespace newton_mu::cli {

namespace {

using io::Json;

struct Options {
  std::string verb;
  std::string poly;
  std::string support_file;
  std::string region_file;
  std::string vars;
  std::string batch;
  std::string a;
  std::string d;
  std::size_t r = 0;
  std::string vertex;
  std::string f1_file;
  std::string inner_file;
  std::string inner_poly;
  bool complement_convex = false;
  bool with_oracles = false;
  std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, const char* what) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

std::vector<std::int64_t> parse_integers(const std::string& text, const char* what) {
  std::vector<std::int64_t> out;
  for (const auto& q : parse_rationals(text, what)) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) throw UsageError(std::string(what) + " entries must be integers");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

std::vector<std::string> declared_vars(const Options& o) {
  return o.vars.empty() ? std::vector<std::string>{} : split(o.vars, ',');
}

struct Input {
  std::optional<Polynomial> poly;
  std::optional<SupportSet> support;
  std::optional<NewtonRegion> region;

  NewtonRegion as_region() const { return region ? *region : gamma_minus(*support); }

  const SupportSet& need_support(const std::string& verb) const {
    if (!support) throw UsageError(verb + " needs --poly or --support");
    return *support;
  }

  Polynomial oracle_polynomial() const { return poly ? *poly : with_generic_coefficients(*support); }
};

Input from_poly(const std::string& text, const Options& o) {
  Input in;
  in.poly = parse_polynomial(text, declared_vars(o));
  in.support = in.poly->support;
  return in;
}

Input from_json(const Json& j) {
  Input in;
  if (j.is_object() && j.contains("simplices"))
    in.region = io::parse_region_json(j);
  else
    in.support = io::parse_support_json(j);
  return in;
}

Input load_input(const Options& o) {
  if (!o.poly.empty()) return from_poly(o.poly, o);
  if (!o.support_file.empty()) {
    Input in;
    in.support = io::parse_support_json(read_json_file(o.support_file));
    return in;
  }
  if (!o.region_file.empty()) {
    Input in;
    in.region = io::parse_region_json(read_json_file(o.region_file));
    return in;
  }
  throw UsageError("no input; give --poly, --support, --region or --batch");
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

std::optional<DegreeTuple> degrees(const Options& o) {
  if (!o.d.empty()) {
    DegreeTuple dt(parse_integers(o.d, "--d"));
    if (o.r != 0 && o.r != dt.r()) throw UsageError("--r disagrees with the length of --d");
    return dt;
  }
  if (o.r != 0) return DegreeTuple::ones(o.r);
  return std::nullopt;
}

Json cmd_diagram(const Input& in, const Options&) {
  const SupportSet& s = in.need_support("diagram");
  Json j;
  j["variables"] = s.variables();
  const auto conv = is_convenient(s);
  j["convenient"] = conv.convenient;
  Json missing = Json::array();
  for (auto i : conv.missing_axes) missing.push_back(i + 1);
  j["missing_axes"] = std::move(missing);
  merge(j, io::diagram_json(newton_diagram(s)));
  return j;
}

Json nn_oracles(const Input& in, const NewtonRegion& x, const NewtonReport& rep, const Options& o) {
  Json j;
  if (in.support) {
    const Rational shuffled = oracles::shuffled_newton_number(*in.support, o.seed);
    j["shuffled"] = {{"seed", o.seed}, {"nu", io::rational_json(shuffled)}, {"matches", shuffled == rep.total}};
  }
  bool integral = true;
  for (const auto& v : x.vertices()) integral = integral && v.is_integral();
  if (integral && x.dim() > 0) {
    const Rational top = oracles::ehrhart_volume(x) * Rational(factorial(static_cast<unsigned>(x.dim())));
    j["ehrhart_top_term"] = {{"value", io::rational_json(top)}, {"matches", top == rep.terms.back().factorial_volume}};
  }
  if (in.support) {
    try {
      const Integer mu = oracles::milnor_colength(in.oracle_polynomial());
      j["colength_mu"] = {{"value", io::integer_json(mu)}, {"matches", Rational(mu) == rep.total}};
    } catch (const UsageError& e) {
      j["colength_mu"] = {{"skipped", e.what()}};
    }
  }
  return j;
}

Json cmd_nn(const Input& in, const Options& o) {
  const NewtonRegion x = in.as_region();
  const NewtonReport rep = newton_number(x);
  Json j = io::report_json(rep);
  if (o.with_oracles) j["oracles"] = nn_oracles(in, x, rep, o);
  return j;
}

Json cmd_rnn(const Input& in, const Options& o) {
  const auto dt = degrees(o);
  if (!dt) throw UsageError("rnn needs --r or --d");
  return io::report_json(r_newton_number(in.as_region(), *dt));
}

Json cmd_bound(const Input& in, const Options& o) {
  if (o.a.empty()) throw UsageError("bound needs --a");
  const auto a = parse_rationals(o.a, "--a");
  if (in.region) return io::certificate_json(bound_simplex(*in.region, a));
  BoundCertificate c = milnor_lower_bound(*in.support, a);
  Json extra;
  if (o.with_oracles) {
    try {
      oracles::confirm_with_colength(c, in.oracle_polynomial());
    } catch (const UsageError& e) {
      extra["colength_skipped"] = e.what();
    }
  }
  Json j = io::certificate_json(c);
  merge(j, extra);
  return j;
}

Json cmd_sciv(const Input& in, const Options& o) {
  const auto dt = degrees(o);
  if (!dt) throw UsageError("sciv-bound needs --d");
  if (o.a.empty()) throw UsageError("sciv-bound needs --a");
  const auto a = parse_rationals(o.a, "--a");
  if (in.region) return io::certificate_json(r_bound(*in.region, *dt, a));
  return io::certificate_json(sciv_milnor_bound(*in.support, *dt, a));
}

Json cmd_family(const Input& in, const Options& o) {
  if (o.vertex.empty()) throw UsageError("family-check needs --vertex");
  const FamilyStep step(in.need_support("family-check"), parse_integers(o.vertex, "--vertex"));
  return io::truncation_json(negligible_truncation_check(step));
}

Json cmd_vanish(const Input& in, const Options& o) {
  std::optional<bool> convex;
  if (o.complement_convex) convex = true;
  return io::vanishing_json(vanishing_check(in.as_region(), convex));
}

NewtonRegion inner_region(const Options& o) {
  if (!o.inner_poly.empty()) return gamma_minus(parse_polynomial(o.inner_poly, declared_vars(o)).support);
  if (!o.inner_file.empty()) return from_json(read_json_file(o.inner_file)).as_region();
  throw UsageError("decompose needs --inner or --inner-poly");
}

Json cmd_decompose(const Input& in, const Options& o) {
  const NewtonRegion x = in.as_region();
  const NewtonRegion y = inner_region(o);
  if (x.dim() != y.dim()) throw UsageError("inner and outer regions live in different dimensions");
  const auto pieces = decompose_difference(x, y);
  const Rational nx = newton_number(x).total;
  const Rational ny = newton_number(y).total;
  Rational sum = 0;
  for (const auto& p : pieces) sum += p.nu;
  Json j;
  j["nu_outer"] = io::rational_json(nx);
  j["nu_inner"] = io::rational_json(ny);
  j["nu_difference"] = io::rational_json(sum);
  j["additive"] = nx - ny == sum;
  j["pieces"] = io::pieces_json(pieces);
  return j;
}

Json dispatch(const Input& in, const Options& o) {
  if (o.verb == "diagram") return cmd_diagram(in, o);
  if (o.verb == "nn") return cmd_nn(in, o);
  if (o.verb == "rnn") return cmd_rnn(in, o);
  if (o.verb == "bound") return cmd_bound(in, o);
  if (o.verb == "sciv-bound") return cmd_sciv(in, o);
  if (o.verb == "family-check") return cmd_family(in, o);
  if (o.verb == "vanish") return cmd_vanish(in, o);
  if (o.verb == "decompose") return cmd_decompose(in, o);
  throw UsageError("unknown verb " + o.verb);
}

Json error_body(const char* kind, const std::string& message) {
  return {{"kind", kind}, {"message", message}};
}

struct Outcome {
  Json body;
  int code = 0;
};

template <class F>
Outcome guarded(F&& f) {
  try {
    return {f(), 0};
  } catch (const ParseError& e) {
    Json err = error_body("parse", e.what());
    err["position"] = e.position();
    return {{{"error", err}}, 1};
  } catch (const UsageError& e) {
    return {{{"error", error_body("usage", e.what())}}, 1};
  } catch (const NotConvenientError& e) {
    Json err = error_body(e.kind_name(), e.what());
    Json axes = Json::array();
    for (auto i : e.missing_axes()) axes.push_back(i + 1);
    err["missing_axes"] = std::move(axes);
    return {{{"error", err}}, 2};
  } catch (const FamilyShapeError& e) {
    Json err = error_body(e.kind_name(), e.what());
    err["pieces"] = io::pieces_json(e.pieces());
    return {{{"error", err}}, 2};
  } catch (const DomainError& e) {
    return {{{"error", error_body(e.kind_name(), e.what())}}, 2};
  } catch (const std::exception& e) {
    return {{{"error", error_body("internal", e.what())}}, 2};
  }
}

Json envelope(const Options& o, const Json& body) {
  Json j;
  j["schema"] = io::kSchema;
  j["command"] = o.verb;
  merge(j, body);
  return j;
}

std::vector<std::string> batch_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    lines.push_back(line.substr(b, line.find_last_not_of(" \t\r") - b + 1));
  }
  return lines;
}

int run_batch(const Options& o, std::ostream& out) {
  std::vector<std::string> lines;
  const Outcome read = guarded([&] {
    lines = batch_lines(o.batch);
    return Json::object();
  });
  if (read.code) {
    out << envelope(o, read.body).dump(2) << "\n";
    return read.code;
  }
  std::vector<std::future<Outcome>> jobs;
  for (const auto& line : lines)
    jobs.push_back(std::async(std::launch::async, [&o, line] {
      return guarded([&] {
        const Input in = line.front() == '{' ? from_json(Json::parse(line)) : from_poly(line, o);
        return dispatch(in, o);
      });
    }));
  Json results = Json::array();
  int code = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Outcome r = jobs[i].get();
    Json entry{{"index", i}, {"input", lines[i]}};
    merge(entry, r.body);
    results.push_back(std::move(entry));
    code = std::max(code, r.code);
  }
  Json body;
  body["results"] = std::move(results);
  out << envelope(o, body).dump(2) << "\n";
  return code;
}

void add_input(CLI::App* sub, Options& o) {
  auto* poly = sub->add_option("--poly", o.poly, "Polynomial text, e.g. \"x^3+y^2\"");
  auto* support = sub->add_option("--support", o.support_file, "Support JSON file");
  auto* region = sub->add_option("--region", o.region_file, "Region JSON file (explicit simplices)");
  auto* batch = sub->add_option("--batch", o.batch, "File with one polynomial or JSON input per line");
  poly->excludes(support, region, batch);
  support->excludes(region, batch);
  region->excludes(batch);
  sub->add_option("--vars", o.vars, "Comma-separated variable names");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out) {
  Options o;
  CLI::App app{"Newton numbers, r-th Newton numbers and Milnor number lower bounds", "newton_mu"};
  app.require_subcommand(1);
  app.add_flag("--with-oracles", o.with_oracles, "Cross-check with the independent oracles");
  app.add_option("--seed", o.seed, "Seed for the shuffled-triangulation oracle");

  auto* diagram = app.add_subcommand("diagram", "Newton diagram facets and vertices");
  add_input(diagram, o);

  auto* nn = app.add_subcommand("nn", "Newton number");
  add_input(nn, o);

  auto* rnn = app.add_subcommand("rnn", "r-th Newton number");
  add_input(rnn, o);
  rnn->add_option("--r", o.r, "r (degrees default to 1)");
  rnn->add_option("--d", o.d, "Degrees d_1,...,d_r");

  auto* bound = app.add_subcommand("bound", "Milnor number lower bound certificate");
  add_input(bound, o);
  bound->add_option("--a", o.a, "Axis intercepts a_1,...,a_n (p/q allowed)");

  auto* sciv = app.add_subcommand("sciv-bound", "Lower bound for similar complete intersections");
  add_input(sciv, o);
  sciv->add_option("--d", o.d, "Degrees d_1,...,d_r");
  sciv->add_option("--a", o.a, "Axis intercepts a_1,...,a_n");

  auto* family = app.add_subcommand("family-check", "Vertex removal check in four variables");
  add_input(family, o);
  family->add_option("--f1", o.support_file, "Support JSON of f1 (alias of --support)");
  family->add_option("--vertex", o.vertex, "Removed vertex A, e.g. 0,2,1,1");

  auto* vanish = app.add_subcommand("vanish", "Vanishing criterion for the Newton number");
  add_input(vanish, o);
  vanish->add_flag("--complement-convex", o.complement_convex, "Assert that the complement of the region is convex");

  auto* decompose = app.add_subcommand("decompose", "Split the difference of two regions into factorable pieces");
  add_input(decompose, o);
  decompose->add_option("--inner", o.inner_file, "Inner support or region JSON file");
  decompose->add_option("--inner-poly", o.inner_poly, "Inner polynomial text");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, out);
  } catch (const CLI::ParseError& e) {
    o.verb = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    out << envelope(o, {{"error", error_body("usage", e.what())}}).dump(2) << "\n";
    return 1;
  }
  o.verb = app.get_subcommands().front()->get_name();

  if (!o.batch.empty()) return run_batch(o, out);
  const Outcome r = guarded([&] { return dispatch(load_input(o), o); });
  out << envelope(o, r.body).dump(2) << "\n";
  return r.code;
}

}  // namespace newton_mu::cli
