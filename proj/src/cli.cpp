#include "charp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "charp/error.hpp"
#include "charp/json_io.hpp"

namespace charp::cli {

namespace {

struct Outcome {
  std::string command;
  Json inputs;
  Json result;
  std::string text;
  int code = kDefinite;
};

std::string show(const Weight& w) { return w.to_string(); }

DatumPtr type_a_datum(const std::string& type, std::size_t n) {
  const DynkinType t = parse_dynkin_type(type);
  if (t != DynkinType::GL && t != DynkinType::SL)
    throw Error(ErrorCode::UnsupportedType, "this command needs --type GL or SL");
  return make_datum(t, static_cast<int>(n));
}

Weight weight_arg(const std::string& text, const std::string& type, int N) {
  const IntVector coords = parse_weight(text);
  if (N > 0 && static_cast<std::size_t>(N) != coords.size())
    throw Error(ErrorCode::DimensionMismatch, "--weight has " + std::to_string(coords.size()) +
                                                  " entries but --N is " + std::to_string(N));
  return Weight(type_a_datum(type, coords.size()), coords);
}

// ---------------------------------------------------------------------------

Outcome cmd_roots(const std::string& type, int n) {
  const DatumPtr datum = make_datum(parse_dynkin_type(type), n);
  Outcome o{.command = "roots", .inputs = {{"type", type}, {"n", n}}};
  Json roots = Json::array(), simple = Json::array();
  for (const auto& r : datum->roots()) roots.push_back(to_json(r));
  for (const auto& r : datum->simple_roots()) simple.push_back(to_json(r.vector));
  auto rho = datum->weyl_vector();

  const std::uint64_t formula = weyl_group_order(*datum);
  std::uint64_t order = formula;
  std::string method = "formula";
  if (datum->lattice_rank() <= weyl_rank_bound() && formula <= 100000) {
    order = weyl_group(datum).size();
    method = "closure";
  }
  o.result = {{"datum", to_json(*datum)},
              {"lattice_rank", datum->lattice_rank()},
              {"roots", roots},
              {"simple_roots", simple},
              {"weyl_vector", rho ? to_json(*rho) : Json(nullptr)},
              {"weyl_vector_doubled", datum->weyl_vector_doubled()},
              {"weyl_order", order},
              {"weyl_order_method", method}};
  std::ostringstream t;
  t << datum->name() << ": lattice rank " << datum->lattice_rank() << ", " << datum->root_count()
    << " roots, " << datum->semisimple_rank() << " simple roots\n";
  t << "simple roots:";
  for (const auto& r : datum->simple_roots()) t << ' ' << show(r.vector);
  t << "\nWeyl group order: " << order << " (" << method << ")\n";
  o.text = t.str();
  return o;
}

Outcome cmd_h1(const std::string& weight, const std::string& type, int N, Int p) {
  const Weight mu = weight_arg(weight, type, N);
  Outcome o{.command = "h1", .inputs = {{"weight", mu.coords()}, {"type", type}, {"p", p}}};
  const AndersenReport report = andersen_h1_report(mu, p);
  const KempfStatus kempf = kempf_status(mu);
  o.result = to_json(report);
  o.result["datum"] = to_json(*mu.datum());
  o.result["kempf"] = {{"h0_nonzero", kempf.h0_nonzero},
                       {"higher_vanish_if_dominant", kempf.higher_vanish_if_dominant}};
  o.text = "H^1(G/B, L" + show(mu) + ") in characteristic " + std::to_string(p) + ": " +
           report.status.to_string() + "\n";
  o.code = report.status.is_undetermined() ? kInconclusive : kDefinite;
  return o;
}

Outcome cmd_bwb0(const std::string& weight, const std::string& type, int N) {
  const Weight lambda = weight_arg(weight, type, N);
  Outcome o{.command = "bwb0", .inputs = {{"weight", lambda.coords()}, {"type", type}}};
  const Char0Cohomology c = bwb_char0(lambda);
  o.result = to_json(c);
  o.result["datum"] = to_json(*lambda.datum());
  if (!c.all_zero) o.result["dimension"] = weyl_dim(*c.highest_weight).str();
  if (c.all_zero) {
    o.text = "characteristic 0: all cohomology of L" + show(lambda) + " vanishes\n";
  } else {
    o.text = "characteristic 0: H^" + std::to_string(c.degree) + "(G/B, L" + show(lambda) +
             ") has highest weight " + show(*c.highest_weight) + ", dimension " +
             o.result["dimension"].get<std::string>() + "\n";
  }
  return o;
}

Outcome cmd_grassmann(int d, int N, Int p, const std::vector<std::string>& injected) {
  CertificateOptions options;
  Json inj = Json::array();
  for (const auto& w : injected) {
    options.injected_weights.push_back(parse_weight(w));
    inj.push_back(options.injected_weights.back());
  }
  Outcome o{.command = "grassmann-check", .inputs = {{"d", d}, {"N", N}, {"p", p}}};
  if (!injected.empty()) o.inputs["inject_weight"] = inj;
  const Certificate cert = check_equivariant_smoothness(d, N, p, options);
  o.result = to_json(cert);
  std::ostringstream t;
  t << "P(F*S) on Gr(" << d << ", " << N << "), p = " << p << "\n";
  for (const auto& row : cert.rows) {
    t << "  " << show(row.weight) << "  " << to_string(row.tag);
    if (row.pairing) t << "  pairing " << *row.pairing;
    t << "  H^1: " << row.h1.to_string() << "\n";
  }
  t << "condition i:   " << (cert.condition_i.holds ? "holds" : "fails") << "\n";
  t << "condition ii:  " << (cert.condition_ii.holds ? "holds" : "fails") << "\n";
  t << "condition iii: " << (cert.condition_iii.holds ? "holds" : "fails") << "\n";
  t << "Frobenius of " << cert.rigidity.datum->name() << ": "
    << (cert.rigidity.no_lift() ? "no lift where p != 0" : "may lift") << "\n";
  t << "verdict: " << to_string(cert.verdict) << "\n";
  o.text = t.str();
  o.code = cert.verdict == FinalVerdict::NoLiftWherePNonzero ? kDefinite : kInconclusive;
  return o;
}

Outcome cmd_isogeny(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  const PMorphismData m = pmorphism_from_json(j);
  Outcome o{.command = "isogeny-check", .inputs = {{"file", path}}};
  const MorphismVerdict v = validate_p_morphism(m);
  o.result = to_json(v);
  o.result["source"] = to_json(*m.source);
  o.result["target"] = to_json(*m.target);
  o.result["ring"] = to_json(m.ring);
  std::ostringstream t;
  t << m.source->name() << " -> " << m.target->name() << " over characteristic "
    << m.ring.to_string() << ": " << (v.valid() ? "valid" : "invalid") << "\n";
  for (const auto& f : v.failures) t << "  " << show(f.root.vector) << " " << f.relation << ": " << f.detail << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_rigidity(const std::string& type, int n, const std::string& ring_text, Int p) {
  const RingChar ring = RingChar::parse(ring_text);
  if (p == 0) {
    if (ring.kind == RingChar::Kind::Zero)
      throw Error(ErrorCode::Parse, "--p is required when --ring is 0");
    p = ring.p;
  }
  const DatumPtr datum = make_datum(parse_dynkin_type(type), n);
  Outcome o{.command = "rigidity", .inputs = {{"type", type}, {"n", n}, {"ring", ring_text}, {"p", p}}};
  const RigidityVerdict v = frobenius_rigidity_verdict(datum, p, ring);
  o.result = to_json(v);
  o.result["datum"] = to_json(*datum);
  o.result["ring"] = to_json(ring);
  o.result["p"] = p;
  o.text = "Frobenius of " + datum->name() + " (p = " + std::to_string(p) + ") over characteristic " +
           ring.to_string() + ": " + (v.lift_possible ? "lift possible" : "no lift") + "\n  " +
           v.reason + "\n";
  return o;
}

Outcome cmd_bundle(int d, int N, Int p, bool allow_unit) {
  const auto taut = tautological_weights(d, N);
  const auto twisted = frobenius_twist(taut, p, {allow_unit});
  const auto end = end_weights(twisted);
  Outcome o{.command = "bundle", .inputs = {{"d", d}, {"N", N}, {"p", p}, {"allow_unit_twist", allow_unit}}};
  Json filtration = Json::array();
  for (const auto& w : pullback_filtration(end)) filtration.push_back(to_json(w));
  o.result = {{"tautological", to_json(taut)},
              {"twisted", to_json(twisted)},
              {"end", to_json(end)},
              {"filtration", filtration}};
  std::ostringstream t;
  for (const auto* b : {&taut, &twisted, &end}) {
    t << b->label << " (rank " << b->rank() << "):";
    for (const auto& w : b->weights) t << ' ' << show(w);
    t << "\n";
  }
  o.text = t.str();
  return o;
}

// ---------------------------------------------------------------------------

int emit(const Outcome& o, bool json, std::ostream& out) {
  if (json) {
    Json env = {{"command", o.command}, {"inputs", o.inputs}, {"result", o.result},
                {"version", std::string(kVersion)}};
    out << env.dump() << "\n";
  } else {
    out << o.text;
  }
  return o.code;
}

int run_batch(const std::string& path, bool json, std::ostream& out, std::ostream& err);

int run_impl(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Characteristic-p computations on flag varieties and root data", "charp-flag"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(0, 1);
  app.fallthrough();

  bool json = false;
  std::string batch;
  app.add_flag("--json", json, "Emit a JSON report envelope");
  app.add_option("--batch", batch, "Run one query per line of this file");

  std::string type = "GL", weight, ring, file;
  int n = 0, N = 0, d = 0;
  Int p = 0;
  bool allow_unit = false;
  std::vector<std::string> injected;

  auto* roots = app.add_subcommand("roots", "Roots, simple roots and Weyl group order of a datum");
  roots->add_option("--type", type, "GL, SL, SO_odd, Sp, SO_even, T")->required();
  roots->add_option("--n", n, "Family parameter")->required();

  auto* h1 = app.add_subcommand("h1", "H^1(G/B, L_mu) in characteristic p");
  h1->add_option("--weight", weight, "Comma-separated coordinates")->required();
  h1->add_option("--p", p, "Prime")->required();
  h1->add_option("--N", N, "Lattice rank (checked against the weight)");
  h1->add_option("--type", type, "GL or SL");

  auto* bwb0 = app.add_subcommand("bwb0", "Characteristic-zero Borel-Weil-Bott");
  bwb0->add_option("--weight", weight, "Comma-separated coordinates")->required();
  bwb0->add_option("--N", N, "Lattice rank (checked against the weight)");
  bwb0->add_option("--type", type, "GL or SL");

  auto* grass = app.add_subcommand("grassmann-check", "Non-liftability certificate for P(F*S) on Gr(d, N)");
  grass->add_option("--d", d)->required();
  grass->add_option("--N", N)->required();
  grass->add_option("--p", p)->required();
  grass->add_option("--inject-weight", injected, "Extra filtration weight (testing)");

  auto* iso = app.add_subcommand("isogeny-check", "Validate p-morphism data from a JSON file");
  iso->add_option("file,--file", file, "JSON description")->required();

  auto* rig = app.add_subcommand("rigidity", "Frobenius rigidity verdict");
  rig->add_option("--type", type)->required();
  rig->add_option("--n", n)->required();
  rig->add_option("--ring", ring, "Base characteristic: 0, p or p^n")->required();
  rig->add_option("--p", p, "Residue characteristic (defaults to the ring's prime)");

  auto* bundle = app.add_subcommand("bundle", "Weights of S, F*S, End(F*S) and the filtration");
  bundle->add_option("--d", d)->required();
  bundle->add_option("--N", N)->required();
  bundle->add_option("--p", p)->required();
  bundle->add_flag("--allow-unit-twist", allow_unit, "Allow p = 1");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kDefinite;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kDefinite;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (!batch.empty()) return run_batch(batch, json, out, err);

  Outcome o;
  if (*roots) o = cmd_roots(type, n);
  else if (*h1) o = cmd_h1(weight, type, N, p);
  else if (*bwb0) o = cmd_bwb0(weight, type, N);
  else if (*grass) o = cmd_grassmann(d, N, p, injected);
  else if (*iso) o = cmd_isogeny(file);
  else if (*rig) o = cmd_rigidity(type, n, ring, p);
  else if (*bundle) o = cmd_bundle(d, N, p, allow_unit);
  else {
    err << "error: a subcommand or --batch is required\n" << app.help();
    return kUsage;
  }
  return emit(o, json, out);
}

int guarded_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(std::move(args), out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run_batch(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open batch file '" << path << "'\n";
    return kUsage;
  }
  struct Result {
    std::string out, err;
    int code;
  };
  std::vector<std::future<Result>> jobs;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<std::string> args{std::istream_iterator<std::string>(tokens), {}};
    if (args.empty() || args.front().starts_with("#")) continue;
    if (std::find(args.begin(), args.end(), "--batch") != args.end()) {
      err << "error: nested --batch in '" << line << "'\n";
      return kUsage;
    }
    if (json && std::find(args.begin(), args.end(), "--json") == args.end())
      args.insert(args.begin(), "--json");
    jobs.push_back(std::async(std::launch::async, [args = std::move(args)] {
      std::ostringstream o, e;
      const int code = guarded_run(args, o, e);
      return Result{o.str(), e.str(), code};
    }));
  }
  int worst = kDefinite;
  for (auto& job : jobs) {
    Result r = job.get();
    out << r.out;
    err << r.err;
    worst = std::max(worst, r.code);
  }
  return worst;
}

}  // namespace

std::vector<std::int64_t> parse_weight(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::Parse, "malformed weight '" + text + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return guarded_run(args, out, err);
}

}  // namespace charp::cli
