#include "charp/json_io.hpp"

#include "charp/error.hpp"

namespace charp {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

IntVector int_vector(const Json& j) {
  if (!j.is_array()) parse_error("expected an integer array, got " + j.dump());
  IntVector out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) parse_error("expected an integer, got " + x.dump());
    out.push_back(x.get<Int>());
  }
  return out;
}

Root root_from_vector(const Json& j, const DatumPtr& datum) {
  auto idx = datum->index_of(int_vector(j));
  if (!idx) parse_error(j.dump() + " is not a root of " + datum->name());
  return datum->root(*idx);
}

Json optional_int(const std::optional<Int>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

// ---------------------------------------------------------------------------
// lattice

Json to_json(const RootDatum& datum) {
  if (datum.type() == DynkinType::Custom) {
    Json roots = Json::array(), coroots = Json::array();
    for (const auto& e : datum.entries()) {
      roots.push_back(e.root);
      coroots.push_back(e.coroot);
    }
    return {{"type", "custom"},
            {"rank", datum.lattice_rank()},
            {"roots", roots},
            {"coroots", coroots},
            {"simple", datum.simple_indices()}};
  }
  return {{"type", std::string(to_string(datum.type()))}, {"n", datum.n()}};
}

DatumPtr datum_from_json(const Json& j) {
  if (!j.is_object()) parse_error("datum must be an object, got " + j.dump());
  const DynkinType type = parse_dynkin_type(field(j, "type").get<std::string>());
  if (type != DynkinType::Custom) return make_datum(type, field(j, "n").get<int>());
  std::vector<IntVector> roots, coroots;
  for (const auto& r : field(j, "roots")) roots.push_back(int_vector(r));
  for (const auto& r : field(j, "coroots")) coroots.push_back(int_vector(r));
  return make_custom_datum(field(j, "rank").get<std::size_t>(), std::move(roots), std::move(coroots),
                           field(j, "simple").get<std::vector<std::size_t>>());
}

Json to_json(const Weight& w) { return w.coords(); }

Weight weight_from_json(const Json& j, const DatumPtr& datum) { return Weight(datum, int_vector(j)); }

Json to_json(const Root& alpha) {
  return {{"root", alpha.vector.coords()}, {"coroot", alpha.coroot}, {"positive", alpha.positive}};
}

// ---------------------------------------------------------------------------
// cohomology

Json to_json(const H1Status& s) {
  Json j;
  switch (s.kind()) {
    case H1Status::Kind::Zero: j["status"] = "zero"; break;
    case H1Status::Kind::Nonzero: j["status"] = "nonzero"; break;
    case H1Status::Kind::Undetermined: j["status"] = "undetermined"; break;
  }
  j["highest_weight"] = s.highest_weight() ? to_json(*s.highest_weight()) : Json(nullptr);
  j["undetermined_reason"] = s.reason() ? Json(*s.reason()) : Json(nullptr);
  return j;
}

H1Status h1_from_json(const Json& j, const DatumPtr& datum) {
  const auto status = field(j, "status").get<std::string>();
  if (status == "zero") return H1Status::zero();
  if (status == "nonzero") return H1Status::nonzero(weight_from_json(field(j, "highest_weight"), datum));
  if (status == "undetermined")
    return H1Status::undetermined(field(j, "undetermined_reason").get<std::string>());
  parse_error("unknown H1 status '" + status + "'");
}

Json to_json(const DigitExpansion& e) {
  return {{"prime", e.prime}, {"digits", e.digits}, {"value", e.value()}};
}

Json to_json(const AndersenReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"rule", std::string(to_string(s.rule))},
                     {"simple_root", s.root ? to_json(s.root->vector) : Json(nullptr)},
                     {"lambda", s.lambda ? to_json(*s.lambda) : Json(nullptr)},
                     {"pairing", optional_int(s.pairing)},
                     {"exponent", s.exponent ? Json(*s.exponent) : Json(nullptr)},
                     {"h1", to_json(s.status)}});
  }
  return {{"h1", to_json(r.status)}, {"steps", steps}};
}

Json to_json(const Char0Cohomology& c) {
  if (c.all_zero) return {{"all_zero", true}, {"degree", nullptr}, {"highest_weight", nullptr}};
  return {{"all_zero", false}, {"degree", c.degree}, {"highest_weight", to_json(*c.highest_weight)}};
}

// ---------------------------------------------------------------------------
// bundles

Json to_json(const EquivariantBundleWeights& b) {
  Json weights = Json::array();
  for (const auto& w : b.weights) weights.push_back(to_json(w));
  return {{"label", b.label}, {"datum", to_json(*b.datum)}, {"weights", weights}};
}

EquivariantBundleWeights bundle_from_json(const Json& j) {
  EquivariantBundleWeights b;
  b.datum = datum_from_json(field(j, "datum"));
  b.label = field(j, "label").get<std::string>();
  for (const auto& w : field(j, "weights")) b.weights.push_back(weight_from_json(w, b.datum));
  return b;
}

// ---------------------------------------------------------------------------
// rootmorph

Json to_json(const RingChar& r) {
  switch (r.kind) {
    case RingChar::Kind::Zero: return {{"kind", "zero"}};
    case RingChar::Kind::Prime: return {{"kind", "prime"}, {"p", r.p}};
    case RingChar::Kind::PrimePower: return {{"kind", "prime_power"}, {"p", r.p}, {"n", r.exponent}};
  }
  return nullptr;
}

RingChar ring_from_json(const Json& j) {
  if (j.is_string()) return RingChar::parse(j.get<std::string>());
  if (j.is_number_integer()) return RingChar::parse(std::to_string(j.get<Int>()));
  const auto kind = field(j, "kind").get<std::string>();
  if (kind == "zero") return RingChar::zero();
  if (kind == "prime") return RingChar::prime(field(j, "p").get<Int>());
  if (kind == "prime_power") return RingChar::prime_power(field(j, "p").get<Int>(), field(j, "n").get<int>());
  parse_error("unknown ring kind '" + kind + "'");
}

Json to_json(const MorphismVerdict& v) {
  Json failures = Json::array();
  for (const auto& f : v.failures)
    failures.push_back({{"root", to_json(f.root.vector)}, {"relation", f.relation}, {"detail", f.detail}});
  return {{"valid", v.valid()}, {"failures", failures}};
}

MorphismVerdict verdict_from_json(const Json& j, const DatumPtr& source, const DatumPtr& target) {
  MorphismVerdict v;
  for (const auto& f : field(j, "failures")) {
    const IntVector coords = int_vector(field(f, "root"));
    std::optional<Root> root;
    if (auto i = source->index_of(coords)) root = source->root(*i);
    else if (auto k = target->index_of(coords)) root = target->root(*k);
    else parse_error("failure root " + field(f, "root").dump() + " is in neither datum");
    v.failures.push_back({field(f, "relation").get<std::string>(), *root,
                          field(f, "detail").get<std::string>()});
  }
  if (field(j, "valid").get<bool>() != v.valid()) parse_error("'valid' disagrees with 'failures'");
  return v;
}

Json to_json(const RigidityVerdict& v) {
  return {{"verdict", v.lift_possible ? "lift_possible" : "no_lift"}, {"reason", v.reason}};
}

PMorphismData pmorphism_from_json(const Json& j) {
  PMorphismData m;
  m.source = datum_from_json(field(j, "source"));
  m.target = datum_from_json(field(j, "target"));
  for (const auto& row : field(j, "h")) m.h.push_back(int_vector(row));
  m.ring = ring_from_json(field(j, "ring"));

  const std::size_t count = m.source->root_count();
  const Json& dm = field(j, "d_map");
  if (dm.is_string()) {
    if (dm.get<std::string>() != "identity") parse_error("d_map must be \"identity\" or a list");
    if (count != m.target->root_count())
      throw Error(ErrorCode::DimensionMismatch, "identity d_map needs equal root counts");
    for (std::size_t i = 0; i < count; ++i) {
      auto k = m.target->index_of(m.source->entries()[i].root);
      if (!k) parse_error("identity d_map: source root has no equal target root");
      m.d_map.push_back(*k);
    }
  } else {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    m.d_map.assign(count, unset);
    for (const auto& pair : dm) {
      auto from = m.source->index_of(int_vector(field(pair, "from")));
      auto to = m.target->index_of(int_vector(field(pair, "to")));
      if (!from || !to) parse_error("d_map entry " + pair.dump() + " names a non-root");
      m.d_map[*from] = *to;
    }
    for (auto k : m.d_map)
      if (k == unset) parse_error("d_map does not cover every source root");
  }

  const Json& q = field(j, "q");
  if (q.is_number_integer()) {
    m.q.assign(count, q.get<Int>());
  } else {
    m.q = int_vector(q);
    if (m.q.size() != count)
      throw Error(ErrorCode::DimensionMismatch, "q needs one entry per source root");
  }
  return m;
}

// ---------------------------------------------------------------------------
// certificate

Json to_json(const CaseRow& row) {
  return {{"weight", to_json(row.weight)},
          {"case", std::string(to_string(row.tag))},
          {"simple_root", row.simple_root ? to_json(row.simple_root->vector) : Json(nullptr)},
          {"pairing", optional_int(row.pairing)},
          {"h1", to_json(row.h1)}};
}

namespace {

Json to_json(const ConditionResult& c) { return {{"holds", c.holds}, {"detail", c.detail}}; }

ConditionResult condition_from_json(const Json& j) {
  return {field(j, "holds").get<bool>(), field(j, "detail").get<std::string>()};
}

CaseTag case_from_string(const std::string& s) {
  for (CaseTag t : {CaseTag::Diagonal, CaseTag::UpperFar, CaseTag::LowerFar, CaseTag::Adjacent, CaseTag::Other})
    if (to_string(t) == s) return t;
  parse_error("unknown case tag '" + s + "'");
}

FiltrationH1 filtration_from_string(const std::string& s) {
  for (FiltrationH1 f : {FiltrationH1::Zero, FiltrationH1::TrivialModule, FiltrationH1::Unknown})
    if (to_string(f) == s) return f;
  parse_error("unknown filtration value '" + s + "'");
}

}  // namespace

Json to_json(const Certificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) rows.push_back(to_json(r));
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back({{"name", s.name}, {"applicable", s.applicable}});
  Json checks = Json::array();
  for (const auto& ch : c.rigidity.checks) {
    Json e = to_json(ch.verdict);
    e["ring"] = to_json(ch.ring);
    checks.push_back(e);
  }
  return {{"inputs", {{"d", c.d}, {"N", c.N}, {"p", c.p}}},
          {"rows", rows},
          {"filtration_h1", std::string(to_string(c.filtration))},
          {"conditions", {{"i", to_json(c.condition_i)}, {"ii", to_json(c.condition_ii)}, {"iii", to_json(c.condition_iii)}}},
          {"assumptions", c.assumptions},
          {"steps", steps},
          {"rigidity",
           {{"datum", c.rigidity.datum ? to_json(*c.rigidity.datum) : Json(nullptr)},
            {"checks", checks},
            {"no_lift", c.rigidity.no_lift()}}},
          {"verdict", std::string(to_string(c.verdict))}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  const Json& in = field(j, "inputs");
  c.d = field(in, "d").get<int>();
  c.N = field(in, "N").get<int>();
  c.p = field(in, "p").get<Int>();
  const DatumPtr datum = make_datum(DynkinType::GL, c.N);
  for (const auto& r : field(j, "rows")) {
    CaseRow row{.weight = weight_from_json(field(r, "weight"), datum)};
    row.tag = case_from_string(field(r, "case").get<std::string>());
    if (!field(r, "simple_root").is_null()) row.simple_root = root_from_vector(r.at("simple_root"), datum);
    if (!field(r, "pairing").is_null()) row.pairing = r.at("pairing").get<Int>();
    row.h1 = h1_from_json(field(r, "h1"), datum);
    c.rows.push_back(std::move(row));
  }
  c.filtration = filtration_from_string(field(j, "filtration_h1").get<std::string>());
  const Json& conds = field(j, "conditions");
  c.condition_i = condition_from_json(field(conds, "i"));
  c.condition_ii = condition_from_json(field(conds, "ii"));
  c.condition_iii = condition_from_json(field(conds, "iii"));
  c.assumptions = field(j, "assumptions").get<std::vector<std::string>>();
  for (const auto& s : field(j, "steps"))
    c.steps.push_back({field(s, "name").get<std::string>(), field(s, "applicable").get<bool>()});
  const Json& rig = field(j, "rigidity");
  if (!field(rig, "datum").is_null()) c.rigidity.datum = datum_from_json(rig.at("datum"));
  for (const auto& ch : field(rig, "checks")) {
    RigidityCheck check;
    check.ring = ring_from_json(field(ch, "ring"));
    check.verdict.lift_possible = field(ch, "verdict").get<std::string>() == "lift_possible";
    check.verdict.reason = field(ch, "reason").get<std::string>();
    c.rigidity.checks.push_back(std::move(check));
  }
  const auto verdict = field(j, "verdict").get<std::string>();
  if (verdict == to_string(FinalVerdict::NoLiftWherePNonzero)) c.verdict = FinalVerdict::NoLiftWherePNonzero;
  else if (verdict == to_string(FinalVerdict::Inconclusive)) c.verdict = FinalVerdict::Inconclusive;
  else parse_error("unknown verdict '" + verdict + "'");
  return c;
}

}  // namespace charp
