#include "charp/certificate.hpp"

#include <algorithm>

#include "charp/bundles.hpp"
#include "charp/error.hpp"

namespace charp {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Diagonal: return "diagonal";
    case CaseTag::UpperFar: return "upper_far";
    case CaseTag::LowerFar: return "lower_far";
    case CaseTag::Adjacent: return "adjacent";
    case CaseTag::Other: return "other";
  }
  return "?";
}

std::string_view to_string(FinalVerdict v) {
  switch (v) {
    case FinalVerdict::NoLiftWherePNonzero: return "no_lift_where_p_nonzero";
    case FinalVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool RigidityRecord::no_lift() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) {
    return !c.verdict.lift_possible;
  });
}

CaseRow classify_weight(const Weight& mu, Int p) {
  const DatumPtr& datum = mu.datum();
  if (datum->type() != DynkinType::GL)
    throw Error(ErrorCode::UnsupportedType, "case analysis runs in GL(N), got " + datum->name());
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");

  CaseRow row{.weight = mu};
  if (mu.is_zero()) {
    row.tag = CaseTag::Diagonal;
    row.h1 = andersen_h1(mu, p);
    return row;
  }

  std::optional<std::size_t> i, j;  // zero-based positions of +p and -p
  const auto& c = mu.coords();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (c[k] == p && !i) {
      i = k;
    } else if (c[k] == -p && !j) {
      j = k;
    } else {
      i.reset();
      break;
    }
  }
  if (!i || !j)
    throw Error(ErrorCode::BadShape, mu.to_string() + " is not of the form p(l_i - l_j)");

  const std::size_t N = datum->lattice_rank();
  std::size_t simple_index = 0;
  Int expected = 0;
  if (*i < *j) {
    if (*j + 1 >= N)
      throw Error(ErrorCode::BadShape, "p(l_i - l_j) with j = N has no root l_j - l_{j+1}");
    row.tag = CaseTag::UpperFar;
    simple_index = *j;
    expected = p - 2;
  } else if (*i == *j + 1) {
    row.tag = CaseTag::Adjacent;
    simple_index = *i - 1;
    expected = 2 * p - 2;
  } else {
    row.tag = CaseTag::LowerFar;
    simple_index = *i - 1;
    expected = p - 2;
  }
  Root alpha = datum->simple_root(simple_index);
  const Weight lambda = dot_reflect(mu, alpha);
  const Int value = pairing(lambda, alpha);
  if (value != expected)
    throw InconsistencyError("pairing " + std::to_string(value) + " for " + mu.to_string() +
                             ", expected " + std::to_string(expected));
  row.simple_root = std::move(alpha);
  row.pairing = value;
  row.h1 = andersen_h1(mu, p);
  return row;
}

CaseRow unclassified_row(const Weight& mu, Int p) {
  CaseRow row{.weight = mu};
  row.tag = CaseTag::Other;
  row.h1 = andersen_h1(mu, p);
  return row;
}

Certificate check_equivariant_smoothness(int d, int N, Int p, const CertificateOptions& options) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p < 5)
    throw Error(ErrorCode::UnsupportedPrime, "the case analysis needs p >= 5, got " + std::to_string(p));

  const EquivariantBundleWeights taut = tautological_weights(d, N);
  const EquivariantBundleWeights end = end_weights(frobenius_twist(taut, p));

  Certificate cert;
  cert.d = d;
  cert.N = N;
  cert.p = p;
  for (const Weight& w : pullback_filtration(end)) cert.rows.push_back(classify_weight(w, p));
  for (const IntVector& extra : options.injected_weights)
    cert.rows.push_back(unclassified_row(Weight(taut.datum, extra), p));

  // (i): off-diagonal weights are not dominant, so H^0 of End is filtered by
  // trivial modules and H^2(G, k) = 0 kills H^2(G, H^0).
  std::vector<std::string> dominant;
  for (const auto& row : cert.rows)
    if (!row.weight.is_zero() && is_dominant(row.weight)) dominant.push_back(row.weight.to_string());
  cert.condition_i.holds = dominant.empty();
  if (cert.condition_i.holds) {
    cert.condition_i.detail =
        "every nonzero filtration weight is non-dominant, so H^0(X, End) is filtered by "
        "trivial modules; H^2(G, k) = 0 for reductive G";
  } else {
    cert.condition_i.detail = "dominant nonzero weights in the filtration:";
    for (const auto& s : dominant) cert.condition_i.detail += " " + s;
  }

  std::vector<H1Status> statuses;
  for (const auto& row : cert.rows) statuses.push_back(row.h1);
  cert.filtration = fold_filtration_statuses(statuses);
  cert.condition_ii.holds = cert.filtration != FiltrationH1::Unknown;
  cert.condition_ii.detail = "H^1 of the line-bundle filtration folds to " +
                             std::string(to_string(cert.filtration));

  cert.condition_iii.holds = true;
  cert.condition_iii.detail =
      "H^1(G, k) = 0 for reductive G = GL_N; this condition is absent from the two-condition "
      "summary form of the criterion";

  cert.assumptions = {"grassmannian_rigid", "h2_structure_sheaf_vanishes"};
  const bool conditions = cert.condition_i.holds && cert.condition_ii.holds && cert.condition_iii.holds;
  cert.steps = {
      {"projectivization_from_bundle", true},
      {"equivariant_forgetful_map", conditions},
      {"homomorphism_to_equivariant_bundle", true},
      {"block_inclusion_splits_projection", true},
  };

  cert.rigidity.datum = make_datum(DynkinType::GL, d);
  for (const RingChar& ring : {RingChar::prime_power(p, 2), RingChar::zero()})
    cert.rigidity.checks.push_back({ring, frobenius_rigidity_verdict(cert.rigidity.datum, p, ring)});

  const bool any_undetermined = std::any_of(cert.rows.begin(), cert.rows.end(),
                                            [](const auto& r) { return r.h1.is_undetermined(); });
  cert.verdict = conditions && cert.rigidity.no_lift() && !any_undetermined
                     ? FinalVerdict::NoLiftWherePNonzero
                     : FinalVerdict::Inconclusive;
  return cert;
}

}  // namespace charp
