#pragma once

// Non-liftability certificate for P(F*S) on Gr(d, N): classifies every
// weight p(l_i - l_j) of End(F*S), checks the three smoothness conditions
// for the forgetful map from equivariant deformations, and combines them
// with the Frobenius rigidity of GL_d.

#include <optional>
#include <string>
#include <vector>

#include "charp/cohomology.hpp"
#include "charp/rootmorph.hpp"

namespace charp {

enum class CaseTag {
  Diagonal,  // i = j
  UpperFar,  // i < j, simple root l_j - l_{j+1}
  LowerFar,  // i > j + 1, simple root l_{i-1} - l_i
  Adjacent,  // i = j + 1, simple root l_{i-1} - l_i
  Other,     // injected weight outside the p(l_i - l_j) shape
};

std::string_view to_string(CaseTag tag);

struct CaseRow {
  Weight weight;
  CaseTag tag = CaseTag::Other;
  std::optional<Root> simple_root;
  // <lambda, alpha^vee> for lambda = s_alpha . weight.
  std::optional<Int> pairing;
  H1Status h1 = H1Status::undetermined("not evaluated");
};

// `mu` must equal p(l_i - l_j) in GL(N).
CaseRow classify_weight(const Weight& mu, Int p);
// Row for a weight outside the four-case shape; only h1 is filled.
CaseRow unclassified_row(const Weight& mu, Int p);

struct ConditionResult {
  bool holds = false;
  std::string detail;
};

struct RigidityCheck {
  RingChar ring;
  RigidityVerdict verdict;
};

struct RigidityRecord {
  DatumPtr datum;  // GL(d)
  std::vector<RigidityCheck> checks;
  bool no_lift() const;
};

struct CitationStep {
  std::string name;
  bool applicable = true;
};

enum class FinalVerdict { NoLiftWherePNonzero, Inconclusive };
std::string_view to_string(FinalVerdict v);

struct Certificate {
  int d = 0;
  int N = 0;
  Int p = 0;
  std::vector<CaseRow> rows;
  FiltrationH1 filtration = FiltrationH1::Unknown;
  ConditionResult condition_i;
  ConditionResult condition_ii;
  ConditionResult condition_iii;
  std::vector<std::string> assumptions;
  std::vector<CitationStep> steps;
  RigidityRecord rigidity;
  FinalVerdict verdict = FinalVerdict::Inconclusive;
};

struct CertificateOptions {
  // Extra filtration weights (coordinates in GL(N)), appended as Other rows.
  std::vector<IntVector> injected_weights;
};

// 2 <= d <= N - 2, p prime >= 5.
Certificate check_equivariant_smoothness(int d, int N, Int p, const CertificateOptions& options = {});

}  // namespace charp
