#include "charp/cohomology.hpp"

#include <algorithm>

#include "charp/error.hpp"

namespace charp {

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int k = 3; k <= n / k; k += 2)
    if (n % k == 0) return false;
  return true;
}

namespace {

void require_prime(Int p) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

void require_type_a(const Weight& w) {
  if (!w.datum()->is_type_a())
    throw Error(ErrorCode::UnsupportedType,
                "only GL/SL data are supported, got " + w.datum()->name());
}

// If v = a p^n - 1 with 0 < a < p, returns n.
std::optional<std::size_t> case_a_exponent(Int v, Int p) {
  Int rest = v + 1;
  std::size_t n = 0;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest > 0 && rest < p) return n;
  return std::nullopt;
}

Int power(Int base, std::size_t exp) {
  Int out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

AndersenStep evaluate_root(const Weight& mu, const Root& alpha, Int p) {
  AndersenStep step;
  step.root = alpha;
  const Int c = pairing(mu, alpha);
  if (c > -3) {
    step.rule = AndersenRule::Inapplicable;
    step.status = H1Status::undetermined("<mu, alpha^vee> = " + std::to_string(c) +
                                         " leaves no lambda with positive pairing");
    return step;
  }
  Weight lambda = dot_reflect(mu, alpha);
  const Int v = pairing(lambda, alpha);  // = -c - 2 > 0
  step.lambda = lambda;
  step.pairing = v;

  if (auto n = case_a_exponent(v, p)) {
    step.rule = AndersenRule::CaseA;
    step.exponent = *n;
    step.status = is_dominant(lambda) ? H1Status::nonzero(lambda) : H1Status::zero();
    return step;
  }

  const DigitExpansion digits = base_p_digits(v, p);
  const auto& a = digits.digits;
  const std::size_t n = digits.top();
  step.exponent = n;
  std::optional<std::size_t> m;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] < p - 1) {
      m = j;
      break;
    }
  }
  if (!m) {
    step.rule = AndersenRule::CaseBGap;
    step.status = H1Status::undetermined("all digits below the top equal p - 1");
    return step;
  }
  step.rule = AndersenRule::CaseB;
  if (!is_dominant(mu + (a[n] * power(p, n)) * alpha.vector)) {
    step.status = H1Status::zero();
    return step;
  }
  if (is_dominant(lambda)) {
    step.status = H1Status::nonzero(lambda);
    return step;
  }
  Int tail = 0;
  std::vector<Int> tails(n + 1);
  for (std::size_t t = n + 1; t-- > 0;) {
    tail += a[t] * power(p, t);
    tails[t] = tail;
  }
  for (std::size_t j = *m; j <= n; ++j) {
    Weight nu = mu + tails[j] * alpha.vector;
    if (is_dominant(nu)) {
      step.status = H1Status::nonzero(std::move(nu));
      return step;
    }
  }
  throw InconsistencyError("no dominant weight in the digit tail for " + mu.to_string());
}

}  // namespace

Int DigitExpansion::value() const {
  Int v = 0;
  for (std::size_t j = digits.size(); j-- > 0;) v = v * prime + digits[j];
  return v;
}

DigitExpansion base_p_digits(Int m, Int p) {
  if (m <= 0)
    throw Error(ErrorCode::NonPositive, "digit expansion needs m >= 1, got " + std::to_string(m));
  require_prime(p);
  DigitExpansion out;
  out.prime = p;
  while (m > 0) {
    out.digits.push_back(m % p);
    m /= p;
  }
  return out;
}

KempfStatus kempf_status(const Weight& lambda) {
  const bool dom = is_dominant(lambda);
  return {dom, dom};
}

H1Status H1Status::nonzero(Weight highest) {
  if (!is_dominant(highest))
    throw InconsistencyError("non-dominant highest weight " + highest.to_string());
  return H1Status(Nonzero{std::move(highest)});
}

bool H1Status::is_trivial_module() const {
  const Weight* w = highest_weight();
  return w && w->is_zero();
}

const Weight* H1Status::highest_weight() const {
  if (auto* nz = std::get_if<Nonzero>(&state_)) return &nz->highest;
  return nullptr;
}

const std::string* H1Status::reason() const {
  if (auto* u = std::get_if<Undetermined>(&state_)) return &u->reason;
  return nullptr;
}

bool operator==(const H1Status& a, const H1Status& b) { return a.state_ == b.state_; }

std::string H1Status::to_string() const {
  switch (kind()) {
    case Kind::Zero: return "zero";
    case Kind::Nonzero: return "nonzero, highest weight " + highest_weight()->to_string();
    case Kind::Undetermined: return "undetermined (" + *reason() + ")";
  }
  return "?";
}

std::string_view to_string(AndersenRule rule) {
  switch (rule) {
    case AndersenRule::Kempf: return "kempf";
    case AndersenRule::Inapplicable: return "inapplicable";
    case AndersenRule::CaseA: return "case_a";
    case AndersenRule::CaseB: return "case_b";
    case AndersenRule::CaseBGap: return "case_b_gap";
  }
  return "?";
}

AndersenReport andersen_h1_report(const Weight& mu, Int p) {
  require_type_a(mu);
  require_prime(p);
  AndersenReport report;
  if (is_dominant(mu)) {
    AndersenStep step;
    step.rule = AndersenRule::Kempf;
    step.status = H1Status::zero();
    report.steps.push_back(step);
    report.status = H1Status::zero();
    return report;
  }
  const H1Status* definite = nullptr;
  for (const Root& alpha : mu.datum()->simple_roots()) {
    report.steps.push_back(evaluate_root(mu, alpha, p));
  }
  for (const auto& step : report.steps) {
    if (step.status.is_undetermined()) continue;
    if (definite && !(*definite == step.status)) {
      throw InconsistencyError("simple roots disagree on H^1 for " + mu.to_string() +
                               ": " + definite->to_string() + " vs " +
                               step.status.to_string());
    }
    definite = &step.status;
  }
  if (definite) {
    report.status = *definite;
  } else {
    bool gap = std::any_of(report.steps.begin(), report.steps.end(), [](const auto& s) {
      return s.rule == AndersenRule::CaseBGap;
    });
    report.status = H1Status::undetermined(
        gap ? "digit criterion excluded: all lower digits equal p - 1"
            : "no simple root alpha with <mu, alpha^vee> <= -3");
  }
  return report;
}

H1Status andersen_h1(const Weight& mu, Int p) { return andersen_h1_report(mu, p).status; }

std::string_view to_string(FiltrationH1 v) {
  switch (v) {
    case FiltrationH1::Zero: return "zero";
    case FiltrationH1::TrivialModule: return "trivial_module";
    case FiltrationH1::Unknown: return "unknown";
  }
  return "?";
}

FiltrationH1 fold_filtration_statuses(std::span<const H1Status> statuses) {
  bool trivial = false;
  for (const auto& s : statuses) {
    if (s.is_zero()) continue;
    if (s.is_trivial_module()) {
      trivial = true;
      continue;
    }
    return FiltrationH1::Unknown;
  }
  return trivial ? FiltrationH1::TrivialModule : FiltrationH1::Zero;
}

FiltrationH1 h1_of_filtration(std::span<const Weight> weights, Int p) {
  std::vector<H1Status> statuses;
  statuses.reserve(weights.size());
  for (const auto& w : weights) statuses.push_back(andersen_h1(w, p));
  return fold_filtration_statuses(statuses);
}

Char0Cohomology bwb_char0(const Weight& lambda) {
  require_type_a(lambda);
  const auto& d = *lambda.datum();
  const IntVector& rho2 = d.weyl_vector_doubled();
  IntVector shifted(lambda.coords());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rho2[i] / 2;

  Char0Cohomology out;
  IntVector sorted(shifted);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;

  std::size_t inversions = 0;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    for (std::size_t j = i + 1; j < shifted.size(); ++j)
      if (shifted[i] < shifted[j]) ++inversions;
  for (std::size_t i = 0; i < sorted.size(); ++i) sorted[i] -= rho2[i] / 2;
  out.all_zero = false;
  out.degree = inversions;
  out.highest_weight = Weight(lambda.datum(), std::move(sorted));
  return out;
}

boost::multiprecision::cpp_int weyl_dim(const Weight& lambda) {
  using boost::multiprecision::cpp_int;
  if (!is_dominant(lambda))
    throw Error(ErrorCode::NotDominant, lambda.to_string() + " is not dominant");
  const auto& d = *lambda.datum();
  const IntVector& rho2 = d.weyl_vector_doubled();
  cpp_int num = 1;
  cpp_int den = 1;
  for (const auto& e : d.entries()) {
    if (!e.positive) continue;
    num *= 2 * dot(lambda.coords(), e.coroot) + dot(rho2, e.coroot);
    den *= dot(rho2, e.coroot);
  }
  if (num % den != 0) throw InconsistencyError("Weyl dimension is not an integer");
  return num / den;
}

}  // namespace charp
