#pragma once

// Cohomology of line bundles L_lambda on G/B: Kempf vanishing, Andersen's
// degree-one criterion in characteristic p, and the characteristic-zero
// Borel-Weil-Bott answer used as a cross-check.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "charp/lattice.hpp"

namespace charp {

bool is_prime(Int n);

struct DigitExpansion {
  IntVector digits;  // a_0, a_1, ..., a_n with a_n != 0
  Int prime = 0;

  std::size_t top() const { return digits.size() - 1; }
  Int value() const;
};

DigitExpansion base_p_digits(Int m, Int p);

struct KempfStatus {
  bool h0_nonzero = false;
  bool higher_vanish_if_dominant = false;
};

KempfStatus kempf_status(const Weight& lambda);

class H1Status {
 public:
  enum class Kind { Zero, Nonzero, Undetermined };

  static H1Status zero() { return H1Status(Zero{}); }
  // Asserts that `highest` is dominant.
  static H1Status nonzero(Weight highest);
  static H1Status undetermined(std::string reason) {
    return H1Status(Undetermined{std::move(reason)});
  }

  Kind kind() const { return static_cast<Kind>(state_.index()); }
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_nonzero() const { return kind() == Kind::Nonzero; }
  bool is_undetermined() const { return kind() == Kind::Undetermined; }
  // Nonzero with highest weight 0, i.e. a trivial G-module.
  bool is_trivial_module() const;

  const Weight* highest_weight() const;
  const std::string* reason() const;

  friend bool operator==(const H1Status& a, const H1Status& b);
  std::string to_string() const;

 private:
  struct Zero {
    bool operator==(const Zero&) const = default;
  };
  struct Nonzero {
    Weight highest;
    bool operator==(const Nonzero&) const = default;
  };
  struct Undetermined {
    std::string reason;
    bool operator==(const Undetermined&) const = default;
  };
  using State = std::variant<Zero, Nonzero, Undetermined>;

  explicit H1Status(State s) : state_(std::move(s)) {}
  State state_;
};

// Which rule decided a single simple root's verdict.
enum class AndersenRule {
  Kempf,         // mu dominant
  Inapplicable,  // <mu, alpha^vee> > -3, no positive lambda
  CaseA,         // <lambda, alpha^vee> = a p^n - 1, 0 < a < p
  CaseB,         // digit criterion
  CaseBGap,      // all lower digits equal p - 1
};

std::string_view to_string(AndersenRule rule);

struct AndersenStep {
  std::optional<Root> root;        // empty for the Kempf step
  std::optional<Weight> lambda;    // s_alpha . lambda = mu
  std::optional<Int> pairing;      // <lambda, alpha^vee>
  std::optional<std::size_t> exponent;  // n in a p^n - 1 or the top digit index
  AndersenRule rule = AndersenRule::Inapplicable;
  H1Status status = H1Status::undetermined("not evaluated");
};

struct AndersenReport {
  H1Status status = H1Status::undetermined("not evaluated");
  std::vector<AndersenStep> steps;
};

// Evaluates every applicable simple root. Throws InconsistencyError when two
// roots give different definite answers.
AndersenReport andersen_h1_report(const Weight& mu, Int p);
H1Status andersen_h1(const Weight& mu, Int p);

enum class FiltrationH1 { Zero, TrivialModule, Unknown };
std::string_view to_string(FiltrationH1 v);

FiltrationH1 h1_of_filtration(std::span<const Weight> weights, Int p);
// Same fold, over statuses that were already computed.
FiltrationH1 fold_filtration_statuses(std::span<const H1Status> statuses);

struct Char0Cohomology {
  bool all_zero = true;
  std::size_t degree = 0;
  std::optional<Weight> highest_weight;
};

// Type A only.
Char0Cohomology bwb_char0(const Weight& lambda);

boost::multiprecision::cpp_int weyl_dim(const Weight& lambda);

}  // namespace charp
