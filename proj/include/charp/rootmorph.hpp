#pragma once

// Rigidified morphisms of root data (p-morphisms) and the admissibility of
// their multiplier function over a base of given characteristic.

#include <string>
#include <vector>

#include "charp/lattice.hpp"

namespace charp {

// Characteristic data of an Artinian base: Zero (p invertible, e.g. a
// Q-algebra), Prime (p = 0), PrimePower (p != 0 but nilpotent, e.g. Z/p^n).
struct RingChar {
  enum class Kind { Zero, Prime, PrimePower };
  Kind kind = Kind::Zero;
  Int p = 0;
  int exponent = 0;

  static RingChar zero() { return {}; }
  static RingChar prime(Int p);
  static RingChar prime_power(Int p, int n);

  bool p_is_zero() const { return kind == Kind::Prime; }
  // "0", "5", "5^2"
  std::string to_string() const;
  static RingChar parse(const std::string& text);

  bool operator==(const RingChar&) const = default;
};

using IntMatrix = std::vector<IntVector>;

struct PMorphismData {
  DatumPtr source;
  DatumPtr target;
  // Lattice map from target characters to source characters:
  // source.lattice_rank() rows, target.lattice_rank() columns.
  IntMatrix h;
  // d_map[i] is the target root index of source root i.
  std::vector<std::size_t> d_map;
  // q[i] is the multiplier of source root i.
  std::vector<Int> q;
  RingChar ring;
};

struct MorphismFailure {
  std::string relation;  // "bijection", "q_positive", "h_root", "h_coroot", "admissibility"
  Root root;
  std::string detail;
};

struct MorphismVerdict {
  std::vector<MorphismFailure> failures;
  bool valid() const { return failures.empty(); }
};

// Whether x -> x^q is an endomorphism of G_a over the given base.
bool q_admissible(Int q, const RingChar& ring);

MorphismVerdict validate_p_morphism(const PMorphismData& m);

// h = p * id, d = id, q = p.
PMorphismData frobenius_data(const DatumPtr& datum, Int p, RingChar ring);
PMorphismData identity_data(const DatumPtr& datum, RingChar ring);
// first : G -> G', second : G' -> G''. h = h1 h2, d = d2 d1, q = q1 * (q2 o d1).
PMorphismData compose(const PMorphismData& first, const PMorphismData& second);

struct RigidityVerdict {
  bool lift_possible = false;
  std::string reason;
};

// The Frobenius of `datum` in residue characteristic p, tested over `ring`.
RigidityVerdict frobenius_rigidity_verdict(const DatumPtr& datum, Int p, const RingChar& ring);

bool central_isogeny_etale(Int kernel_order, Int p);

}  // namespace charp
