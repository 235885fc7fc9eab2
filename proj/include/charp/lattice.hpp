#pragma once

// Character lattices, roots, reflections and Weyl groups of split reductive
// root data. Weights are integer coordinate vectors in the basis l_1..l_n of
// the character lattice; coroots are integer vectors in the dual basis.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charp {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

enum class DynkinType {
  GL,      // GL(n), lattice Z^n
  SL,      // SL(n), lattice Z^n / Z(1,...,1)
  SOOdd,   // SO(2n+1), type B_n
  Sp,      // Sp(2n), type C_n
  SOEven,  // SO(2n), type D_n
  Torus,   // split torus of rank n, no roots
  Custom,  // explicitly supplied roots and coroots
};

std::string_view to_string(DynkinType type);
// Accepts "GL", "SL", "SO_odd" (or "B"), "Sp" (or "C"), "SO_even" (or "D"),
// "T" (or "torus"), "custom".
DynkinType parse_dynkin_type(std::string_view text);

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

bool same_datum(const DatumPtr& a, const DatumPtr& b);

class Weight {
 public:
  Weight(DatumPtr datum, IntVector coords);

  static Weight zero(DatumPtr datum);
  // The basis character l_{index+1}.
  static Weight basis(DatumPtr datum, std::size_t index);

  const DatumPtr& datum() const { return datum_; }
  const IntVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight operator-() const;
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int scalar, const Weight& w);

  friend bool operator==(const Weight& a, const Weight& b);
  // Lexicographic on coordinates; only meaningful within one datum.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    return a.coords_ <=> b.coords_;
  }

  // "(5,-5,0,0)"
  std::string to_string() const;

 private:
  DatumPtr datum_;
  IntVector coords_;
};

struct Root {
  Weight vector;
  IntVector coroot;
  bool positive = true;

  friend bool operator==(const Root& a, const Root& b) {
    return a.vector == b.vector && a.coroot == b.coroot;
  }
};

class RootDatum : public std::enable_shared_from_this<RootDatum> {
 public:
  struct Entry {
    IntVector root;
    IntVector coroot;
    bool positive = true;
  };

  DynkinType type() const { return type_; }
  // The family parameter: n in GL(n), SL(n), SO(2n+1), Sp(2n), SO(2n).
  int n() const { return n_; }
  std::size_t lattice_rank() const { return rank_; }
  std::size_t root_count() const { return entries_.size(); }
  std::size_t semisimple_rank() const { return simple_.size(); }
  bool is_type_a() const {
    return type_ == DynkinType::GL || type_ == DynkinType::SL;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::size_t>& simple_indices() const { return simple_; }

  Root root(std::size_t index) const;
  std::vector<Root> roots() const;
  std::vector<Root> positive_roots() const;
  std::vector<Root> simple_roots() const;
  Root simple_root(std::size_t i) const { return root(simple_.at(i)); }

  std::optional<std::size_t> index_of(const IntVector& root_coords) const;
  bool is_simple(const Root& alpha) const;

  // 2*rho for the stored Weyl vector. Doubled so that SO(2n+1), whose Weyl
  // vector is half-integral, fits the same integer representation.
  const IntVector& weyl_vector_doubled() const { return rho2_; }
  // The Weyl vector as a weight, when it is integral.
  std::optional<Weight> weyl_vector() const;
  // <rho, alpha^vee>. Always an integer for roots.
  Int weyl_pairing(const Root& alpha) const;

  // Reduces a coordinate vector to its canonical lattice representative
  // (SL(n): last coordinate 0). Identity for the other types.
  IntVector canonicalize(IntVector coords) const;

  // "GL(4)", "Sp(2)", "custom(1)" ...
  std::string name() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b);

 private:
  friend DatumPtr make_datum(DynkinType type, int n);
  friend DatumPtr make_torus(int rank);
  friend DatumPtr make_custom_datum(std::size_t rank,
                                    std::vector<IntVector> roots,
                                    std::vector<IntVector> coroots,
                                    std::vector<std::size_t> simple);
  RootDatum() = default;

  DynkinType type_ = DynkinType::GL;
  int n_ = 0;
  std::size_t rank_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::size_t> simple_;
  IntVector rho2_;
};

// n >= 1 for GL/SL, n >= 2 for SO(2n+1), Sp(2n), SO(2n).
DatumPtr make_datum(DynkinType type, int n);
DatumPtr make_torus(int rank);
// Roots are sign-closed; `simple` indexes into `roots`. Positivity is
// derived from the simple-root decomposition.
DatumPtr make_custom_datum(std::size_t rank, std::vector<IntVector> roots,
                           std::vector<IntVector> coroots,
                           std::vector<std::size_t> simple);

Int dot(const IntVector& x, const IntVector& y);

Int pairing(const Weight& lambda, const Root& alpha);
Weight reflect(const Weight& lambda, const Root& alpha);
// s_alpha . lambda = s_alpha(lambda) - alpha, alpha simple.
Weight dot_reflect(const Weight& lambda, const Root& alpha);
bool is_dominant(const Weight& lambda);

// Integer coefficients of alpha in the simple roots (exact elimination).
IntVector simple_root_coefficients(const Root& alpha);

// Signed permutation of the basis l_1..l_n. images()[i] = +-(j+1) means
// w(l_{i+1}) = +-l_{j+1}.
class WeylElement {
 public:
  static WeylElement identity(DatumPtr datum);
  static WeylElement simple_reflection(const DatumPtr& datum, std::size_t i);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<int>& images() const { return images_; }

  Weight operator()(const Weight& lambda) const;
  // w . lambda = w(lambda + rho) - rho
  Weight dot(const Weight& lambda) const;
  // (a * b)(x) = a(b(x))
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const WeylElement& a,
                                          const WeylElement& b) {
    return a.images_ <=> b.images_;
  }

 private:
  WeylElement(DatumPtr datum, std::vector<int> images)
      : datum_(std::move(datum)), images_(std::move(images)) {}

  DatumPtr datum_;
  std::vector<int> images_;
};

// CHARP_FLAG_MAX_RANK, or 8.
std::size_t weyl_rank_bound();
// Classical order (n!, 2^n n!, 2^(n-1) n!), 1 for tori.
std::uint64_t weyl_group_order(const RootDatum& datum);
// All elements, sorted, by closure of the simple reflections.
std::vector<WeylElement> weyl_group(
    const DatumPtr& datum, std::optional<std::size_t> rank_bound = std::nullopt);

}  // namespace charp
