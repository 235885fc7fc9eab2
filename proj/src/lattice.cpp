#include "charp/lattice.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <sstream>

#include "charp/error.hpp"

namespace charp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankOutOfRange: return "rank_out_of_range";
    case ErrorCode::RankBoundExceeded: return "rank_bound_exceeded";
    case ErrorCode::DatumMismatch: return "datum_mismatch";
    case ErrorCode::NotSimpleRoot: return "not_simple_root";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::NonPositive: return "non_positive";
    case ErrorCode::NotDominant: return "not_dominant";
    case ErrorCode::UnsupportedType: return "unsupported_type";
    case ErrorCode::UnsupportedPrime: return "unsupported_prime";
    case ErrorCode::BadShape: return "bad_shape";
    case ErrorCode::DimensionMismatch: return "dimension_mismatch";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

std::string_view to_string(DynkinType type) {
  switch (type) {
    case DynkinType::GL: return "GL";
    case DynkinType::SL: return "SL";
    case DynkinType::SOOdd: return "SO_odd";
    case DynkinType::Sp: return "Sp";
    case DynkinType::SOEven: return "SO_even";
    case DynkinType::Torus: return "T";
    case DynkinType::Custom: return "custom";
  }
  return "?";
}

DynkinType parse_dynkin_type(std::string_view text) {
  if (text == "GL") return DynkinType::GL;
  if (text == "SL") return DynkinType::SL;
  if (text == "SO_odd" || text == "B") return DynkinType::SOOdd;
  if (text == "Sp" || text == "C") return DynkinType::Sp;
  if (text == "SO_even" || text == "D") return DynkinType::SOEven;
  if (text == "T" || text == "torus") return DynkinType::Torus;
  if (text == "custom") return DynkinType::Custom;
  throw Error(ErrorCode::UnsupportedType,
              "unknown datum type '" + std::string(text) + "'");
}

Int dot(const IntVector& x, const IntVector& y) {
  Int acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

bool same_datum(const DatumPtr& a, const DatumPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  if (a.type_ != b.type_ || a.n_ != b.n_ || a.rank_ != b.rank_) return false;
  if (a.type_ != DynkinType::Custom) return true;
  if (a.simple_ != b.simple_ || a.entries_.size() != b.entries_.size())
    return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].root != b.entries_[i].root ||
        a.entries_[i].coroot != b.entries_[i].coroot)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(DatumPtr datum, IntVector coords) : datum_(std::move(datum)) {
  if (!datum_) throw Error(ErrorCode::DatumMismatch, "weight without datum");
  if (coords.size() != datum_->lattice_rank()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weight has " + std::to_string(coords.size()) +
                    " coordinates, " + datum_->name() + " needs " +
                    std::to_string(datum_->lattice_rank()));
  }
  coords_ = datum_->canonicalize(std::move(coords));
}

Weight Weight::zero(DatumPtr datum) {
  const auto n = datum->lattice_rank();
  return Weight(std::move(datum), IntVector(n, 0));
}

Weight Weight::basis(DatumPtr datum, std::size_t index) {
  IntVector v(datum->lattice_rank(), 0);
  v.at(index) = 1;
  return Weight(std::move(datum), std::move(v));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (!same_datum(datum_, other.datum_))
    throw Error(ErrorCode::DatumMismatch, "adding weights of different data");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  coords_ = datum_->canonicalize(std::move(coords_));
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (!same_datum(datum_, other.datum_))
    throw Error(ErrorCode::DatumMismatch,
                "subtracting weights of different data");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  coords_ = datum_->canonicalize(std::move(coords_));
  return *this;
}

Weight Weight::operator-() const {
  IntVector v(coords_);
  for (auto& x : v) x = -x;
  return Weight(datum_, std::move(v));
}

Weight operator*(Int scalar, const Weight& w) {
  IntVector v(w.coords_);
  for (auto& x : v) x *= scalar;
  return Weight(w.datum_, std::move(v));
}

bool operator==(const Weight& a, const Weight& b) {
  return a.coords_ == b.coords_ && same_datum(a.datum_, b.datum_);
}

std::string Weight::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------
// RootDatum

Root RootDatum::root(std::size_t index) const {
  const Entry& e = entries_.at(index);
  return Root{Weight(shared_from_this(), e.root), e.coroot, e.positive};
}

std::vector<Root> RootDatum::roots() const {
  std::vector<Root> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.push_back(root(i));
  return out;
}

std::vector<Root> RootDatum::positive_roots() const {
  std::vector<Root> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].positive) out.push_back(root(i));
  return out;
}

std::vector<Root> RootDatum::simple_roots() const {
  std::vector<Root> out;
  out.reserve(simple_.size());
  for (auto i : simple_) out.push_back(root(i));
  return out;
}

std::optional<std::size_t> RootDatum::index_of(const IntVector& root_coords) const {
  const IntVector c = canonicalize(root_coords);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].root == c) return i;
  return std::nullopt;
}

bool RootDatum::is_simple(const Root& alpha) const {
  if (!same_datum(alpha.vector.datum(), shared_from_this())) return false;
  for (auto i : simple_) {
    if (entries_[i].root == alpha.vector.coords() &&
        entries_[i].coroot == alpha.coroot)
      return true;
  }
  return false;
}

std::optional<Weight> RootDatum::weyl_vector() const {
  IntVector half(rho2_.size());
  for (std::size_t i = 0; i < rho2_.size(); ++i) {
    if (rho2_[i] % 2 != 0) return std::nullopt;
    half[i] = rho2_[i] / 2;
  }
  return Weight(shared_from_this(), std::move(half));
}

Int RootDatum::weyl_pairing(const Root& alpha) const {
  const Int twice = dot(rho2_, alpha.coroot);
  if (twice % 2 != 0)
    throw InconsistencyError("half-integral <rho, coroot> for root " +
                             alpha.vector.to_string());
  return twice / 2;
}

IntVector RootDatum::canonicalize(IntVector coords) const {
  if (type_ == DynkinType::SL && !coords.empty()) {
    const Int shift = coords.back();
    for (auto& x : coords) x -= shift;
  }
  return coords;
}

std::string RootDatum::name() const {
  std::string base(to_string(type_));
  return base + "(" + std::to_string(type_ == DynkinType::Custom ? rank_ : n_) + ")";
}

namespace {

IntVector unit(std::size_t n, std::size_t i, Int scale = 1) {
  IntVector v(n, 0);
  v[i] = scale;
  return v;
}

IntVector combo(std::size_t n, std::size_t i, Int si, std::size_t j, Int sj) {
  IntVector v(n, 0);
  v[i] += si;
  v[j] += sj;
  return v;
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

using Q = boost::rational<Int>;

// Solves columns * c = target exactly. Returns nullopt if inconsistent.
std::optional<std::vector<Q>> solve_exact(const std::vector<IntVector>& columns,
                                          const IntVector& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = columns.size();
  std::vector<std::vector<Q>> m(rows, std::vector<Q>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = columns[c][r];
    m[r][cols] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].numerator() == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c].numerator() == 0) continue;
      const Q f = m[k][c];
      for (std::size_t j = 0; j <= cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows; ++k)
    if (m[k][cols].numerator() != 0) return std::nullopt;
  std::vector<Q> sol(cols, Q(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) sol[pivot_col[k]] = m[k][cols];
  return sol;
}

std::optional<IntVector> integral_coefficients(const RootDatum& datum,
                                               const IntVector& root) {
  std::vector<IntVector> columns;
  for (auto i : datum.simple_indices()) columns.push_back(datum.entries()[i].root);
  auto sol = solve_exact(columns, datum.canonicalize(root));
  if (!sol) return std::nullopt;
  IntVector out;
  for (const auto& q : *sol) {
    if (q.denominator() != 1) return std::nullopt;
    out.push_back(q.numerator());
  }
  return out;
}

}  // namespace

DatumPtr make_datum(DynkinType type, int n) {
  const int min_n = (type == DynkinType::GL || type == DynkinType::SL) ? 1 : 2;
  if (type == DynkinType::Custom)
    throw Error(ErrorCode::UnsupportedType,
                "custom data are built with make_custom_datum");
  if (type == DynkinType::Torus) return make_torus(n);
  if (n < min_n || n > 64) {
    throw Error(ErrorCode::RankOutOfRange,
                std::string(to_string(type)) + " needs " +
                    std::to_string(min_n) + " <= n <= 64, got " + std::to_string(n));
  }

  std::shared_ptr<RootDatum> d(new RootDatum());
  d->type_ = type;
  d->n_ = n;
  d->rank_ = static_cast<std::size_t>(n);
  const std::size_t r = d->rank_;
  auto add = [&](IntVector root, IntVector coroot, bool positive) {
    d->entries_.push_back({d->canonicalize(root), coroot, positive});
    d->entries_.push_back({d->canonicalize(negated(root)), negated(coroot), !positive});
  };

  // l_i - l_j for every type.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      add(combo(r, i, 1, j, -1), combo(r, i, 1, j, -1), true);
  if (type == DynkinType::SOOdd || type == DynkinType::Sp || type == DynkinType::SOEven) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        add(combo(r, i, 1, j, 1), combo(r, i, 1, j, 1), true);
  }
  if (type == DynkinType::SOOdd)
    for (std::size_t i = 0; i < r; ++i) add(unit(r, i), unit(r, i, 2), true);
  if (type == DynkinType::Sp)
    for (std::size_t i = 0; i < r; ++i) add(unit(r, i, 2), unit(r, i), true);

  std::vector<IntVector> simple;
  for (std::size_t i = 0; i + 1 < r; ++i) simple.push_back(combo(r, i, 1, i + 1, -1));
  switch (type) {
    case DynkinType::SOOdd: simple.push_back(unit(r, r - 1)); break;
    case DynkinType::Sp: simple.push_back(unit(r, r - 1, 2)); break;
    case DynkinType::SOEven: simple.push_back(combo(r, r - 2, 1, r - 1, 1)); break;
    default: break;
  }
  for (const auto& s : simple) d->simple_.push_back(*d->index_of(s));

  d->rho2_.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    const Int k = static_cast<Int>(r - 1 - i);
    switch (type) {
      case DynkinType::SOOdd: d->rho2_[i] = 2 * k + 1; break;
      case DynkinType::Sp: d->rho2_[i] = 2 * (k + 1); break;
      default: d->rho2_[i] = 2 * k; break;
    }
  }
  return d;
}

DatumPtr make_torus(int rank) {
  if (rank < 1 || rank > 64)
    throw Error(ErrorCode::RankOutOfRange,
                "torus rank must be in [1, 64], got " + std::to_string(rank));
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->type_ = DynkinType::Torus;
  d->n_ = rank;
  d->rank_ = static_cast<std::size_t>(rank);
  d->rho2_.assign(d->rank_, 0);
  return d;
}

DatumPtr make_custom_datum(std::size_t rank, std::vector<IntVector> roots,
                           std::vector<IntVector> coroots,
                           std::vector<std::size_t> simple) {
  if (rank < 1)
    throw Error(ErrorCode::RankOutOfRange, "custom datum needs rank >= 1");
  if (roots.size() != coroots.size())
    throw Error(ErrorCode::BadShape, "roots and coroots differ in count");
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->type_ = DynkinType::Custom;
  d->rank_ = rank;
  d->n_ = static_cast<int>(rank);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].size() != rank || coroots[i].size() != rank)
      throw Error(ErrorCode::DimensionMismatch, "root or coroot of wrong length");
    if (dot(roots[i], coroots[i]) != 2)
      throw Error(ErrorCode::BadShape, "<root, coroot> != 2 for root index " +
                                           std::to_string(i));
    d->entries_.push_back({roots[i], coroots[i], true});
  }
  for (const auto& e : d->entries_) {
    auto neg = d->index_of(negated(e.root));
    if (!neg || d->entries_[*neg].coroot != negated(e.coroot))
      throw Error(ErrorCode::BadShape, "root set is not closed under negation");
  }
  for (auto s : simple) {
    if (s >= d->entries_.size())
      throw Error(ErrorCode::BadShape, "simple root index out of range");
  }
  d->simple_ = std::move(simple);
  d->rho2_.assign(rank, 0);
  for (auto& e : d->entries_) {
    auto c = integral_coefficients(*d, e.root);
    if (!c) throw Error(ErrorCode::BadShape, "root is not an integral combination of simple roots");
    const bool nonneg = std::all_of(c->begin(), c->end(), [](Int x) { return x >= 0; });
    const bool nonpos = std::all_of(c->begin(), c->end(), [](Int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw Error(ErrorCode::BadShape, "root has mixed-sign simple-root coefficients");
    e.positive = nonneg;
    if (e.positive)
      for (std::size_t i = 0; i < rank; ++i) d->rho2_[i] += e.root[i];
  }
  for (auto s : d->simple_) {
    if (dot(d->rho2_, d->entries_[s].coroot) != 2)
      throw Error(ErrorCode::BadShape, "simple roots do not form a base");
  }
  return d;
}

// ---------------------------------------------------------------------------
// Pairings and reflections

namespace {

void require_same(const Weight& lambda, const Root& alpha) {
  if (!same_datum(lambda.datum(), alpha.vector.datum()))
    throw Error(ErrorCode::DatumMismatch,
                "weight in " + lambda.datum()->name() + ", root in " +
                    alpha.vector.datum()->name());
}

}  // namespace

Int pairing(const Weight& lambda, const Root& alpha) {
  require_same(lambda, alpha);
  return dot(lambda.coords(), alpha.coroot);
}

Weight reflect(const Weight& lambda, const Root& alpha) {
  return lambda - pairing(lambda, alpha) * alpha.vector;
}

Weight dot_reflect(const Weight& lambda, const Root& alpha) {
  require_same(lambda, alpha);
  if (!lambda.datum()->is_simple(alpha))
    throw Error(ErrorCode::NotSimpleRoot,
                "dot action needs a simple root, got " + alpha.vector.to_string());
  return lambda - (pairing(lambda, alpha) + 1) * alpha.vector;
}

bool is_dominant(const Weight& lambda) {
  const auto& d = *lambda.datum();
  for (auto i : d.simple_indices())
    if (dot(lambda.coords(), d.entries()[i].coroot) < 0) return false;
  return true;
}

IntVector simple_root_coefficients(const Root& alpha) {
  auto c = integral_coefficients(*alpha.vector.datum(), alpha.vector.coords());
  if (!c)
    throw Error(ErrorCode::BadShape,
                alpha.vector.to_string() + " is not in the simple-root lattice");
  return *c;
}

}  // namespace charp
