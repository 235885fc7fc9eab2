#include "charp/rootmorph.hpp"

#include <numeric>
#include <regex>

#include "charp/cohomology.hpp"
#include "charp/error.hpp"

namespace charp {

RingChar RingChar::prime(Int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return {Kind::Prime, p, 1};
}

RingChar RingChar::prime_power(Int p, int n) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 2) throw Error(ErrorCode::RankOutOfRange, "prime power ring needs exponent >= 2");
  return {Kind::PrimePower, p, n};
}

std::string RingChar::to_string() const {
  switch (kind) {
    case Kind::Zero: return "0";
    case Kind::Prime: return std::to_string(p);
    case Kind::PrimePower: return std::to_string(p) + "^" + std::to_string(exponent);
  }
  return "?";
}

RingChar RingChar::parse(const std::string& text) {
  if (text == "0" || text == "zero") return zero();
  static const std::regex pattern(R"((\d+)(?:\^(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw Error(ErrorCode::Parse, "ring characteristic must look like 0, p or p^n, got '" + text + "'");
  const Int p = std::stoll(m[1].str());
  if (!m[2].matched) return prime(p);
  const int n = std::stoi(m[2].str());
  return n == 1 ? prime(p) : prime_power(p, n);
}

namespace {

// q = prime^k with k >= 1?
std::optional<int> prime_exponent(Int q, Int prime) {
  if (prime < 2 || q < prime) return std::nullopt;
  int k = 0;
  while (q % prime == 0) {
    q /= prime;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return k;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& x) {
  IntVector out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) out[r] = dot(m[r], x);
  return out;
}

IntVector transpose_vec(const IntMatrix& m, const IntVector& y) {
  IntVector out(m.empty() ? 0 : m.front().size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += m[r][c] * y[r];
  return out;
}

IntVector scaled(IntVector v, Int s) {
  for (auto& x : v) x *= s;
  return v;
}

std::string vec_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

bool q_admissible(Int q, const RingChar& ring) {
  if (q == 1) return true;
  if (ring.kind != RingChar::Kind::Prime) return false;
  return prime_exponent(q, ring.p).has_value();
}

MorphismVerdict validate_p_morphism(const PMorphismData& m) {
  const RootDatum& src = *m.source;
  const RootDatum& tgt = *m.target;
  if (m.h.size() != src.lattice_rank())
    throw Error(ErrorCode::DimensionMismatch, "h needs " + std::to_string(src.lattice_rank()) + " rows");
  for (const auto& row : m.h)
    if (row.size() != tgt.lattice_rank())
      throw Error(ErrorCode::DimensionMismatch,
                  "h needs " + std::to_string(tgt.lattice_rank()) + " columns");
  if (m.d_map.size() != src.root_count() || m.q.size() != src.root_count())
    throw Error(ErrorCode::DimensionMismatch, "d_map and q need one entry per source root");

  MorphismVerdict verdict;
  std::vector<int> hits(tgt.root_count(), 0);
  for (std::size_t i = 0; i < src.root_count(); ++i) {
    const Root alpha = src.root(i);
    auto fail = [&](std::string relation, std::string detail) {
      verdict.failures.push_back({std::move(relation), alpha, std::move(detail)});
    };
    const std::size_t j = m.d_map[i];
    if (j >= tgt.root_count()) {
      fail("bijection", "target root index " + std::to_string(j) + " out of range");
      continue;
    }
    ++hits[j];
    const Int q = m.q[i];
    if (q < 1) {
      fail("q_positive", "q = " + std::to_string(q));
      continue;
    }
    const auto& beta = tgt.entries()[j];
    const IntVector lhs = src.canonicalize(mat_vec(m.h, beta.root));
    const IntVector rhs = src.canonicalize(scaled(alpha.vector.coords(), q));
    if (lhs != rhs)
      fail("h_root", "h(d(alpha)) = " + vec_string(lhs) + ", q*alpha = " + vec_string(rhs));
    const IntVector lhs_co = transpose_vec(m.h, alpha.coroot);
    const IntVector rhs_co = scaled(beta.coroot, q);
    if (lhs_co != rhs_co)
      fail("h_coroot", "h^t(alpha^vee) = " + vec_string(lhs_co) +
                           ", q*d(alpha)^vee = " + vec_string(rhs_co));
    if (!q_admissible(q, m.ring))
      fail("admissibility", "x -> x^" + std::to_string(q) +
                                " is not additive over a base of characteristic " +
                                m.ring.to_string());
  }
  for (std::size_t j = 0; j < hits.size(); ++j) {
    if (hits[j] != 1) {
      verdict.failures.push_back({"bijection", tgt.root(j),
                                  "target root hit " + std::to_string(hits[j]) + " times"});
    }
  }
  return verdict;
}

PMorphismData identity_data(const DatumPtr& datum, RingChar ring) {
  PMorphismData m;
  m.source = datum;
  m.target = datum;
  const auto n = datum->lattice_rank();
  m.h.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m.h[i][i] = 1;
  m.d_map.resize(datum->root_count());
  std::iota(m.d_map.begin(), m.d_map.end(), std::size_t{0});
  m.q.assign(datum->root_count(), 1);
  m.ring = ring;
  return m;
}

PMorphismData frobenius_data(const DatumPtr& datum, Int p, RingChar ring) {
  PMorphismData m = identity_data(datum, ring);
  for (std::size_t i = 0; i < m.h.size(); ++i) m.h[i][i] = p;
  m.q.assign(datum->root_count(), p);
  return m;
}

PMorphismData compose(const PMorphismData& first, const PMorphismData& second) {
  if (!same_datum(first.target, second.source))
    throw Error(ErrorCode::DatumMismatch, "composition across different intermediate data");
  if (!(first.ring == second.ring))
    throw Error(ErrorCode::DatumMismatch, "composition over different bases");
  PMorphismData out;
  out.source = first.source;
  out.target = second.target;
  out.ring = first.ring;
  const std::size_t rows = first.h.size();
  const std::size_t inner = second.h.size();
  const std::size_t cols = second.h.empty() ? 0 : second.h.front().size();
  out.h.assign(rows, IntVector(cols, 0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t c = 0; c < cols; ++c) out.h[r][c] += first.h[r][k] * second.h[k][c];
  out.d_map.resize(first.d_map.size());
  out.q.resize(first.q.size());
  for (std::size_t i = 0; i < first.d_map.size(); ++i) {
    const std::size_t mid = first.d_map[i];
    out.d_map[i] = second.d_map.at(mid);
    out.q[i] = first.q[i] * second.q.at(mid);
  }
  return out;
}

RigidityVerdict frobenius_rigidity_verdict(const DatumPtr& datum, Int p, const RingChar& ring) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (ring.kind != RingChar::Kind::Zero && ring.p != p)
    throw Error(ErrorCode::NotPrime, "base characteristic " + ring.to_string() +
                                         " does not match residue characteristic " +
                                         std::to_string(p));
  if (datum->root_count() == 0) {
    return {true, "toral datum: no roots, Frobenius (multiplication by p) deforms trivially"};
  }
  const MorphismVerdict v = validate_p_morphism(frobenius_data(datum, p, ring));
  if (v.valid()) return {true, "q = p is admissible since p = 0 in the base"};
  for (const auto& f : v.failures) {
    if (f.relation != "admissibility")
      throw InconsistencyError("Frobenius data failed " + f.relation + " on " + datum->name());
  }
  return {false, "the rigidified Frobenius has q = " + std::to_string(p) + " on all " +
                     std::to_string(datum->root_count()) +
                     " roots, which needs p = 0; the base has characteristic " + ring.to_string()};
}

bool central_isogeny_etale(Int kernel_order, Int p) {
  if (kernel_order < 1)
    throw Error(ErrorCode::NonPositive, "kernel order must be >= 1");
  return std::gcd(kernel_order, p) == 1;
}

}  // namespace charp
