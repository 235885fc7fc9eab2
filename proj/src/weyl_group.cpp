#include <cstdlib>
#include <deque>
#include <set>
#include <string>

#include "charp/error.hpp"
#include "charp/lattice.hpp"

namespace charp {

namespace {

void require_signed_permutation_type(const RootDatum& d) {
  if (d.type() == DynkinType::Custom && d.root_count() > 0)
    throw Error(ErrorCode::UnsupportedType,
                "Weyl group elements are not available for custom data");
}

IntVector apply_images(const std::vector<int>& images, const IntVector& x) {
  IntVector out(x.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int img = images[i];
    const std::size_t j = static_cast<std::size_t>(std::abs(img) - 1);
    out[j] += img > 0 ? x[i] : -x[i];
  }
  return out;
}

}  // namespace

WeylElement WeylElement::identity(DatumPtr datum) {
  require_signed_permutation_type(*datum);
  std::vector<int> images(datum->lattice_rank());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<int>(i + 1);
  return WeylElement(std::move(datum), std::move(images));
}

WeylElement WeylElement::simple_reflection(const DatumPtr& datum, std::size_t i) {
  const auto& d = *datum;
  if (i >= d.semisimple_rank())
    throw Error(ErrorCode::NotSimpleRoot, "no simple root with index " + std::to_string(i));
  WeylElement w = identity(datum);
  const auto n = d.lattice_rank();
  auto& img = w.images_;
  const bool last = i + 1 == d.semisimple_rank() && !d.is_type_a();
  if (!last) {
    // l_{i+1} - l_{i+2}
    img[i] = static_cast<int>(i + 2);
    img[i + 1] = static_cast<int>(i + 1);
  } else if (d.type() == DynkinType::SOEven) {
    // l_{n-1} + l_n
    img[n - 2] = -static_cast<int>(n);
    img[n - 1] = -static_cast<int>(n - 1);
  } else {
    // l_n or 2 l_n
    img[n - 1] = -static_cast<int>(n);
  }
  return w;
}

Weight WeylElement::operator()(const Weight& lambda) const {
  if (!same_datum(lambda.datum(), datum_))
    throw Error(ErrorCode::DatumMismatch, "Weyl element applied across data");
  return Weight(datum_, apply_images(images_, lambda.coords()));
}

Weight WeylElement::dot(const Weight& lambda) const {
  if (!same_datum(lambda.datum(), datum_))
    throw Error(ErrorCode::DatumMismatch, "Weyl element applied across data");
  const IntVector& rho2 = datum_->weyl_vector_doubled();
  IntVector shifted(lambda.coords());
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = 2 * shifted[i] + rho2[i];
  IntVector moved = apply_images(images_, shifted);
  for (std::size_t i = 0; i < moved.size(); ++i) {
    moved[i] -= rho2[i];
    if (moved[i] % 2 != 0) throw InconsistencyError("dot action left the lattice");
    moved[i] /= 2;
  }
  return Weight(datum_, std::move(moved));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int b = other.images_[i];
    const int a = images_[static_cast<std::size_t>(std::abs(b) - 1)];
    out[i] = b > 0 ? a : -a;
  }
  return WeylElement(datum_, std::move(out));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int img = images_[i];
    const int src = static_cast<int>(i + 1);
    out[static_cast<std::size_t>(std::abs(img) - 1)] = img > 0 ? src : -src;
  }
  return WeylElement(datum_, std::move(out));
}

std::size_t weyl_rank_bound() {
  if (const char* env = std::getenv("CHARP_FLAG_MAX_RANK")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 8;
}

std::uint64_t weyl_group_order(const RootDatum& datum) {
  std::uint64_t fact = 1;
  const auto n = static_cast<std::uint64_t>(datum.n());
  for (std::uint64_t k = 2; k <= n; ++k) fact *= k;
  switch (datum.type()) {
    case DynkinType::GL:
    case DynkinType::SL: return fact;
    case DynkinType::SOOdd:
    case DynkinType::Sp: return fact << n;
    case DynkinType::SOEven: return fact << (n - 1);
    case DynkinType::Torus: return 1;
    case DynkinType::Custom: break;
  }
  if (datum.root_count() == 0) return 1;
  throw Error(ErrorCode::UnsupportedType, "no order formula for custom data");
}

std::vector<WeylElement> weyl_group(const DatumPtr& datum,
                                    std::optional<std::size_t> rank_bound) {
  const std::size_t bound = rank_bound.value_or(weyl_rank_bound());
  if (datum->lattice_rank() > bound)
    throw Error(ErrorCode::RankBoundExceeded,
                "lattice rank " + std::to_string(datum->lattice_rank()) +
                    " exceeds the Weyl group bound " + std::to_string(bound));
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < datum->semisimple_rank(); ++i)
    gens.push_back(WeylElement::simple_reflection(datum, i));

  std::set<WeylElement> seen;
  std::deque<WeylElement> frontier;
  auto e = WeylElement::identity(datum);
  seen.insert(e);
  frontier.push_back(e);
  while (!frontier.empty()) {
    WeylElement w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      WeylElement next = s * w;
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace charp
