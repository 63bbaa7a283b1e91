#include "corona/kset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "corona/errors.hpp"

namespace corona {

KSet::KSet(std::vector<int> elements) : e_(std::move(elements)) {
  std::sort(e_.begin(), e_.end());
  e_.erase(std::unique(e_.begin(), e_.end()), e_.end());
  if (!e_.empty() && e_.front() < 1) throw InvalidKError("K must contain positive integers only");
}

bool KSet::contains(int j) const { return std::binary_search(e_.begin(), e_.end(), j); }

std::optional<int> KSet::max() const {
  if (e_.empty()) return std::nullopt;
  return e_.back();
}

KSet KSet::without_max() const {
  KSet r = *this;
  if (!r.e_.empty()) r.e_.pop_back();
  return r;
}

KSet KSet::prefix(std::size_t count) const {
  KSet r;
  r.e_.assign(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(std::min(count, e_.size())));
  return r;
}

AlgebraVerdict is_algebra_set(const KSet& K) {
  const auto kp = K.max();
  if (!kp) return {};
  for (int j = 1; j <= *kp; ++j) {
    if (K.contains(j)) continue;
    for (int k = j; j + k <= *kp; ++k) {
      if (!K.contains(k) && K.contains(j + k)) return {false, std::make_pair(j, k)};
    }
  }
  return {};
}

KSet k_minus(const KSet& K, int m) {
  if (m < 1) throw InvalidKError("K - m needs m >= 1");
  if (K.contains(m)) throw InvalidKError("K - m is only defined for m not in K (m = " + std::to_string(m) + ")");
  std::vector<int> r;
  for (int j : K.elements())
    if (j > m) r.push_back(j - m);
  return KSet(std::move(r));
}

bool SemigroupData::in_complement(long x) const {
  if (x < 1 || x % d != 0) return false;
  const long y = x / d;
  return y >= N0 || std::binary_search(n_values.begin(), n_values.end(), static_cast<int>(y));
}

Decomposition decompose(const std::vector<int>& complement_generators) {
  if (complement_generators.empty()) throw InvalidKError("complement generator set is empty");
  for (int g : complement_generators)
    if (g < 1) throw InvalidKError("complement generators must be positive");
  int d = 0;
  for (int g : complement_generators) d = std::gcd(d, g);
  std::vector<int> gens;
  for (int g : complement_generators) gens.push_back(g / d);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const int gmin = gens.front();

  // member[x]: x is a positive sum of generators; grow until gmin consecutive members
  std::vector<char> member{0};
  int run = 0;
  int x = 0;
  while (run < gmin) {
    ++x;
    char in = 0;
    for (int g : gens) {
      if (g == x || (g < x && member[static_cast<std::size_t>(x - g)])) {
        in = 1;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  int conductor = 1;
  std::vector<int> gaps;
  for (int y = 1; y <= x; ++y) {
    if (!member[static_cast<std::size_t>(y)]) {
      gaps.push_back(y);
      conductor = y + 1;
    }
  }
  Decomposition out;
  out.data.d = d;
  out.data.N0 = std::max(conductor, gens.back() + 1);
  for (int y = 1; y < out.data.N0; ++y)
    if (y > x || member[static_cast<std::size_t>(y)]) out.data.n_values.push_back(y);
  out.K1 = KSet(std::move(gaps));
  return out;
}

RFunc reduce_to_finite(const RFunc& f, int d) {
  if (d < 1) throw NotReducibleError("substitution exponent must be positive");
  auto deflate = [d](const Poly& p) {
    std::vector<GRat> c;
    for (int j = 0; j <= p.degree(); ++j) {
      if (j % d == 0) {
        c.push_back(p.coeff(j));
      } else if (!p.coeff(j).is_zero()) {
        throw NotReducibleError("coefficient of z^" + std::to_string(j) + " is nonzero but " + std::to_string(j) +
                                " is not divisible by " + std::to_string(d));
      }
    }
    return Poly(std::move(c));
  };
  return RFunc::make(deflate(f.num()), deflate(f.den()));
}

RFunc expand_from_finite(const RFunc& f1, int d) { return RFunc::make(f1.num().inflate(d), f1.den().inflate(d)); }

bool is_hk_member(const RFunc& f, const KSet& K) {
  const auto kp = K.max();
  if (!kp) return true;
  const auto c = taylor_series(f, *kp);
  return std::all_of(K.elements().begin(), K.elements().end(),
                     [&](int j) { return c[static_cast<std::size_t>(j)].is_zero(); });
}

bool is_hk_member(const RFunc& f, const Decomposition& K) {
  try {
    return is_hk_member(reduce_to_finite(f, K.data.d), K.K1);
  } catch (const NotReducibleError&) {
    return false;
  }
}

}  // namespace corona
