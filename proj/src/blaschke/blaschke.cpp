#include "corona/blaschke.hpp"

#include <algorithm>
#include <cmath>

#include "corona/errors.hpp"

namespace corona {

namespace {

// (f − c)/B when it exists; nullopt otherwise.
std::optional<RFunc> peel(const RFunc& f, const GRat& c, const Blaschke& B) {
  const RFunc r = f - RFunc(c);
  if (r.is_zero()) return RFunc();
  const auto [quot, rem] = divmod(r.num(), B.numerator());
  if (!rem.is_zero()) return std::nullopt;
  // quot is coprime to den(r); only B's denominator can cancel
  const Poly g = gcd(B.denominator(), r.den());
  return RFunc::coprime(quot * exact_div(B.denominator(), g), exact_div(r.den(), g));
}

// First zero where f takes a value different from f(α_0), or a repeated zero
// where f − f(α_0) does not vanish to full order.
std::pair<GRat, GRat> failing_pair(const RFunc& f, const Blaschke& B) {
  const auto& zs = B.zeros();
  const GRat c = f.eval_exact(zs.front());
  for (const auto& a : zs)
    if (f.eval_exact(a) != c) return {zs.front(), a};
  for (const auto& a : zs)
    if (std::count(zs.begin(), zs.end(), a) > 1) return {a, a};
  return {zs.front(), zs.front()};
}

}  // namespace

Blaschke::Blaschke(std::vector<GRat> zeros) : zeros_(std::move(zeros)), num_(GRat(1)), den_(GRat(1)) {
  if (zeros_.empty()) throw DomainError("Blaschke product needs at least one zero");
  for (const auto& a : zeros_) {
    if (a.norm2() >= 1) throw DomainError("Blaschke zero " + a.str() + " is not inside the unit disk");
    if (a.is_zero()) {
      num_ *= Poly::z();
    } else {
      num_ *= Poly{a, GRat(-1)};
      den_ *= Poly{GRat(1), -a.conj()};
    }
  }
  f_ = RFunc::make(num_, den_);
}

std::complex<double> blaschke_eval(const Blaschke& B, std::complex<double> z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("Blaschke evaluation outside the closed unit disk");
  std::complex<double> acc = 1.0;
  for (const auto& a : B.zeros()) {
    const auto al = a.to_complex();
    acc *= a.is_zero() ? z : (al - z) / (1.0 - std::conj(al) * z);
  }
  return acc;
}

RFunc divide_by_blaschke(const RFunc& f, const Blaschke& B) {
  const auto g = peel(f, GRat(), B);
  if (!g) throw NonDivisibleError(f.str() + " does not vanish on the zero set of B with full multiplicity");
  return *g;
}

BAdic badic_expand(const RFunc& f, const Blaschke& B, int J) {
  if (J < 1 || J > 64) throw DomainError("B-adic level count must lie in 1..64");
  BAdic e;
  RFunc cur = f;
  for (int j = 0; j < J; ++j) {
    const GRat c = cur.eval_exact(B.zeros().front());
    auto next = peel(cur, c, B);
    if (!next) {
      const auto [a, b] = failing_pair(cur, B);
      throw NotExpandableError("level " + std::to_string(j) + " has no constant term: values at " + a.str() +
                               " and " + b.str() + " differ or do not match to full multiplicity");
    }
    e.constants.push_back(c);
    cur = std::move(*next);
  }
  e.tail = std::move(cur);
  return e;
}

RFunc reconstruct(const BAdic& e, const Blaschke& B) {
  RFunc acc = e.tail;
  for (auto it = e.constants.rbegin(); it != e.constants.rend(); ++it) acc = RFunc(*it) + B.as_rfunc() * acc;
  return acc;
}

CPlusBMembership is_cplusb_member(const RFunc& f, const Blaschke& B) {
  CPlusBMembership m;
  m.c = f.eval_exact(B.zeros().front());
  if (auto g = peel(f, m.c, B)) {
    m.member = true;
    m.g = std::move(*g);
  } else {
    m.failing_zeros = failing_pair(f, B);
  }
  return m;
}

bool is_hkb_member(const RFunc& f, const KSet& K, const Blaschke& B) {
  const auto kp = K.max();
  if (!kp) return true;
  try {
    const BAdic e = badic_expand(f, B, *kp + 1);
    for (int j : K.elements())
      if (!e.constants[static_cast<std::size_t>(j)].is_zero()) return false;
    return true;
  } catch (const NotExpandableError&) {
    return false;
  }
}

}  // namespace corona
