#include "slopekit/arith/witt.hpp"

#include <cmath>

#include "slopekit/error.hpp"
#include "slopekit/rational.hpp"

namespace slopekit::arith {

namespace {

using u128 = unsigned __int128;

constexpr std::uint32_t kTeichTableMax = 4096;

}  // namespace

std::shared_ptr<const WittRing> WittRing::make(FieldPtr field, int m) {
  require(field != nullptr, ErrorKind::InvalidArgument, "null field");
  require(m >= 1, ErrorKind::InvalidArgument, "Witt length must be >= 1");
  const double bits = m * std::log2(static_cast<double>(field->characteristic()));
  require(bits < 62.0, ErrorKind::InvalidArgument, "p^m exceeds 2^62");
  return std::shared_ptr<const WittRing>(new WittRing(std::move(field), m));
}

WittRing::WittRing(FieldPtr field, int m)
    : field_(std::move(field)), m_(m), s_(field_->degree()) {
  pm_ = ipow(field_->characteristic(), static_cast<unsigned>(m_));
  lifted_.assign(field_->modulus().begin(), field_->modulus().end());

  // sigma(X): Newton iteration on f~ starting from X^p.
  WittVec x = zero();
  if (s_ > 1) {
    x.c[1] = 1;
  } else {
    x.c[0] = (pm_ - lifted_[0]) % pm_;
  }
  WittVec y = pow(x, p());
  auto eval_f = [&](const WittVec& at, bool derivative) {
    WittVec acc = zero();
    for (int i = s_; i >= (derivative ? 1 : 0); --i) {
      std::uint64_t coef = lifted_[static_cast<std::size_t>(i)];
      if (derivative) coef = static_cast<std::uint64_t>((u128(coef) * i) % pm_);
      acc = add(mul(acc, at), from_int(static_cast<std::int64_t>(coef)));
    }
    return acc;
  };
  for (int it = 0; it <= m_ + 1; ++it) {
    WittVec fy = eval_f(y, false);
    if (is_zero(fy)) break;
    y = sub(y, mul(fy, inv(eval_f(y, true))));
  }

  sigma_pow_.assign(static_cast<std::size_t>(s_), {});
  auto powers_of = [&](const WittVec& base) {
    std::vector<WittVec> out;
    WittVec acc = one();
    for (int i = 0; i < s_; ++i) {
      out.push_back(acc);
      acc = mul(acc, base);
    }
    return out;
  };
  sigma_pow_[0] = powers_of(x);
  if (s_ > 1) {
    sigma_pow_[1] = powers_of(y);
    WittVec cur = y;
    for (int k = 2; k < s_; ++k) {
      cur = apply_sigma_table(cur, sigma_pow_[1]);
      sigma_pow_[static_cast<std::size_t>(k)] = powers_of(cur);
    }
  }

  const std::uint32_t q = field_->order();
  teich_gen_ = lift(field_->generator());
  for (int i = 1; i < m_; ++i) teich_gen_ = pow(teich_gen_, q);
  if (m_ > 1 && q <= kTeichTableMax) {
    teich_table_.reserve(q - 1);
    WittVec acc = one();
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      teich_table_.push_back(acc);
      acc = mul(acc, teich_gen_);
    }
  }
}

WittVec WittRing::zero() const {
  WittVec out;
  out.c.assign(static_cast<std::size_t>(s_), 0);
  return out;
}

WittVec WittRing::from_int(std::int64_t v) const {
  WittVec out = zero();
  auto r = v % static_cast<std::int64_t>(pm_);
  if (r < 0) r += static_cast<std::int64_t>(pm_);
  out.c[0] = static_cast<std::uint64_t>(r);
  return out;
}

WittVec WittRing::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  require(coeffs.size() <= static_cast<std::size_t>(s_), ErrorKind::InvalidArgument,
          "too many Witt coefficients");
  WittVec out = zero();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto r = coeffs[i] % static_cast<std::int64_t>(pm_);
    if (r < 0) r += static_cast<std::int64_t>(pm_);
    out.c[i] = static_cast<std::uint64_t>(r);
  }
  return out;
}

bool WittRing::is_zero(const WittVec& a) const noexcept {
  for (auto v : a.c)
    if (v) return false;
  return true;
}

WittVec WittRing::add(const WittVec& a, const WittVec& b) const {
  WittVec out = a;
  for (int i = 0; i < s_; ++i) {
    auto v = out.c[i] + b.c[i];
    out.c[i] = v >= pm_ ? v - pm_ : v;
  }
  return out;
}

WittVec WittRing::neg(const WittVec& a) const {
  WittVec out = a;
  for (auto& v : out.c) v = v ? pm_ - v : 0;
  return out;
}

WittVec WittRing::sub(const WittVec& a, const WittVec& b) const {
  WittVec out = a;
  for (int i = 0; i < s_; ++i) {
    out.c[i] = a.c[i] >= b.c[i] ? a.c[i] - b.c[i] : a.c[i] + pm_ - b.c[i];
  }
  return out;
}

WittVec WittRing::reduce_poly(std::vector<u128>& prod) const {
  for (int k = 2 * s_ - 2; k >= s_; --k) {
    const std::uint64_t c = static_cast<std::uint64_t>(prod[k] % pm_);
    prod[k] = 0;
    if (!c) continue;
    const std::uint64_t nc = pm_ - c;
    for (int i = 0; i < s_; ++i) {
      if (lifted_[i]) prod[k - s_ + i] = (prod[k - s_ + i] + u128(nc) * lifted_[i]) % pm_;
    }
  }
  WittVec out = zero();
  for (int i = 0; i < s_; ++i) out.c[i] = static_cast<std::uint64_t>(prod[i] % pm_);
  return out;
}

WittVec WittRing::mul(const WittVec& a, const WittVec& b) const {
  if (s_ == 1) {
    WittVec out = zero();
    out.c[0] = static_cast<std::uint64_t>((u128(a.c[0]) * b.c[0]) % pm_);
    return out;
  }
  std::vector<u128> prod(2 * static_cast<std::size_t>(s_) - 1, 0);
  for (int i = 0; i < s_; ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; j < s_; ++j) {
      if (b.c[j]) prod[i + j] = (prod[i + j] + u128(a.c[i]) * b.c[j]) % pm_;
    }
  }
  return reduce_poly(prod);
}

WittVec WittRing::scale(const WittVec& a, std::uint64_t k) const {
  WittVec out = a;
  k %= pm_;
  for (auto& v : out.c) v = static_cast<std::uint64_t>((u128(v) * k) % pm_);
  return out;
}

WittVec WittRing::pow(const WittVec& a, std::uint64_t e) const {
  WittVec result = one();
  WittVec base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

WittVec WittRing::inv(const WittVec& a) const {
  const auto r = residue_of(a);
  require(r != 0, ErrorKind::NotInvertible, "Witt vector is not a unit");
  WittVec y = lift(field_->inv(r));
  const WittVec two = from_int(2);
  for (int prec = 1; prec < m_; prec *= 2) y = mul(y, sub(two, mul(a, y)));
  return y;
}

int WittRing::valuation(const WittVec& a) const noexcept {
  int best = m_;
  const std::uint64_t p = field_->characteristic();
  for (auto v : a.c) {
    if (!v) continue;
    int k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    best = std::min(best, k);
  }
  return best;
}

WittVec WittRing::shift_up(const WittVec& a, int k) const {
  if (k >= m_) return zero();
  return scale(a, ipow(p(), static_cast<unsigned>(k)));
}

WittVec WittRing::shift_down(const WittVec& a, int k) const {
  if (k == 0) return a;
  require(valuation(a) >= k, ErrorKind::InvalidArgument, "Witt vector not divisible by p^k");
  if (k >= m_) return zero();
  const auto pk = ipow(p(), static_cast<unsigned>(k));
  WittVec out = a;
  for (auto& v : out.c) v /= pk;
  return out;
}

WittVec WittRing::truncate(const WittVec& a, int k) const {
  if (k >= m_) return a;
  const auto pk = ipow(p(), static_cast<unsigned>(std::max(k, 0)));
  WittVec out = a;
  for (auto& v : out.c) v %= pk;
  return out;
}

FiniteField::Elem WittRing::residue_of(const WittVec& a) const {
  FiniteField::Elem out = 0, scale_p = 1;
  for (int i = 0; i < s_; ++i) {
    out += static_cast<FiniteField::Elem>(a.c[i] % p()) * scale_p;
    scale_p *= p();
  }
  return out;
}

WittVec WittRing::lift(FiniteField::Elem a) const {
  WittVec out = zero();
  for (int i = 0; i < s_; ++i) {
    out.c[i] = a % p();
    a /= p();
  }
  return out;
}

WittVec WittRing::teichmuller(FiniteField::Elem a) const {
  if (a == 0) return zero();
  if (m_ == 1) return lift(a);
  const auto k = field_->log(a);
  if (!teich_table_.empty()) return teich_table_[k];
  return pow(teich_gen_, k);
}

WittVec WittRing::apply_sigma_table(const WittVec& a, const std::vector<WittVec>& powers) const {
  WittVec out = zero();
  for (int i = 0; i < s_; ++i) {
    if (a.c[i]) out = add(out, scale(powers[static_cast<std::size_t>(i)], a.c[i]));
  }
  return out;
}

WittVec WittRing::sigma(const WittVec& a, int k) const {
  k %= s_;
  if (k < 0) k += s_;
  if (k == 0) return a;
  return apply_sigma_table(a, sigma_pow_[static_cast<std::size_t>(k)]);
}

std::vector<FiniteField::Elem> WittRing::digits(const WittVec& a) const {
  std::vector<FiniteField::Elem> out;
  out.reserve(static_cast<std::size_t>(m_));
  WittVec cur = a;
  for (int j = 0; j < m_; ++j) {
    const auto d = residue_of(cur);
    out.push_back(d);
    if (j + 1 < m_) cur = shift_down(sub(cur, teichmuller(d)), 1);
  }
  return out;
}

WittVec WittRing::from_digits(const std::vector<FiniteField::Elem>& digits) const {
  WittVec out = zero();
  for (std::size_t j = 0; j < digits.size() && j < static_cast<std::size_t>(m_); ++j) {
    out = add(out, shift_up(teichmuller(digits[j]), static_cast<int>(j)));
  }
  return out;
}

}  // namespace slopekit::arith
