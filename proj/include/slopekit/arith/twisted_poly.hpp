#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "slopekit/error.hpp"

namespace slopekit::arith {

/// Polynomials sum a_i F^i over a ring with F a = sigma(a) F.
///
/// Ring must provide Value, zero(), is_zero, add, sub, neg, mul and
/// sigma(v, k). Both WittRing and RamifiedOrder qualify.
template <class Ring>
class TwistedPoly {
 public:
  using Value = typename Ring::Value;

  explicit TwistedPoly(std::shared_ptr<const Ring> ring) : ring_(std::move(ring)) {}
  TwistedPoly(std::shared_ptr<const Ring> ring, std::vector<Value> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static TwistedPoly monomial(std::shared_ptr<const Ring> ring, Value a, int degree) {
    std::vector<Value> c(static_cast<std::size_t>(degree) + 1, ring->zero());
    c.back() = std::move(a);
    return TwistedPoly(std::move(ring), std::move(c));
  }

  const Ring& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const Ring>& ring_ptr() const noexcept { return ring_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Value>& coeffs() const noexcept { return coeffs_; }
  Value coeff(int i) const {
    if (i < 0 || i > degree()) return ring_->zero();
    return coeffs_[static_cast<std::size_t>(i)];
  }

  TwistedPoly operator+(const TwistedPoly& g) const { return combine(g, false); }
  TwistedPoly operator-(const TwistedPoly& g) const { return combine(g, true); }

  /// (sum a_i F^i)(sum b_j F^j) = sum a_i sigma^i(b_j) F^{i+j}.
  TwistedPoly operator*(const TwistedPoly& g) const {
    if (is_zero() || g.is_zero()) return TwistedPoly(ring_);
    const auto& R = *ring_;
    std::vector<Value> out(coeffs_.size() + g.coeffs_.size() - 1, R.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (R.is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
        if (R.is_zero(g.coeffs_[j])) continue;
        out[i + j] = R.add(out[i + j],
                           R.mul(coeffs_[i], R.sigma(g.coeffs_[j], static_cast<int>(i))));
      }
    }
    require(!R.is_zero(out.back()), ErrorKind::PrecisionUnderflow,
            "leading coefficient of twisted product vanishes at this precision");
    return TwistedPoly(ring_, std::move(out));
  }

  /// Left scalar multiplication a * f.
  TwistedPoly scaled(const Value& a) const {
    std::vector<Value> out;
    for (const auto& c : coeffs_) out.push_back(ring_->mul(a, c));
    return TwistedPoly(ring_, std::move(out));
  }

  bool operator==(const TwistedPoly& g) const { return coeffs_ == g.coeffs_; }

 private:
  TwistedPoly combine(const TwistedPoly& g, bool subtract) const {
    const auto& R = *ring_;
    std::vector<Value> out(std::max(coeffs_.size(), g.coeffs_.size()), R.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
      Value a = i < coeffs_.size() ? coeffs_[i] : R.zero();
      Value b = i < g.coeffs_.size() ? g.coeffs_[i] : R.zero();
      out[i] = subtract ? R.sub(a, b) : R.add(a, b);
    }
    return TwistedPoly(ring_, std::move(out));
  }

  void trim() {
    while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::shared_ptr<const Ring> ring_;
  std::vector<Value> coeffs_;
};

}  // namespace slopekit::arith
