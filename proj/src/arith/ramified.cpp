#include "slopekit/arith/ramified.hpp"

#include "slopekit/error.hpp"

namespace slopekit::arith {

std::shared_ptr<const RamifiedOrder> RamifiedOrder::make(FieldPtr field, int e, int r, int N) {
  require(field != nullptr, ErrorKind::InvalidArgument, "null field");
  require(e >= 1, ErrorKind::InvalidArgument, "ramification index must be >= 1");
  require(N >= 1, ErrorKind::InvalidArgument, "precision must be >= 1");
  return std::shared_ptr<const RamifiedOrder>(new RamifiedOrder(std::move(field), e, r, N));
}

std::shared_ptr<const RamifiedOrder> RamifiedOrder::division_order(FieldPtr field,
                                                                   Rational lambda, int N) {
  require(field != nullptr, ErrorKind::InvalidArgument, "null field");
  require(lambda > 0 && lambda < 1, ErrorKind::InvalidArgument,
          "slope must lie strictly between 0 and 1");
  const auto s = static_cast<int>(lambda.denominator());
  require(field->degree() == s, ErrorKind::InvalidArgument,
          "residue degree must equal the slope denominator");
  return make(std::move(field), s, static_cast<int>(lambda.numerator()), N);
}

RamifiedOrder::RamifiedOrder(FieldPtr field, int e, int r, int N) : e_(e), r_(r), N_(N) {
  witt_ = WittRing::make(std::move(field), std::max(1, (N + e - 1) / e));
}

RamifiedElem RamifiedOrder::zero() const {
  RamifiedElem out;
  out.comp.assign(static_cast<std::size_t>(e_), witt_->zero());
  return out;
}

RamifiedElem RamifiedOrder::from_witt(const WittVec& a) const {
  RamifiedElem out = zero();
  out.comp[0] = a;
  // a may come from a longer Witt ring over the same residue field.
  for (auto& v : out.comp[0].c) v %= witt_->modulus_int();
  canonicalize(out);
  return out;
}

RamifiedElem RamifiedOrder::uniformizer_power(int k) const {
  require(k >= 0, ErrorKind::InvalidArgument, "negative uniformizer power");
  RamifiedElem out = zero();
  if (k >= N_) return out;
  out.comp[static_cast<std::size_t>(k % e_)] = witt_->shift_up(witt_->one(), k / e_);
  canonicalize(out);
  return out;
}

void RamifiedOrder::canonicalize(RamifiedElem& a) const {
  for (int j = 0; j < e_; ++j) {
    auto& c = a.comp[static_cast<std::size_t>(j)];
    c = witt_->truncate(c, std::max(0, comp_precision(j)));
  }
}

bool RamifiedOrder::is_zero(const RamifiedElem& a) const noexcept {
  for (const auto& c : a.comp)
    if (!witt_->is_zero(c)) return false;
  return true;
}

RamifiedElem RamifiedOrder::add(const RamifiedElem& a, const RamifiedElem& b) const {
  RamifiedElem out = zero();
  for (int j = 0; j < e_; ++j) out.comp[j] = witt_->add(a.comp[j], b.comp[j]);
  canonicalize(out);
  return out;
}

RamifiedElem RamifiedOrder::sub(const RamifiedElem& a, const RamifiedElem& b) const {
  RamifiedElem out = zero();
  for (int j = 0; j < e_; ++j) out.comp[j] = witt_->sub(a.comp[j], b.comp[j]);
  canonicalize(out);
  return out;
}

RamifiedElem RamifiedOrder::neg(const RamifiedElem& a) const {
  RamifiedElem out = zero();
  for (int j = 0; j < e_; ++j) out.comp[j] = witt_->neg(a.comp[j]);
  canonicalize(out);
  return out;
}

RamifiedElem RamifiedOrder::mul(const RamifiedElem& a, const RamifiedElem& b) const {
  RamifiedElem out = zero();
  for (int jb = 0; jb < e_; ++jb) {
    const auto& bj = b.comp[jb];
    if (witt_->is_zero(bj)) continue;
    for (int ja = 0; ja < e_; ++ja) {
      const auto& aj = a.comp[ja];
      if (witt_->is_zero(aj)) continue;
      if (ja + jb >= N_) continue;
      WittVec term = witt_->mul(r_ == 0 ? aj : witt_->sigma(aj, r_ * jb), bj);
      int k = ja + jb;
      if (k >= e_) {
        term = witt_->shift_up(term, 1);
        k -= e_;
      }
      out.comp[k] = witt_->add(out.comp[k], term);
    }
  }
  canonicalize(out);
  return out;
}

RamifiedElem RamifiedOrder::pow(const RamifiedElem& a, std::uint64_t e) const {
  RamifiedElem result = one();
  RamifiedElem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

RamifiedElem RamifiedOrder::inv(const RamifiedElem& a) const {
  const auto r = witt_->residue_of(a.comp[0]);
  require(r != 0, ErrorKind::NotInvertible,
          "element of positive valuation is not invertible in the order");
  RamifiedElem y = teichmuller(field()->inv(r));
  const RamifiedElem two = from_int(2);
  for (int prec = 1; prec < N_; prec *= 2) y = mul(y, sub(two, mul(a, y)));
  return y;
}

RamifiedElem RamifiedOrder::sigma(const RamifiedElem& a, int k) const {
  RamifiedElem out = a;
  for (auto& c : out.comp) c = witt_->sigma(c, k);
  return out;
}

int RamifiedOrder::valuation_pi(const RamifiedElem& a) const noexcept {
  int best = N_;
  for (int j = 0; j < e_; ++j) {
    const auto& c = a.comp[j];
    if (witt_->is_zero(c)) continue;
    best = std::min(best, e_ * witt_->valuation(c) + j);
  }
  return best;
}

std::vector<FiniteField::Elem> RamifiedOrder::digits(const RamifiedElem& a) const {
  std::vector<FiniteField::Elem> out(static_cast<std::size_t>(N_), 0);
  for (int j = 0; j < e_ && j < N_; ++j) {
    const auto d = witt_->digits(a.comp[j]);
    for (int i = 0; j + e_ * i < N_; ++i) out[static_cast<std::size_t>(j + e_ * i)] = d[i];
  }
  return out;
}

RamifiedElem RamifiedOrder::from_digits(const std::vector<FiniteField::Elem>& digits) const {
  RamifiedElem out = zero();
  for (int j = 0; j < e_; ++j) {
    std::vector<FiniteField::Elem> d;
    for (int k = j; k < N_ && k < static_cast<int>(digits.size()); k += e_) d.push_back(digits[k]);
    out.comp[j] = witt_->from_digits(d);
  }
  canonicalize(out);
  return out;
}

std::uint64_t RamifiedOrder::pack(const RamifiedElem& a) const {
  unsigned __int128 key = 0;
  for (int j = 0; j < e_; ++j) {
    const int cj = std::max(0, comp_precision(j));
    if (!cj) continue;
    const auto radix = ipow(witt_->p(), static_cast<unsigned>(cj));
    for (auto v : a.comp[j].c) key = key * radix + v;
  }
  require(key >> 64 == 0, ErrorKind::SizeGuardExceeded, "packed element exceeds 64 bits");
  return static_cast<std::uint64_t>(key);
}

RamifiedElem RamifiedOrder::truncate(const RamifiedElem& a, int n) const {
  RamifiedElem out = a;
  for (int j = 0; j < e_; ++j) {
    const int cj = std::max(0, (n - j + e_ - 1) / e_);
    out.comp[j] = witt_->truncate(out.comp[j], std::min(cj, comp_precision(j)));
  }
  return out;
}

}  // namespace slopekit::arith
