#include "slopekit/arith/field.hpp"

#include <sstream>

#include "slopekit/error.hpp"
#include "slopekit/rational.hpp"

namespace slopekit::arith {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 24;

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), s_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  q_ = static_cast<std::uint32_t>(ipow(p_, static_cast<unsigned>(s_)));
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  if (q_ == 2) {
    generator_ = 1;
    exp_[0] = 1;
    return;
  }
  const auto factors = prime_factors(q_ - 1);
  for (Elem g = 2; g < q_; ++g) {
    bool primitive = true;
    for (auto l : factors) {
      Elem acc = 1, base = g;
      std::uint64_t e = (q_ - 1) / l;
      while (e) {
        if (e & 1) acc = slow_mul(acc, base);
        base = slow_mul(base, base);
        e >>= 1;
      }
      if (acc == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
  Elem x = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, generator_);
  }
}

std::shared_ptr<const FiniteField> FiniteField::with_modulus(
    std::uint32_t p, std::vector<std::uint32_t> modulus) {
  require(is_prime(p), ErrorKind::InvalidArgument,
          "field characteristic " + std::to_string(p) + " is not prime");
  require(modulus.size() >= 2 && modulus.back() == 1, ErrorKind::InvalidArgument,
          "field modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    require(c < p, ErrorKind::InvalidArgument, "modulus coefficient out of range");
  }
  const int s = static_cast<int>(modulus.size()) - 1;
  require(ipow(p, static_cast<unsigned>(s)) <= kMaxOrder, ErrorKind::InvalidArgument,
          "field order exceeds 2^24");
  if (s > 1) {
    auto prime = std::shared_ptr<const FiniteField>(new FiniteField(p, {0, 1}));
    require(poly::is_irreducible(*prime, modulus), ErrorKind::InvalidArgument,
            "field modulus is reducible");
  }
  return std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(modulus)));
}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint32_t p, int s,
                                                     std::uint64_t seed) {
  require(is_prime(p), ErrorKind::InvalidArgument,
          "field characteristic " + std::to_string(p) + " is not prime");
  require(s >= 1, ErrorKind::InvalidArgument, "field degree must be >= 1");
  const auto q = ipow(p, static_cast<unsigned>(s));
  require(q <= kMaxOrder, ErrorKind::InvalidArgument, "field order exceeds 2^24");
  if (s == 1) return std::shared_ptr<const FiniteField>(new FiniteField(p, {0, 1}));

  auto prime = std::shared_ptr<const FiniteField>(new FiniteField(p, {0, 1}));
  for (std::uint64_t i = 0; i < q; ++i) {
    std::uint64_t code = (seed + i) % q;
    std::vector<std::uint32_t> f(static_cast<std::size_t>(s) + 1);
    for (int k = 0; k < s; ++k) {
      f[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(code % p);
      code /= p;
    }
    f.back() = 1;
    if (f[0] == 0) continue;
    if (poly::is_irreducible(*prime, f)) {
      return std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(f)));
    }
  }
  raise(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const noexcept {
  auto m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

FiniteField::Elem FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  require(coeffs.size() <= static_cast<std::size_t>(s_), ErrorKind::InvalidArgument,
          "too many coefficients for field element");
  Elem out = 0, scale = 1;
  for (auto c : coeffs) {
    require(c < p_, ErrorKind::InvalidArgument, "field coefficient out of range");
    out += c * scale;
    scale *= p_;
  }
  return out;
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(s_));
  for (auto& c : out) {
    c = a % p_;
    a /= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  Elem out = 0, scale = 1;
  while (a || b) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const noexcept {
  if (p_ == 2) return a;
  Elem out = 0, scale = 1;
  while (a) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  require(a != 0, ErrorKind::NotInvertible, "inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % (q_ - 1)];
}

FiniteField::Elem FiniteField::frobenius(Elem a, int k) const noexcept {
  k %= s_;
  if (k < 0) k += s_;
  if (a == 0 || k == 0) return a;
  std::uint64_t pk = 1;
  for (int i = 0; i < k; ++i) pk = (pk * p_) % (q_ - 1);
  return exp_[(static_cast<std::uint64_t>(log_[a]) * pk) % (q_ - 1)];
}

std::uint64_t FiniteField::multiplicative_order(Elem a) const {
  require(a != 0, ErrorKind::InvalidArgument, "order of zero");
  std::uint64_t n = q_ - 1;
  std::uint64_t order = n;
  for (auto l : prime_factors(n)) {
    while (order % l == 0 && pow(a, order / l) == 1) order /= l;
  }
  return order;
}

FiniteField::Elem FiniteField::slow_mul(Elem a, Elem b) const {
  const auto ca = coeffs(a), cb = coeffs(b);
  std::vector<std::uint64_t> prod(2 * static_cast<std::size_t>(s_), 0);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_;
  for (int k = 2 * s_ - 2; k >= s_; --k) {
    auto c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (int i = 0; i < s_; ++i) {
      prod[k - s_ + i] = (prod[k - s_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  Elem out = 0, scale = 1;
  for (int i = 0; i < s_; ++i) {
    out += static_cast<Elem>(prod[i]) * scale;
    scale *= p_;
  }
  return out;
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " = F_" << p_ << "[X]/(";
  bool first = true;
  for (int i = s_; i >= 0; --i) {
    auto c = modulus_[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  os << ")";
  return os.str();
}

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const FiniteField& k, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = k.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  }
  trim(out);
  return out;
}

Poly sub(const FiniteField& k, const Poly& f, const Poly& g) {
  Poly out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = k.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  }
  trim(out);
  return out;
}

Poly mul(const FiniteField& k, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(f[i], g[j]));
  }
  trim(out);
  return out;
}

Poly mod(const FiniteField& k, const Poly& f, const Poly& g) {
  require(!g.empty(), ErrorKind::InvalidArgument, "polynomial division by zero");
  Poly r = f;
  trim(r);
  const auto lead_inv = k.inv(g.back());
  const int dg = degree(g);
  while (degree(r) >= dg) {
    const int shift = degree(r) - dg;
    const auto c = k.mul(r.back(), lead_inv);
    for (int i = 0; i <= dg; ++i) {
      auto& slot = r[static_cast<std::size_t>(shift + i)];
      slot = k.sub(slot, k.mul(c, g[static_cast<std::size_t>(i)]));
    }
    trim(r);
  }
  return r;
}

Poly make_monic(const FiniteField& k, const Poly& f) {
  if (f.empty()) return f;
  const auto inv = k.inv(f.back());
  Poly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = k.mul(f[i], inv);
  return out;
}

Poly gcd(const FiniteField& k, Poly f, Poly g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    auto r = mod(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return make_monic(k, f);
}

Poly powmod(const FiniteField& k, const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result{1};
  result = mod(k, result, m);
  Poly b = mod(k, base, m);
  while (e) {
    if (e & 1) result = mod(k, mul(k, result, b), m);
    b = mod(k, mul(k, b, b), m);
    e >>= 1;
  }
  return result;
}

Poly frobenius_mod(const FiniteField& k, const Poly& base, const Poly& m) {
  return powmod(k, base, k.order(), m);
}

FiniteField::Elem eval(const FiniteField& k, const Poly& f, FiniteField::Elem x) {
  FiniteField::Elem acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = k.add(k.mul(acc, x), *it);
  return acc;
}

bool is_irreducible(const FiniteField& k, const Poly& f_in) {
  Poly f = f_in;
  trim(f);
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly xq = mod(k, x, f);
  for (int i = 1; i <= n / 2; ++i) {
    xq = frobenius_mod(k, xq, f);
    auto g = gcd(k, f, sub(k, xq, x));
    if (degree(g) != 0) return false;
  }
  return true;
}

}  // namespace poly

}  // namespace slopekit::arith
