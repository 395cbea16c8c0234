#include "slopekit/display/formal.hpp"

#include <algorithm>
#include <sstream>

#include "slopekit/error.hpp"

namespace slopekit::display {

Formal FormalOps::symbol(const std::string& name, int twist) const {
  require(twist >= 0, ErrorKind::InvalidArgument, "negative Frobenius twist on a symbol");
  return Formal{ring_->zero(), {FormalTerm{ring_->one(), name, twist}}};
}

void FormalOps::normalize(Formal& a) const {
  std::sort(a.terms.begin(), a.terms.end(), [](const FormalTerm& x, const FormalTerm& y) {
    return std::tie(x.symbol, x.twist) < std::tie(y.symbol, y.twist);
  });
  std::vector<FormalTerm> merged;
  for (auto& t : a.terms) {
    if (!merged.empty() && merged.back().symbol == t.symbol && merged.back().twist == t.twist) {
      merged.back().coeff = ring_->add(merged.back().coeff, t.coeff);
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [&](const FormalTerm& t) { return ring_->is_zero(t.coeff); });
  a.terms = std::move(merged);
}

bool FormalOps::is_zero(const Formal& a) const {
  return ring_->is_zero(a.constant) && a.terms.empty();
}

Formal FormalOps::add(const Formal& a, const Formal& b) const {
  Formal out{ring_->add(a.constant, b.constant), a.terms};
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  normalize(out);
  return out;
}

Formal FormalOps::neg(const Formal& a) const {
  Formal out{ring_->neg(a.constant), a.terms};
  for (auto& t : out.terms) t.coeff = ring_->neg(t.coeff);
  return out;
}

Formal FormalOps::scale(const Formal& a, const WittVec& c) const {
  Formal out{ring_->mul(c, a.constant), a.terms};
  for (auto& t : out.terms) t.coeff = ring_->mul(c, t.coeff);
  normalize(out);
  return out;
}

Formal FormalOps::mul(const Formal& a, const Formal& b) const {
  if (a.is_constant()) return scale(b, a.constant);
  if (b.is_constant()) return scale(a, b.constant);
  raise(ErrorKind::InvalidArgument, "product of two symbolic entries is not supported");
}

Formal FormalOps::shift_up(const Formal& a, int k) const {
  Formal out{ring_->shift_up(a.constant, k), a.terms};
  for (auto& t : out.terms) t.coeff = ring_->shift_up(t.coeff, k);
  normalize(out);
  return out;
}

Formal FormalOps::sigma(const Formal& a, int k) const {
  require(k >= 0, ErrorKind::InvalidArgument, "negative Frobenius power on a formal entry");
  Formal out{ring_->sigma(a.constant, k), a.terms};
  for (auto& t : out.terms) {
    t.coeff = ring_->sigma(t.coeff, k);
    t.twist += k;
  }
  return out;
}

std::optional<int> FormalOps::generic_valuation(const Formal& a) const {
  std::optional<int> best;
  auto consider = [&](const WittVec& c) {
    if (ring_->is_zero(c)) return;
    const int v = ring_->valuation(c);
    if (!best || v < *best) best = v;
  };
  consider(a.constant);
  for (const auto& t : a.terms) consider(t.coeff);
  return best;
}

WittVec FormalOps::specialize(const Formal& a,
                              const std::map<std::string, FiniteField::Elem>& values) const {
  WittVec out = a.constant;
  const auto& k = ring_->residue();
  for (const auto& t : a.terms) {
    auto it = values.find(t.symbol);
    if (it == values.end()) continue;
    const auto u = k.frobenius(it->second, t.twist % k.degree());
    out = ring_->add(out, ring_->mul(t.coeff, ring_->teichmuller(u)));
  }
  return out;
}

std::string witt_to_string(const WittRing& ring, const WittVec& a) {
  bool scalar = true;
  for (std::size_t i = 1; i < a.c.size(); ++i) scalar &= a.c[i] == 0;
  std::ostringstream os;
  if (scalar) {
    // Print the symmetric residue so that -1 reads as -1.
    const auto pm = ring.modulus_int();
    if (a.c[0] > pm / 2) {
      os << "-" << (pm - a.c[0]);
    } else {
      os << a.c[0];
    }
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < a.c.size(); ++i) os << (i ? "," : "") << a.c[i];
  os << "]";
  return os.str();
}

std::string FormalOps::to_string(const Formal& a) const {
  std::ostringstream os;
  bool first = true;
  if (!ring_->is_zero(a.constant) || a.terms.empty()) {
    os << witt_to_string(*ring_, a.constant);
    first = false;
  }
  for (const auto& t : a.terms) {
    if (!first) os << " + ";
    first = false;
    if (!(t.coeff == ring_->one())) os << witt_to_string(*ring_, t.coeff) << "*";
    os << "<" << t.symbol << ">";
    if (t.twist) os << "^s" << t.twist;
  }
  return os.str();
}

}  // namespace slopekit::display
