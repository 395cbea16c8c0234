#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/arith/witt.hpp"

namespace slopekit::display {

using arith::FiniteField;
using arith::WittPtr;
using arith::WittRing;
using arith::WittVec;

/// coeff * <symbol>^{sigma^twist}. Symbols live in a power series ring in
/// characteristic p, so sigma acts on them as u -> u^p and the twist is not
/// reduced modulo the residue degree.
struct FormalTerm {
  WittVec coeff;
  std::string symbol;
  int twist = 0;
  bool operator==(const FormalTerm&) const = default;
};

/// constant + sum of FormalTerm, terms sorted by (symbol, twist) with
/// nonzero coefficients.
struct Formal {
  WittVec constant;
  std::vector<FormalTerm> terms;
  bool operator==(const Formal&) const = default;
  bool is_constant() const noexcept { return terms.empty(); }
};

/// Arithmetic on Formal values over a fixed Witt ring. Products are defined
/// only when one factor is constant, which is all displays need.
class FormalOps {
 public:
  explicit FormalOps(WittPtr ring) : ring_(std::move(ring)) {}

  const WittRing& ring() const noexcept { return *ring_; }
  const WittPtr& ring_ptr() const noexcept { return ring_; }

  Formal zero() const { return constant(ring_->zero()); }
  Formal one() const { return constant(ring_->one()); }
  Formal constant(WittVec c) const { return Formal{std::move(c), {}}; }
  Formal from_int(std::int64_t v) const { return constant(ring_->from_int(v)); }
  /// <symbol>^{sigma^twist} with coefficient 1.
  Formal symbol(const std::string& name, int twist = 0) const;

  bool is_zero(const Formal& a) const;
  Formal add(const Formal& a, const Formal& b) const;
  Formal neg(const Formal& a) const;
  Formal sub(const Formal& a, const Formal& b) const { return add(a, neg(b)); }
  Formal mul(const Formal& a, const Formal& b) const;
  Formal scale(const Formal& a, const WittVec& c) const;
  Formal shift_up(const Formal& a, int k) const;
  Formal sigma(const Formal& a, int k) const;

  /// Valuation treating every symbol as a generic unit; nullopt for zero.
  std::optional<int> generic_valuation(const Formal& a) const;
  /// Replaces <u>^{sigma^k} by the Teichmuller lift of values(u)^{p^k}.
  /// Missing symbols specialize to zero.
  WittVec specialize(const Formal& a, const std::map<std::string, FiniteField::Elem>& values) const;

  /// Readable form, e.g. "3 + 9*<u[2,1]>^s2".
  std::string to_string(const Formal& a) const;

 private:
  void normalize(Formal& a) const;
  WittPtr ring_;
};

/// Integer representative of a Witt vector when it lies in Z/p^m, else the
/// coefficient list; used for printing.
std::string witt_to_string(const WittRing& ring, const WittVec& a);

}  // namespace slopekit::display
