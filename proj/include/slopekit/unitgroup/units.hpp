#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopekit/arith/ramified.hpp"

namespace slopekit::unitgroup {

using arith::FiniteField;
using arith::OrderPtr;
using arith::RamifiedElem;
using arith::RamifiedOrder;

/// G/G_n for G = O_lambda^x, G_i = 1 + pi^i O_lambda.
class UnitQuotient {
 public:
  UnitQuotient(arith::FieldPtr field, Rational lambda, int n);

  const RamifiedOrder& order() const noexcept { return *order_; }
  const OrderPtr& order_ptr() const noexcept { return order_; }
  int depth() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return order_->field()->order(); }
  /// (q - 1) q^{n-1}.
  std::uint64_t size() const;
  std::uint64_t key(const RamifiedElem& u) const { return order_->pack(u); }
  /// Counts units among all residues mod pi^n; throws SizeGuardExceeded
  /// past the guard.
  std::uint64_t count_units(std::uint64_t guard) const;

 private:
  OrderPtr order_;
  int n_;
};

/// Leading digit of u (i = 0) or of u - 1 (i >= 1). Throws Precondition
/// when u is not in G_i.
FiniteField::Elem graded_class(const RamifiedOrder& O, const RamifiedElem& u, int i);

struct CommutatorCheck {
  FiniteField::Elem x = 0, y = 0;
  int n = 0;
  FiniteField::Elem expected = 0;
  FiniteField::Elem computed = 0;
  bool ok = false;
};

/// [1 - pi<x>, 1 - pi^n<y>] against 1 + pi^{n+1}(x^{tau^n} y - y^tau x).
/// Needs precision at least n + 2.
CommutatorCheck commutator_class(const RamifiedOrder& O, FiniteField::Elem x, FiniteField::Elem y,
                                 int n);

/// True iff (1 + pi^{ns}<alpha> + pi^{ns+1} beta)^p = 1 + pi^{(n+1)s}<alpha>
/// modulo pi^{(n+1)s+1}. Needs n >= 1 and precision at least (n+1)s + 2.
bool pth_power_check(const RamifiedOrder& O, FiniteField::Elem alpha, const RamifiedElem& beta,
                     int n);

/// Class at level (n+1)s of the p-th power above.
FiniteField::Elem pth_power_class(const RamifiedOrder& O, FiniteField::Elem alpha,
                                  const RamifiedElem& beta, int n);

struct GenerationReport {
  std::uint64_t q = 0;
  Rational lambda;
  int n = 0;
  std::vector<int> covered;
  bool generates = false;
  /// |G/G_n|.
  std::uint64_t order = 0;
  /// Order of the subgroup reached by the closure.
  std::uint64_t reached = 0;
  bool operator==(const GenerationReport&) const = default;
};

/// Closure in G/G_n of lifts realizing the full graded image at each covered
/// piece below n. Lifts carry pseudorandom tails drawn from the seed.
GenerationReport generation_check(arith::FieldPtr field, Rational lambda, int n,
                                  std::vector<int> covered, std::uint64_t seed = 0,
                                  std::uint64_t guard = 10'000'000);

}  // namespace slopekit::unitgroup
