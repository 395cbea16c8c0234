#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slopekit/arith/field.hpp"

namespace slopekit::monodromy {

using arith::FieldPtr;
using arith::FiniteField;

/// F(X) = sum_j c[j] X^{p^j} over a finite field.
struct AdditivePolynomial {
  FieldPtr field;
  std::vector<FiniteField::Elem> c;

  /// n with deg F = p^n.
  int order() const noexcept { return static_cast<int>(c.size()) - 1; }
  std::uint64_t degree() const;
  FiniteField::Elem eval(FiniteField::Elem x) const;
  /// Dense coefficients, index i for X^i.
  arith::poly::Poly dense() const;
  bool operator==(const AdditivePolynomial& o) const { return c == o.c; }
};

/// Elements of K fixed by x -> x^q.
std::vector<FiniteField::Elem> subfield_elements(const FiniteField& K, std::uint64_t q);

/// prod_{a in G} (X - a). G must be an additive subgroup (throws NotASubgroup).
AdditivePolynomial subgroup_polynomial(const FieldPtr& K, std::vector<FiniteField::Elem> G);

/// All F_p-subspaces of F_q inside K, each sorted, listed by size then
/// lexicographically.
std::vector<std::vector<FiniteField::Elem>> enumerate_subgroups(const FieldPtr& K, std::uint64_t q);

struct AsVerdict {
  bool reducible = false;
  std::vector<FiniteField::Elem> subgroup;
  std::optional<FiniteField::Elem> witness;
  bool operator==(const AsVerdict&) const = default;
};

/// Criterion for X^q - X - A over K: A = f_G(a) for a nontrivial subgroup
/// G of F_q and some a in K.
class AsCriterion {
 public:
  AsCriterion(FieldPtr K, std::uint64_t q);

  AsVerdict test(FiniteField::Elem A) const;
  const std::vector<std::vector<FiniteField::Elem>>& subgroups() const noexcept { return groups_; }

 private:
  FieldPtr K_;
  std::uint64_t q_;
  std::vector<std::vector<FiniteField::Elem>> groups_;
  // preimage_[g][A] = some a with f_G(a) = A, or K.order() when none.
  std::vector<std::vector<std::uint32_t>> preimage_;
};

AsVerdict as_reducible(FiniteField::Elem A, const FieldPtr& K, std::uint64_t q);

/// Factors X^q - X - A over K directly: trial division by every monic
/// polynomial of degree at most q/2 when that is small, otherwise a
/// distinct-degree test.
bool as_reducible_oracle(FiniteField::Elem A, const FieldPtr& K, std::uint64_t q);

}  // namespace slopekit::monodromy
