#pragma once

// Length-two Witt vector addition by the classical addition polynomials,
// independent of the lifted-modulus model. Over a perfect field the
// Teichmuller digit x_1 equals the Witt coordinate w_1 raised to 1/p.

#include <cstdint>
#include <utility>

#include <boost/math/special_functions/binomial.hpp>

#include "slopekit/arith/field.hpp"

namespace oracle {

using slopekit::arith::FiniteField;

inline std::uint64_t binom(unsigned n, unsigned k) {
  return static_cast<std::uint64_t>(boost::math::binomial_coefficient<double>(n, k) + 0.5);
}

// Witt coordinates (a0, a1) + (b0, b1).
inline std::pair<FiniteField::Elem, FiniteField::Elem> witt_add2(
    const FiniteField& k, FiniteField::Elem a0, FiniteField::Elem a1, FiniteField::Elem b0,
    FiniteField::Elem b1) {
  const unsigned p = k.characteristic();
  FiniteField::Elem carry = 0;
  for (unsigned i = 1; i < p; ++i) {
    const auto c = k.from_int(static_cast<std::int64_t>(binom(p, i) / p));
    carry = k.add(carry, k.mul(c, k.mul(k.pow(a0, i), k.pow(b0, p - i))));
  }
  return {k.add(a0, b0), k.sub(k.add(a1, b1), carry)};
}

// Teichmuller digits of <a> + <b>.
inline std::pair<FiniteField::Elem, FiniteField::Elem> teich_sum_digits(const FiniteField& k,
                                                                         FiniteField::Elem a,
                                                                         FiniteField::Elem b) {
  auto [w0, w1] = witt_add2(k, a, 0, b, 0);
  // w1^{1/p} = w1^{p^{s-1}}.
  return {w0, k.frobenius(w1, k.degree() - 1)};
}

}  // namespace oracle
