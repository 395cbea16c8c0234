#pragma once

#include <cstdint>
#include <vector>

#include "slopekit/arith/field.hpp"

namespace oracle {

using slopekit::arith::FiniteField;
using Elem = FiniteField::Elem;
using Vec = std::vector<Elem>;

// a*b mod f, f monic, all dense low-to-high.
inline Vec mulmod(const FiniteField& k, const Vec& a, const Vec& b, const Vec& f) {
  const std::size_t n = f.size() - 1;
  Vec prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
  for (std::size_t d = prod.size(); d-- > n;) {
    const Elem c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i)
      prod[d - n + i] = k.sub(prod[d - n + i], k.mul(c, f[i]));
  }
  prod.resize(n, 0);
  return prod;
}

// Number of irreducible factors of a squarefree monic f over k: the nullity
// of Q - I, Q the matrix of g -> g^{|k|} on k[X]/(f).
inline int berlekamp_factor_count(const FiniteField& k, const Vec& f) {
  const std::size_t n = f.size() - 1;
  Vec x(n, 0);
  if (n == 1) return 1;
  x[1] = 1;
  // X^{|k|} mod f by square-and-multiply.
  Vec xq(n, 0);
  xq[0] = 1;
  Vec base = x;
  for (std::uint64_t e = k.order(); e; e >>= 1) {
    if (e & 1) xq = mulmod(k, xq, base, f);
    base = mulmod(k, base, base, f);
  }
  std::vector<Vec> rows(n, Vec(n, 0));
  Vec cur(n, 0);
  cur[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = cur;
    rows[i][i] = k.sub(rows[i][i], 1);
    cur = mulmod(k, cur, xq, f);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem inv = k.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = k.mul(v, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Elem c = rows[r][col];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = k.sub(rows[r][j], k.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return static_cast<int>(n - rank);
}

// Number of d-dimensional subspaces of F_p^s.
inline std::uint64_t gaussian_binomial(std::uint64_t p, int s, int d) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < d; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int j = 0; j < s - i; ++j) a *= p;
    for (int j = 0; j < i + 1; ++j) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace oracle
