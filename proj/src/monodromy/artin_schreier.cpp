#include "slopekit/monodromy/artin_schreier.hpp"

#include <algorithm>
#include <set>

#include "slopekit/error.hpp"
#include "slopekit/rational.hpp"

namespace slopekit::monodromy {

namespace {

using Elem = FiniteField::Elem;
namespace poly = arith::poly;

/// t with q = p^t and t | [K : F_p]; throws otherwise.
int subfield_degree(const FiniteField& K, std::uint64_t q) {
  const std::uint64_t p = K.characteristic();
  int t = 0;
  std::uint64_t v = 1;
  while (v < q) {
    v *= p;
    ++t;
  }
  require(v == q && t >= 1 && K.degree() % t == 0, ErrorKind::InvalidArgument,
          "field " + K.describe() + " does not contain F_" + std::to_string(q));
  return t;
}

}  // namespace

std::uint64_t AdditivePolynomial::degree() const {
  return ipow(field->characteristic(), static_cast<unsigned>(order()));
}

Elem AdditivePolynomial::eval(Elem x) const {
  Elem acc = 0;
  for (int j = 0; j <= order(); ++j) {
    if (c[static_cast<std::size_t>(j)] == 0) continue;
    acc = field->add(acc, field->mul(c[static_cast<std::size_t>(j)], field->frobenius(x, j)));
  }
  return acc;
}

poly::Poly AdditivePolynomial::dense() const {
  poly::Poly f(degree() + 1, 0);
  for (int j = 0; j <= order(); ++j)
    f[ipow(field->characteristic(), static_cast<unsigned>(j))] = c[static_cast<std::size_t>(j)];
  poly::trim(f);
  return f;
}

std::vector<Elem> subfield_elements(const FiniteField& K, std::uint64_t q) {
  const int t = subfield_degree(K, q);
  std::vector<Elem> out;
  for (Elem a = 0; a < K.order(); ++a)
    if (K.in_subfield(a, t)) out.push_back(a);
  return out;
}

AdditivePolynomial subgroup_polynomial(const FieldPtr& K, std::vector<Elem> G) {
  std::sort(G.begin(), G.end());
  G.erase(std::unique(G.begin(), G.end()), G.end());
  require(!G.empty() && G.front() == 0, ErrorKind::NotASubgroup, "set does not contain 0");
  for (auto a : G)
    for (auto b : G)
      require(std::binary_search(G.begin(), G.end(), K->add(a, b)), ErrorKind::NotASubgroup,
              "set is not closed under addition");

  poly::Poly f{1};
  for (auto a : G) f = poly::mul(*K, f, poly::Poly{K->neg(a), 1});

  const std::uint64_t p = K->characteristic();
  AdditivePolynomial out{K, {}};
  std::uint64_t pj = 1;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (i == pj) {
      out.c.push_back(f[i]);
      pj *= p;
    } else {
      require(f[i] == 0, ErrorKind::InvalidArgument, "subgroup polynomial is not additive");
    }
  }
  return out;
}

std::vector<std::vector<Elem>> enumerate_subgroups(const FieldPtr& K, std::uint64_t q) {
  const auto E = subfield_elements(*K, q);
  const Elem p = K->characteristic();
  std::set<std::vector<Elem>> seen{{0}};
  std::vector<std::vector<Elem>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& S : frontier) {
      for (auto e : E) {
        if (std::binary_search(S.begin(), S.end(), e)) continue;
        std::vector<Elem> span;
        Elem ce = 0;
        for (Elem c = 0; c < p; ++c) {
          for (auto a : S) span.push_back(K->add(a, ce));
          ce = K->add(ce, e);
        }
        std::sort(span.begin(), span.end());
        if (seen.insert(span).second) next.push_back(std::move(span));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Elem>> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

AsCriterion::AsCriterion(FieldPtr K, std::uint64_t q) : K_(std::move(K)), q_(q) {
  for (auto& G : enumerate_subgroups(K_, q_)) {
    if (G.size() == 1) continue;
    const auto f = subgroup_polynomial(K_, G);
    std::vector<std::uint32_t> pre(K_->order(), K_->order());
    for (Elem a = 0; a < K_->order(); ++a) {
      const auto v = f.eval(a);
      if (pre[v] == K_->order()) pre[v] = a;
    }
    groups_.push_back(std::move(G));
    preimage_.push_back(std::move(pre));
  }
}

AsVerdict AsCriterion::test(Elem A) const {
  require(A < K_->order(), ErrorKind::InvalidArgument, "element outside the field");
  for (std::size_t g = 0; g < groups_.size(); ++g)
    if (preimage_[g][A] != K_->order()) return {true, groups_[g], preimage_[g][A]};
  return {};
}

AsVerdict as_reducible(Elem A, const FieldPtr& K, std::uint64_t q) {
  return AsCriterion(K, q).test(A);
}

bool as_reducible_oracle(Elem A, const FieldPtr& K, std::uint64_t q) {
  subfield_degree(*K, q);
  poly::Poly f(q + 1, 0);
  f[0] = K->neg(A);
  f[1] = K->neg(1);
  f[q] = 1;
  poly::trim(f);

  const std::uint64_t Qk = K->order();
  const std::uint64_t half = q / 2;
  std::uint64_t count = 0, pw = 1;
  for (std::uint64_t d = 1; d <= half && count <= 2'000'000; ++d) {
    pw = pw > 2'000'000 / Qk ? 2'000'001 : pw * Qk;
    count += pw;
  }
  if (count <= 2'000'000) {
    for (std::uint64_t d = 1; d <= half; ++d) {
      poly::Poly g(d + 1, 0);
      g[d] = 1;
      // Odometer over the low coefficients.
      while (true) {
        if (poly::mod(*K, f, g).empty()) return true;
        std::uint64_t i = 0;
        while (i < d && ++g[i] == Qk) g[i++] = 0;
        if (i == d) break;
      }
    }
    return false;
  }
  // X^q - X - A is squarefree (its derivative is -1), so it is reducible iff
  // some gcd(X^{Q^d} - X, f) with d <= q/2 is nontrivial.
  const poly::Poly X{0, 1};
  auto cur = X;
  for (std::uint64_t d = 1; d <= half; ++d) {
    cur = poly::frobenius_mod(*K, cur, f);
    auto g = poly::gcd(*K, poly::sub(*K, cur, X), f);
    if (poly::degree(g) >= 1) return true;
  }
  return false;
}

}  // namespace slopekit::monodromy
