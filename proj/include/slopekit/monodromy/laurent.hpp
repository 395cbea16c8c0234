#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/monodromy/artin_schreier.hpp"

namespace slopekit::monodromy {

/// z_1^{z[0]} ... z_e^{z[e-1]} t^t.
struct Monomial {
  std::vector<std::int64_t> z;
  std::int64_t t = 0;
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Finitely supported element of k((z_1, ..., z_e))((t)), k a finite field.
struct LaurentSlab {
  FieldPtr field;
  int vars = 1;
  /// Nonzero coefficients only.
  std::map<Monomial, FiniteField::Elem> terms;

  static LaurentSlab zero(FieldPtr field, int vars) { return {std::move(field), vars, {}}; }
  void add_term(const Monomial& m, FiniteField::Elem c);
  bool operator==(const LaurentSlab& o) const { return vars == o.vars && terms == o.terms; }
  std::string to_string() const;
};

LaurentSlab add(const LaurentSlab& a, const LaurentSlab& b);
LaurentSlab mul(const LaurentSlab& a, const LaurentSlab& b);
LaurentSlab pow(const LaurentSlab& a, std::uint64_t e);
/// sum_j c_j x^{p^j}, each p-th power taken by multiplication.
LaurentSlab apply(const AdditivePolynomial& F, const LaurentSlab& x);

/// Keeps z_1^i t^j with all other z-exponents zero, j != 0 and i*N + j*M = 0.
LaurentSlab laurent_projector(const LaurentSlab& slab, std::int64_t M, std::int64_t N);

struct NoSolutionCertificate {
  std::int64_t M = 0, N = 0;
  /// gcd(M, N); the reduced target is F(X) = d * w^e with w = z_1^m t^{-n}.
  std::int64_t e = 0, m = 0, n = 0;
  FiniteField::Elem leading = 0;
  std::uint64_t degree = 0;
  bool projection_is_monomial = false;
  bool projector_idempotent = false;
  bool projector_commutes_with_p = false;
  /// p^n does not divide e, so deg F(x) = e is impossible.
  bool degree_forced = false;
  /// Degree e / p^n when p^n | e.
  std::int64_t search_degree = -1;
  std::uint64_t candidates = 0;
  bool constant_term_argument = false;
  /// "degree", "search", "constant-term" or "none".
  std::string method = "none";
  /// Coefficients in w of a solution when one exists.
  std::optional<std::vector<FiniteField::Elem>> solution;
  bool certified = false;
  bool operator==(const NoSolutionCertificate&) const = default;
};

/// Certifies that F(X) = A + B has no solution, A = z_1^M (d t^{-N} + ...),
/// B free of z_1 (other z-variables are allowed; the projector kills them).
/// Throws CertificateInapplicable on a malformed A or B.
NoSolutionCertificate no_solution_certificate(const AdditivePolynomial& F, const LaurentSlab& A,
                                              const LaurentSlab& B,
                                              std::uint64_t guard = 1'000'000);

}  // namespace slopekit::monodromy
