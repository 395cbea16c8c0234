#include "slopekit/monodromy/laurent.hpp"

#include <numeric>
#include <sstream>

#include "slopekit/error.hpp"
#include "slopekit/rational.hpp"

namespace slopekit::monodromy {

namespace {

using Elem = FiniteField::Elem;

bool is_pure_z1(const Monomial& m) {
  for (std::size_t i = 1; i < m.z.size(); ++i)
    if (m.z[i] != 0) return false;
  return true;
}


}  // namespace

void LaurentSlab::add_term(const Monomial& m, Elem c) {
  require(static_cast<int>(m.z.size()) == vars, ErrorKind::InvalidArgument,
          "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (inserted) return;
  it->second = field->add(it->second, c);
  if (it->second == 0) terms.erase(it);
}

std::string LaurentSlab::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < vars; ++i)
      if (m.z[static_cast<std::size_t>(i)] != 0)
        os << "*z" << (i + 1) << "^" << m.z[static_cast<std::size_t>(i)];
    if (m.t != 0) os << "*t^" << m.t;
  }
  return os.str();
}

LaurentSlab add(const LaurentSlab& a, const LaurentSlab& b) {
  auto out = a;
  for (const auto& [m, c] : b.terms) out.add_term(m, c);
  return out;
}

LaurentSlab mul(const LaurentSlab& a, const LaurentSlab& b) {
  require(a.vars == b.vars, ErrorKind::InvalidArgument, "slabs over different variable sets");
  auto out = LaurentSlab::zero(a.field, a.vars);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Monomial m{ma.z, ma.t + mb.t};
      for (std::size_t i = 0; i < m.z.size(); ++i) m.z[i] += mb.z[i];
      out.add_term(m, a.field->mul(ca, cb));
    }
  return out;
}

LaurentSlab pow(const LaurentSlab& a, std::uint64_t e) {
  auto out = LaurentSlab::zero(a.field, a.vars);
  out.add_term(Monomial{std::vector<std::int64_t>(static_cast<std::size_t>(a.vars), 0), 0}, 1);
  auto base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

LaurentSlab apply(const AdditivePolynomial& F, const LaurentSlab& x) {
  auto out = LaurentSlab::zero(x.field, x.vars);
  auto xp = x;
  const auto p = x.field->characteristic();
  for (int j = 0; j <= F.order(); ++j) {
    if (j > 0) xp = pow(xp, p);
    const auto c = F.c[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    for (const auto& [m, v] : xp.terms) out.add_term(m, x.field->mul(c, v));
  }
  return out;
}

LaurentSlab laurent_projector(const LaurentSlab& slab, std::int64_t M, std::int64_t N) {
  auto out = LaurentSlab::zero(slab.field, slab.vars);
  for (const auto& [m, c] : slab.terms) {
    if (!is_pure_z1(m) || m.t == 0) continue;
    if (m.z[0] * N + m.t * M == 0)
      out.add_term(m, c);
  }
  return out;
}

NoSolutionCertificate no_solution_certificate(const AdditivePolynomial& F, const LaurentSlab& A,
                                              const LaurentSlab& B, std::uint64_t guard) {
  require(!F.c.empty() && F.c.back() == 1, ErrorKind::CertificateInapplicable,
          "additive polynomial must be monic");
  require(!A.terms.empty(), ErrorKind::CertificateInapplicable, "A-part is zero");
  require(A.vars == B.vars, ErrorKind::CertificateInapplicable, "A and B use different variables");

  NoSolutionCertificate cert;
  const std::int64_t M = A.terms.begin()->first.z[0];
  std::int64_t lowest = A.terms.begin()->first.t;
  for (const auto& [m, c] : A.terms) {
    require(is_pure_z1(m) && m.z[0] == M, ErrorKind::CertificateInapplicable,
            "A-part is not of the form z1^M * (series in t)");
    lowest = std::min(lowest, m.t);
  }
  require(M >= 1 && lowest < 0, ErrorKind::CertificateInapplicable,
          "A-part needs M >= 1 and a negative leading t-exponent");
  for (const auto& [m, c] : B.terms)
    require(m.z[0] == 0, ErrorKind::CertificateInapplicable, "B-part involves z1");

  cert.M = M;
  cert.N = -lowest;
  Monomial lead{std::vector<std::int64_t>(static_cast<std::size_t>(A.vars), 0), lowest};
  lead.z[0] = M;
  cert.leading = A.terms.at(lead);

  // Projector laws on A + B.
  const auto AB = add(A, B);
  const auto proj = laurent_projector(AB, cert.M, cert.N);
  auto expected = LaurentSlab::zero(A.field, A.vars);
  expected.add_term(lead, cert.leading);
  cert.projection_is_monomial = proj == expected;
  cert.projector_idempotent = laurent_projector(proj, cert.M, cert.N) == proj;
  const auto p = A.field->characteristic();
  cert.projector_commutes_with_p =
      laurent_projector(pow(AB, p), cert.M, cert.N) == pow(proj, p);

  cert.e = std::gcd(cert.M, cert.N);
  cert.m = cert.M / cert.e;
  cert.n = cert.N / cert.e;
  cert.degree = F.degree();
  const auto& k = *F.field;

  require(cert.e <= 1'000'000, ErrorKind::CertificateInapplicable, "exponent gcd too large");
  if (static_cast<std::uint64_t>(cert.e) % cert.degree != 0) {
    cert.degree_forced = true;
    cert.method = "degree";
  } else {
    const auto D = static_cast<std::int64_t>(static_cast<std::uint64_t>(cert.e) / cert.degree);
    cert.search_degree = D;
    // Candidates: a_D != 0, a_0..a_{D-1} free.
    std::uint64_t count = k.order() - 1;
    bool within = count <= guard;
    for (std::int64_t i = 0; i < D && within; ++i) {
      if (count > guard / k.order()) within = false;
      count *= k.order();
    }
    if (within) {
      std::vector<Elem> a(static_cast<std::size_t>(D) + 1, 0);
      a[static_cast<std::size_t>(D)] = 1;
      std::vector<Elem> image(static_cast<std::size_t>(cert.e) + 1);
      bool found = false;
      while (!found) {
        ++cert.candidates;
        std::fill(image.begin(), image.end(), 0);
        std::uint64_t pj = 1;
        for (int j = 0; j <= F.order(); ++j, pj *= p) {
          const auto cj = F.c[static_cast<std::size_t>(j)];
          if (cj == 0) continue;
          for (std::int64_t i = 0; i <= D; ++i) {
            const auto deg = static_cast<std::size_t>(i) * pj;
            image[deg] = k.add(image[deg], k.mul(cj, k.frobenius(a[static_cast<std::size_t>(i)], j)));
          }
        }
        bool match = image[static_cast<std::size_t>(cert.e)] == cert.leading;
        for (std::int64_t i = 0; i < cert.e && match; ++i) match = image[static_cast<std::size_t>(i)] == 0;
        if (match) {
          found = true;
          cert.solution = a;
          break;
        }
        std::size_t i = 0;
        while (i < static_cast<std::size_t>(D) && ++a[i] == k.order()) a[i++] = 0;
        if (i == static_cast<std::size_t>(D)) {
          if (++a[i] == k.order()) break;
        }
      }
      if (!found) cert.method = "search";
    }
    cert.constant_term_argument = F.order() >= 1 && F.c[0] != 0;
    if (!cert.solution && cert.method == "none" && cert.constant_term_argument)
      cert.method = "constant-term";
  }
  cert.certified = cert.method != "none" && cert.projection_is_monomial &&
                   cert.projector_idempotent && cert.projector_commutes_with_p;
  return cert;
}

}  // namespace slopekit::monodromy
