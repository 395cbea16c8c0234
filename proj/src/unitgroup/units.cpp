#include "slopekit/unitgroup/units.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "slopekit/error.hpp"

namespace slopekit::unitgroup {

namespace {

using Elem = FiniteField::Elem;

/// 1 + pi^i * x.
RamifiedElem one_plus(const RamifiedOrder& O, int i, const RamifiedElem& x) {
  return O.add(O.one(), O.mul(O.uniformizer_power(i), x));
}

RamifiedElem random_element(const RamifiedOrder& O, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> digit(0, O.field()->order() - 1);
  std::vector<Elem> dg(static_cast<std::size_t>(O.precision()));
  for (auto& v : dg) v = digit(rng);
  return O.from_digits(dg);
}

}  // namespace

UnitQuotient::UnitQuotient(arith::FieldPtr field, Rational lambda, int n) : n_(n) {
  require(n >= 1, ErrorKind::InvalidArgument, "quotient depth must be at least 1");
  order_ = RamifiedOrder::division_order(std::move(field), lambda, n);
}

std::uint64_t UnitQuotient::size() const {
  return (q() - 1) * ipow(q(), static_cast<unsigned>(n_ - 1));
}

std::uint64_t UnitQuotient::count_units(std::uint64_t guard) const {
  const auto total = ipow(q(), static_cast<unsigned>(n_));
  require(total <= guard, ErrorKind::SizeGuardExceeded, "quotient too large to enumerate");
  const auto& O = *order_;
  std::vector<Elem> dg(static_cast<std::size_t>(n_), 0);
  std::uint64_t units = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto c = code;
    for (auto& v : dg) {
      v = static_cast<Elem>(c % q());
      c /= q();
    }
    const auto x = O.from_digits(dg);
    if (!O.is_unit(x)) continue;
    require(O.mul(x, O.inv(x)) == O.one() && O.mul(O.inv(x), x) == O.one(),
            ErrorKind::NotInvertible, "unit without a two-sided inverse");
    ++units;
  }
  return units;
}

Elem graded_class(const RamifiedOrder& O, const RamifiedElem& u, int i) {
  require(i >= 0 && i < O.precision(), ErrorKind::InvalidArgument, "level outside the precision");
  const auto dg = O.digits(u);
  if (i == 0) {
    require(dg[0] != 0, ErrorKind::Precondition, "element is not a unit");
    return dg[0];
  }
  require(dg[0] == 1, ErrorKind::Precondition, "element is not in G_" + std::to_string(i));
  for (int k = 1; k < i; ++k)
    require(dg[static_cast<std::size_t>(k)] == 0, ErrorKind::Precondition,
            "element is not in G_" + std::to_string(i));
  return dg[static_cast<std::size_t>(i)];
}

CommutatorCheck commutator_class(const RamifiedOrder& O, Elem x, Elem y, int n) {
  require(n >= 1, ErrorKind::InvalidArgument, "commutator level must be at least 1");
  require(O.precision() >= n + 2, ErrorKind::PrecisionUnderflow,
          "precision below n + 2 for the commutator");
  const auto& k = *O.field();
  const auto U = O.sub(O.one(), O.mul(O.uniformizer_power(1), O.teichmuller(x)));
  const auto V = O.sub(O.one(), O.mul(O.uniformizer_power(n), O.teichmuller(y)));
  const auto C = O.mul(O.mul(U, V), O.mul(O.inv(U), O.inv(V)));

  const int r = O.twist();
  CommutatorCheck out{x, y, n, 0, 0, false};
  out.expected = k.sub(k.mul(k.frobenius(x, r * n), y), k.mul(k.frobenius(y, r), x));
  try {
    out.computed = graded_class(O, C, n + 1);
    out.ok = out.computed == out.expected;
  } catch (const Error&) {
    out.ok = false;
  }
  return out;
}

Elem pth_power_class(const RamifiedOrder& O, Elem alpha, const RamifiedElem& beta, int n) {
  const int s = O.ramification();
  require(n >= 1, ErrorKind::InvalidArgument, "level n must be at least 1");
  require(O.precision() >= (n + 1) * s + 2, ErrorKind::PrecisionUnderflow,
          "precision below (n+1)s + 2 for the p-th power check");
  const auto x = O.add(O.teichmuller(alpha), O.mul(O.uniformizer_power(1), beta));
  const auto u = one_plus(O, n * s, x);
  const auto up = O.pow(u, O.field()->characteristic());
  return graded_class(O, up, (n + 1) * s);
}

bool pth_power_check(const RamifiedOrder& O, Elem alpha, const RamifiedElem& beta, int n) {
  try {
    return pth_power_class(O, alpha, beta, n) == alpha;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Precondition) return false;
    throw;
  }
}

GenerationReport generation_check(arith::FieldPtr field, Rational lambda, int n,
                                  std::vector<int> covered, std::uint64_t seed,
                                  std::uint64_t guard) {
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  UnitQuotient Gq(field, lambda, n);
  GenerationReport rep{Gq.q(), lambda, n, covered, false, Gq.size(), 0};
  require(rep.order <= guard, ErrorKind::SizeGuardExceeded,
          "|G/G_n| = " + std::to_string(rep.order) + " exceeds the guard");

  const auto& O = Gq.order();
  const auto& k = *O.field();
  std::mt19937_64 rng(seed);
  std::vector<RamifiedElem> gens;
  for (int i : covered) {
    require(i >= 0, ErrorKind::InvalidArgument, "negative graded piece");
    if (i >= n) continue;
    if (i == 0) {
      const auto tail = random_element(O, rng);
      gens.push_back(O.mul(O.teichmuller(k.generator()), one_plus(O, 1, tail)));
      continue;
    }
    // Lifts of an F_p-basis of F_q.
    Elem b = 1;
    for (int t = 0; t < k.degree(); ++t, b *= k.characteristic()) {
      const auto tail = random_element(O, rng);
      gens.push_back(one_plus(O, i, O.add(O.teichmuller(b), O.mul(O.uniformizer_power(1), tail))));
    }
  }

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(rep.order) + 1);
  std::vector<RamifiedElem> frontier{O.one()};
  seen.insert(Gq.key(O.one()));
  while (!frontier.empty()) {
    std::vector<RamifiedElem> next;
    for (const auto& u : frontier)
      for (const auto& g : gens) {
        auto v = O.mul(u, g);
        if (seen.insert(Gq.key(v)).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  rep.reached = seen.size();
  rep.generates = rep.reached == rep.order;
  return rep;
}

}  // namespace slopekit::unitgroup
