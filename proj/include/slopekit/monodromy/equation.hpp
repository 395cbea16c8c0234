#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "slopekit/arith/ramified.hpp"
#include "slopekit/arith/twisted_poly.hpp"
#include "slopekit/display/deformation.hpp"

namespace slopekit::monodromy {

using arith::FiniteField;
using polygon::Point;

/// Slope data of chi = F^n + A_1 F^{n-1} + ... + A_n.
struct DemazureData {
  Rational lambda;
  /// W(F_q)[p^{1/s}] at the precision the Witt length allows.
  arith::OrderPtr ring;
  /// a[i-1] = A_i p^{-i lambda}, so v^{sigma^n} + sum a_i v^{sigma^{n-i}} = 0.
  std::vector<arith::RamifiedElem> a;
};

DemazureData demazure_slope(const arith::TwistedPoly<arith::WittRing>& chi);
/// Least slope of a characteristic polynomial with symbols read as units.
Rational demazure_slope(const display::CharPoly& chi);

/// p^{j/s} <coefficient>^{sigma^twist} v^{sigma^{h-x}}.
struct MonodromyTerm {
  int x = 0;
  int j = 0;
  int twist = 0;
  /// Empty for a residue constant a_{x,j}.
  std::string symbol;
  Point xy{};
  FiniteField::Elem constant = 0;

  bool is_symbol() const noexcept { return !symbol.empty(); }
  bool operator==(const MonodromyTerm&) const = default;
};

/// v^{sigma^h} - sum_terms p^{j/s} c^{sigma^twist} v^{sigma^{h-x}} = 0.
struct MonodromyEquation {
  std::uint32_t p = 0;
  int h = 0, d = 0;
  Rational lambda;
  /// Sorted by (j, x, symbol).
  std::vector<MonodromyTerm> terms;

  int s() const noexcept { return static_cast<int>(lambda.denominator()); }
  int r() const noexcept { return static_cast<int>(lambda.numerator()); }
  std::vector<MonodromyTerm> layer(int j) const;
  std::map<int, std::vector<MonodromyTerm>> by_x() const;
  /// The equation modulo p^{1/s}: only the j = 0 layer survives.
  MonodromyEquation reduce() const;
  std::string to_string() const;
  bool operator==(const MonodromyEquation&) const = default;
};

/// Residue constants come from the base characteristic polynomial at
/// pi-adic precision 2s.
MonodromyEquation monodromy_equation(const display::DeformationSpec& spec);

/// v0^{p^h} - u^{p^{h-d-r}} v0^{p^{h-s}} = 0 and its Kummer form
/// t^{p^{h-s}(p^s-1)} = u^{p^{h-d-r}}.
struct FirstWittEquation {
  std::uint32_t p = 0;
  int h = 0, d = 0, r = 0, s = 0;
  std::string symbol;
  int lead_power = 0;  // h
  int mid_power = 0;   // h - s
  int u_power = 0;     // h - d - r
  std::uint64_t t_exponent = 0;  // p^h - p^{h-s}
  std::uint64_t u_exponent = 0;  // p^{h-d-r}
  bool kummer_identity = false;
  std::uint64_t separable_degree = 0;
  std::uint64_t group_order = 0;

  std::string to_string() const;
  bool operator==(const FirstWittEquation&) const = default;
};

FirstWittEquation first_witt_equation(const MonodromyEquation& eq);

struct Specialization {
  FiniteField::Elem u = 0;
  std::uint64_t kummer_degree = 0;
  std::uint64_t splitting_degree = 0;
  bool divides = false;
  bool operator==(const Specialization&) const = default;
};

struct FirstWittCheck {
  FirstWittEquation equation;
  std::string field;
  std::vector<Specialization> samples;
  bool attained = false;
  bool passed = false;
  bool operator==(const FirstWittCheck&) const = default;
};

/// Specializes u to units of F_{q^3}: the first sample is a primitive
/// element, the rest are drawn from the seed. Each splitting degree is
/// computed twice, by Kummer theory and by iterating Frobenius modulo
/// X^{q-1} - u'.
FirstWittCheck validate_first_witt(const FirstWittEquation& fw, std::uint64_t seed,
                                   int samples = 16);

/// c * u^{p^{u_power}} * t^{p^{t_power}} * w_{w_index}^{p^{t_power}}.
struct GradedTerm {
  int j = 0, x = 0;
  std::string symbol;
  Point xy{};
  int u_power = 0;
  FiniteField::Elem constant = 0;
  int t_power = 0;
  int w_index = 0;

  bool is_symbol() const noexcept { return !symbol.empty(); }
  bool operator==(const GradedTerm&) const = default;
};

/// w^{p^h} - w^{p^{h-s}} = t^{-p^h} * sum(rhs).
struct GradedEquation {
  std::uint32_t p = 0;
  int level = 0, h = 0, s = 0;
  std::vector<GradedTerm> rhs;

  std::set<int> referenced_w() const;
  std::vector<Point> referenced_points() const;
  std::string to_string() const;
  bool operator==(const GradedEquation&) const = default;
};

std::vector<GradedEquation> graded_equations(const MonodromyEquation& eq);
std::vector<GradedEquation> graded_equations(const display::DeformationSpec& spec);

}  // namespace slopekit::monodromy
