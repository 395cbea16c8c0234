#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "slopekit/arith/twisted_poly.hpp"
#include "slopekit/display/formal.hpp"
#include "slopekit/polygon/newton_polygon.hpp"

namespace slopekit::display {

/// Dense h x h matrix of formal entries, 1-based accessors.
class FormalMatrix {
 public:
  FormalMatrix() = default;
  FormalMatrix(int rows, int cols, Formal fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Formal& at(int i, int j) { return data_[index(i, j)]; }
  const Formal& at(int i, int j) const { return data_[index(i, j)]; }
  bool operator==(const FormalMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;
  int rows_ = 0, cols_ = 0;
  std::vector<Formal> data_;
};

FormalMatrix multiply(const FormalOps& ops, const FormalMatrix& a, const FormalMatrix& b);
FormalMatrix add(const FormalOps& ops, const FormalMatrix& a, const FormalMatrix& b);
FormalMatrix submatrix(const FormalMatrix& m, int r0, int c0, int rows, int cols);

/// Display (A B; C D): F e_i = sum_j a_{ji} e_j for i <= d and
/// e_i = V(sum_j a_{ji} e_j) for i > d.
class Display {
 public:
  Display(WittPtr ring, int d, int c);

  const WittPtr& ring_ptr() const noexcept { return ops_.ring_ptr(); }
  const WittRing& ring() const noexcept { return ops_.ring(); }
  const FormalOps& ops() const noexcept { return ops_; }
  int d() const noexcept { return d_; }
  int c() const noexcept { return c_; }
  int h() const noexcept { return d_ + c_; }

  Formal& at(int i, int j) { return a_.at(i, j); }
  const Formal& at(int i, int j) const { return a_.at(i, j); }
  const FormalMatrix& matrix() const noexcept { return a_; }
  FormalMatrix& matrix() noexcept { return a_; }

  FormalMatrix block_A() const { return submatrix(a_, 1, 1, d_, d_); }
  FormalMatrix block_B() const { return submatrix(a_, 1, d_ + 1, d_, c_); }
  FormalMatrix block_C() const { return submatrix(a_, d_ + 1, 1, c_, d_); }
  FormalMatrix block_D() const { return submatrix(a_, d_ + 1, d_ + 1, c_, c_); }

  bool is_symbolic() const;
  bool operator==(const Display& o) const { return d_ == o.d_ && c_ == o.c_ && a_ == o.a_; }

 private:
  FormalOps ops_;
  int d_, c_;
  FormalMatrix a_;
};

/// Positions S = {1 <= i <= d, d <= j <= h}.
std::vector<std::pair<int, int>> free_positions(int d, int c);
/// (j + 1 - i, j - d).
inline polygon::Point coordinate_of(int i, int j, int d) { return {j + 1 - i, j - d}; }
/// Inverse of coordinate_of on S.
std::pair<int, int> position_of(polygon::Point xy, int d);

/// Normal-form display with all free entries zero except a_{1,h} = 1.
Display normal_form_skeleton(WittPtr ring, int d, int c);
/// The slope r/s object: d = s - r, c = r, characteristic polynomial F^s - p^r.
Display simple_display(WittPtr ring, Rational slope);
/// d = c = g, characteristic polynomial F^{2g} - p^g.
Display supersingular_display(WittPtr ring, int g);
/// Normal form whose characteristic polynomial is prod (F^{s_i} - p^{r_i}).
Display split_display(WittPtr ring, const std::vector<Rational>& slopes);
/// Parses "H1/3", "ss6", "H1/3+H2/3".
Display display_from_name(WittPtr ring, const std::string& name);
/// Witt length that keeps all coefficients of a named base exact.
int default_witt_length(const std::string& name);

/// True iff a_{i+1,i} = 1, every entry outside S vanishes and a_{1,h} is a unit.
bool normal_form_check(const Display& D);

/// chi(F) = F^h - sum_{x=1}^h A_x F^{h-x}.
struct CharPoly {
  FormalOps ops;
  int h = 0;
  /// A[x-1] = A_x.
  std::vector<Formal> A;

  std::optional<int> valuation(int x) const { return ops.generic_valuation(A[x - 1]); }
  /// Newton polygon with every symbol treated as a unit.
  polygon::NewtonPolygon newton_polygon() const;
  /// Requires a symbol-free polynomial.
  arith::TwistedPoly<WittRing> to_twisted() const;
  std::string to_string() const;
};

CharPoly charpoly(const Display& D);

/// (A + TC, B + TD; C, D) for a d x c matrix T.
Display deform_with(const Display& D, const FormalMatrix& T);
/// T_{ij} = <t[i,j]> for (i,j) in S^univ (column index j - d in T).
FormalMatrix universal_parameters(const FormalOps& ops, int d, int c);
Display universal_deformation(const Display& D);
/// Name of the coordinate u_{x,y} attached to t_{ij}: (x,y) = (j - i, j - 1 - d).
std::string u_symbol(polygon::Point xy);
std::string t_symbol(int i, int j);

/// Filtered lifting: base display block upper triangular for the given
/// (d_i, c_i) blocks; T is block diagonal with the given blocks.
Display filtered_lift(const Display& base, const std::vector<std::pair<int, int>>& dims,
                      const std::vector<FormalMatrix>& T_blocks);
/// Same, starting from the direct sum of the block displays.
Display filtered_lift(const std::vector<Display>& blocks, const std::vector<FormalMatrix>& T_blocks);
Display direct_sum(const std::vector<Display>& blocks);
/// Diagonal block k of a display with the given (d_i, c_i) blocks.
Display diagonal_block(const Display& D, const std::vector<std::pair<int, int>>& dims, int k);
bool is_block_upper_triangular(const Display& D, const std::vector<std::pair<int, int>>& dims);

}  // namespace slopekit::display
