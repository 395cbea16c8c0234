#include "slopekit/display/display.hpp"

#include <sstream>

#include "slopekit/error.hpp"

namespace slopekit::display {

std::size_t FormalMatrix::index(int i, int j) const {
  require(i >= 1 && i <= rows_ && j >= 1 && j <= cols_, ErrorKind::InvalidArgument,
          "matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
}

FormalMatrix multiply(const FormalOps& ops, const FormalMatrix& a, const FormalMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::InvalidArgument, "matrix size mismatch");
  FormalMatrix out(a.rows(), b.cols(), ops.zero());
  for (int i = 1; i <= a.rows(); ++i)
    for (int k = 1; k <= a.cols(); ++k) {
      if (ops.is_zero(a.at(i, k))) continue;
      for (int j = 1; j <= b.cols(); ++j) {
        if (ops.is_zero(b.at(k, j))) continue;
        out.at(i, j) = ops.add(out.at(i, j), ops.mul(a.at(i, k), b.at(k, j)));
      }
    }
  return out;
}

FormalMatrix add(const FormalOps& ops, const FormalMatrix& a, const FormalMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::InvalidArgument,
          "matrix size mismatch");
  FormalMatrix out = a;
  for (int i = 1; i <= a.rows(); ++i)
    for (int j = 1; j <= a.cols(); ++j) out.at(i, j) = ops.add(a.at(i, j), b.at(i, j));
  return out;
}

FormalMatrix submatrix(const FormalMatrix& m, int r0, int c0, int rows, int cols) {
  FormalMatrix out(rows, cols, Formal{});
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) out.at(i, j) = m.at(r0 + i - 1, c0 + j - 1);
  return out;
}

Display::Display(WittPtr ring, int d, int c) : ops_(std::move(ring)), d_(d), c_(c) {
  require(d >= 1 && c >= 1, ErrorKind::InvalidArgument, "display needs d >= 1 and c >= 1");
  a_ = FormalMatrix(h(), h(), ops_.zero());
}

bool Display::is_symbolic() const {
  for (int i = 1; i <= h(); ++i)
    for (int j = 1; j <= h(); ++j)
      if (!a_.at(i, j).is_constant()) return true;
  return false;
}

std::vector<std::pair<int, int>> free_positions(int d, int c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d; ++i)
    for (int j = d; j <= d + c; ++j) out.emplace_back(i, j);
  return out;
}

std::pair<int, int> position_of(polygon::Point xy, int d) {
  const int j = static_cast<int>(xy.y) + d;
  return {j + 1 - static_cast<int>(xy.x), j};
}

Display normal_form_skeleton(WittPtr ring, int d, int c) {
  Display D(std::move(ring), d, c);
  for (int i = 1; i < D.h(); ++i) D.at(i + 1, i) = D.ops().one();
  D.at(1, D.h()) = D.ops().one();
  return D;
}

Display simple_display(WittPtr ring, Rational slope) {
  require(slope > 0 && slope < 1, ErrorKind::InvalidArgument,
          "simple display needs a slope strictly between 0 and 1");
  const int s = static_cast<int>(slope.denominator()), r = static_cast<int>(slope.numerator());
  return normal_form_skeleton(std::move(ring), s - r, r);
}

Display supersingular_display(WittPtr ring, int g) {
  require(g >= 1, ErrorKind::InvalidArgument, "supersingular display needs g >= 1");
  return normal_form_skeleton(std::move(ring), g, g);
}

Display split_display(WittPtr ring, const std::vector<Rational>& slopes) {
  require(!slopes.empty(), ErrorKind::InvalidArgument, "no slopes given");
  // Integer coefficients of prod (F^{s_i} - p^{r_i}), index = power of F.
  std::vector<std::int64_t> prod{1};
  int c = 0;
  const auto p = static_cast<std::int64_t>(ring->p());
  for (const auto& sl : slopes) {
    require(sl > 0 && sl < 1, ErrorKind::InvalidArgument, "slopes must lie in (0,1)");
    const int s = static_cast<int>(sl.denominator()), r = static_cast<int>(sl.numerator());
    c += r;
    std::vector<std::int64_t> next(prod.size() + static_cast<std::size_t>(s), 0);
    const auto pr = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(r)));
    for (std::size_t k = 0; k < prod.size(); ++k) {
      next[k + static_cast<std::size_t>(s)] += prod[k];
      next[k] -= pr * prod[k];
    }
    prod = std::move(next);
  }
  const int h = static_cast<int>(prod.size()) - 1;
  const int d = h - c;
  require(d >= 1, ErrorKind::InvalidArgument, "split display needs d >= 1");
  Display D(std::move(ring), d, c);
  for (int i = 1; i < h; ++i) D.at(i + 1, i) = D.ops().one();
  for (int x = 1; x <= h; ++x) {
    const std::int64_t Ax = -prod[static_cast<std::size_t>(h - x)];
    if (Ax == 0) continue;
    const int y = std::max(0, x - d);
    const auto py = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(y)));
    require(Ax % py == 0, ErrorKind::InvalidArgument, "coefficient not realizable in normal form");
    const auto [i, j] = position_of({x, y}, d);
    D.at(i, j) = D.ops().from_int(Ax / py);
  }
  return D;
}

namespace {

std::vector<Rational> slopes_from_name(const std::string& name) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const auto next = name.find('+', pos);
    const auto part = name.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2 || part[0] != 'H') {
      raise(ErrorKind::Parse, "unknown display constructor '" + part + "' in '" + name + "'");
    }
    out.push_back(parse_rational(part.substr(1)));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

int parse_ss_height(const std::string& name) {
  int h = 0;
  try {
    h = std::stoi(name.substr(2));
  } catch (const std::exception&) {
    raise(ErrorKind::Parse, "bad supersingular height in '" + name + "'");
  }
  require(h >= 2 && h % 2 == 0, ErrorKind::Parse, "supersingular height must be even: '" + name + "'");
  return h;
}

}  // namespace

Display display_from_name(WittPtr ring, const std::string& name) {
  if (name.rfind("ss", 0) == 0) return supersingular_display(std::move(ring), parse_ss_height(name) / 2);
  const auto slopes = slopes_from_name(name);
  if (slopes.size() == 1) return simple_display(std::move(ring), slopes[0]);
  return split_display(std::move(ring), slopes);
}

int default_witt_length(const std::string& name) {
  int c = 0;
  if (name.rfind("ss", 0) == 0) {
    c = parse_ss_height(name) / 2;
  } else {
    for (const auto& sl : slopes_from_name(name)) c += static_cast<int>(sl.numerator());
  }
  return c + 3;
}

bool normal_form_check(const Display& D) {
  const auto& ops = D.ops();
  const int h = D.h(), d = D.d();
  for (int i = 1; i <= h; ++i) {
    for (int j = 1; j <= h; ++j) {
      const auto& a = D.at(i, j);
      const bool in_S = i <= d && j >= d;
      if (i == j + 1) {
        if (!(a == ops.one())) return false;
      } else if (!in_S) {
        if (!ops.is_zero(a)) return false;
      }
    }
  }
  return D.ring().is_unit(D.at(1, h).constant);
}

polygon::NewtonPolygon CharPoly::newton_polygon() const {
  std::vector<std::optional<std::int64_t>> vals;
  for (int x = 1; x <= h; ++x) {
    const auto v = valuation(x);
    vals.push_back(v ? std::optional<std::int64_t>(*v) : std::nullopt);
  }
  return polygon::np_of_valuations(vals);
}

arith::TwistedPoly<WittRing> CharPoly::to_twisted() const {
  const auto& R = ops.ring();
  std::vector<WittVec> coeffs(static_cast<std::size_t>(h) + 1, R.zero());
  coeffs[static_cast<std::size_t>(h)] = R.one();
  for (int x = 1; x <= h; ++x) {
    require(A[x - 1].is_constant(), ErrorKind::InvalidArgument,
            "characteristic polynomial has symbolic coefficients");
    coeffs[static_cast<std::size_t>(h - x)] = R.neg(A[x - 1].constant);
  }
  return arith::TwistedPoly<WittRing>(ops.ring_ptr(), std::move(coeffs));
}

std::string CharPoly::to_string() const {
  std::ostringstream os;
  os << "F^" << h;
  for (int x = 1; x <= h; ++x) {
    const auto& a = A[x - 1];
    if (ops.is_zero(a)) continue;
    os << " - (" << ops.to_string(a) << ")";
    if (h - x > 0) os << "F";
    if (h - x > 1) os << "^" << (h - x);
  }
  return os.str();
}

CharPoly charpoly(const Display& D) {
  require(normal_form_check(D), ErrorKind::NotNormalForm, "display is not in normal form");
  const auto& ops = D.ops();
  CharPoly out{ops, D.h(), std::vector<Formal>(static_cast<std::size_t>(D.h()), ops.zero())};
  for (const auto& [i, j] : free_positions(D.d(), D.c())) {
    const auto& a = D.at(i, j);
    if (ops.is_zero(a)) continue;
    const auto xy = coordinate_of(i, j, D.d());
    const int y = static_cast<int>(xy.y);
    auto term = ops.shift_up(ops.sigma(a, D.h() - y - D.d()), y);
    auto& slot = out.A[static_cast<std::size_t>(xy.x - 1)];
    slot = ops.add(slot, term);
  }
  return out;
}

Display deform_with(const Display& D, const FormalMatrix& T) {
  require(T.rows() == D.d() && T.cols() == D.c(), ErrorKind::InvalidArgument,
          "deformation matrix must be d x c");
  const auto& ops = D.ops();
  const auto A = add(ops, D.block_A(), multiply(ops, T, D.block_C()));
  const auto B = add(ops, D.block_B(), multiply(ops, T, D.block_D()));
  Display out = D;
  for (int i = 1; i <= D.d(); ++i) {
    for (int j = 1; j <= D.d(); ++j) out.at(i, j) = A.at(i, j);
    for (int j = 1; j <= D.c(); ++j) out.at(i, D.d() + j) = B.at(i, j);
  }
  return out;
}

std::string t_symbol(int i, int j) {
  return "t[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

std::string u_symbol(polygon::Point xy) {
  return "u[" + std::to_string(xy.x) + "," + std::to_string(xy.y) + "]";
}

FormalMatrix universal_parameters(const FormalOps& ops, int d, int c) {
  FormalMatrix T(d, c, ops.zero());
  for (int i = 1; i <= d; ++i)
    for (int j = d + 1; j <= d + c; ++j) T.at(i, j - d) = ops.symbol(t_symbol(i, j));
  return T;
}

Display universal_deformation(const Display& D) {
  return deform_with(D, universal_parameters(D.ops(), D.d(), D.c()));
}

namespace {

std::vector<std::vector<int>> block_indices(const std::vector<std::pair<int, int>>& dims) {
  int d = 0;
  for (const auto& [di, ci] : dims) d += di;
  std::vector<std::vector<int>> out;
  int od = 0, oc = 0;
  for (const auto& [di, ci] : dims) {
    std::vector<int> idx;
    for (int k = 1; k <= di; ++k) idx.push_back(od + k);
    for (int k = 1; k <= ci; ++k) idx.push_back(d + oc + k);
    od += di;
    oc += ci;
    out.push_back(std::move(idx));
  }
  return out;
}

void check_dims(const Display& D, const std::vector<std::pair<int, int>>& dims) {
  int d = 0, c = 0;
  for (const auto& [di, ci] : dims) {
    require(di >= 1 && ci >= 1, ErrorKind::InvalidArgument, "blocks need d_i, c_i >= 1");
    d += di;
    c += ci;
  }
  require(d == D.d() && c == D.c(), ErrorKind::InvalidArgument,
          "block sizes do not add up to the display size");
}

}  // namespace

bool is_block_upper_triangular(const Display& D, const std::vector<std::pair<int, int>>& dims) {
  check_dims(D, dims);
  const auto idx = block_indices(dims);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t l = k + 1; l < idx.size(); ++l)
      for (int i : idx[l])
        for (int j : idx[k])
          if (!D.ops().is_zero(D.at(i, j))) return false;
  return true;
}

Display diagonal_block(const Display& D, const std::vector<std::pair<int, int>>& dims, int k) {
  check_dims(D, dims);
  const auto idx = block_indices(dims);
  require(k >= 0 && k < static_cast<int>(idx.size()), ErrorKind::InvalidArgument, "block index");
  const auto& [dk, ck] = dims[static_cast<std::size_t>(k)];
  Display out(D.ring_ptr(), dk, ck);
  const auto& I = idx[static_cast<std::size_t>(k)];
  for (int a = 0; a < dk + ck; ++a)
    for (int b = 0; b < dk + ck; ++b) out.at(a + 1, b + 1) = D.at(I[a], I[b]);
  return out;
}

Display direct_sum(const std::vector<Display>& blocks) {
  require(!blocks.empty(), ErrorKind::InvalidArgument, "no blocks");
  std::vector<std::pair<int, int>> dims;
  int d = 0, c = 0;
  for (const auto& b : blocks) {
    require(b.ring().residue() == blocks[0].ring().residue() &&
                b.ring().length() == blocks[0].ring().length(),
            ErrorKind::InvalidArgument, "blocks over different rings");
    dims.emplace_back(b.d(), b.c());
    d += b.d();
    c += b.c();
  }
  Display out(blocks[0].ring_ptr(), d, c);
  const auto idx = block_indices(dims);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& I = idx[k];
    const int hk = blocks[k].h();
    for (int a = 0; a < hk; ++a)
      for (int b = 0; b < hk; ++b) out.at(I[a], I[b]) = blocks[k].at(a + 1, b + 1);
  }
  return out;
}

Display filtered_lift(const Display& base, const std::vector<std::pair<int, int>>& dims,
                      const std::vector<FormalMatrix>& T_blocks) {
  check_dims(base, dims);
  require(T_blocks.size() == dims.size(), ErrorKind::InvalidArgument,
          "one deformation block per display block is required");
  require(is_block_upper_triangular(base, dims), ErrorKind::Precondition,
          "base display is not block upper triangular");
  const auto& ops = base.ops();
  FormalMatrix T(base.d(), base.c(), ops.zero());
  int od = 0, oc = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const auto& [dk, ck] = dims[k];
    const auto& Tk = T_blocks[k];
    require(Tk.rows() == dk && Tk.cols() == ck, ErrorKind::InvalidArgument,
            "deformation block " + std::to_string(k + 1) + " has the wrong size");
    for (int i = 1; i <= dk; ++i)
      for (int j = 1; j <= ck; ++j) T.at(od + i, oc + j) = Tk.at(i, j);
    od += dk;
    oc += ck;
  }
  return deform_with(base, T);
}

Display filtered_lift(const std::vector<Display>& blocks, const std::vector<FormalMatrix>& T_blocks) {
  std::vector<std::pair<int, int>> dims;
  for (const auto& b : blocks) dims.emplace_back(b.d(), b.c());
  return filtered_lift(direct_sum(blocks), dims, T_blocks);
}

}  // namespace slopekit::display
