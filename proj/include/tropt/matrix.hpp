#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "tropt/semifield.hpp"

namespace tropt {

using Index = std::size_t;

// Dense rectangular matrix over a semifield, row-major. A matrix with a
// single column (row) doubles as a column (row) vector; there is no separate
// vector type. Matrices are immutable in practice: the algebra below never
// mutates its inputs.
template <class SF>
class Matrix {
 public:
  using semifield = SF;
  using scalar_type = Scalar<SF>;

  // All entries start as the semifield zero.
  Matrix(Index rows, Index cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) {
      throw DimensionError("matrix dimensions must be positive");
    }
  }

  static Matrix identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = scalar_type::one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<scalar_type>>& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw DimensionError("matrix dimensions must be positive");
    }
    Matrix m(rows.size(), rows.front().size());
    for (Index i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) {
        throw DimensionError("ragged rows in matrix literal");
      }
      for (Index j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix column(std::vector<scalar_type> entries) {
    if (entries.empty()) throw DimensionError("empty vector");
    Matrix m(entries.size(), 1);
    m.entries_ = std::move(entries);
    return m;
  }

  static Matrix row(std::vector<scalar_type> entries) {
    if (entries.empty()) throw DimensionError("empty vector");
    Matrix m(1, entries.size());
    m.entries_ = std::move(entries);
    return m;
  }

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_column() const noexcept { return cols_ == 1; }
  bool is_row() const noexcept { return rows_ == 1; }
  bool is_vector() const noexcept { return is_column() || is_row(); }

  // Number of entries of a vector (row or column).
  Index length() const {
    if (!is_vector()) throw DimensionError("length() requires a vector");
    return rows_ * cols_;
  }

  scalar_type& operator()(Index i, Index j) { return entries_[i * cols_ + j]; }
  const scalar_type& operator()(Index i, Index j) const {
    return entries_[i * cols_ + j];
  }

  // k-th entry of a vector.
  scalar_type& at(Index k) { return entries_[k]; }
  const scalar_type& at(Index k) const { return entries_[k]; }

  const std::vector<scalar_type>& entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  Index rows_;
  Index cols_;
  std::vector<scalar_type> entries_;
};

template <class SF>
Matrix<SF> add(const Matrix<SF>& a, const Matrix<SF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix addition requires equal shapes");
  }
  Matrix<SF> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  return out;
}

template <class SF>
Matrix<SF> multiply(const Matrix<SF>& a, const Matrix<SF>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product requires conforming shapes");
  }
  Matrix<SF> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        out(i, j) = oplus(out(i, j), otimes(aik, b(k, j)));
      }
    }
  }
  return out;
}

template <class SF>
Matrix<SF> scalar_multiply(const Scalar<SF>& x, const Matrix<SF>& a) {
  Matrix<SF> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = otimes(x, a(i, j));
  return out;
}

template <class SF>
Matrix<SF> operator+(const Matrix<SF>& a, const Matrix<SF>& b) {
  return add(a, b);
}

template <class SF>
Matrix<SF> operator*(const Matrix<SF>& a, const Matrix<SF>& b) {
  return multiply(a, b);
}

template <class SF>
Matrix<SF> operator*(const Scalar<SF>& x, const Matrix<SF>& a) {
  return scalar_multiply(x, a);
}

// A^p with A^0 = I.
template <class SF>
Matrix<SF> matrix_power(const Matrix<SF>& a, Index p) {
  if (!a.is_square()) throw DimensionError("matrix power requires a square matrix");
  Matrix<SF> out = Matrix<SF>::identity(a.rows());
  for (Index k = 0; k < p; ++k) out = multiply(out, a);
  return out;
}

template <class SF>
Matrix<SF> transpose(const Matrix<SF>& a) {
  Matrix<SF> out(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

// Multiplicative conjugate transpose of a nonzero vector: entries are
// inverted, zero entries stay zero, and the orientation flips.
template <class SF>
Matrix<SF> conjugate_transpose(const Matrix<SF>& x) {
  if (!x.is_vector()) {
    throw DimensionError("conjugate transposition requires a vector");
  }
  const Index n = x.length();
  bool nonzero = false;
  std::vector<Scalar<SF>> out(n);
  for (Index k = 0; k < n; ++k) {
    if (!x.at(k).is_zero()) {
      nonzero = true;
      out[k] = inverse(x.at(k));
    }
  }
  if (!nonzero) {
    throw ValueError("ZeroVector", "conjugate transpose of the zero vector is undefined");
  }
  return x.is_column() ? Matrix<SF>::row(std::move(out))
                       : Matrix<SF>::column(std::move(out));
}

// The single entry of a 1x1 matrix (e.g. the value of a bilinear form).
template <class SF>
Scalar<SF> as_scalar(const Matrix<SF>& a) {
  if (a.rows() != 1 || a.cols() != 1) {
    throw DimensionError("as_scalar requires a 1x1 matrix");
  }
  return a(0, 0);
}

template <class SF>
Scalar<SF> trace(const Matrix<SF>& a) {
  if (!a.is_square()) throw DimensionError("trace requires a square matrix");
  Scalar<SF> t;
  for (Index i = 0; i < a.rows(); ++i) t = oplus(t, a(i, i));
  return t;
}

// Tr(A) = tr A (+) ... (+) tr A^n; Tr(A) <= 1 is the feasibility test of the
// subinvariant inequality solvers.
template <class SF>
Scalar<SF> tr_cumulative(const Matrix<SF>& a) {
  if (!a.is_square()) throw DimensionError("Tr requires a square matrix");
  Scalar<SF> t;
  Matrix<SF> p = a;
  for (Index m = 1; m <= a.rows(); ++m) {
    if (m > 1) p = multiply(p, a);
    t = oplus(t, trace(p));
  }
  return t;
}

// A* = I (+) A (+) ... (+) A^(n-1), evaluated as the exact finite sum without
// any convergence assumption; callers wanting the closure property check
// Tr(A) <= 1 themselves.
template <class SF>
Matrix<SF> kleene_star(const Matrix<SF>& a) {
  if (!a.is_square()) throw DimensionError("Kleene star requires a square matrix");
  Matrix<SF> star = Matrix<SF>::identity(a.rows());
  Matrix<SF> p = Matrix<SF>::identity(a.rows());
  for (Index m = 1; m < a.rows(); ++m) {
    p = multiply(p, a);
    star = add(star, p);
  }
  return star;
}

// tr^(1/m) with the zero trace contributing zero, as forced by 0^p = 0.
template <class SF>
Scalar<SF> trace_root(const Scalar<SF>& t, Index m) {
  if (t.is_zero()) return Scalar<SF>::zero();
  return power(t, Rational(1, static_cast<long>(m)));
}

// Spectral radius via the closed form (+)_{m=1..n} tr^(1/m)(A^m). Valid for
// reducible matrices as well; zero when every power has zero trace.
template <class SF>
Scalar<SF> spectral_radius(const Matrix<SF>& a) {
  if (!a.is_square()) throw DimensionError("spectral radius requires a square matrix");
  Scalar<SF> lambda;
  Matrix<SF> p = a;
  for (Index m = 1; m <= a.rows(); ++m) {
    if (m > 1) p = multiply(p, a);
    lambda = oplus(lambda, trace_root(trace(p), m));
  }
  return lambda;
}

// No zero entries at all.
template <class SF>
bool is_regular(const Matrix<SF>& a) {
  return std::none_of(a.entries().begin(), a.entries().end(),
                      [](const Scalar<SF>& s) { return s.is_zero(); });
}

template <class SF>
bool is_row_regular(const Matrix<SF>& a) {
  for (Index i = 0; i < a.rows(); ++i) {
    bool found = false;
    for (Index j = 0; j < a.cols(); ++j) found = found || !a(i, j).is_zero();
    if (!found) return false;
  }
  return true;
}

template <class SF>
bool is_column_regular(const Matrix<SF>& a) {
  for (Index j = 0; j < a.cols(); ++j) {
    bool found = false;
    for (Index i = 0; i < a.rows(); ++i) found = found || !a(i, j).is_zero();
    if (!found) return false;
  }
  return true;
}

// Componentwise a <= b in the semifield order.
template <class SF>
bool leq(const Matrix<SF>& a, const Matrix<SF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("componentwise comparison requires equal shapes");
  }
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

// Lower block-triangular normal form: `permutation[k]` is the original index
// placed at position k, and `block_sizes` partitions the positions into the
// diagonal blocks (each irreducible or a 1x1 zero block).
struct NormalForm {
  std::vector<Index> permutation;
  std::vector<Index> block_sizes;
};

// P A P^T for the row/column reordering `perm`.
template <class SF>
Matrix<SF> permute(const Matrix<SF>& a, const std::vector<Index>& perm) {
  if (!a.is_square() || perm.size() != a.rows()) {
    throw DimensionError("permutation size must match a square matrix");
  }
  Matrix<SF> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(perm[i], perm[j]);
  return out;
}

namespace detail {

// Iterative Tarjan SCC over the digraph with an edge j -> i for every
// nonzero a(i, j). Returns the component id of each vertex.
template <class SF>
std::vector<Index> strongly_connected_components(const Matrix<SF>& a,
                                                 Index& component_count) {
  const Index n = a.rows();
  std::vector<std::vector<Index>> succ(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) succ[j].push_back(i);

  constexpr Index kUnset = static_cast<Index>(-1);
  std::vector<Index> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  Index next_index = 0;
  component_count = 0;

  struct Frame {
    Index v;
    Index child;
  };
  for (Index root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < succ[f.v].size()) {
        const Index w = succ[f.v][f.child++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          while (true) {
            const Index w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = component_count;
            if (w == f.v) break;
          }
          ++component_count;
        }
        const Index v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
        }
      }
    }
  }
  return comp;
}

}  // namespace detail

// Computes the normal form. Among the valid topological orders of the
// component condensation we take the one that repeatedly emits the available
// component containing the smallest original index; vertices inside a block
// keep ascending order. This makes the permutation deterministic.
template <class SF>
NormalForm normal_form(const Matrix<SF>& a) {
  if (!a.is_square()) throw DimensionError("normal form requires a square matrix");
  const Index n = a.rows();
  Index comp_count = 0;
  const std::vector<Index> comp = detail::strongly_connected_components(a, comp_count);

  std::vector<std::vector<Index>> members(comp_count);
  for (Index v = 0; v < n; ++v) members[comp[v]].push_back(v);

  // Condensation edge from comp(j) to comp(i) for nonzero a(i, j); a source
  // component has no incoming edge and can be the next diagonal block.
  std::vector<Index> indegree(comp_count, 0);
  std::vector<std::vector<Index>> out_edges(comp_count);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (a(i, j).is_zero() || comp[i] == comp[j]) continue;
      out_edges[comp[j]].push_back(comp[i]);
    }
  }
  for (auto& edges : out_edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (Index t : edges) ++indegree[t];
  }

  using Entry = std::pair<Index, Index>;  // (smallest member, component id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (Index c = 0; c < comp_count; ++c) {
    if (indegree[c] == 0) ready.emplace(members[c].front(), c);
  }

  NormalForm nf;
  nf.permutation.reserve(n);
  while (!ready.empty()) {
    const Index c = ready.top().second;
    ready.pop();
    nf.block_sizes.push_back(members[c].size());
    for (Index v : members[c]) nf.permutation.push_back(v);
    for (Index t : out_edges[c]) {
      if (--indegree[t] == 0) ready.emplace(members[t].front(), t);
    }
  }
  return nf;
}

}  // namespace tropt
