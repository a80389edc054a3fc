#include "bkn/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bkn {

RatMatrix::RatMatrix(std::vector<std::string> rows, std::vector<std::string> cols)
    : row_labels(std::move(rows)), col_labels(std::move(cols)) {
  entries.assign(row_labels.size() * col_labels.size(), Rat(0));
}

RatMatrix RatMatrix::square(std::vector<std::string> labels) {
  std::vector<std::string> cols = labels;
  return RatMatrix(std::move(labels), std::move(cols));
}

bool RatMatrix::is_symmetric() const {
  if (row_labels != col_labels) return false;
  for (int i = 0; i < rows(); ++i) {
    for (int j = i + 1; j < cols(); ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Rat& r) { return r == 0; });
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<Rat>> rref(rows, std::vector<Rat>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) rref[i][j] = m.at(i, j);
  }

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (rref[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(rref[r], rref[pr]);
    const Rat inv = Rat(1) / rref[r][c];
    for (int j = c; j < cols; ++j) rref[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || rref[i][c] == 0) continue;
      const Rat f = rref[i][c];
      for (int j = c; j < cols; ++j) rref[i][j] -= f * rref[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v;
    v.labels = m.col_labels;
    v.values.assign(cols, Rat(0));
    v.values[f] = 1;
    for (std::size_t p = 0; p < pivot_col.size(); ++p) {
      v.values[pivot_col[p]] = -rref[p][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> nowhere_zero_kernel_vector(const RatMatrix& m) {
  const int cols = m.cols();
  if (cols == 0) return std::nullopt;
  const std::vector<RatVector> basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  for (int i = 0; i < cols; ++i) {
    bool covered = false;
    for (const auto& v : basis) {
      if (v.values[i] != 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return std::nullopt;  // coordinate vanishes on the kernel
  }
  const int k = static_cast<int>(basis.size());
  // each coordinate excludes at most k-1 values of t
  for (long t = 1;; ++t) {
    RatVector x;
    x.labels = m.col_labels;
    x.values.assign(cols, Rat(0));
    Rat power(1);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < cols; ++i) x.values[i] += power * basis[j].values[i];
      power *= t;
    }
    if (std::none_of(x.values.begin(), x.values.end(), [](const Rat& r) { return r == 0; })) {
      return x;
    }
    if (t > static_cast<long long>(cols) * k + 1) {
      throw std::logic_error("nowhere_zero_kernel_vector: search bound exceeded");
    }
  }
}

Inertia inertia(const RatMatrix& m) {
  if (!m.is_symmetric()) {
    throw std::invalid_argument("inertia: matrix is not symmetric");
  }
  const int n = m.rows();
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = m.at(i, j);
  }
  std::vector<int> act(n);
  for (int i = 0; i < n; ++i) act[i] = i;

  Inertia sig;
  while (!act.empty()) {
    int pi = -1;
    for (std::size_t p = 0; p < act.size(); ++p) {
      if (w[act[p]][act[p]] != 0) {
        pi = static_cast<int>(p);
        break;
      }
    }
    if (pi >= 0) {
      const int i = act[pi];
      const Rat d = w[i][i];
      if (d > 0) {
        ++sig.n_plus;
      } else {
        ++sig.n_minus;
      }
      act.erase(act.begin() + pi);
      for (int k : act) {
        if (w[k][i] == 0) continue;
        const Rat f = w[k][i] / d;
        for (int l : act) w[k][l] -= f * w[i][l];
      }
      continue;
    }
    // remaining diagonal is zero; look for an off-diagonal pivot
    int pa = -1, pb = -1;
    for (std::size_t p = 0; p < act.size() && pa < 0; ++p) {
      for (std::size_t q = p + 1; q < act.size(); ++q) {
        if (w[act[p]][act[q]] != 0) {
          pa = static_cast<int>(p);
          pb = static_cast<int>(q);
          break;
        }
      }
    }
    if (pa < 0) {
      sig.n_zero += static_cast<int>(act.size());
      break;
    }
    // 2x2 block [[0,a],[a,0]] contributes one positive and one negative
    const int i = act[pa];
    const int j = act[pb];
    const Rat a = w[i][j];
    ++sig.n_plus;
    ++sig.n_minus;
    act.erase(act.begin() + pb);
    act.erase(act.begin() + pa);
    for (int k : act) {
      for (int l : act) {
        w[k][l] -= (w[k][i] * w[l][j] + w[k][j] * w[l][i]) / a;
      }
    }
  }
  return sig;
}

RatMatrix principal_submatrix(const RatMatrix& m, const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("principal_submatrix: empty subset");
  }
  if (m.row_labels != m.col_labels) {
    throw std::invalid_argument("principal_submatrix: matrix is not label-square");
  }
  std::map<std::string, int> pos;
  for (int i = 0; i < m.rows(); ++i) pos[m.row_labels[i]] = i;
  std::vector<int> idx;
  for (const auto& label : keep) {
    auto it = pos.find(label);
    if (it == pos.end()) {
      throw std::invalid_argument("principal_submatrix: unknown label '" + label + "'");
    }
    idx.push_back(it->second);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

  std::vector<std::string> labels;
  for (int i : idx) labels.push_back(m.row_labels[i]);
  RatMatrix sub = RatMatrix::square(labels);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    }
  }
  return sub;
}

std::vector<Rat> matrix_apply(const RatMatrix& m, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != m.cols()) {
    throw std::invalid_argument("matrix_apply: dimension mismatch");
  }
  std::vector<Rat> y(m.rows(), Rat(0));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) y[i] += m.at(i, j) * x[j];
  }
  return y;
}

}  // namespace bkn
