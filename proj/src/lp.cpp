#include "bkn/lp.hpp"

#include <stdexcept>

namespace bkn {

namespace {

// Dense tableau with a reduced-cost row; column `width-1` is the rhs.
// Invariant: obj[j] = reduced cost of column j, obj[width-1] = -objective.
struct Tableau {
  int width = 0;  // columns incl. rhs
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> obj;
  std::vector<int> basis;

  void pivot(int r, int c) {
    const Rat inv = Rat(1) / rows[r][c];
    for (Rat& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const Rat f = rows[i][c];
      for (int j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[c] != 0) {
      const Rat f = obj[c];
      for (int j = 0; j < width; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Minimizes; entering = smallest column with negative reduced cost,
  // leaving = min-ratio with smallest basic index on ties (Bland).
  void run() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < width - 1; ++j) {
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;
      int leave = -1;
      Rat best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][width - 1] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) {
        throw std::logic_error("lp_feasible: unbounded pivot in bounded program");
      }
      pivot(leave, enter);
    }
  }
};

}  // namespace

std::optional<std::vector<Rat>> lp_feasible(const LinearProgram& lp) {
  const int n = lp.num_vars;
  std::vector<VarBound> bounds = lp.bounds;
  bounds.resize(n);

  bool needs_t = lp.maximize_slack;
  for (const auto& b : bounds) {
    if (b.lower && b.upper && *b.lower > *b.upper) return std::nullopt;
    if (b.lower_strict || b.upper_strict) needs_t = true;
  }
  bool has_strict = false;
  for (const auto& b : bounds) has_strict = has_strict || b.lower_strict || b.upper_strict;

  // Column layout: per-variable nonnegative representation, then the
  // two-sided slack columns, then t and its cap slack.
  struct Rep {
    int u = -1;     // x = base + t_lo*t + u   (or x = base - t_up*t - u for upper-only)
    int w = -1;     // free split negative part
    int slack = -1; // two-sided range row slack
    Rat base = Rat(0);
    int mode = 0;   // 0 free, 1 lower-based, 2 upper-based
  };
  std::vector<Rep> rep(n);
  int ncols = 0;
  for (int j = 0; j < n; ++j) {
    const auto& b = bounds[j];
    if (b.lower) {
      rep[j].mode = 1;
      rep[j].base = *b.lower;
      rep[j].u = ncols++;
      if (b.upper) rep[j].slack = ncols++;
    } else if (b.upper) {
      rep[j].mode = 2;
      rep[j].base = *b.upper;
      rep[j].u = ncols++;
    } else {
      rep[j].mode = 0;
      rep[j].u = ncols++;
      rep[j].w = ncols++;
    }
  }
  int t_col = -1;
  int t_slack = -1;
  if (needs_t) {
    t_col = ncols++;
    t_slack = ncols++;
  }

  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;

  // substituted equalities
  for (std::size_t e = 0; e < lp.eq_coeffs.size(); ++e) {
    if (static_cast<int>(lp.eq_coeffs[e].size()) != n) {
      throw std::invalid_argument("lp_feasible: coefficient row size mismatch");
    }
    std::vector<Rat> row(ncols, Rat(0));
    Rat r = lp.eq_rhs[e];
    for (int j = 0; j < n; ++j) {
      const Rat& c = lp.eq_coeffs[e][j];
      if (c == 0) continue;
      const auto& b = bounds[j];
      switch (rep[j].mode) {
        case 1:  // x = lo + ls*t + u
          row[rep[j].u] += c;
          if (b.lower_strict) row[t_col] += c;
          r -= c * rep[j].base;
          break;
        case 2:  // x = hi - us*t - u
          row[rep[j].u] -= c;
          if (b.upper_strict) row[t_col] -= c;
          r -= c * rep[j].base;
          break;
        default:  // x = u - w
          row[rep[j].u] += c;
          row[rep[j].w] -= c;
          break;
      }
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
  }
  // two-sided ranges: u + (ls+us)*t + slack = hi - lo
  for (int j = 0; j < n; ++j) {
    if (rep[j].slack < 0) continue;
    const auto& b = bounds[j];
    std::vector<Rat> row(ncols, Rat(0));
    row[rep[j].u] = 1;
    row[rep[j].slack] = 1;
    int strict_count = (b.lower_strict ? 1 : 0) + (b.upper_strict ? 1 : 0);
    if (strict_count > 0) row[t_col] = strict_count;
    rows.push_back(std::move(row));
    rhs.push_back(*b.upper - *b.lower);
  }
  // cap: t + slack = 1
  if (needs_t) {
    std::vector<Rat> row(ncols, Rat(0));
    row[t_col] = 1;
    row[t_slack] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(Rat(1));
  }

  const int m = static_cast<int>(rows.size());

  // phase 1: artificial basis, minimize artificial sum
  Tableau tab;
  tab.width = ncols + m + 1;
  tab.rows.assign(m, std::vector<Rat>(tab.width, Rat(0)));
  tab.basis.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    for (int j = 0; j < ncols; ++j) tab.rows[i][j] = flip ? Rat(-rows[i][j]) : rows[i][j];
    tab.rows[i][tab.width - 1] = flip ? Rat(-rhs[i]) : rhs[i];
    tab.rows[i][ncols + i] = 1;
    tab.basis[i] = ncols + i;
  }
  tab.obj.assign(tab.width, Rat(0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < ncols; ++j) tab.obj[j] -= tab.rows[i][j];
    tab.obj[tab.width - 1] -= tab.rows[i][tab.width - 1];
  }
  tab.run();
  if (tab.obj[tab.width - 1] != 0) return std::nullopt;  // -objective != 0

  // drive artificials out of the basis
  std::vector<bool> keep_row(m, true);
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < ncols) continue;
    int col = -1;
    for (int j = 0; j < ncols; ++j) {
      if (tab.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      tab.pivot(i, col);
    } else {
      keep_row[i] = false;  // redundant constraint
    }
  }

  // rebuild without artificial columns / dead rows
  Tableau t2;
  t2.width = ncols + 1;
  for (int i = 0; i < m; ++i) {
    if (!keep_row[i]) continue;
    std::vector<Rat> row(t2.width);
    for (int j = 0; j < ncols; ++j) row[j] = tab.rows[i][j];
    row[ncols] = tab.rows[i][tab.width - 1];
    t2.rows.push_back(std::move(row));
    t2.basis.push_back(tab.basis[i]);
  }
  t2.obj.assign(t2.width, Rat(0));

  if (needs_t) {
    // phase 2: maximize t == minimize -t
    t2.obj[t_col] = -1;
    for (std::size_t i = 0; i < t2.rows.size(); ++i) {
      if (t2.basis[i] == t_col) {
        for (int j = 0; j < t2.width; ++j) t2.obj[j] += t2.rows[i][j];
      }
    }
    t2.run();
  }

  std::vector<Rat> col_val(ncols, Rat(0));
  for (std::size_t i = 0; i < t2.rows.size(); ++i) {
    col_val[t2.basis[i]] = t2.rows[i][t2.width - 1];
  }
  const Rat t_val = needs_t ? col_val[t_col] : Rat(0);
  if (has_strict && t_val <= 0) return std::nullopt;

  std::vector<Rat> x(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    const auto& b = bounds[j];
    switch (rep[j].mode) {
      case 1:
        x[j] = rep[j].base + col_val[rep[j].u];
        if (b.lower_strict) x[j] += t_val;
        break;
      case 2:
        x[j] = rep[j].base - col_val[rep[j].u];
        if (b.upper_strict) x[j] -= t_val;
        break;
      default:
        x[j] = col_val[rep[j].u] - col_val[rep[j].w];
        break;
    }
  }

  // exact self-check of the returned point
  for (std::size_t e = 0; e < lp.eq_coeffs.size(); ++e) {
    Rat acc(0);
    for (int j = 0; j < n; ++j) acc += lp.eq_coeffs[e][j] * x[j];
    if (acc != lp.eq_rhs[e]) throw std::logic_error("lp_feasible: equality violated");
  }
  for (int j = 0; j < n; ++j) {
    const auto& b = bounds[j];
    if (b.lower && (b.lower_strict ? !(x[j] > *b.lower) : !(x[j] >= *b.lower))) {
      throw std::logic_error("lp_feasible: lower bound violated");
    }
    if (b.upper && (b.upper_strict ? !(x[j] < *b.upper) : !(x[j] <= *b.upper))) {
      throw std::logic_error("lp_feasible: upper bound violated");
    }
  }
  return x;
}

}  // namespace bkn
