#include "hudn/hungarian.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hudn {

// Shortest-augmenting-path formulation with row/column potentials,
// 1-indexed internally with column 0 as the virtual start.
AssignmentResult hungarian_assignment(const std::vector<std::vector<double>>& cost,
                                      AssignSense sense) {
  const int n = static_cast<int>(cost.size());
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("hungarian: matrix is not square");
    }
    for (double c : row) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("hungarian: non-finite cost entry");
      }
    }
  }
  if (n == 0) return {};

  const double sign = (sense == AssignSense::Maximize) ? -1.0 : 1.0;
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> match(n + 1, 0);  // column -> row (1-indexed)
  std::vector<int> way(n + 1, 0);

  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = match[j0], j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = sign * cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  AssignmentResult result;
  result.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) result.row_to_col[match[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i) result.objective += cost[i][result.row_to_col[i]];
  return result;
}

}  // namespace hudn
