#pragma once

#include <vector>

namespace hudn {

enum class AssignSense { Minimize, Maximize };

struct AssignmentResult {
  std::vector<int> row_to_col;  // permutation
  double objective = 0.0;
};

/// Exact solver for the square linear assignment problem, O(n^3) potentials
/// method. Throws on a non-square matrix or non-finite entries.
AssignmentResult hungarian_assignment(const std::vector<std::vector<double>>& cost,
                                      AssignSense sense);

}  // namespace hudn
