#pragma once

#include <vector>

namespace cwave {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

}  // namespace cwave
