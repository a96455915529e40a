// Generated mixed-sense LP cases; expected values from an independent
// dual-simplex/interior-point solver run. Regenerate by editing the
// parameters below and re-deriving with any trusted LP package.
#pragma once
#include <vector>
#include "gio/lp.hpp"

namespace lp_oracle {
struct Case {
  const char* status;
  double objective;
  int n, m;
  std::vector<double> rows;    // row-major m x n
  std::vector<char> senses;    // G, L, E
  std::vector<double> rhs, objective_coeffs, lower, upper;
};

inline const std::vector<Case>& cases() {
  using gio::lp::kInf;
  static const std::vector<Case> k = {
      {"INFEASIBLE", 0.0, 3, 5,
       {-0.53, -1.8, -0.04, 2.59, -0.02, 2.39, 2.16, -2.65, 2.46, 1.1, 2.92, 2.46, 1.48, -1.04, -0.01},
       {'E', 'L', 'L', 'L', 'E'},
       {-2.69, -2.05, 3.09, 0.2, -1.4},
       {1.37, 1.0, -0.53},
       {-kInf, 0.0, 0.0},
       {kInf, kInf, kInf}},
      {"INFEASIBLE", 0.0, 4, 6,
       {-1.09, 0.23, 2.71, -1.52, -0.35, 1.83, 2.79, -0.79, 2.03, -2.14, 2.94, 0.72, -2.51, 2.45, 0.87, -1.89, -0.06, -2.84, -0.57, -1.81, -0.87, -1.19, 2.65, -0.99},
       {'L', 'L', 'L', 'G', 'E', 'L'},
       {3.5, 0.28, 0.03, -2.15, -0.75, -3.62},
       {1.54, 0.18, 0.4, -0.73},
       {0.0, 0.0, 0.0, 0.0},
       {5.81, kInf, kInf, 4.69}},
      {"INFEASIBLE", 0.0, 3, 5,
       {-1.68, -0.97, -2.43, -1.1, 1.6, -1.59, -1.31, 1.39, -2.38, 0.59, 2.75, -0.97, 1.64, -1.34, 1.64},
       {'E', 'L', 'G', 'E', 'E'},
       {-1.48, -1.0, -3.07, -0.63, 3.93},
       {1.84, 1.2, 0.84},
       {0.0, 0.0, 0.0},
       {5.61, 4.52, 5.86}},
      {"OPTIMAL", -4.92801506849315, 3, 4,
       {-1.46, 2.3, -0.69, 0.82, 0.51, 1.96, -1.56, -0.19, 1.29, -2.62, -2.4, 1.75},
       {'E', 'G', 'L', 'L'},
       {3.62, -3.92, 3.36, 3.35},
       {-1.1, -1.93, 0.49},
       {0.0, 0.0, 0.0},
       {3.61, 2.09, kInf}},
      {"INFEASIBLE", 0.0, 2, 5,
       {0.49, -2.39, 1.15, -0.55, -2.64, 0.19, -1.77, -1.56, -2.06, -0.11},
       {'G', 'L', 'G', 'G', 'L'},
       {-0.43, 2.29, -1.76, -0.03, -2.18},
       {-0.17, -0.53},
       {0.0, 0.0},
       {3.51, kInf}},
      {"INFEASIBLE", 0.0, 2, 6,
       {-0.17, -0.96, 1.37, -1.29, 1.4, -2.31, 1.35, -1.13, 0.95, 0.97, -0.43, -0.14},
       {'E', 'G', 'E', 'L', 'L', 'L'},
       {-1.15, 2.55, 2.95, 3.71, 3.85, -2.95},
       {0.02, 0.27},
       {-kInf, 0.0},
       {4.07, 5.9}},
      {"UNBOUNDED", 0.0, 2, 4,
       {2.44, 1.39, 0.92, 2.45, -2.06, 2.42, -2.91, 1.59},
       {'E', 'L', 'L', 'L'},
       {-3.42, -3.67, -3.56, -3.72},
       {0.45, 0.52},
       {0.0, -kInf},
       {kInf, 2.77}},
      {"UNBOUNDED", 0.0, 4, 3,
       {0.69, 1.55, 2.9, -0.28, -0.77, 2.13, -0.41, -2.87, 2.66, 1.95, -1.86, 1.07},
       {'G', 'G', 'G'},
       {3.15, -2.7, -3.12},
       {-1.73, -1.2, -0.81, 0.7},
       {0.0, 0.0, 0.0, 0.0},
       {kInf, kInf, kInf, 1.56}},
      {"OPTIMAL", 1.1887867481996621, 3, 4,
       {-2.67, -1.24, 2.83, -0.02, 1.35, 0.37, -2.86, -1.13, -1.55, 2.73, 1.08, 1.92},
       {'G', 'G', 'L', 'L'},
       {1.09, 3.02, 0.81, 1.96},
       {-0.41, 0.27, 0.56},
       {-kInf, -kInf, 0.0},
       {5.79, kInf, kInf}},
      {"UNBOUNDED", 0.0, 4, 3,
       {2.93, 2.07, -0.38, 0.33, -1.7, -0.08, -0.41, 2.74, 1.66, 2.31, 0.11, 2.88},
       {'G', 'G', 'L'},
       {1.93, 3.85, 0.27},
       {-1.51, -0.87, 2.0, -1.3},
       {0.0, -kInf, -kInf, 0.0},
       {kInf, 5.63, 4.85, kInf}},
      {"UNBOUNDED", 0.0, 4, 3,
       {-0.5, 2.28, -0.04, 1.62, 0.18, 0.56, -1.84, -0.59, -1.23, 1.97, 0.29, 1.63},
       {'E', 'L', 'G'},
       {2.46, -2.84, 0.99},
       {0.07, -1.15, -1.55, 1.76},
       {-kInf, -kInf, 0.0, 0.0},
       {kInf, kInf, kInf, 5.18}},
      {"UNBOUNDED", 0.0, 2, 3,
       {2.7, -2.93, -0.08, -0.32, 1.74, -0.06},
       {'L', 'L', 'G'},
       {3.89, -2.5, -2.35},
       {-1.88, 1.45},
       {0.0, 0.0},
       {kInf, kInf}},
      {"OPTIMAL", 1.342480693758703, 2, 3,
       {2.17, 1.91, -0.82, -2.69, 2.07, 2.55},
       {'G', 'G', 'L'},
       {-1.36, 1.69, -2.83},
       {-0.21, -0.76},
       {0.0, -kInf},
       {kInf, kInf}},
      {"OPTIMAL", 33.284732319894225, 2, 2,
       {2.59, -1.17, 2.83, -1.22},
       {'E', 'L'},
       {3.37, 1.56},
       {-1.77, -0.18},
       {-kInf, -kInf},
       {kInf, kInf}},
      {"OPTIMAL", 1.0507301207521775, 2, 4,
       {0.35, 1.45, -2.15, 1.56, 2.94, -1.27, 0.37, 0.75},
       {'G', 'G', 'G', 'G'},
       {1.3, -3.59, -1.87, 2.05},
       {0.55, 0.32},
       {-kInf, 0.0},
       {kInf, kInf}},
      {"OPTIMAL", 1.2173913043478262, 3, 2,
       {-1.8, 0.39, 2.9, 2.58, -0.46, 2.63},
       {'G', 'L'},
       {-0.82, -0.5},
       {-0.24, 1.12, -1.85},
       {0.0, -kInf, 0.0},
       {kInf, 4.52, kInf}},
      {"OPTIMAL", 1.103169294473643, 3, 3,
       {0.33, -0.62, -1.08, -0.21, -0.42, 2.59, 0.05, -0.26, -2.96},
       {'E', 'E', 'G'},
       {-0.74, 1.78, -2.63},
       {1.0, 0.69, 1.59},
       {0.0, 0.0, -kInf},
       {3.92, 2.52, kInf}},
      {"OPTIMAL", 19.312677385811945, 4, 5,
       {0.47, 1.09, 0.82, 1.56, 1.9, 0.33, -1.75, -2.65, 0.48, 1.46, 0.37, -1.83, -0.8, -1.66, -2.2, 2.79, -0.02, -0.5, -0.65, -2.07},
       {'L', 'G', 'E', 'L', 'G'},
       {-0.3, -0.45, -3.69, 0.59, 2.0},
       {1.36, -1.79, -1.84, 0.94},
       {0.0, -kInf, -kInf, 0.0},
       {kInf, 5.92, kInf, kInf}},
      {"OPTIMAL", -0.017982456140350878, 3, 2,
       {-0.66, -1.72, -2.28, -0.69, 0.27, 2.95},
       {'E', 'G'},
       {-0.82, -0.14},
       {0.95, 0.05, -0.05},
       {0.0, 0.0, 0.0},
       {kInf, kInf, 5.92}},
      {"OPTIMAL", 0.6857599999999999, 2, 2,
       {-1.82, -2.64, -2.06, -1.12},
       {'L', 'G'},
       {-0.71, 0.98},
       {-1.15, -0.48},
       {-kInf, 0.0},
       {3.26, 5.21}},
      {"OPTIMAL", -2.935326609029779, 3, 3,
       {-2.12, -0.62, 2.08, -0.31, 1.33, 2.59, -0.95, 0.26, 0.64},
       {'G', 'L', 'L'},
       {1.67, 3.78, 1.98},
       {-0.39, -1.77, -1.44},
       {0.0, 0.0, -kInf},
       {3.71, kInf, 5.01}},
      {"OPTIMAL", -1.8752349877643217, 2, 3,
       {-1.75, 2.69, -1.82, -2.81, 2.76, 2.51},
       {'L', 'L', 'E'},
       {-0.86, 0.42, 1.42},
       {-0.94, 0.33},
       {0.0, -kInf},
       {kInf, kInf}},
      {"OPTIMAL", 0.37221744993257755, 3, 6,
       {-0.92, -1.34, -2.68, -2.93, -2.53, 0.95, 0.02, 1.85, -2.74, -0.12, -0.74, 0.34, -2.44, -0.35, -0.5, 0.85, -2.9, 0.52},
       {'L', 'G', 'L', 'G', 'L', 'L'},
       {0.14, 0.88, -3.58, -3.66, 2.14, 2.39},
       {-1.22, 1.69, 0.4},
       {-kInf, 0.0, -kInf},
       {4.77, 1.01, kInf}},
      {"OPTIMAL", 5.439581151832461, 2, 4,
       {2.48, -0.48, -2.73, -0.01, 0.26, -0.09, 0.14, -1.45},
       {'L', 'L', 'L', 'L'},
       {3.92, -1.18, -1.26, 0.62},
       {0.02, 0.36},
       {0.0, 0.0},
       {kInf, kInf}},
  };
  return k;
}
}  // namespace lp_oracle
