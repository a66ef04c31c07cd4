// ifc3 — sum-rate outer bounds for the three-user Gaussian interference channel
// Copyright (C) 2026 the ifc3 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

namespace ifc3 {

struct NmResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Downhill simplex with standard coefficients (reflect 1, expand 2, contract
// 1/2, shrink 1/2).  Objectives may return +inf to encode constraints; the
// start point should be feasible.  Stops when the simplex value spread falls
// below `tol`.
template <class F>
NmResult nelder_mead(F&& f, const Eigen::VectorXd& x0, double step,
                     double tol = 1e-9, int max_iter = 2000) {
  const int n = int(x0.size());
  std::vector<Eigen::VectorXd> x(n + 1, x0);
  std::vector<double> fx(n + 1);
  for (int i = 0; i < n; ++i) x[i + 1][i] += step;
  for (int i = 0; i <= n; ++i) fx[i] = f(x[i]);

  std::vector<int> ord(n + 1);
  NmResult result;
  for (result.iterations = 0; result.iterations < max_iter; ++result.iterations) {
    for (int i = 0; i <= n; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fx[a] < fx[b]; });
    const int lo = ord[0], hi = ord[n], next_hi = ord[n - 1];
    if (fx[hi] - fx[lo] < tol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != hi) centroid += x[i];
    centroid /= n;

    const Eigen::VectorXd xr = centroid + (centroid - x[hi]);
    const double fr = f(xr);
    if (fr < fx[lo]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - x[hi]);
      const double fe = f(xe);
      if (fe < fr) {
        x[hi] = xe;
        fx[hi] = fe;
      } else {
        x[hi] = xr;
        fx[hi] = fr;
      }
    } else if (fr < fx[next_hi]) {
      x[hi] = xr;
      fx[hi] = fr;
    } else {
      const Eigen::VectorXd xc = centroid + 0.5 * (x[hi] - centroid);
      const double fc = f(xc);
      if (fc < fx[hi]) {
        x[hi] = xc;
        fx[hi] = fc;
      } else {
        for (int i = 0; i <= n; ++i) {
          if (i == lo) continue;
          x[i] = x[lo] + 0.5 * (x[i] - x[lo]);
          fx[i] = f(x[i]);
        }
      }
    }
  }

  int lo = 0;
  for (int i = 1; i <= n; ++i)
    if (fx[i] < fx[lo]) lo = i;
  result.x = x[lo];
  result.value = fx[lo];
  return result;
}

}  // namespace ifc3
