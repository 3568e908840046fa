/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "optotriplet/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "at_frequency.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

using Point = std::array<double, 2>;

double distance(const Point& a, const Point& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

Point lerp(const Point& from, const Point& to, double t) {
  return {from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
}

}  // namespace

Complex y_opt_analytic(const CoeffSet& c) {
  const double w_plus = std::norm(c.B_plus);
  const double w_minus = std::norm(c.B_minus);
  const double we_plus = c.loss_ratio_plus * std::norm(c.Be_plus);
  const double we_minus = c.loss_ratio_minus * std::norm(c.Be_minus);
  const double total = w_plus + w_minus + we_plus + we_minus;
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw NumericalError("degenerate noise quadratic: |B+|^2 + |B-|^2 + BBe^2 = 0");
  }

  const Complex main = (w_plus / total) * (0.5 - c.Y_plus) -
                       (w_minus / total) * (0.5 + c.Y_minus);
  Complex loss{0.0, 0.0};
  if (we_plus != 0.0) loss += (we_plus / total) * (0.5 - c.Ye_plus);
  if (we_minus != 0.0) loss -= (we_minus / total) * (0.5 + c.Ye_minus);
  return main + loss;
}

SimplexResult nelder_mead_2d(const std::function<double(double, double)>& f,
                             Point start, double tol,
                             const SimplexSettings& s) {
  if (!(tol > 0.0)) throw ParameterError("simplex tolerance must be positive");
  const double step = s.initial_step > 0.0 ? s.initial_step : tol;

  std::array<Point, 3> v = {start, Point{start[0] + step, start[1]},
                            Point{start[0], start[1] + step}};
  std::array<double, 3> fv{};
  for (int i = 0; i < 3; ++i) fv[i] = f(v[i][0], v[i][1]);

  auto diameter = [&] {
    return std::max({distance(v[0], v[1]), distance(v[0], v[2]),
                     distance(v[1], v[2])});
  };

  SimplexResult result;
  int it = 0;
  for (; it < s.max_iterations; ++it) {
    // order: v[0] best, v[2] worst
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    v = {v[idx[0]], v[idx[1]], v[idx[2]]};
    fv = {fv[idx[0]], fv[idx[1]], fv[idx[2]]};

    if (diameter() < tol) {
      result.converged = true;
      break;
    }

    const Point centroid = lerp(v[0], v[1], 0.5);
    const Point reflected = lerp(centroid, v[2], -s.reflection);
    const double f_reflected = f(reflected[0], reflected[1]);

    if (f_reflected < fv[0]) {
      const Point expanded = lerp(centroid, v[2], -s.reflection * s.expansion);
      const double f_expanded = f(expanded[0], expanded[1]);
      if (f_expanded < f_reflected) {
        v[2] = expanded;
        fv[2] = f_expanded;
      } else {
        v[2] = reflected;
        fv[2] = f_reflected;
      }
      continue;
    }
    if (f_reflected < fv[1]) {
      v[2] = reflected;
      fv[2] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < fv[2];
    const Point contracted = outside
                                 ? lerp(centroid, reflected, s.contraction)
                                 : lerp(centroid, v[2], s.contraction);
    const double f_contracted = f(contracted[0], contracted[1]);
    if (f_contracted < std::min(f_reflected, fv[2])) {
      v[2] = contracted;
      fv[2] = f_contracted;
      continue;
    }

    for (int i = 1; i < 3; ++i) {
      v[i] = lerp(v[0], v[i], s.shrink);
      fv[i] = f(v[i][0], v[i][1]);
    }
  }

  const int best = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());
  result.x = v[best];
  result.value = fv[best];
  result.iterations = it;
  return result;
}

OptResult y_opt_numeric(const CoeffSet& c, Complex init, double tol,
                        const SimplexSettings& settings) {
  OptResult r;
  r.omega = c.omega;
  r.y_analytic = y_opt_analytic(c);
  r.s_analytic = s_qu(c, r.y_analytic);

  const auto objective = [&c](double re, double im) { return s_qu(c, Complex(re, im)); };
  const SimplexResult found =
      nelder_mead_2d(objective, {init.real(), init.imag()}, tol, settings);
  r.y_numeric = Complex(found.x[0], found.x[1]);
  r.s_numeric = found.value;
  r.iterations = found.iterations;
  r.converged = found.converged;
  r.relative_gap = std::abs(r.s_analytic - r.s_numeric) / r.s_analytic;
  return r;
}

std::vector<OptResult> optimal_sweep(const DerivedParams& d,
                                     std::span<const double> grid, double tol) {
  std::vector<OptResult> out;
  out.reserve(grid.size());
  for (double omega : grid) {
    out.push_back(detail::at_frequency(omega, [&] {
      const CoeffSet c = coeffs(d, omega);
      const double scale = std::max({1.0, std::abs(c.Y_plus), std::abs(c.Y_minus),
                                     std::abs(c.Ye_plus), std::abs(c.Ye_minus)});
      return y_opt_numeric(c, Complex{0.0, 0.0}, tol * scale);
    }));
  }
  return out;
}

}  // namespace optotriplet
