// Copyright 2026 The gds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gds/optimize.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "gds/errors.h"

namespace gds {

ScalarMinimum golden_section(const std::function<double(double)> &f, double lo, double hi, double tol) {
    if (!(lo < hi)) {
        throw DomainError("golden_section: empty bracket");
    }
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    return fc <= fd ? ScalarMinimum{c, fc, evals} : ScalarMinimum{d, fd, evals};
}

ScalarMinimum minimize_over_unit_interval(const std::function<double(double)> &f) {
    constexpr double lo = 1e-9;
    constexpr double hi = 1.0 - 1e-9;
    ScalarMinimum best = golden_section(f, lo, hi, 1e-9);

    // Newton polish on log f.
    const double h = 1e-4;
    if (best.x - h > lo && best.x + h < hi && best.f > 0.0) {
        double fm = f(best.x - h);
        double fp = f(best.x + h);
        best.evaluations += 2;
        if (fm > 0.0 && fp > 0.0) {
            double g0 = std::log(best.f);
            double gm = std::log(fm);
            double gp = std::log(fp);
            double d1 = (gp - gm) / (2.0 * h);
            double d2 = (gp - 2.0 * g0 + gm) / (h * h);
            if (d2 > 0.0) {
                double s = std::clamp(best.x - d1 / d2, lo, hi);
                double fs = f(s);
                ++best.evaluations;
                if (fs < best.f) {
                    best.x = s;
                    best.f = fs;
                }
            }
        }
    }

    double f_half = f(0.5);
    ++best.evaluations;
    if (f_half <= best.f + 1e-12 * std::max(1.0, std::abs(best.f))) {
        best.x = 0.5;
        best.f = std::min(best.f, f_half);
    }
    return best;
}

NelderMeadResult nelder_mead(const std::function<double(const Vector &)> &f, const Vector &start,
                             const Vector &step, const NelderMeadOptions &options) {
    const Eigen::Index n = start.size();
    if (n == 0 || step.size() != n) {
        throw ShapeError("nelder_mead: start and step must be non-empty and of equal length");
    }
    std::vector<Vector> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        pts[i + 1](i) += step(i);
    }
    int evals = 0;
    for (auto k = 0u; k < pts.size(); ++k) {
        vals[k] = f(pts[k]);
        ++evals;
    }
    std::vector<int> idx(n + 1);
    bool converged = false;

    while (true) {
        std::iota(idx.begin(), idx.end(), 0);
        // Stable sort keeps the older vertex first on ties.
        std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) { return vals[l] < vals[r]; });
        const Vector &best = pts[idx[0]];
        double diam = 0.0;
        for (Eigen::Index k = 1; k <= n; ++k) {
            diam = std::max(diam, (pts[idx[k]] - best).cwiseAbs().maxCoeff());
        }
        if (diam < options.diameter_tol) {
            converged = true;
            break;
        }
        if (evals >= options.max_evaluations) {
            break;
        }

        int worst = idx[n];
        Vector centroid = Vector::Zero(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            centroid += pts[idx[k]];
        }
        centroid /= static_cast<double>(n);

        Vector xr = centroid + (centroid - pts[worst]);
        double fr = f(xr);
        ++evals;
        if (fr < vals[idx[0]]) {
            Vector xe = centroid + 2.0 * (centroid - pts[worst]);
            double fe = f(xe);
            ++evals;
            if (fe < fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[idx[n - 1]]) {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        bool outside = fr < vals[worst];
        Vector xc = outside ? Vector(centroid + 0.5 * (xr - centroid))
                            : Vector(centroid + 0.5 * (pts[worst] - centroid));
        double fc = f(xc);
        ++evals;
        if (outside ? fc <= fr : fc < vals[worst]) {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        for (Eigen::Index k = 1; k <= n; ++k) {
            int j = idx[k];
            pts[j] = best + 0.5 * (pts[j] - best);
            vals[j] = f(pts[j]);
            ++evals;
        }
    }

    int b = static_cast<int>(std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[b], vals[b], evals, converged};
}

}  // namespace gds
