#include "sparsecast/numerics/grad_check.hpp"

#include <cmath>

#include "sparsecast/error.hpp"

namespace sparsecast {

double grad_check(const std::function<double(const std::vector<double>&)>& f,
                  const std::vector<double>& theta,
                  const std::vector<double>& analytic, double eps) {
  if (analytic.size() != theta.size())
    throw ArgumentError("grad_check: gradient size does not match parameter size");
  if (eps <= 0.0) throw ArgumentError("grad_check: eps must be positive");

  std::vector<double> p = theta;
  double worst = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double saved = p[k];
    p[k] = saved + eps;
    const double up = f(p);
    p[k] = saved - eps;
    const double down = f(p);
    p[k] = saved;
    if (!std::isfinite(up) || !std::isfinite(down))
      throw NumericError("grad_check: objective returned a non-finite value");
    const double central = (up - down) / (2.0 * eps);
    const double err = std::fabs(analytic[k] - central) / std::max(1.0, std::fabs(central));
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace sparsecast
