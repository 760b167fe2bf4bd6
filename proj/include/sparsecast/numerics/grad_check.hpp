#pragma once

#include <functional>
#include <vector>

namespace sparsecast {

/// Compares an analytic gradient against central finite differences.
/// `f` evaluates the scalar objective at a parameter vector; `analytic` is
/// the gradient under test, matching theta's layout. Returns
/// max_k |analytic_k - central_k| / max(1, |central_k|).
double grad_check(const std::function<double(const std::vector<double>&)>& f,
                  const std::vector<double>& theta,
                  const std::vector<double>& analytic, double eps = 1e-5);

}  // namespace sparsecast
