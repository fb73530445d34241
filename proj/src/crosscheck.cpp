// Advisory floating-point cross-check. The only translation unit in the
// project that touches floating point or Eigen; everything it reports is
// diagnostic, never an input to the exact layers.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "primegraph/linalg.hpp"
#include "primegraph/roots.hpp"
#include "primegraph/verify.hpp"

namespace primegraph {

FloatCrosscheckReport crosscheck_float(const Graph& g, double tol) {
  const int n = g.order();
  FloatCrosscheckReport rep;
  rep.total = n;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    rep.detail = "eigensolver failed";
    return rep;
  }
  std::vector<double> approx(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(approx.rbegin(), approx.rend());

  auto exact = isolate_real_roots(char_poly(adjacency_matrix(g)), pow2_inv(40));
  std::vector<std::pair<double, double>> bounds;  // descending, expanded by multiplicity
  for (const auto& r : exact)
    for (int k = 0; k < r.multiplicity(); ++k)
      bounds.emplace_back(r.lo().get_d(), r.hi().get_d());
  if (static_cast<int>(bounds.size()) != n) {
    rep.detail = "exact eigenvalue count mismatch";
    return rep;
  }

  double worst = 0.0;
  int matched = 0;
  for (int i = 0; i < n; ++i) {
    const double deviation =
        std::max({bounds[i].first - approx[i], approx[i] - bounds[i].second, 0.0});
    worst = std::max(worst, deviation);
    if (deviation <= tol) ++matched;
  }
  rep.matched = matched;
  rep.max_deviation = worst;
  rep.ok = matched == n;
  if (!rep.ok) {
    std::ostringstream msg;
    msg << (n - matched) << " eigenvalues off by more than " << tol;
    rep.detail = msg.str();
  }
  return rep;
}

nlohmann::json FloatCrosscheckReport::to_json() const {
  return {{"ok", ok},
          {"matched", matched},
          {"total", total},
          {"max_deviation", max_deviation},
          {"detail", detail}};
}

}  // namespace primegraph
