#pragma once

#include <string>
#include <vector>

namespace casimir::validation {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Acceptance criteria 1..9. Each one is self-contained; tolerances and runtime limits
/// are fixed in validation.cpp.
int criterion_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();

/// "PASS  3 oracle equivalence  (12.3 s)  detail"
std::string format_result(const CriterionResult& r);

/// Concentric surface values from direct integration of the radial ODE
///   u'' + u'/r - (lambda^2 + m^2/r^2) u = 0 on [1, y],
/// independent of the Bessel closed form:
///   dirichlet_cross = -1/(y u(y)),  u(1) = 0, u'(1) = 1
///   neumann_value   =  1/(y v'(y)), v(1) = 1, v'(1) = 0
struct OdeSurface {
    double dirichlet_cross = 0.0;
    double neumann_value = 0.0;
};

OdeSurface ode_concentric_surface(int m, double lambda, double y, double rel_tol = 1e-13);

}  // namespace casimir::validation
