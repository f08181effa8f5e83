#pragma once

#include <limits>
#include <vector>

namespace tfac {

// Radius phi0(t) of a sphere moving by the (1/alpha)-power of its mean
// curvature: phi0' = -C_alpha / phi0^{1/alpha}, phi0(0) = 1.
// Closed form: phi0(t) = (1 - ((alpha+1)/alpha) C_alpha t)^{alpha/(alpha+1)}.

// alpha/((alpha+1) C_alpha), or +inf when C_alpha == 0.
double extinction_time(double alpha, double C_alpha);

// Throws PastExtinction for t >= extinction time.
double phi0_closed_form(double t, double alpha, double C_alpha);
double phi0_derivative(double t, double alpha, double C_alpha);

// Inverse map psi0 = phi0^{-1} on (0,1], evaluated from the explicit inverse.
// Throws OutOfRange for r outside (0,1] or when C_alpha == 0.
double psi0(double r, double alpha, double C_alpha);

struct FlowTrajectory {
    double alpha = 0.0;
    double C_alpha = 0.0;
    std::vector<double> times;
    std::vector<double> radii;
    double extinction_time = std::numeric_limits<double>::infinity();
};

// Classical RK4 integration of the radius ODE, the independent check on the
// closed form. Requires t_max < T* - 10 dt; throws StepSizeTooLarge if a
// radius becomes nonpositive.
FlowTrajectory phi0_rk4(double t_max, double dt, double alpha, double C_alpha);

} // namespace tfac
