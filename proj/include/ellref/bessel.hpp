#pragma once

namespace ellref {

/// Bessel functions of the first and second kind for integer order.
/// Accuracy target 1e-10 relative on (0, 50]; J additionally defined at x = 0.
double cylinder_j(int n, double x);
double cylinder_y(int n, double x);
double cylinder_j_prime(int n, double x);
double cylinder_y_prime(int n, double x);

/// Dispatch by kind 'J' or 'Y'.
double cylinder(char kind, int n, double x);

}  // namespace ellref
