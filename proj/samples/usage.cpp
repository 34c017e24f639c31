// Small tour of the library: a derivative by two routes, a missing-factor polynomial,
// a few Stirling numbers and a catalog check.
#include "ffcalc/ffcalc.hpp"

#include <iostream>

int main() {
  using namespace ffcalc;

  // Second derivative of x(x-1)(x-2)(x-3) at x = 5.
  std::cout << "d^2/dx^2 x^(4) at 5: " << to_string(deriv_at({4, 2, 5, Route::stirling})) << " (oracle "
            << to_string(deriv_at({4, 2, 5, Route::oracle})) << ")\n";

  // x(x-1)...(x-4) with the factors x and x-2 removed, evaluated at 1/2.
  const MissingFactorSet missing(5, {0, 2});
  std::cout << "theta(5, " << to_string(missing) << ", 1/2) = " << to_string(theta_eval(5, missing, Rational(1, 2)))
            << '\n';

  std::cout << "s(5,3) = " << to_string(stirling1(5, 3)) << ", s(-3,2) = " << to_string(stirling1(-3, 2))
            << ", S(5,3) = " << to_string(stirling2(5, 3)) << '\n';

  for (const auto& report : run_all(6, {"EQ72", "EQ89"})) {
    std::cout << report.id << ": " << report.passed << '/' << report.checked << (report.ok() ? " ok" : " FAILED") << '\n';
  }
}
