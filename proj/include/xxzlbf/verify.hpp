#pragma once

// Named consistency checks grouped into four suites, shared by the
// command-line `verify` subcommand and the acceptance tests:
//  - qkz:         symbolic six-vertex/qKZ relations, overlap identities, and the
//                 factorisation of the block overlap at q = e^{2 pi i/3};
//  - oracle:      exact ground states and the equality of the contraction
//                 and determinant routes to the overlaps and the fidelity;
//  - characters:  homogeneous values, reduction and leading-coefficient
//                 behaviour of the symplectic character, and the
//                 determinant/counting identities;
//  - asymptotics: subleading character coefficients, the character
//                 differential equation, and the free-boson prediction.

#include "xxzlbf/scalar.hpp"

#include <string>
#include <vector>

namespace xxz {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_passed(const std::vector<CheckResult>& results);

std::vector<CheckResult> verify_qkz(unsigned seed = 7, int samples = 200);

std::vector<CheckResult> verify_oracle(int max_total = 12,
                                       std::vector<Rational> x_values = {});

std::vector<CheckResult> verify_characters(int max_homogeneous = 20, int max_reduction = 8,
                                           int max_counting = 8, unsigned seed = 7);

std::vector<CheckResult> verify_asymptotics(int fit_min = 100, int fit_max = 200,
                                            int max_ode = 20,
                                            Rational sweep_x = Rational(1, 2),
                                            int sweep_sites = 72);

}  // namespace xxz
