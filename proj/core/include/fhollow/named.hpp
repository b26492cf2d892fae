#pragma once

// Standard polytopes used throughout the classification and tests.

#include <string>
#include <utility>
#include <vector>

#include "fhollow/polytope.hpp"

namespace fhollow::named {

/// conv(0, e_1, ..., e_d).
Polytope simplex(size_t d);
/// k * simplex(d).
Polytope dilated_simplex(size_t d, int k);
/// [0,1]^d.
Polytope cube(size_t d);
/// conv(0, k_1 e_1, ..., k_d e_d).
Polytope axis_simplex(const std::vector<int>& k);
/// conv(0, e_1, e_3, (p, q, 1)).
Polytope empty_simplex(int p, int q);
/// Lawrence prism over the standard (d-1)-simplex with heights h:
/// vertices (v_i, 0) and (v_i, h_i) for the vertices v_i = 0, e_1, ... .
Polytope lawrence_prism(const std::vector<int>& heights);
/// 2 simplex(2) x [0, 4].
Polytope prism_2delta2_0_4();
/// The 4-simplex whose multipliers satisfy mu = 1 < mu_max = 4/3.
Polytope four_simplex_example();
/// conv((-1,-1,-1), (1,0,-1), (0,1,-1), (0,0,1)).
Polytope slice_counterexample();

/// Every polytope above with a short name, in a fixed order.
std::vector<std::pair<std::string, Polytope>> corpus();

}  // namespace fhollow::named
