#pragma once

#include "afspec/topospace.hpp"

#include <string>

namespace afspec {

/// Finite model of the spectrum of C([-1,1], B) with diagonal values on
/// [0,1] (B = compacts plus scalars).
///
/// Points: P_i, Q_i at t_i = -1 + i/(2k+1), i = 0..2k; R_j_n and R_j_inf at
/// s_j = j/k, j = 0..k, n = 1..N. Each of the six neighbourhood bases is
/// transcribed with η one grid step (points at distance at most one step are
/// inside) and n₀ = N-1; the minimal open set of a point is the intersection
/// of the basic sets containing it.
FiniteTopSpace example1_model(int k, int n);

std::string example1_p(int i);
std::string example1_q(int i);
/// n = 0 stands for n = ∞.
std::string example1_r(int j, int n);

}  // namespace afspec
