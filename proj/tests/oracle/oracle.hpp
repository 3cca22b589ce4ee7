#pragma once

// Brute-force references. They work from the raw definitions (edge lists,
// minimal open sets, ideal products) and never call the code under test.

#include "afspec/diagram.hpp"
#include "afspec/topospace.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using NameSet = std::set<std::string>;  // "name@level"

/// All descendant-closed, saturated vertex sets (powerset scan, ≤ 12 vertices).
std::vector<NameSet> brute_ideals(const afspec::FiniteDiagram& d);

/// Primal: whenever ideals I_1 ∩ ... ∩ I_k = 0 (k = 2, 3), some I_j ⊆ E.
bool brute_primal(const afspec::FiniteDiagram& d, const NameSet& e);

/// Prime: E proper, and I ∩ J ⊆ E implies I ⊆ E or J ⊆ E.
bool brute_prime(const afspec::FiniteDiagram& d, const NameSet& e);

/// Every f : points -> values whose level sets are open (≤ 12 points, ≤ 3 values).
std::vector<std::vector<int>> brute_continuous_functions(const afspec::FiniteTopSpace& x,
                                                         const std::vector<int>& values);

/// x ~ y iff every continuous {0,1}-valued function agrees on them; returns
/// a class number per point (numbered by first occurrence).
std::vector<std::size_t> constancy_classes(const afspec::FiniteTopSpace& x);

/// Definition-level checks over the full powerset of points.
bool brute_qcr(const afspec::FiniteTopSpace& x);
bool brute_closed_interior(const afspec::FiniteTopSpace& x);
bool brute_phi_open(const afspec::FiniteTopSpace& x);

/// Seeded random inputs: ≤ 4 levels, ≤ 3 vertices per level, mult ≤ 2.
afspec::FiniteDiagram random_diagram(std::uint64_t seed);
/// Random partial order on 1..8 points, as minimal open sets.
afspec::FiniteTopSpace random_space(std::uint64_t seed);

}  // namespace oracle
