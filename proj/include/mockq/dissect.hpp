#pragma once

#include <array>

#include "mockq/etatheta.hpp"
#include "mockq/qseries.hpp"

namespace mockq {

using Triple = std::array<QSeries, 3>;

// e0, e1, e2 from their E-product formulas.
Triple e_quotients(GridExp cap);

// Y_j = sum_{n = j mod 3} (-1)^n q^{n^2+n} / (1 + q^{2n+1})
Triple Y_sums(GridExp cap);
// Y_{jk} with Y_j = sum_k q^k Y_{jk}(q^3); every component reaches cap.
std::array<Triple, 3> Y_components(GridExp cap);

// E(q)^2 E(q^4)^2 / (E(q^2)^2 E(q^6)) against e0(q^3) - 2q e1(q^3) + q^2 e2(q^3).
SeriesPair eta3diss_sides(GridExp cap);
// The three 3-dissection components of the left side against e0, -2 e1, e2.
std::array<SeriesPair, 3> eta3diss_components(GridExp cap);

// Parts 1..6 of the Y_{jk} evaluation, each arranged as a polynomial identity.
SeriesPair mudiss_sides(int part, GridExp cap);
Comparison verify_mudiss(int part, GridExp order);

// Y_0 + z Y_1 + z^2 Y_2 rebuilt from the Y_{jk} against its closed form in
// e_j(q^3) and omega(-q^3), z = zeta3.
SeriesPair recombination_sides(GridExp cap);

// 2 q^2 omega(-q^3) against the right side assembled from the constant,
// the eta 3-dissection and the closed forms of the Y_{jk}.
SeriesPair newomega_assembly_sides(GridExp cap);
Comparison verify_newomega_assembly(GridExp order);

// Constant term of the assembled right side; it must vanish.
Cyc24 assembly_constant();

}  // namespace mockq
