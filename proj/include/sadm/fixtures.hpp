#pragma once

#include "sadm/af.hpp"

namespace sadm::fixtures {

// Eight-argument example: A..H with
//   A->B, H->B, B->C, C->E, D->E, E->F, G->H, H->G.
// Grounded extension {A,C,D,F}; G and H form an undecided 2-cycle.
ArgumentationFramework fig1();

// Five-argument square with a tail: A->B, B->C, C->D, D->E, E->B.
ArgumentationFramework sq5();

// a0 -> a1 -> ... -> a(n-1).
ArgumentationFramework chain(std::size_t n);

// One argument attacking itself.
ArgumentationFramework self_attacker();

}  // namespace sadm::fixtures
