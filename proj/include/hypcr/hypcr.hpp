#pragma once

// Inertia sectors, ages and orbifold Poincare polynomials for symmetrized
// genus-0 configuration stacks and the hyperelliptic moduli stacks.

#include "hypcr/rational.hpp"
#include "hypcr/characters.hpp"
#include "hypcr/qpoly.hpp"
#include "hypcr/m0n.hpp"
#include "hypcr/hyperelliptic.hpp"
#include "hypcr/ages.hpp"
#include "hypcr/assemble.hpp"
#include "hypcr/verify.hpp"
#include "hypcr/render.hpp"
