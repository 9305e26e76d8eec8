#pragma once

#include "ainf/algebra.hpp"

#include <random>

namespace ainf {

// All randomness flows through a seeded mt19937_64 and engine-only sampling
// (no distribution objects), so identical seeds give identical sweeps on
// every platform.
inline size_t pick(std::mt19937_64& rng, size_t n) { return static_cast<size_t>(rng() % n); }
inline bool chance(std::mt19937_64& rng, unsigned percent) { return rng() % 100 < percent; }

// Random graded associative algebra of the given dimension. Dimensions <= 3
// use sparse structure constants rejected until associativity holds;
// dimension 4 draws from curated families (truncated polynomial algebras,
// triangular matrices, products) with randomized coefficients.
GradedAlgebra random_algebra(std::mt19937_64& rng, int dim);

// Random degree +1 operator; square_zero demands delta^2 = 0 (rejection with
// a zero-map fallback, which is always square-zero).
LinearOperator random_operator(std::mt19937_64& rng, const GradedAlgebra& alg, bool square_zero);

} // namespace ainf
