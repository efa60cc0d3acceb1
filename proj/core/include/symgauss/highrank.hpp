#pragma once

namespace symgauss {

// Reduced families of the large-rank limit; B, C and D share one limit curve.
enum class LimitFamily { A, B, C, D };

// Large-rank limit of the normalized free-energy difference at total time t.
double F_limit(LimitFamily family, double t);

// Finite-rank value (log Za - log za) / rank^2 on the complex-case space of
// the given family and rank, at sigma^2 = t / rank. The A family uses the
// restricted rank r, i.e. the rank-r space is SL(r+1,C)/SU(r+1).
double F_finite_rank(LimitFamily family, int rank, double t);

// Quadratic-energy curves of the two one-dimensional limit shapes.
double e2_cone(double t);
double e2_domain(double t);

enum class E2Kind { Cone, Domain };

// Limiting pairwise equilibrium energy: the quadratic-energy curve minus the
// matching free-energy limit (A pairs with the cone, B/C/D with the domain).
double E2_equilibrium(E2Kind kind, double t);

// Limit value for general inverse temperature beta, obtained from the
// beta = 2 curve by exact rescaling.
double beta_scaled_limit(E2Kind kind, double beta, double t);

}  // namespace symgauss
