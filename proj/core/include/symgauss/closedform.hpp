#pragma once

#include <vector>

#include "symgauss/numerics.hpp"
#include "symgauss/rootsys.hpp"

namespace symgauss {

// Width parameter of the Gaussian density on the flat coordinates.
struct GaussParam {
    double sigma = 1.0;

    static GaussParam from_sigma(double sigma);
    // sigma^2 = t / rank, the scaling used in the large-rank regime
    static GaussParam from_t(double t, int rank);

    double sigma2() const { return sigma * sigma; }
};

// log of the flat-weight normalization integral for a complex-case space:
// the Gaussian paired with prod_lambda |lambda(a)|^2.
double log_za_typeiv(const SpaceDescriptor& desc, GaussParam g);

// log of the sinh-weight normalization integral for a complex-case space:
// the Gaussian paired with prod_lambda sinh^2 |lambda(a)|.
double log_Za_typeiv(const SpaceDescriptor& desc, GaussParam g);

// log of the spectral-parameter integral: the sinh-weight Gaussian integrated
// against the spherical function with parameter tau (coordinates in the same
// ambient basis as rho). Reduces to log_Za_typeiv at tau = rho.
LogValue log_Za_tau_typeiv(const SpaceDescriptor& desc, GaussParam g,
                           const DualVector& tau);

// Spherical function value at the point a (ambient coordinates), evaluated by
// the alternating-sum formula over the Weyl group. Requires a complex-case
// descriptor with rank within the enumeration cap; throws std::domain_error
// when a sits too close to a chamber wall for the sum to be resolved.
double spherical_typeiv(const SpaceDescriptor& desc, const DualVector& tau,
                        const std::vector<double>& a);

// log of the flat-weight cone integral for pair exponent beta in {1, 2, 4}.
double log_za_cone(int beta, int rank, double sigma);

// log of the flat-weight normalization for the rank-r symplectic cone; equals
// log_za_typeiv on the C-family complex-case descriptor of the same rank.
double log_za_symplectic(int rank, double sigma);

}  // namespace symgauss
