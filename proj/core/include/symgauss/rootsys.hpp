#pragma once

// Catalog of classical root systems and symmetric-space data: descriptors for
// the eleven classical families, positive restricted roots with
// multiplicities, the half-sum rho, dual inner products, Weyl-group degrees,
// enumeration, and the symbolic catalog table with its JSON dump.

#include <cstdint>
#include <string>
#include <vector>

namespace symgauss {

enum class RootFamily { A, B, C, D, BC };

std::string family_name(RootFamily f);
RootFamily family_from_name(const std::string& name);

struct Multiplicities {
    int alpha = 0;  // multiplicity of single roots  a_i
    int beta = 0;   // multiplicity of pair roots    a_i +- a_j
    int gamma = 0;  // multiplicity of double roots  2 a_i
};

struct SpaceDescriptor {
    RootFamily family;
    int rank;       // r
    int alpha;      // see Multiplicities
    int beta;
    int gamma;
    double metric_c;   // ||a||^2 = metric_c * sum a_i^2
    int ambient_dim;   // r+1 for A (trace-zero hyperplane), r otherwise
    std::string label;

    int dimension() const;   // rank + sum of root multiplicities
    bool is_type_iv() const; // complex case: every multiplicity present == 2
};

enum class RootShape { PairMinus, PairPlus, Single, Double };

// A positive restricted root stored compactly: the dense integer coefficient
// vector (entries in {-2,-1,0,1,2}) is materialized on demand via coeffs().
struct Root {
    RootShape shape;
    int i;             // 0-based coordinate index
    int j;             // second index for pair shapes, -1 otherwise
    int multiplicity;  // m_lambda

    std::vector<int> coeffs(int ambient_dim) const;
    double eval(const double* a) const;  // lambda(a)
    // exact integer dot product with an integer vector (e.g. 2*rho)
    long long dot_int(const std::vector<long long>& v) const;
};

struct DualVector {
    std::vector<double> coeffs;  // linear functional on the coordinates
};

// Builds a descriptor from raw multiplicities. Validates family shape
// constraints (e.g. D has pair roots only and needs rank >= 2, BC needs all
// three multiplicities positive) and metric_c > 0.
SpaceDescriptor build_space(RootFamily family, int rank, Multiplicities m,
                            double metric_c = 4.0);

// The complex-case (all multiplicities 2) descriptor of a reduced family.
// For A the label convention is SL(r+1,C)/SU(r+1) at rank r.
SpaceDescriptor typeiv_space(RootFamily family, int rank);

std::vector<Root> positive_roots(const SpaceDescriptor& desc);

// Exact integer coefficients of 2*rho = sum over positive roots of
// multiplicity * root (for A, already centered on the trace-zero hyperplane).
std::vector<long long> rho_twice(const SpaceDescriptor& desc);

DualVector rho(const SpaceDescriptor& desc);

// (u, v) in the dual metric: coefficient dot product / metric_c, with
// A-family inputs first projected to the trace-zero representative.
double dual_inner(const SpaceDescriptor& desc, const DualVector& u,
                  const DualVector& v);

// (lambda, rho) computed exactly from integers: (lambda . 2rho)/(2 metric_c).
double root_dot_rho(const SpaceDescriptor& desc, const Root& root,
                    const std::vector<long long>& two_rho);

// ||lambda||^2 in the dual metric.
double root_norm2(const SpaceDescriptor& desc, const Root& root);

// Degrees of the Weyl-invariant generators (A_r: 2..r+1; B_r/C_r: 2,4,..,2r;
// D_r: 2,4,..,2r-2 and r). Throws std::domain_error for BC.
std::vector<int> degrees(const SpaceDescriptor& desc);

// Product of the degrees; exact, so it refuses ranks whose order would not
// fit a 64-bit integer. Throws for BC.
long long weyl_order(const SpaceDescriptor& desc);

// log of the product of the degrees, usable at any rank. Throws for BC.
double log_weyl_order(const SpaceDescriptor& desc);

// An orthogonal Weyl-group element acting on coordinates:
// (w a)_k = signs[k] * a[perm[k]].
struct WeylElement {
    std::vector<int> perm;
    std::vector<int> signs;
    int det;

    void apply(const double* in, double* out) const;
};

// Full enumeration (A: permutations; B/C/BC: signed permutations; D: evenly
// signed permutations). Throws std::domain_error above rank_cap.
std::vector<WeylElement> enumerate_weyl(const SpaceDescriptor& desc,
                                        int rank_cap = 6);

// --- classification table (symbolic rows) ----------------------------------

struct CatalogRow {
    std::string label;         // e.g. "SL(r,C)/SU(r)"
    std::string family;        // "A", "B or D", "BC or C", ...
    std::string rank_formula;  // e.g. "r-1", "p", "floor(n/2)"
    std::string dim_formula;   // e.g. "(r-1)(r+1)"
    std::string alpha;         // multiplicity formulas as strings ("0" if absent)
    std::string beta;
    std::string gamma;
    std::string remark;        // "complex case", "p <= q", ...
};

// The eleven classical rows.
const std::vector<CatalogRow>& catalog();

// JSON array of the rows, fields {label, family, rank_formula, dim_formula,
// alpha, beta, gamma, remark}.
std::string catalog_json();

// Parses catalog_json() output back into rows (round-trip support).
std::vector<CatalogRow> catalog_from_json(const std::string& text);

// Concrete descriptor for a parameterized row. `p`,`q` select the real forms
// SO_o(p,q), SU(p,q), Sp(p,q); `n` selects SO*(2n); the SL rows take the
// matrix size through `p`. Throws std::invalid_argument for unknown labels or
// invalid parameters.
SpaceDescriptor instantiate_row(const std::string& label, int p, int q = 0);

}  // namespace symgauss
