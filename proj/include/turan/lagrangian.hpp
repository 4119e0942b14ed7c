#pragma once

#include <turan/hypergraph.hpp>
#include <turan/rational.hpp>

#include <Eigen/Dense>

#include <vector>

namespace turan {

/// One monomial of the weight polynomial: coefficient * prod_i x_i^e_i.
struct Monomial {
    long long coefficient = 0;
    std::vector<int> exponents; // one entry per vertex
    int degree() const;
};

/// The weight polynomial of a graph: every edge contributes the monomial of
/// its multiplicities, scaled by the number of orderings of the edge
/// (cardinality! divided by the multiplicity factorials).
struct PolynomialForm {
    int n = 0;
    std::vector<Monomial> terms;
};

PolynomialForm polynomial_form(const RGraph& g);

/// Plain evaluation and calculus; x must have p.n entries (DimensionMismatch).
double evaluate(const PolynomialForm& p, const Eigen::VectorXd& x);
Eigen::VectorXd gradient(const PolynomialForm& p, const Eigen::VectorXd& x);
Eigen::MatrixXd hessian(const PolynomialForm& p, const Eigen::VectorXd& x);

struct GridPoint {
    Rat value;
    std::vector<Rat> point;
    long long points_scanned = 0;
};

/// Exact maximum of p over the lattice {k/resolution : sum k = resolution}
/// inside the simplex; every value is computed in integer arithmetic over
/// the common denominator resolution^degree. Deterministic (ascending
/// lexicographic scan, first maximum kept). Raises BudgetExceeded when the
/// lattice has more than budget points.
GridPoint grid_oracle(const PolynomialForm& p, int resolution, long long budget = 20'000'000);

struct LagrangianOptions {
    int oracle_resolution = 0;        // 0: choose from the vertex count
    long long oracle_budget = 20'000'000;
    int newton_rounds = 200;
    bool cross_check = true;          // run the grid oracle as a safety net
    double tolerance = 1e-9;          // largest accepted oracle-vs-optimizer gap
};

struct LagrangianResult {
    double value = 0.0;
    Eigen::VectorXd maximizer;        // a point of the standard simplex
    std::vector<int> support;         // 1-based vertices carrying weight
    double kkt_residual = 0.0;        // stationarity defect at the maximizer
    bool cross_checked = false;
    Rat oracle_value;                 // best lattice value when cross_checked
};

/// Maximum of the weight polynomial over the standard simplex. Every
/// non-empty support is tried with a damped Newton iteration on the
/// stationarity system from a fixed battery of deterministic starting
/// points (uniform, near-vertex, and low-discrepancy). Ties within 1e-12
/// prefer smaller support, then lexicographically smaller support. The
/// grid oracle must not beat the returned value; if it does and polishing
/// from the lattice point cannot close the gap, ConvergenceFailure is
/// raised. Vertex counts above 12 raise TooLarge.
LagrangianResult lagrangian(const RGraph& g, const LagrangianOptions& opts = {});

} // namespace turan
