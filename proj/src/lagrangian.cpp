#include <turan/lagrangian.hpp>

#include <turan/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace turan {

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

long long narrow(__int128 v, const char* what) {
    if (v > static_cast<__int128>(std::numeric_limits<long long>::max()) ||
        v < -static_cast<__int128>(std::numeric_limits<long long>::max())) {
        fail(ErrorKind::Overflow, std::string(what) + " exceeds 64-bit range");
    }
    return static_cast<long long>(v);
}

} // namespace

int Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

PolynomialForm polynomial_form(const RGraph& g) {
    validate_graph(g);
    PolynomialForm p;
    p.n = g.n;
    for (const Edge& e : g.edges) {
        if (e.cardinality() > 20) {
            fail(ErrorKind::TooLarge, "edge cardinality above 20 overflows the coefficient");
        }
        Monomial m;
        m.exponents.assign(static_cast<size_t>(g.n), 0);
        for (int v : e.entries) {
            ++m.exponents[static_cast<size_t>(v) - 1];
        }
        m.coefficient = factorial(e.cardinality());
        for (const auto& [v, mult] : e.multiplicities()) {
            m.coefficient /= factorial(mult);
        }
        p.terms.push_back(std::move(m));
    }
    return p;
}

namespace {

void check_dimension(const PolynomialForm& p, const Eigen::VectorXd& x) {
    if (x.size() != p.n) {
        fail(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                               " coordinates, polynomial has " +
                                               std::to_string(p.n));
    }
}

double power(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

} // namespace

double evaluate(const PolynomialForm& p, const Eigen::VectorXd& x) {
    check_dimension(p, x);
    double total = 0.0;
    for (const Monomial& m : p.terms) {
        double t = static_cast<double>(m.coefficient);
        for (int i = 0; i < p.n; ++i) {
            t *= power(x[i], m.exponents[static_cast<size_t>(i)]);
        }
        total += t;
    }
    return total;
}

Eigen::VectorXd gradient(const PolynomialForm& p, const Eigen::VectorXd& x) {
    check_dimension(p, x);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(p.n);
    for (const Monomial& m : p.terms) {
        for (int i = 0; i < p.n; ++i) {
            int ei = m.exponents[static_cast<size_t>(i)];
            if (ei == 0) {
                continue;
            }
            double t = static_cast<double>(m.coefficient) * ei * power(x[i], ei - 1);
            for (int j = 0; j < p.n; ++j) {
                if (j != i) {
                    t *= power(x[j], m.exponents[static_cast<size_t>(j)]);
                }
            }
            g[i] += t;
        }
    }
    return g;
}

Eigen::MatrixXd hessian(const PolynomialForm& p, const Eigen::VectorXd& x) {
    check_dimension(p, x);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(p.n, p.n);
    for (const Monomial& m : p.terms) {
        for (int i = 0; i < p.n; ++i) {
            int ei = m.exponents[static_cast<size_t>(i)];
            if (ei == 0) {
                continue;
            }
            for (int j = 0; j < p.n; ++j) {
                int ej = m.exponents[static_cast<size_t>(j)];
                double t;
                if (j == i) {
                    if (ei < 2) {
                        continue;
                    }
                    t = static_cast<double>(m.coefficient) * ei * (ei - 1) *
                        power(x[i], ei - 2);
                } else {
                    if (ej == 0) {
                        continue;
                    }
                    t = static_cast<double>(m.coefficient) * ei * ej * power(x[i], ei - 1) *
                        power(x[j], ej - 1);
                }
                for (int k = 0; k < p.n; ++k) {
                    if (k != i && k != j) {
                        t *= power(x[k], m.exponents[static_cast<size_t>(k)]);
                    }
                }
                h(i, j) += t;
            }
        }
    }
    return h;
}

namespace {

// C(m+n-1, n-1) capped so callers can test against a budget without overflow.
long long lattice_size(int m, int n, long long cap) {
    __int128 num = 1;
    for (int i = 1; i <= n - 1; ++i) {
        num = num * (m + i) / i; // exact: product of i consecutive ints is divisible by i!
        if (num > cap) {
            return cap + 1;
        }
    }
    return static_cast<long long>(num);
}

struct SparseTerm {
    long long coefficient;
    std::vector<std::pair<int, int>> powers; // (variable, exponent), exponent >= 1
    int degree;
};

} // namespace

GridPoint grid_oracle(const PolynomialForm& p, int resolution, long long budget) {
    if (p.n < 1) {
        fail(ErrorKind::DimensionMismatch, "polynomial needs at least one variable");
    }
    if (resolution < 1) {
        fail(ErrorKind::InvariantViolation, "resolution must be at least 1");
    }
    long long count = lattice_size(resolution, p.n, budget);
    if (count > budget) {
        fail(ErrorKind::BudgetExceeded,
             "lattice for resolution " + std::to_string(resolution) + " on " +
                 std::to_string(p.n) + " variables exceeds the budget of " +
                 std::to_string(budget) + " points");
    }
    int maxdeg = 0;
    std::vector<SparseTerm> terms;
    for (const Monomial& m : p.terms) {
        SparseTerm t;
        t.coefficient = m.coefficient;
        t.degree = m.degree();
        for (int i = 0; i < p.n; ++i) {
            if (m.exponents[static_cast<size_t>(i)] > 0) {
                t.powers.emplace_back(i, m.exponents[static_cast<size_t>(i)]);
            }
        }
        maxdeg = std::max(maxdeg, t.degree);
        terms.push_back(std::move(t));
    }
    // k^e for all k <= resolution, e <= maxdeg.
    std::vector<std::vector<__int128>> pow_table(static_cast<size_t>(resolution) + 1);
    for (int k = 0; k <= resolution; ++k) {
        auto& row = pow_table[static_cast<size_t>(k)];
        row.assign(static_cast<size_t>(maxdeg) + 1, 1);
        for (int e = 1; e <= maxdeg; ++e) {
            row[static_cast<size_t>(e)] = row[static_cast<size_t>(e) - 1] * k;
        }
    }
    // Scale factors m^(maxdeg - deg) put every term over the denominator m^maxdeg.
    std::vector<__int128> scale(static_cast<size_t>(maxdeg) + 1, 1);
    for (int d = 1; d <= maxdeg; ++d) {
        scale[static_cast<size_t>(d)] = scale[static_cast<size_t>(d) - 1] * resolution;
    }

    std::vector<int> k(static_cast<size_t>(p.n), 0);
    std::vector<int> best_k;
    __int128 best = -1;
    long long scanned = 0;
    // Ascending lexicographic scan over compositions of `resolution`.
    auto evaluate_leaf = [&]() {
        __int128 total = 0;
        for (const SparseTerm& t : terms) {
            __int128 v = t.coefficient;
            for (const auto& [var, e] : t.powers) {
                v *= pow_table[static_cast<size_t>(k[static_cast<size_t>(var)])]
                              [static_cast<size_t>(e)];
                if (v == 0) {
                    break;
                }
            }
            total += v * scale[static_cast<size_t>(maxdeg - t.degree)];
        }
        ++scanned;
        if (total > best) {
            best = total;
            best_k = k;
        }
    };
    auto scan = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == p.n - 1) {
            k[static_cast<size_t>(pos)] = remaining;
            evaluate_leaf();
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            k[static_cast<size_t>(pos)] = take;
            self(self, pos + 1, remaining - take);
        }
    };
    scan(scan, 0, resolution);

    GridPoint out;
    long long den = narrow(scale[static_cast<size_t>(maxdeg)], "lattice denominator");
    out.value = Rat(narrow(best, "lattice numerator"), den);
    out.point.reserve(static_cast<size_t>(p.n));
    for (int ki : best_k) {
        out.point.emplace_back(ki, resolution);
    }
    out.points_scanned = scanned;
    return out;
}

namespace {

struct CompressedPoly {
    int k = 0; // variables
    std::vector<SparseTerm> terms;

    double value(const Eigen::VectorXd& y) const {
        double total = 0.0;
        for (const SparseTerm& t : terms) {
            double v = static_cast<double>(t.coefficient);
            for (const auto& [var, e] : t.powers) {
                v *= power(y[var], e);
            }
            total += v;
        }
        return total;
    }

    Eigen::VectorXd grad(const Eigen::VectorXd& y) const {
        Eigen::VectorXd g = Eigen::VectorXd::Zero(k);
        for (const SparseTerm& t : terms) {
            for (size_t a = 0; a < t.powers.size(); ++a) {
                auto [var, e] = t.powers[a];
                double v = static_cast<double>(t.coefficient) * e * power(y[var], e - 1);
                for (size_t b = 0; b < t.powers.size(); ++b) {
                    if (b != a) {
                        v *= power(y[t.powers[b].first], t.powers[b].second);
                    }
                }
                g[var] += v;
            }
        }
        return g;
    }

    Eigen::MatrixXd hess(const Eigen::VectorXd& y) const {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
        for (const SparseTerm& t : terms) {
            for (size_t a = 0; a < t.powers.size(); ++a) {
                auto [va, ea] = t.powers[a];
                // Diagonal part.
                if (ea >= 2) {
                    double v = static_cast<double>(t.coefficient) * ea * (ea - 1) *
                               power(y[va], ea - 2);
                    for (size_t b = 0; b < t.powers.size(); ++b) {
                        if (b != a) {
                            v *= power(y[t.powers[b].first], t.powers[b].second);
                        }
                    }
                    h(va, va) += v;
                }
                for (size_t b = a + 1; b < t.powers.size(); ++b) {
                    auto [vb, eb] = t.powers[b];
                    double v = static_cast<double>(t.coefficient) * ea * eb *
                               power(y[va], ea - 1) * power(y[vb], eb - 1);
                    for (size_t c = 0; c < t.powers.size(); ++c) {
                        if (c != a && c != b) {
                            v *= power(y[t.powers[c].first], t.powers[c].second);
                        }
                    }
                    h(va, vb) += v;
                    h(vb, va) += v;
                }
            }
        }
        return h;
    }
};

// Terms of p entirely supported inside `support` (0-based columns),
// re-indexed to local variables. Empty when the face sees no edge.
CompressedPoly restrict_poly(const PolynomialForm& p, const std::vector<int>& support) {
    std::vector<int> local(static_cast<size_t>(p.n), -1);
    for (size_t i = 0; i < support.size(); ++i) {
        local[static_cast<size_t>(support[i])] = static_cast<int>(i);
    }
    CompressedPoly cp;
    cp.k = static_cast<int>(support.size());
    for (const Monomial& m : p.terms) {
        SparseTerm t;
        t.coefficient = m.coefficient;
        t.degree = 0;
        bool inside = true;
        for (int i = 0; i < p.n && inside; ++i) {
            int e = m.exponents[static_cast<size_t>(i)];
            if (e == 0) {
                continue;
            }
            if (local[static_cast<size_t>(i)] < 0) {
                inside = false;
            } else {
                t.powers.emplace_back(local[static_cast<size_t>(i)], e);
                t.degree += e;
            }
        }
        if (inside) {
            cp.terms.push_back(std::move(t));
        }
    }
    return cp;
}

struct NewtonOutcome {
    bool converged = false;
    Eigen::VectorXd y;
    double value = 0.0;
};

NewtonOutcome newton_on_support(const CompressedPoly& cp, const Eigen::VectorXd& seed,
                                int rounds) {
    const int k = cp.k;
    Eigen::VectorXd y = seed;
    double mu = cp.grad(y).mean();
    NewtonOutcome out;
    for (int iter = 0; iter < rounds; ++iter) {
        Eigen::VectorXd g = cp.grad(y);
        Eigen::VectorXd F(k + 1);
        F.head(k) = g.array() - mu;
        F[k] = y.sum() - 1.0;
        if (F.lpNorm<Eigen::Infinity>() < 1e-13) {
            if (y.minCoeff() > 1e-10) {
                out.converged = true;
                out.y = y;
                out.value = cp.value(y);
            }
            return out;
        }
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(k + 1, k + 1);
        J.topLeftCorner(k, k) = cp.hess(y);
        J.topRightCorner(k, 1).setConstant(-1.0);
        J.bottomLeftCorner(1, k).setConstant(1.0);
        Eigen::VectorXd step = J.fullPivLu().solve(-F);
        if (!step.allFinite() || (J * step + F).lpNorm<Eigen::Infinity>() >
                                     1e-8 * (1.0 + F.lpNorm<Eigen::Infinity>())) {
            return out; // singular stationarity system on this face
        }
        double alpha = 1.0;
        int halvings = 0;
        while (halvings < 60) {
            bool inside = true;
            for (int i = 0; i < k; ++i) {
                if (y[i] + alpha * step[i] <= 1e-12) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                break;
            }
            alpha *= 0.5;
            ++halvings;
        }
        if (halvings == 60) {
            return out;
        }
        y += alpha * step.head(k);
        mu += alpha * step[k];
    }
    return out;
}

std::vector<Eigen::VectorXd> newton_seeds(int k) {
    std::vector<Eigen::VectorXd> seeds;
    seeds.push_back(Eigen::VectorXd::Constant(k, 1.0 / k));
    const double eps = 1e-3;
    if (k >= 2) {
        for (int j = 0; j < k; ++j) {
            Eigen::VectorXd y = Eigen::VectorXd::Constant(k, eps);
            y[j] = 1.0 - (k - 1) * eps;
            seeds.push_back(y);
        }
    }
    // Kronecker low-discrepancy points pushed strictly inside the simplex.
    static const int primes[12] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int s = 1; s <= 16; ++s) {
        Eigen::VectorXd y(k);
        for (int i = 0; i < k; ++i) {
            double root = std::sqrt(static_cast<double>(primes[i]));
            double frac = root - std::floor(root);
            double u = s * frac - std::floor(s * frac);
            y[i] = u + 0.05;
        }
        y /= y.sum();
        seeds.push_back(y);
    }
    return seeds;
}

} // namespace

LagrangianResult lagrangian(const RGraph& g, const LagrangianOptions& opts) {
    if (g.n < 1) {
        fail(ErrorKind::InvariantViolation, "need at least one vertex");
    }
    if (g.n > 12) {
        fail(ErrorKind::TooLarge, "support enumeration is capped at 12 vertices");
    }
    PolynomialForm p = polynomial_form(g);
    const int n = p.n;

    struct Best {
        double value = -1.0;
        Eigen::VectorXd x;
        std::vector<int> support; // 0-based
    } best;

    auto consider = [&](double value, const Eigen::VectorXd& x_full,
                        const std::vector<int>& support) {
        if (value > best.value + 1e-12) {
            best.value = value;
            best.x = x_full;
            best.support = support;
        }
    };

    // Vertex supports: the polynomial collapses to the sum of the pure
    // powers of that vertex at weight one.
    for (int i = 0; i < n; ++i) {
        double v = 0.0;
        for (const Monomial& m : p.terms) {
            bool pure = true;
            for (int j = 0; j < n && pure; ++j) {
                pure = (j == i) || m.exponents[static_cast<size_t>(j)] == 0;
            }
            if (pure) {
                v += static_cast<double>(m.coefficient);
            }
        }
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        x[i] = 1.0;
        consider(v, x, {i});
    }

    // Larger supports in (size, lexicographic) order; ascending mask value
    // within a popcount class is exactly lexicographic order on the sets.
    auto run_support = [&](const std::vector<int>& support) {
        CompressedPoly cp = restrict_poly(p, support);
        if (cp.terms.empty()) {
            return;
        }
        // A support member that no restricted term touches can always give
        // its weight away without losing value; the smaller face covers it.
        std::vector<char> touched(support.size(), 0);
        for (const SparseTerm& t : cp.terms) {
            for (const auto& [var, e] : t.powers) {
                touched[static_cast<size_t>(var)] = 1;
            }
        }
        if (std::find(touched.begin(), touched.end(), 0) != touched.end()) {
            return;
        }
        for (const Eigen::VectorXd& seed : newton_seeds(cp.k)) {
            NewtonOutcome outcome = newton_on_support(cp, seed, opts.newton_rounds);
            if (!outcome.converged) {
                continue;
            }
            Eigen::VectorXd x_full = Eigen::VectorXd::Zero(n);
            for (size_t i = 0; i < support.size(); ++i) {
                x_full[support[i]] = outcome.y[static_cast<int>(i)];
            }
            consider(outcome.value, x_full, support);
        }
    };

    for (int size = 2; size <= n; ++size) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (static_cast<int>(__builtin_popcount(mask)) != size) {
                continue;
            }
            std::vector<int> support;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    support.push_back(i);
                }
            }
            run_support(support);
        }
    }

    LagrangianResult result;
    result.value = best.value;
    result.maximizer = best.x;

    if (opts.cross_check) {
        int res = opts.oracle_resolution;
        if (res == 0) {
            res = n <= 3 ? 600 : 120;
        }
        GridPoint oracle{};
        bool have_oracle = false;
        while (res >= 8) {
            if (lattice_size(res, n, opts.oracle_budget) <= opts.oracle_budget) {
                oracle = grid_oracle(p, res, opts.oracle_budget);
                have_oracle = true;
                break;
            }
            res /= 2;
        }
        if (have_oracle) {
            result.cross_checked = true;
            result.oracle_value = oracle.value;
            double gap = oracle.value.to_double() - best.value;
            if (gap > opts.tolerance) {
                // The lattice found a better feasible point: polish from it.
                std::vector<int> support;
                for (int i = 0; i < n; ++i) {
                    if (oracle.point[static_cast<size_t>(i)].sign() > 0) {
                        support.push_back(i);
                    }
                }
                CompressedPoly cp = restrict_poly(p, support);
                Eigen::VectorXd seed(cp.k);
                for (size_t i = 0; i < support.size(); ++i) {
                    seed[static_cast<int>(i)] =
                        oracle.point[static_cast<size_t>(support[i])].to_double();
                }
                seed = (seed.array() + 1e-6).matrix();
                seed /= seed.sum();
                NewtonOutcome outcome = newton_on_support(cp, seed, opts.newton_rounds);
                if (outcome.converged) {
                    Eigen::VectorXd x_full = Eigen::VectorXd::Zero(n);
                    for (size_t i = 0; i < support.size(); ++i) {
                        x_full[support[i]] = outcome.y[static_cast<int>(i)];
                    }
                    consider(outcome.value, x_full, support);
                    result.value = best.value;
                    result.maximizer = best.x;
                }
                if (oracle.value.to_double() - best.value > opts.tolerance) {
                    fail(ErrorKind::ConvergenceFailure,
                         "optimizer value " + std::to_string(best.value) +
                             " lies below the lattice bound " + oracle.value.to_string() +
                             " = " + std::to_string(oracle.value.to_double()) +
                             "; the maximum is bracketed by these two numbers");
                }
            }
        }
    }

    result.value = best.value;
    result.maximizer = best.x;
    for (int i : best.support) {
        result.support.push_back(i + 1);
    }

    // Stationarity defect at the winner: support partials against their
    // mean, off-support partials only if they poke above it.
    Eigen::VectorXd gfull = gradient(p, best.x);
    double mu = 0.0;
    for (int i : best.support) {
        mu += gfull[i];
    }
    mu /= static_cast<double>(best.support.size());
    double residual = 0.0;
    std::vector<char> in_support(static_cast<size_t>(n), 0);
    for (int i : best.support) {
        in_support[static_cast<size_t>(i)] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (in_support[static_cast<size_t>(i)]) {
            residual = std::max(residual, std::abs(gfull[i] - mu));
        } else {
            residual = std::max(residual, std::max(0.0, gfull[i] - mu));
        }
    }
    result.kkt_residual = residual;
    return result;
}

} // namespace turan
