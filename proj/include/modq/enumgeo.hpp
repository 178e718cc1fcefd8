#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "modq/qseries.hpp"
#include "modq/ringstruct.hpp"

namespace modq::enumgeo {

/// Undirected multigraph; loops and parallel edges allowed.
struct Multigraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

Multigraph theta_graph();
/// 4-cycle whose two opposite edges are doubled.
Multigraph genus3_gamma1();
/// Complete graph K4.
Multigraph genus3_gamma2();

/// Vertex permutations preserving edge multiplicities, times the
/// permutations of parallel edges and the flips of loops.
std::int64_t multigraph_automorphisms(const Multigraph& g);

/// Every vertex of degree 3 (a loop counts twice), 2g-2 vertices, 3g-3 edges.
bool validate_trivalent(const Multigraph& g, int genus);

/// Laurent coefficients of the propagator in powers of (2 pi i z).
struct Propagator {
    /// Coefficient of (2 pi i z)^{-2}.
    Rational principal = -1;
    /// (2n - 2, (B_{2n}/2n) E_{2n} / (2n-2)!) for n = 1..n_max.
    std::vector<std::pair<int, QSeries>> terms;
};

Propagator propagator_coeffs(int n_max, std::int64_t order);

enum class Amplitude { Theta, Gamma1, Gamma2 };

/// The printed Gamma1 amplitude contains "6 E4^2 E4"; the alternative
/// reading replaces it by 6 E2^4 E4.
enum class Gamma1Reading { AsPrinted, E2FourthPower };

/// Holomorphic limit of a graph amplitude as a polynomial in E2, E4, E6.
ringstruct::QuasiModularPoly amplitude_polynomial(Amplitude which,
                                                  Gamma1Reading reading = Gamma1Reading::AsPrinted);

QSeries graph_amplitude(Amplitude which, std::int64_t order,
                        Gamma1Reading reading = Gamma1Reading::AsPrinted);

Multigraph amplitude_graph(Amplitude which);

/// sum over the genus-g trivalent graphs of I_Gamma / |Aut Gamma|, g in {2, 3}.
QSeries mirror_F(int genus, std::int64_t order, Gamma1Reading reading = Gamma1Reading::AsPrinted);

inline constexpr double kDefaultOracleBudget = 5e8;

/// d! * (d(d-1)/2)^{2g-2} * d!
double hurwitz_cost_estimate(int degree, int genus);

struct HurwitzRecord {
    int degree = 0;
    int genus = 0;
    std::int64_t tuples = 0;  ///< transitive tuples with trivial product
    Rational count;           ///< tuples / d!
};

/// Counts (alpha, beta, t_1..t_{2g-2}) in S_d^2 x Transp^{2g-2} with
/// [alpha, beta] t_1 ... t_{2g-2} = id generating a transitive subgroup.
/// Throws BudgetExceeded when the cost estimate exceeds `budget`.
HurwitzRecord hurwitz_oracle(int degree, int genus, double budget = kDefaultOracleBudget);

/// Permutations of {0..d-1}: p[i] is the image of i.
using Permutation = std::vector<int>;

/// Whether a single tuple contributes to the oracle count.
bool hurwitz_tuple_valid(const Permutation& alpha, const Permutation& beta,
                         const std::vector<Permutation>& transpositions);

/// (D Ehat2)^g / Delta, known below q^order.
QSeries k3_series(int genus, std::int64_t order);

/// (D Ehat2)^{g-2} D^2 Ehat2 for g >= 2.
QSeries abelian_series(int genus, std::int64_t order);

enum class HirzebruchClass { C, F };

/// F_C = q^{1/2} E4 / eta^12,  F_F = -2 E4 E6 / Delta.
QSeries hirzebruch_series(HirzebruchClass beta, std::int64_t order);

} // namespace modq::enumgeo
