#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fvlab/bigint.hpp"
#include "fvlab/cd_algebra.hpp"
#include "fvlab/macaulay.hpp"

namespace fvlab {

/// Ordinary least-squares slope of ys against xs.
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// log of a positive big integer, exact in the leading 53 bits.
double log_bigint(const BigInt& value);

struct DensityRow {
    BigInt a;
    GVector m;           // approximate_point(x(a))
    BigInt distance;     // ||x(a) - M(a)||_1
    std::optional<double> local_slope;  // log-log slope against the previous row
};

struct DensityExperiment {
    std::size_t k = 0;
    std::vector<DensityRow> rows;
    std::optional<double> fitted_slope;  // absent for k = 1, where every distance is 0
    double expected_slope = 0.0;         // (k - 1) / k
};

/// x(a) = (0, ..., 0, a) against its approximation, for each a in the grid.
DensityExperiment density_experiment(std::size_t k, const std::vector<BigInt>& grid);

/// 10^3, 10^4, ..., 10^9.
std::vector<BigInt> default_density_grid();

struct ConvergenceRow {
    int m = 0;
    OrthantPoint coords{{}};
    double distance = 0.0;  // l1 distance from the l1-normalized coords to e_w
};

/// cone_coordinates of stanley_sphere(word, m) for each m, normalized and compared with e_word.
std::vector<ConvergenceRow> convergence_experiment(const std::string& word, const std::vector<int>& ms);

}  // namespace fvlab
