#include "fvlab/experiments.hpp"

#include <cmath>

namespace fvlab {

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw InvalidInput("slope fit needs two or more points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0) throw InvalidInput("slope fit needs distinct x values");
    return sxy / sxx;
}

double log_bigint(const BigInt& value) {
    if (value <= 0) throw InvalidInput("log of a nonpositive number");
    const std::size_t bits = bit_length(value);
    if (bits <= 60) return std::log(value.convert_to<double>());
    const std::size_t shift = bits - 60;
    const BigInt head = value >> shift;
    return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

std::vector<BigInt> default_density_grid() {
    std::vector<BigInt> grid;
    BigInt a = 1000;
    for (int e = 3; e <= 9; ++e, a *= 10) grid.push_back(a);
    return grid;
}

DensityExperiment density_experiment(std::size_t k, const std::vector<BigInt>& grid) {
    if (k < 1) throw InvalidInput("density experiment needs k >= 1");
    DensityExperiment out;
    out.k = k;
    out.expected_slope = static_cast<double>(k - 1) / static_cast<double>(k);
    std::vector<double> xs, ys;
    for (const auto& a : grid) {
        if (a < 1) throw InvalidInput("density grid values must be positive");
        std::vector<BigInt> x(k, BigInt(0));
        x.back() = a;
        GVector m = approximate_point(OrthantPoint(x));
        BigInt distance = l1_distance(x, m.entries());
        DensityRow row{a, std::move(m), distance, std::nullopt};
        if (k >= 2 && distance > 0) {
            const double lx = log_bigint(a), ly = log_bigint(distance);
            if (!xs.empty()) row.local_slope = (ly - ys.back()) / (lx - xs.back());
            xs.push_back(lx);
            ys.push_back(ly);
        }
        out.rows.push_back(std::move(row));
    }
    if (k >= 2 && xs.size() >= 2) out.fitted_slope = least_squares_slope(xs, ys);
    return out;
}

std::vector<ConvergenceRow> convergence_experiment(const std::string& word, const std::vector<int>& ms) {
    const std::vector<std::string> words = cd_words(cd_word_degree(word));
    const std::string apex(static_cast<std::size_t>(cd_word_degree(word)), 'c');
    if (word == apex) throw InvalidInput("the apex word c^d has no cone coordinate");
    std::size_t target = 0;
    for (const auto& w : words) {
        if (w == apex) continue;
        if (w == word) break;
        ++target;
    }
    std::vector<ConvergenceRow> rows;
    for (int m : ms) {
        OrthantPoint coords = cone_coordinates(stanley_sphere(word, m).cd);
        BigInt norm = 0;
        for (const auto& c : coords.coords()) norm += c;
        double distance = 0.0;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            const Rational share(coords[i], norm);
            const Rational unit = i == target ? Rational(1) : Rational(0);
            distance += to_double(share > unit ? Rational(share - unit) : Rational(unit - share));
        }
        rows.push_back({m, std::move(coords), distance});
    }
    return rows;
}

}  // namespace fvlab
