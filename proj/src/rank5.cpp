#include "fvlab/rank5.hpp"

#include <chrono>
#include <string>

namespace fvlab {

Rank5Instance::Rank5Instance(BigInt a, BigInt b, BigInt d2_coef)
    : c2d(std::move(a)), dc2(std::move(b)), d2(std::move(d2_coef)) {
    if (c2d < 0 || dc2 < 0 || d2 < 0) throw InvalidInput("rank-5 coefficients must be nonnegative");
}

std::size_t Rank5Instance::encoding_bits() const { return ceil_log2(c2d) + ceil_log2(dc2) + ceil_log2(d2); }

bool Rank5Witness::verifies(const Rank5Instance& inst) const {
    for (int i = 0; i < 3; ++i) {
        if (x[i] < 0 || y[i] < 0) return false;
    }
    return x[0] + x[1] + x[2] == inst.c2d && y[0] + y[1] + y[2] == inst.dc2 &&
           x[0] * y[0] + x[1] * y[1] + x[2] * y[2] == inst.target();
}

namespace {

// g = gcd(a, b) = a * s + b * t
BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
    BigInt old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
    while (r != 0) {
        const BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

BigInt ceil_div(const BigInt& n, const BigInt& d) { return -floor_div(-n, d); }

BigInt mod_floor(const BigInt& n, const BigInt& m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r;
}

// a y1 + b y2 = rhs with y1, y2 >= 0 and y1 + y2 <= total, a >= b >= 0; maximize y1, then y2.
std::optional<std::pair<BigInt, BigInt>> solve_pair(const BigInt& a, const BigInt& b, const BigInt& rhs,
                                                    const BigInt& total) {
    if (rhs < 0) return std::nullopt;
    if (a == 0) {
        if (rhs != 0) return std::nullopt;
        return std::pair<BigInt, BigInt>{total, BigInt(0)};
    }
    if (b == 0) {
        if (rhs % a != 0) return std::nullopt;
        BigInt y1 = rhs / a;
        if (y1 > total) return std::nullopt;
        return std::pair<BigInt, BigInt>{y1, total - y1};
    }
    BigInt s, t;
    const BigInt g = extended_gcd(a, b, s, t);
    if (rhs % g != 0) return std::nullopt;
    const BigInt step = b / g;
    // a y1 = rhs (mod b)  <=>  y1 = (rhs / g) * s (mod b / g)
    const BigInt residue = mod_floor((rhs / g) * s, step);
    BigInt hi = rhs / a;
    if (hi > total) hi = total;
    BigInt lo = 0;
    if (a > b) {
        if (BigInt need = ceil_div(rhs - b * total, a - b); need > lo) lo = need;
    } else if (rhs > b * total) {
        return std::nullopt;
    }
    if (hi < lo) return std::nullopt;
    const BigInt y1 = hi - mod_floor(hi - residue, step);
    if (y1 < lo) return std::nullopt;
    BigInt y2 = (rhs - a * y1) / b;
    return std::pair<BigInt, BigInt>{y1, std::move(y2)};
}

}  // namespace

Rank5Result decide_rank5(const Rank5Instance& inst) {
    Rank5Result result;
    const BigInt target = inst.target();
    if (target < 0) return result;
    const BigInt& total_x = inst.c2d;
    const BigInt& total_y = inst.dc2;
    const BigInt x1_min = ceil_div(total_x, 3);
    for (BigInt x1 = total_x; x1 >= x1_min; --x1) {
        const BigInt rest = total_x - x1;
        const BigInt x2_max = rest < x1 ? rest : x1;
        const BigInt x2_min = ceil_div(rest, 2);
        for (BigInt x2 = x2_max; x2 >= x2_min; --x2) {
            ++result.nodes;
            const BigInt x3 = rest - x2;
            if (target < x3 * total_y || target > x1 * total_y) continue;
            auto solved = solve_pair(x1 - x3, x2 - x3, target - x3 * total_y, total_y);
            if (!solved) continue;
            Rank5Witness w{{x1, x2, x3}, {solved->first, solved->second, total_y - solved->first - solved->second}};
            result.feasible = true;
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

Rank5Result brute_oracle_rank5(const Rank5Instance& inst, const Caps& caps) {
    if (inst.c2d > caps.max_brute_rank5 || inst.dc2 > caps.max_brute_rank5) {
        throw CapExceeded("brute-force oracle limited to A, B <= " + std::to_string(caps.max_brute_rank5));
    }
    Rank5Result result;
    const auto a = inst.c2d.convert_to<long long>();
    const auto b = inst.dc2.convert_to<long long>();
    const BigInt target = inst.target();
    for (long long x1 = 0; x1 <= a; ++x1) {
        for (long long x2 = 0; x1 + x2 <= a; ++x2) {
            const long long x3 = a - x1 - x2;
            for (long long y1 = 0; y1 <= b; ++y1) {
                for (long long y2 = 0; y1 + y2 <= b; ++y2) {
                    ++result.nodes;
                    const long long y3 = b - y1 - y2;
                    if (BigInt(x1 * y1 + x2 * y2 + x3 * y3) == target) {
                        result.feasible = true;
                        result.witness = Rank5Witness{{x1, x2, x3}, {y1, y2, y3}};
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

bool cdc_zero_relation(const BigInt& a, const BigInt& b, const BigInt& d2) { return d2 == a * b; }

std::vector<Rank5BenchRow> benchmark_rank5(const std::vector<std::size_t>& bit_sizes) {
    std::vector<Rank5BenchRow> rows;
    for (std::size_t bits : bit_sizes) {
        const std::size_t ba = (bits + 2) / 3;
        const std::size_t bb = (bits + 1) / 3;
        const std::size_t bd = bits / 3;
        auto ones = [](std::size_t b) { return b == 0 ? BigInt(1) : BigInt((BigInt(1) << b) - 1); };
        Rank5Instance inst(ones(ba), ones(bb), ones(bd));
        const auto start = std::chrono::steady_clock::now();
        Rank5Result res = decide_rank5(inst);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back({inst.encoding_bits(), std::move(inst), res.feasible, res.nodes, elapsed.count()});
    }
    return rows;
}

}  // namespace fvlab
