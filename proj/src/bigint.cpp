#include "fvlab/bigint.hpp"

#include <cctype>

namespace fvlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    bool negative = false;
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        negative = digits.front() == '-';
        digits.remove_prefix(1);
    }
    if (!all_digits(digits)) {
        throw InvalidInput("not a decimal integer: '" + std::string(text) + "'");
    }
    BigInt value{std::string(digits)};
    return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_bigint(text.substr(0, slash));
        BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (whole.empty() || whole == "-" || whole == "+") {
            whole = "0";
        }
        if (!all_digits(frac)) {
            throw InvalidInput("not a decimal number: '" + std::string(text) + "'");
        }
        BigInt w = parse_bigint(whole);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt f{std::string(frac)};
        Rational magnitude = Rational(boost::multiprecision::abs(w)) + Rational(f, scale);
        return negative ? Rational(-magnitude) : magnitude;
    }
    return Rational(parse_bigint(text));
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::size_t bit_length(const BigInt& value) {
    if (value == 0) return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(value)) + 1;
}

std::size_t ceil_log2(const BigInt& value) {
    if (value <= 1) return 0;
    return bit_length(BigInt(value - 1));
}

BigInt integer_root(const BigInt& value, unsigned k) {
    if (value < 0) throw InvalidInput("integer_root of a negative number");
    if (k == 0) throw InvalidInput("integer_root with k = 0");
    if (value < 2 || k == 1) return value;
    // Newton iteration from an overestimate decreases monotonically to the floor root.
    const std::size_t bits = bit_length(value);
    BigInt x = BigInt(1) << ((bits + k - 1) / k);
    while (true) {
        BigInt next = ((k - 1) * x + value / boost::multiprecision::pow(x, k - 1)) / k;
        if (next >= x) break;
        x = next;
    }
    while (boost::multiprecision::pow(x, k) > value) --x;
    while (boost::multiprecision::pow(BigInt(x + 1), k) <= value) ++x;
    return x;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace fvlab
