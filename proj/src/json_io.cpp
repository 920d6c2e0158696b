#include "fvlab/json_io.hpp"

#include <string>

namespace fvlab::json_io {

Json to_json(const std::vector<BigInt>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
    }
    throw InvalidInput("expected an integer or decimal string, got " + j.dump());
}

std::vector<BigInt> bigints_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("expected a JSON array, got " + j.dump());
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(bigint_from_json(item));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("expected a JSON array, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& item : j) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.emplace_back(bigint_from_json(item));
        } else if (item.is_number_float()) {
            // The shortest round-trip decimal form of the double.
            out.push_back(parse_rational(item.dump()));
        } else {
            throw InvalidInput("expected a number, got " + item.dump());
        }
    }
    return out;
}

Json to_json(const FVector& f) { return Json{{"d", f.d()}, {"f", to_json(f.entries())}}; }

Json to_json(const HVector& h) { return Json{{"d", h.d()}, {"h", to_json(h.entries())}}; }

Json to_json(const GVector& g, int d) { return Json{{"d", d}, {"g", to_json(g.entries())}}; }

Json to_json(const GradedPoset& p) {
    Json elements = Json::array();
    for (std::size_t x = 0; x < p.size(); ++x) elements.push_back(Json{{"id", x}, {"rank", p.rank_of(x)}});
    Json covers = Json::array();
    for (const auto& [lo, hi] : p.covers()) covers.push_back(Json::array({lo, hi}));
    return Json{{"elements", std::move(elements)}, {"covers", std::move(covers)}};
}

GradedPoset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers")) {
        throw InvalidInput("poset JSON needs 'elements' and 'covers'");
    }
    const auto& elements = j.at("elements");
    if (!elements.is_array()) throw InvalidInput("'elements' must be an array");
    std::vector<int> ranks(elements.size(), -1);
    for (const auto& e : elements) {
        if (!e.is_object() || !e.contains("id") || !e.contains("rank") || !e.at("id").is_number_unsigned() ||
            !e.at("rank").is_number_integer()) {
            throw InvalidInput("each element needs integer 'id' and 'rank'");
        }
        const auto id = e.at("id").get<std::size_t>();
        if (id >= ranks.size() || ranks[id] != -1) throw InvalidInput("element ids must be 0..n-1 without repeats");
        ranks[id] = e.at("rank").get<int>();
        if (ranks[id] < 0) throw InvalidInput("ranks must be nonnegative");
    }
    std::vector<GradedPoset::Cover> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned()) {
            throw InvalidInput("each cover must be a pair [lower, upper] of element ids");
        }
        covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
    }
    return GradedPoset(std::move(ranks), std::move(covers));
}

Json to_json(const FlagVector& v) {
    Json flag = Json::object();
    for (std::size_t mask = 0; mask < v.counts().size(); ++mask) flag[std::to_string(mask)] = to_string(v.counts()[mask]);
    return Json{{"d", v.d()}, {"flag", std::move(flag)}};
}

FlagVector flag_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("flag")) throw InvalidInput("flag JSON needs 'd' and 'flag'");
    if (!j.at("d").is_number_unsigned()) throw InvalidInput("'d' must be a nonnegative integer");
    const int d = j.at("d").get<int>();
    if (d > 20) throw InvalidInput("flag vectors are limited to d <= 20");
    std::vector<BigInt> counts(std::size_t{1} << d, BigInt(0));
    for (const auto& [key, value] : j.at("flag").items()) {
        const BigInt mask = parse_bigint(key);
        if (mask < 0 || mask >= counts.size()) throw InvalidInput("flag key '" + key + "' is not a subset of [d]");
        counts[mask.convert_to<std::size_t>()] = bigint_from_json(value);
    }
    return FlagVector(d, std::move(counts));
}

Json to_json(const AbPolynomial& p) {
    Json out = Json::object();
    for (const auto& [word, coef] : p.terms()) out[word] = to_string(coef);
    return out;
}

Json to_json(const CdPolynomial& q) {
    Json out = Json::object();
    for (const auto& [word, coef] : q.terms()) out[word] = to_string(coef);
    return out;
}

CdPolynomial cd_from_json(const Json& j, int degree) {
    if (!j.is_object()) throw InvalidInput("cd-polynomial JSON must be an object word -> coefficient");
    if (degree < 0) {
        if (j.empty()) throw InvalidInput("empty cd-polynomial needs an explicit degree");
        degree = cd_word_degree(j.begin().key());
    }
    CdPolynomial q(degree);
    for (const auto& [word, coef] : j.items()) q.add(word, bigint_from_json(coef));
    return q;
}

Json to_json(const Decision& decision) {
    if (decision.accepted) return Json{{"verdict", "accepted"}, {"g", to_json(decision.certificate->entries())}};
    Json out{{"verdict", "rejected"}, {"reason", std::string(to_string(*decision.reason))}};
    if (decision.reason != RejectReason::NonPalindromicH) out["index"] = decision.index;
    if (decision.h) out["h"] = to_json(decision.h->entries());
    return out;
}

Json to_json(const Rank5Witness& w) {
    return Json{{"x", to_json(std::vector<BigInt>(w.x.begin(), w.x.end()))},
                {"y", to_json(std::vector<BigInt>(w.y.begin(), w.y.end()))}};
}

}  // namespace fvlab::json_io
