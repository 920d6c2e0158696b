#include "fvlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "fvlab/cd_algebra.hpp"
#include "fvlab/complex.hpp"
#include "fvlab/experiments.hpp"
#include "fvlab/gorenstein.hpp"
#include "fvlab/json_io.hpp"
#include "fvlab/macaulay.hpp"
#include "fvlab/rank5.hpp"
#include "fvlab/simplicial_decider.hpp"
#include "fvlab/vector_calculus.hpp"

namespace fvlab::cli {

namespace {

using json_io::Json;

Json parse_json_arg(const std::string& text) {
    std::string body = text;
    if (!text.empty() && text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw InvalidInput("cannot read '" + text.substr(1) + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    try {
        return Json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   item.end());
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<BigInt> bigint_list(const std::string& text) {
    if (!text.empty() && text.front() == '[') return json_io::bigints_from_json(parse_json_arg(text));
    std::vector<BigInt> out;
    for (const auto& item : split_list(text)) out.push_back(parse_bigint(item));
    return out;
}

std::vector<int> int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& v : bigint_list(text)) {
        if (v < 0 || v > 1'000'000) throw InvalidInput("list entry out of range: " + to_string(v));
        out.push_back(v.convert_to<int>());
    }
    return out;
}

void check_d(int given, int inferred) {
    if (given >= 0 && given != inferred) {
        throw InvalidInput("--d " + std::to_string(given) + " does not match the vector length (d = " +
                           std::to_string(inferred) + ")");
    }
}

struct PosetSource {
    std::string poset_json;
    std::string kind;
    int n = -1;
    int m = -1;
    int d = -1;
    std::string word;

    void attach(CLI::App* sub) {
        sub->add_option("--poset", poset_json, "Poset JSON, or @file");
        sub->add_option("--kind", kind, "boolean | polygon | dihedral | path | point | stanley");
        sub->add_option("--n", n, "atoms of the boolean lattice / edges of the path");
        sub->add_option("--m", m, "polygon size");
        sub->add_option("--d", d, "dihedral sphere rank parameter");
        sub->add_option("--word", word, "cd-word for --kind stanley");
    }

    GradedPoset build() const {
        if (!poset_json.empty()) return json_io::poset_from_json(parse_json_arg(poset_json));
        auto need = [](int value, const char* flag) {
            if (value < 0) throw InvalidInput(std::string("this kind needs ") + flag);
            return value;
        };
        if (kind == "boolean") return boolean_lattice(need(n, "--n"));
        if (kind == "polygon") return polygon(need(m, "--m"));
        if (kind == "dihedral") return dihedral_sphere(need(d, "--d"));
        if (kind == "path") return path_poset(need(n, "--n"));
        if (kind == "point") return point_poset();
        if (kind == "stanley") {
            if (word.empty()) throw InvalidInput("--kind stanley needs --word");
            return stanley_sphere(word, need(m, "--m")).poset;
        }
        throw InvalidInput("give --poset or --kind (boolean | polygon | dihedral | path | point | stanley)");
    }
};

Json density_json(const DensityExperiment& exp) {
    Json rows = Json::array();
    for (const auto& row : exp.rows) {
        Json r{{"a", to_string(row.a)}, {"m", json_io::to_json(row.m.entries())}, {"distance", to_string(row.distance)}};
        r["local_slope"] = row.local_slope ? Json(*row.local_slope) : Json(nullptr);
        rows.push_back(std::move(r));
    }
    Json out{{"k", exp.k}, {"rows", std::move(rows)}};
    out["fitted_slope"] = exp.fitted_slope ? Json(*exp.fitted_slope) : Json(nullptr);
    out["expected_slope"] = exp.expected_slope;
    if (exp.k == 1) out["note"] = "k = 1: every orthant point is an M-sequence, distances are 0 and no slope is fitted";
    return out;
}

std::string density_csv(const DensityExperiment& exp) {
    std::ostringstream os;
    os << "a,distance,local_slope\n";
    for (const auto& row : exp.rows) {
        os << to_string(row.a) << ',' << to_string(row.distance) << ',';
        if (row.local_slope) os << *row.local_slope;
        os << '\n';
    }
    return os.str();
}

}  // namespace

Outcome run(const std::vector<std::string>& args, const Caps& caps) {
    CLI::App app{"fvlab: exact face-vector, M-sequence and cd-index computations", "fvlab"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print this help message and exit");

    std::function<Outcome()> action;
    auto set = [&](CLI::App* sub, std::function<Outcome()> fn) {
        sub->callback([&action, fn = std::move(fn)] { action = fn; });
    };
    auto json_outcome = [](const Json& doc, int code = kSuccess) { return Outcome{code, doc.dump() + "\n", ""}; };

    // transform
    auto* transform = app.add_subcommand("transform", "f/h/g vector transforms");
    transform->require_subcommand(1);
    int t_d = -1;
    std::string t_vec;
    for (const char* name : {"f2h", "h2f", "h2g", "g2h"}) {
        auto* sub = transform->add_subcommand(name);
        sub->add_option("--d", t_d, "dimension");
        const std::string which(name);
        const std::string flag = std::string("--") + which[0];
        sub->add_option(flag, t_vec, "vector as a JSON array")->required();
        set(sub, [&, which] {
            std::vector<BigInt> values = json_io::bigints_from_json(parse_json_arg(t_vec));
            if (which == "f2h") {
                FVector f(std::move(values));
                check_d(t_d, f.d());
                return json_outcome(json_io::to_json(f_to_h(f)));
            }
            if (which == "h2f") {
                HVector h(std::move(values));
                check_d(t_d, h.d());
                return json_outcome(json_io::to_json(h_to_f(h)));
            }
            if (which == "h2g") {
                HVector h(std::move(values));
                check_d(t_d, h.d());
                return json_outcome(json_io::to_json(h_to_g(h), h.d()));
            }
            if (t_d < 1) throw InvalidInput("g2h needs --d");
            return json_outcome(json_io::to_json(g_to_h(GVector(std::move(values)), t_d)));
        });
    }

    // decide simplicial
    auto* decide = app.add_subcommand("decide", "membership deciders");
    decide->require_subcommand(1);
    auto* simplicial = decide->add_subcommand("simplicial", "is v the f-vector of a simplicial polytope?");
    int s_d = -1;
    std::string s_f;
    simplicial->add_option("--d", s_d, "dimension")->required();
    simplicial->add_option("--f", s_f, "f-vector (f_1..f_d) as a JSON array")->required();
    set(simplicial, [&] {
        const std::vector<Rational> values = json_io::rationals_from_json(parse_json_arg(s_f));
        check_d(s_d, static_cast<int>(values.size()));
        const Decision decision = decide_simplicial_values(values);
        return json_outcome(json_io::to_json(decision), decision.accepted ? kSuccess : kNegative);
    });

    // msequence
    auto* mseq = app.add_subcommand("msequence", "Macaulay representations and M-sequences");
    mseq->require_subcommand(1);
    auto* check = mseq->add_subcommand("check");
    std::string m_g;
    check->add_option("--g", m_g, "(g_1..g_k) as a JSON array")->required();
    set(check, [&] {
        const MSequenceCheck result = is_m_sequence(GVector(json_io::bigints_from_json(parse_json_arg(m_g))));
        Json doc{{"m_sequence", static_cast<bool>(result)}};
        if (!result) {
            doc["failure"] = result.failure == MSequenceCheck::Failure::NegativeEntry ? "negative-entry"
                                                                                     : "macaulay-violation";
            doc["index"] = result.index;
        }
        return json_outcome(doc, result ? kSuccess : kNegative);
    });
    auto* rep = mseq->add_subcommand("rep");
    std::string m_a;
    unsigned m_i = 0;
    rep->add_option("--a", m_a, "positive integer")->required();
    rep->add_option("--i", m_i, "index")->required();
    set(rep, [&] {
        const BigInt a = parse_bigint(m_a);
        const MacaulayRep r = macaulay_rep(a, m_i);
        Json terms = Json::array();
        for (const auto& t : r.terms()) terms.push_back(Json{{"top", to_string(t.top)}, {"bottom", t.bottom}});
        return json_outcome(Json{{"a", to_string(a)},
                                 {"i", m_i},
                                 {"terms", std::move(terms)},
                                 {"pseudo_power", to_string(pseudo_power(a, m_i))}});
    });
    auto* approx = mseq->add_subcommand("approx");
    std::string m_x;
    approx->add_option("--x", m_x, "orthant point as a JSON array")->required();
    set(approx, [&] {
        const OrthantPoint x(json_io::bigints_from_json(parse_json_arg(m_x)));
        const GVector m = approximate_point(x);
        return json_outcome(Json{{"x", json_io::to_json(x.coords())},
                                 {"m", json_io::to_json(m.entries())},
                                 {"distance", to_string(l1_distance(x.coords(), m.entries()))}});
    });

    // poset
    auto* poset = app.add_subcommand("poset", "graded posets");
    poset->require_subcommand(1);
    PosetSource src;
    auto* build = poset->add_subcommand("build");
    src.attach(build);
    set(build, [&] { return json_outcome(json_io::to_json(src.build())); });
    auto* flag = poset->add_subcommand("flag");
    src.attach(flag);
    set(flag, [&] { return json_outcome(json_io::to_json(flag_vector(src.build()))); });
    auto* eulerian = poset->add_subcommand("eulerian");
    src.attach(eulerian);
    set(eulerian, [&] {
        const bool ok = is_eulerian(src.build());
        return json_outcome(Json{{"eulerian", ok}}, ok ? kSuccess : kNegative);
    });
    auto* gorenstein = poset->add_subcommand("gorenstein");
    src.attach(gorenstein);
    bool modular = false;
    gorenstein->add_flag("--modular", modular, "use the prime-field rank instead of exact rationals");
    set(gorenstein, [&] {
        const GorensteinCheck result =
            is_gorenstein_star(src.build(), caps, modular ? HomologyField::PrimeField : HomologyField::Rational);
        Json doc{{"gorenstein", result.ok}};
        if (result.failing_face) doc["failing_face"] = *result.failing_face;
        return json_outcome(doc, result.ok ? kSuccess : kNegative);
    });
    auto* decide_flag = poset->add_subcommand("decide-flag", "exhaustive Gorenstein* realization of a flag vector");
    std::string p_flag;
    decide_flag->add_option("--flag", p_flag, "flag vector JSON, or @file")->required();
    set(decide_flag, [&] {
        const FlagDecision result = decide_flag_gorenstein(json_io::flag_from_json(parse_json_arg(p_flag)), caps);
        Json doc;
        int code = kSuccess;
        switch (result.verdict) {
            case FlagDecision::Verdict::Realizable:
                doc["verdict"] = "realizable";
                doc["witness"] = json_io::to_json(*result.witness);
                break;
            case FlagDecision::Verdict::NotRealizable:
                doc["verdict"] = "not-realizable";
                code = kNegative;
                break;
            case FlagDecision::Verdict::CapExceeded:
                doc["verdict"] = "cap-exceeded";
                code = kCapExceeded;
                break;
        }
        doc["nodes"] = std::to_string(result.nodes);
        return json_outcome(doc, code);
    });

    // cd
    auto* cd = app.add_subcommand("cd", "ab-index and cd-index");
    cd->require_subcommand(1);
    auto* from_flag = cd->add_subcommand("from-flag");
    std::string c_flag;
    from_flag->add_option("--flag", c_flag, "flag vector JSON, or @file")->required();
    set(from_flag, [&] {
        const AbPolynomial psi = ab_index(flag_to_ab(json_io::flag_from_json(parse_json_arg(c_flag))));
        try {
            return json_outcome(Json{{"cd", json_io::to_json(ab_to_cd(psi))}});
        } catch (const CdInexpressible& e) {
            return json_outcome(Json{{"error", "cd-inexpressible"}, {"residual", json_io::to_json(e.residual())}},
                                kNegative);
        }
    });
    auto* expand = cd->add_subcommand("expand");
    std::string c_poly;
    int c_degree = -1;
    expand->add_option("--cd", c_poly, "cd-polynomial JSON")->required();
    expand->add_option("--degree", c_degree, "degree (needed for an empty polynomial)");
    set(expand, [&] {
        const CdPolynomial q = json_io::cd_from_json(parse_json_arg(c_poly), c_degree);
        return json_outcome(Json{{"ab", json_io::to_json(cd_expand(q))}});
    });
    auto* stanley = cd->add_subcommand("stanley");
    std::string c_word;
    int c_m = 0;
    bool with_poset = false;
    stanley->add_option("--word", c_word, "cd-word")->required();
    stanley->add_option("--m", c_m, "polygon size for each d")->required();
    stanley->add_flag("--with-poset", with_poset, "include the joined poset");
    set(stanley, [&] {
        StanleySphere sphere = stanley_sphere(c_word, c_m);
        Json doc{{"cd", json_io::to_json(sphere.cd)}};
        if (with_poset) doc["poset"] = json_io::to_json(sphere.poset);
        return json_outcome(doc);
    });
    auto* words = cd->add_subcommand("words");
    int w_degree = 0;
    words->add_option("--degree", w_degree, "degree")->required();
    set(words, [&] {
        const auto list = cd_words(w_degree);
        return json_outcome(Json{{"degree", w_degree}, {"count", list.size()}, {"words", list}});
    });
    auto* coords = cd->add_subcommand("coords");
    std::string k_poly;
    coords->add_option("--cd", k_poly, "cd-polynomial JSON")->required();
    set(coords, [&] {
        const CdPolynomial q = json_io::cd_from_json(parse_json_arg(k_poly));
        const OrthantPoint point = cone_coordinates(q);
        std::vector<std::string> labels;
        for (const auto& w : cd_words(q.degree())) {
            if (w != std::string(static_cast<std::size_t>(q.degree()), 'c')) labels.push_back(w);
        }
        return json_outcome(Json{{"words", labels}, {"coords", json_io::to_json(point.coords())}});
    });

    // rank5
    auto* rank5 = app.add_subcommand("rank5", "rank-5 cd-index diophantine system");
    rank5->require_subcommand(1);
    auto* r_decide = rank5->add_subcommand("decide");
    std::string r_a, r_b, r_d2;
    bool r_stats = false;
    r_decide->add_option("--c2d", r_a, "[c^2 d]")->required();
    r_decide->add_option("--dc2", r_b, "[d c^2]")->required();
    r_decide->add_option("--d2", r_d2, "[d^2]")->required();
    r_decide->add_flag("--stats", r_stats, "add node count and elapsed time");
    set(r_decide, [&] {
        const Rank5Instance inst(parse_bigint(r_a), parse_bigint(r_b), parse_bigint(r_d2));
        const auto start = std::chrono::steady_clock::now();
        const Rank5Result res = decide_rank5(inst);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        Json doc{{"verdict", res.feasible ? "feasible" : "infeasible"}};
        if (res.witness) doc["witness"] = json_io::to_json(*res.witness);
        if (r_stats) {
            doc["nodes"] = std::to_string(res.nodes);
            doc["elapsed_ms"] = elapsed.count();
        }
        return json_outcome(doc, res.feasible ? kSuccess : kNegative);
    });
    auto* r_bench = rank5->add_subcommand("bench", "time decide on instances of growing bit size");
    std::string r_bits = "8,16,24,32";
    r_bench->add_option("--bits", r_bits, "comma-separated bit sizes N");
    set(r_bench, [&] {
        std::vector<std::size_t> bits;
        for (int b : int_list(r_bits)) bits.push_back(static_cast<std::size_t>(b));
        Json rows = Json::array();
        double prev = 0.0;
        for (const auto& row : benchmark_rank5(bits)) {
            Json r{{"bits", row.bits},
                   {"c2d", to_string(row.instance.c2d)},
                   {"dc2", to_string(row.instance.dc2)},
                   {"d2", to_string(row.instance.d2)},
                   {"feasible", row.feasible},
                   {"nodes", std::to_string(row.nodes)},
                   {"seconds", row.seconds}};
            r["growth"] = prev > 0 ? Json(row.seconds / prev) : Json(nullptr);
            prev = row.seconds;
            rows.push_back(std::move(r));
        }
        return json_outcome(Json{{"rows", std::move(rows)}});
    });

    // experiment
    auto* experiment = app.add_subcommand("experiment", "data for density and convergence plots");
    experiment->require_subcommand(1);
    auto* density = experiment->add_subcommand("density");
    std::size_t e_k = 2;
    std::string e_grid;
    std::string e_format = "json";
    density->add_option("--k", e_k, "orthant dimension")->required();
    density->add_option("--grid", e_grid, "comma-separated values of a (default 10^3..10^9)");
    density->add_option("--format", e_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    set(density, [&] {
        const auto grid = e_grid.empty() ? default_density_grid() : bigint_list(e_grid);
        const DensityExperiment exp = density_experiment(e_k, grid);
        if (e_format == "csv") return Outcome{kSuccess, density_csv(exp), ""};
        return json_outcome(density_json(exp));
    });
    auto* convergence = experiment->add_subcommand("convergence");
    std::string v_word;
    std::string v_ms = "8,16,32,64";
    convergence->add_option("--word", v_word, "cd-word other than c^d")->required();
    convergence->add_option("--m", v_ms, "comma-separated polygon sizes");
    set(convergence, [&] {
        Json rows = Json::array();
        for (const auto& row : convergence_experiment(v_word, int_list(v_ms))) {
            rows.push_back(Json{{"m", row.m}, {"coords", json_io::to_json(row.coords.coords())}, {"distance", row.distance}});
        }
        return json_outcome(Json{{"word", v_word}, {"rows", std::move(rows)}});
    });

    // stats
    auto* stats = app.add_subcommand("stats", "scalar statistics");
    stats->require_subcommand(1);
    auto* fat = stats->add_subcommand("fatness");
    std::string st_f;
    fat->add_option("--f", st_f, "f-vector (f_1..f_4) of a 4-polytope")->required();
    set(fat, [&] {
        const Rational value = fatness(FVector(json_io::bigints_from_json(parse_json_arg(st_f))));
        return json_outcome(Json{{"fatness", to_string(value)}, {"approx", to_double(value)}});
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    std::ostringstream out, err;
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return Outcome{code == 0 ? kSuccess : kInputError, out.str(), err.str()};
    }
    try {
        if (!action) throw InvalidInput("no command given");
        return action();
    } catch (const CapExceeded& e) {
        return Outcome{kCapExceeded, Json{{"error", "cap-exceeded"}, {"message", e.what()}}.dump() + "\n",
                       std::string("cap exceeded: ") + e.what() + "\n"};
    } catch (const InvalidInput& e) {
        return Outcome{kInputError, Json{{"error", "invalid-input"}, {"message", e.what()}}.dump() + "\n",
                       std::string("invalid input: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return Outcome{kInputError, Json{{"error", "failure"}, {"message", e.what()}}.dump() + "\n",
                       std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace fvlab::cli
