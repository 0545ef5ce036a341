#include "runlab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "runlab/errors.hpp"

namespace runlab {

std::string to_decimal_string(const BigInt& v) { return v.str(); }

std::string to_fraction_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw InvalidInputError("not a decimal integer: '" + s + "'");
    }
}

Rat rat_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw InvalidInputError("zero denominator");
        return Rat(num, den);
    } catch (const InvalidInputError&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInputError("not a rational 'p/q': '" + s + "'");
    }
}

namespace {

Json rat_json(const Rat& v) { return to_fraction_string(v); }

Json real_json(const Real& v) {
    std::ostringstream os;
    os.precision(30);
    os << v;
    return os.str();
}

double double_or_null_guard(double d) { return d; }

Json finite_or_null(double d) {
    if (std::isfinite(d)) return double_or_null_guard(d);
    return nullptr;
}

}  // namespace

Json graph_summary_json(const DeBruijnGraph& g) {
    return Json{{"k", g.k()},
                {"m", g.m()},
                {"vertex_count", g.vertex_count()},
                {"edge_count", g.edge_count()}};
}

std::string edge_list_csv(const DeBruijnGraph& g) {
    std::ostringstream os;
    os << "from,to\n";
    for (auto [u, v] : g.edges()) os << u << "," << v << "\n";
    return os.str();
}

Json coloring_json(const VertexColoring& vc) {
    return Json{{"k", vc.k}, {"m", vc.m}, {"r", vc.colors}, {"colors", vc.assign}};
}

VertexColoring coloring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("m") || !j.contains("r") ||
        !j.contains("colors"))
        throw InvalidInputError("coloring file needs fields k, m, r, colors");
    VertexColoring vc;
    vc.k = j.at("k").get<int>();
    vc.m = j.at("m").get<int>();
    vc.colors = j.at("r").get<int>();
    vc.assign = j.at("colors").get<std::vector<int>>();
    return vc;
}

Json grid_function_json(const GridFunction& f) {
    GridFunction mat = f.materialized();
    Json j{{"k", mat.k()}, {"M", mat.M()}};
    if (mat.range_kind() == RangeKind::discrete) {
        j["r"] = mat.colors();
        j["table"] = mat.int_table();
    } else {
        Json table = Json::array();
        for (const Rat& v : mat.rat_table()) table.push_back(rat_json(v));
        j["table"] = std::move(table);
    }
    return j;
}

GridFunction grid_function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("M") || !j.contains("table"))
        throw InvalidInputError("grid function file needs fields k, M, table");
    int k = j.at("k").get<int>();
    int M = j.at("M").get<int>();
    const Json& table = j.at("table");
    if (j.contains("r") && !j.at("r").is_null()) {
        return GridFunction::discrete_table(k, M, j.at("r").get<int>(),
                                            table.get<std::vector<int>>());
    }
    std::vector<Rat> tab;
    tab.reserve(table.size());
    for (const Json& v : table) {
        if (v.is_string())
            tab.push_back(rat_from_string(v.get<std::string>()));
        else if (v.is_number_integer())
            tab.push_back(Rat(v.get<long long>()));
        else
            throw InvalidInputError("rational table entries must be integers or 'p/q' strings");
    }
    return GridFunction::rational_table(k, M, std::move(tab));
}

Json run_report_json(const RunReport& r) {
    const char* ev = r.event == RunEvent::constant     ? "constant"
                     : r.event == RunEvent::increasing ? "increasing"
                                                       : "decreasing";
    return Json{{"event", ev},
                {"l", r.l},
                {"k", r.k},
                {"M", r.M},
                {"favorable", to_decimal_string(r.favorable)},
                {"total", to_decimal_string(r.total)},
                {"probability", rat_json(r.probability)}};
}

Json mc_estimate_json(const MCEstimate& e) {
    return Json{{"estimate", rat_json(e.estimate)},
                {"hits", e.hits},
                {"samples", e.samples},
                {"std_error", e.std_error},
                {"seed", e.seed}};
}

Json path_json(const DirectedPath& p, const DeBruijnGraph& g) {
    Json words = Json::array();
    for (std::uint64_t v : p.vertices) words.push_back(g.unrank(v));
    return Json{{"vertices", p.vertices},
                {"words", std::move(words)},
                {"length_vertices", p.length_vertices()},
                {"length_edges", p.length_edges()}};
}

Json chvatal_report_json(const ChvatalReport& r) {
    Json j{{"k", r.k},
           {"m", r.m},
           {"r", r.r},
           {"l_edges", r.l_edges},
           {"chi", r.chi},
           {"threshold", to_decimal_string(r.threshold)},
           {"hypothesis_met", r.hypothesis_met},
           {"checked", r.checked},
           {"holds", r.holds()}};
    if (r.checked) {
        j["exhaustive"] = r.exhaustive;
        j["colorings_checked"] = r.colorings_checked;
        j["colorings_with_mono_path"] = r.colorings_with_mono_path;
        if (!r.exhaustive) j["seed"] = r.seed;
        if (r.counterexample) {
            j["counterexample"] = Json{{"k", r.counterexample->k},
                                       {"m", r.counterexample->m},
                                       {"q", r.counterexample->colors},
                                       {"colors", r.counterexample->assign}};
        }
    }
    return j;
}

Json search_result_json(const SearchResult& r) {
    const char* status = r.status == SearchStatus::found       ? "found"
                         : r.status == SearchStatus::exhausted ? "exhausted"
                                                               : "timeout";
    Json j{{"status", status}, {"nodes", r.nodes}, {"repairs", r.repairs}, {"seconds", r.seconds}};
    if (r.coloring) j["coloring"] = coloring_json(*r.coloring);
    return j;
}

Json bridge_report_json(const BridgeReport& r) {
    Json j{{"k", r.k},
           {"M", r.M},
           {"l", r.l},
           {"increasing_tuple_count", to_decimal_string(r.increasing_tuple_count)},
           {"path_count", to_decimal_string(r.path_count)},
           {"identity_holds", true},
           {"hypothesis_checked", r.hypothesis_checked},
           {"probability", rat_json(r.probability)}};
    if (r.hypothesis_checked) {
        j["hypothesis_holds"] = r.hypothesis_holds;
        j["colorings_enumerated"] = r.colorings_enumerated;
    }
    if (r.bound_checked) {
        j["factorial_bound"] = rat_json(r.factorial_bound);
        j["bound_holds"] = r.bound_holds;
    }
    return j;
}

Json adversarial_min_json(const AdversarialMin& r) {
    Json j{{"k", r.k},
           {"M", r.M},
           {"r", r.r},
           {"l", r.l},
           {"min_probability", rat_json(r.min_probability)},
           {"argmin", grid_function_json(r.argmin)},
           {"functions_evaluated", to_decimal_string(r.functions_evaluated)},
           {"exhaustive", r.exhaustive}};
    if (!r.exhaustive) j["seed"] = r.seed;
    return j;
}

Json lower_bound_report_json(const LowerBoundReport& r) {
    return Json{{"k", r.k},
                {"l", r.l},
                {"r", r.r},
                {"M", to_decimal_string(r.M)},
                {"p_lower", rat_json(r.p_lower)},
                {"min_probability", rat_json(r.min_probability)},
                {"exhaustive", r.exhaustive},
                {"holds", r.holds},
                {"functions_evaluated", to_decimal_string(r.functions_evaluated)}};
}

Json impossibility_report_json(const ImpossibilityReport& r) {
    Json j{{"k", r.k},
           {"M", r.M},
           {"exhaustive", r.exhaustive},
           {"tuples_checked", to_decimal_string(r.tuples_checked)},
           {"violations", r.violations}};
    if (!r.exhaustive) j["seed"] = r.seed;
    return j;
}

Json distinctness_report_json(const DistinctnessReport& r) {
    return Json{{"k", r.k},
                {"M", r.M},
                {"product_side", rat_json(r.product_side)},
                {"bound_side", rat_json(r.bound_side)},
                {"meaningful", r.meaningful},
                {"holds", r.holds},
                {"distinct_probability", rat_json(r.distinct_probability)}};
}

Json tower_value_json(const TowerValue& t) {
    Json chain = Json::array();
    for (double d : t.log_chain) chain.push_back(finite_or_null(d));
    Json j{{"level", t.level}, {"log_chain", std::move(chain)}};
    if (t.base_rational)
        j["base"] = rat_json(*t.base_rational);
    else
        j["base"] = real_json(t.base_real);
    switch (t.kind) {
        case TowerKind::exact:
            j["kind"] = "exact";
            j["value"] = rat_json(t.exact_value);
            break;
        case TowerKind::real:
            j["kind"] = "real";
            j["value"] = real_json(t.real_value);
            break;
        case TowerKind::symbolic:
            j["kind"] = "symbolic";
            j["value"] = nullptr;
            break;
    }
    return j;
}

Json bound_report_json(const BoundReport& r) {
    Json j{{"k", r.k}};
    if (r.l) j["l"] = *r.l;
    if (r.r) j["r"] = *r.r;
    if (r.M) {
        if (r.M->is_integer())
            j["M"] = to_decimal_string(r.M->integer_value());
        else
            j["M"] = tower_value_json(*r.M);
    }
    if (r.p_lower) j["p_lower"] = rat_json(*r.p_lower);
    if (r.p_lower_log2) j["p_lower_log2"] = *r.p_lower_log2;
    if (r.theorem3_M) j["theorem3_M"] = tower_value_json(*r.theorem3_M);
    if (r.theorem3_bound) j["theorem3_bound"] = real_json(*r.theorem3_bound);
    if (r.theorem3_vacuous) j["theorem3_vacuous"] = *r.theorem3_vacuous;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InvalidInputError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace runlab
