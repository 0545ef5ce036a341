// Batch front end: every subcommand parses flags, calls one library
// operation, and prints the operation's report.  No numerical logic here.
//
// Exit codes: 0 success, 1 checked property violated (bug signal),
// 2 usage error, 3 resource or time budget exceeded.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "runlab/adversarial.hpp"
#include "runlab/bounds.hpp"
#include "runlab/coloring.hpp"
#include "runlab/debruijn.hpp"
#include "runlab/errors.hpp"
#include "runlab/json_io.hpp"
#include "runlab/monte_carlo.hpp"
#include "runlab/run_prob.hpp"

namespace {

using runlab::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

void emit(const Json& j, const std::string& output) {
    if (output == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    for (const auto& [key, value] : rows) {
        if (output == "csv")
            std::cout << key << "," << value << "\n";
        else
            std::cout << key << ": " << value << "\n";
    }
}

void emit_error(const std::string& type, const std::string& message) {
    Json err{{"error", Json{{"type", type}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (std::uint64_t(rd()) << 32) ^ rd();
}

runlab::CheckMode parse_mode(const std::string& mode) {
    return mode == "sampled" ? runlab::CheckMode::sampled : runlab::CheckMode::exhaustive;
}

runlab::RunEvent parse_event(const std::string& ev) {
    if (ev == "increasing") return runlab::RunEvent::increasing;
    if (ev == "decreasing") return runlab::RunEvent::decreasing;
    return runlab::RunEvent::constant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification lab for runs in sliding-window (k-block-factor) processes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output = "json";
    app.add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();

    int k = 0, m = 0, r = 0, l = 0, threads = 1;
    std::int64_t budget = -1;  // -1: use the operation default
    std::uint64_t samples = 0, seed = 0;
    bool seed_given = false;
    std::string mode = "exhaustive", event = "constant", noise = "discrete";
    std::string coloring_file, function_file;

    auto add_common = [&](CLI::App* cmd, std::initializer_list<std::string> flags) {
        for (const std::string& f : flags) {
            if (f == "k") cmd->add_option("--k", k, "word / window length")->required();
            if (f == "m") cmd->add_option("--m", m, "alphabet / grid size")->required();
            if (f == "r") cmd->add_option("--r", r, "number of colors or values")->required();
            if (f == "l") cmd->add_option("--l", l, "path or run length")->required();
            if (f == "budget") cmd->add_option("--budget", budget, "budget override");
            if (f == "samples") cmd->add_option("--samples", samples, "sample count");
            if (f == "seed") {
                auto* opt = cmd->add_option("--seed", seed, "RNG seed (printed if generated)");
                cmd->parse_complete_callback([opt, &seed_given] { seed_given = opt->count() > 0; });
            }
            if (f == "threads") cmd->add_option("--threads", threads, "worker threads");
            if (f == "mode")
                cmd->add_option("--mode", mode, "exhaustive or sampled")
                    ->check(CLI::IsMember({"exhaustive", "sampled"}));
            if (f == "coloring-file")
                cmd->add_option("--coloring-file", coloring_file, "coloring JSON file")->required();
            if (f == "function-file")
                cmd->add_option("--function-file", function_file, "grid function JSON file")
                    ->required();
            if (f == "event")
                cmd->add_option("--event", event, "run event")
                    ->check(CLI::IsMember({"constant", "increasing", "decreasing"}));
        }
    };

    auto* c_graph = app.add_subcommand("graph", "build D(k,m) and print its summary");
    add_common(c_graph, {"k", "m", "budget"});
    auto* c_chrom = app.add_subcommand("chromatic", "exact chromatic number of D(k,m)");
    add_common(c_chrom, {"k", "m", "budget"});
    auto* c_lift = app.add_subcommand("lift", "lift an edge coloring to a vertex coloring");
    add_common(c_lift, {"coloring-file"});
    auto* c_mono = app.add_subcommand("mono-path", "find a monochromatic directed path");
    add_common(c_mono, {"coloring-file", "l"});
    auto* c_chv = app.add_subcommand("chvatal-check", "check Chvatal's implication on D(k,m)");
    add_common(c_chv, {"k", "m", "r", "l", "mode", "samples", "seed", "threads", "budget"});
    auto* c_search = app.add_subcommand("search-coloring", "search for a path-avoiding coloring");
    add_common(c_search, {"k", "m", "r", "l", "budget"});
    auto* c_h =
        app.add_subcommand("construct-h", "build the four-case grid function from a coloring");
    add_common(c_h, {"coloring-file"});
    auto* c_vh =
        app.add_subcommand("verify-h", "check h has no constant window run on distinct tuples");
    add_common(c_vh, {"coloring-file", "mode", "samples", "seed"});
    auto* c_pe = app.add_subcommand("prob-exact", "exact run probability");
    add_common(c_pe, {"function-file", "event", "l", "budget"});
    auto* c_pm = app.add_subcommand("prob-mc", "Monte Carlo run probability");
    add_common(c_pm, {"function-file", "event", "l", "samples", "seed", "threads"});
    c_pm->add_option("--noise", noise, "noise kind")->check(CLI::IsMember({"discrete", "ceil"}));
    auto* c_adv = app.add_subcommand("adversarial-min", "minimize the constant-run probability");
    add_common(c_adv, {"k", "m", "r", "l", "mode", "samples", "seed", "threads", "budget"});
    auto* c_bridge = app.add_subcommand("bridge-check", "counting identity behind the lower bound");
    add_common(c_bridge, {"function-file", "l", "budget"});
    auto* c_bounds = app.add_subcommand("bounds", "tower constants M, p_lower and Theorem 3 bound");
    add_common(c_bounds, {"k", "l", "r"});
    auto* c_vt2 = app.add_subcommand("verify-theorem2", "worst-case run probability vs p_lower");
    add_common(c_vt2, {"k", "l", "r", "mode", "samples", "seed", "threads", "budget"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("usage", e.what());
        return kExitUsage;
    }

    try {
        if (*c_graph) {
            auto g = runlab::build_graph(
                k, m, budget >= 0 ? std::uint64_t(budget) : runlab::kDefaultVertexBudget);
            if (output == "csv")
                std::cout << runlab::edge_list_csv(g);
            else
                emit(runlab::graph_summary_json(g), output);
            return kExitOk;
        }
        if (*c_chrom) {
            auto g = runlab::build_graph(k, m);
            int chi = runlab::chromatic_number(g, budget >= 0 ? std::uint64_t(budget) : 2000);
            emit(Json{{"k", k}, {"m", m}, {"chi", chi}}, output);
            return kExitOk;
        }
        if (*c_lift) {
            // the file holds a vertex coloring of D(k+1,m) = an edge coloring of D(k,m)
            auto vc = runlab::coloring_from_json(runlab::load_json_file(coloring_file));
            auto ec = runlab::as_edge_coloring(vc);
            auto g = runlab::build_graph(ec.k, ec.m);
            auto lifted = runlab::lift_edge_coloring(g, ec);
            Json j = runlab::coloring_json(lifted);
            j["proper"] = true;  // verified inside lift_edge_coloring
            emit(j, output);
            return kExitOk;
        }
        if (*c_mono) {
            auto vc = runlab::coloring_from_json(runlab::load_json_file(coloring_file));
            auto g = runlab::build_graph(vc.k, vc.m);
            auto p = runlab::find_mono_path(g, vc, l);
            Json j{{"found", p.has_value()}, {"l_vertices", l}};
            if (p) j["path"] = runlab::path_json(*p, g);
            emit(j, output);
            return kExitOk;
        }
        if (*c_chv) {
            runlab::ChvatalOptions opts;
            opts.mode = parse_mode(mode);
            if (opts.mode == runlab::CheckMode::sampled && !seed_given) seed = fresh_seed();
            opts.seed = seed;
            if (samples) opts.samples = samples;
            if (budget >= 0) opts.max_exhaustive = std::uint64_t(budget);
            opts.threads = threads;
            auto g = runlab::build_graph(k, m);
            auto rep = runlab::check_chvatal(g, r, l, opts);
            emit(runlab::chvatal_report_json(rep), output);
            return rep.holds() ? kExitOk : kExitViolation;
        }
        if (*c_search) {
            auto res = runlab::search_coloring(
                k, m, r, l, std::chrono::milliseconds(budget >= 0 ? budget : 10000));
            emit(runlab::search_result_json(res), output);
            return res.status == runlab::SearchStatus::timeout ? kExitResource : kExitOk;
        }
        if (*c_h) {
            auto g = runlab::coloring_from_json(runlab::load_json_file(coloring_file));
            auto h = runlab::construct_h(g);
            emit(runlab::grid_function_json(h), output);
            return kExitOk;
        }
        if (*c_vh) {
            auto g = runlab::coloring_from_json(runlab::load_json_file(coloring_file));
            runlab::ImpossibilityOptions opts;
            opts.mode = parse_mode(mode);
            if (opts.mode == runlab::CheckMode::sampled && !seed_given) seed = fresh_seed();
            opts.seed = seed;
            if (samples) opts.samples = samples;
            auto rep = runlab::verify_impossibility(g, opts);
            emit(runlab::impossibility_report_json(rep), output);
            return kExitOk;
        }
        if (*c_pe) {
            auto f = runlab::grid_function_from_json(runlab::load_json_file(function_file));
            runlab::ProcessSpec spec{f, runlab::NoiseKind::discrete_uniform};
            auto rep = runlab::exact_run_probability(
                spec, parse_event(event), l,
                budget >= 0 ? std::uint64_t(budget) : 200'000'000);
            emit(runlab::run_report_json(rep), output);
            return kExitOk;
        }
        if (*c_pm) {
            auto f = runlab::grid_function_from_json(runlab::load_json_file(function_file));
            runlab::ProcessSpec spec{f, noise == "ceil" ? runlab::NoiseKind::uniform_ceil
                                                        : runlab::NoiseKind::discrete_uniform};
            if (!seed_given) seed = fresh_seed();
            auto est = runlab::mc_estimate(spec, parse_event(event), l, samples ? samples : 100'000,
                                           seed, threads);
            emit(runlab::mc_estimate_json(est), output);
            return kExitOk;
        }
        if (*c_adv) {
            runlab::MinimizeOptions opts;
            opts.mode = parse_mode(mode);
            if (opts.mode == runlab::CheckMode::sampled && !seed_given) seed = fresh_seed();
            opts.seed = seed;
            if (samples) opts.samples = samples;
            if (budget >= 0) opts.max_exhaustive = std::uint64_t(budget);
            opts.threads = threads;
            auto rep = runlab::adversarial_min(k, m, r, l, opts);
            emit(runlab::adversarial_min_json(rep), output);
            return kExitOk;
        }
        if (*c_bridge) {
            auto f = runlab::grid_function_from_json(runlab::load_json_file(function_file));
            runlab::BridgeOptions opts;
            if (budget >= 0) opts.coloring_budget = std::uint64_t(budget);
            auto rep = runlab::counting_bridge_check(f, l, opts);
            emit(runlab::bridge_report_json(rep), output);
            return kExitOk;
        }
        if (*c_bounds) {
            runlab::BoundReport rep = runlab::p_lower(k, l, r);
            if (k >= 3) {
                runlab::BoundReport t3 = runlab::theorem3_constants(k);
                rep.theorem3_M = t3.theorem3_M;
                rep.theorem3_bound = t3.theorem3_bound;
                rep.theorem3_vacuous = t3.theorem3_vacuous;
            }
            emit(runlab::bound_report_json(rep), output);
            return kExitOk;
        }
        if (*c_vt2) {
            runlab::MinimizeOptions opts;
            opts.mode = parse_mode(mode);
            if (opts.mode == runlab::CheckMode::sampled && !seed_given) seed = fresh_seed();
            opts.seed = seed;
            if (samples) opts.samples = samples;
            if (budget >= 0) opts.max_exhaustive = std::uint64_t(budget);
            opts.threads = threads;
            auto rep = runlab::verify_lower_bound(k, l, r, opts);
            emit(runlab::lower_bound_report_json(rep), output);
            return rep.holds ? kExitOk : kExitViolation;
        }
    } catch (const runlab::IdentityViolationError& e) {
        emit_error("identity-violation", e.what());
        return kExitViolation;
    } catch (const runlab::ConstructionViolationError& e) {
        emit_error("construction-violation", e.what());
        return kExitViolation;
    } catch (const runlab::ResourceError& e) {
        emit_error("resource", e.what());
        return kExitResource;
    } catch (const runlab::Error& e) {
        emit_error("usage", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitViolation;
    }
    return kExitUsage;
}
