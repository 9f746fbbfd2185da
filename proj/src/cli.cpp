#include "kshell/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kshell/graphs.hpp"
#include "kshell/io.hpp"
#include "kshell/stanley.hpp"

namespace kshell::cli {

namespace {

using nlohmann::json;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

SearchLimits limits_of(const RunConfig& cfg) {
    SearchLimits l;
    if (cfg.timeout_seconds > 0)
        l.timeout = std::chrono::milliseconds(static_cast<long long>(cfg.timeout_seconds * 1000));
    l.deterministic = cfg.deterministic;
    return l;
}

ExpansionVector alpha_of(const RunConfig& cfg, int n) {
    if (cfg.alpha.empty()) return ExpansionVector::uniform(cfg.k, n);
    if (static_cast<int>(cfg.alpha.size()) != n)
        throw InputError("--alpha has " + std::to_string(cfg.alpha.size()) + " entries, input has " +
                         std::to_string(n) + " vertices");
    return ExpansionVector(cfg.alpha);
}

json face_json(const Complex& c, Face f) {
    json a = json::array();
    for (const auto& l : c.labels_of(f)) a.push_back(l);
    return a;
}

json certificate_json(const Complex& c, const ShellingCertificate& cert,
                      const ConditionBResult* b) {
    json steps = json::array();
    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        const StepCertificate& step = cert.steps[s];
        json js;
        js["j"] = step.j;
        js["intersection_facets"] = json::array();
        for (Face f : step.intersection_facets) js["intersection_facets"].push_back(face_json(c, f));
        js["sigmas"] = json::array();
        for (Face f : step.sigmas) js["sigmas"].push_back(face_json(c, f));
        // Restriction sets come from the box-product diagnostic; e_sets[0]
        // belongs to j = 1, so step j is at position j-1.
        if (b && b->ok && step.j - 1 < static_cast<int>(b->e_sets.size())) {
            js["restriction_sets"] = json::array();
            for (Face e : b->e_sets[static_cast<std::size_t>(step.j - 1)])
                js["restriction_sets"].push_back(face_json(c, e));
        } else {
            js["restriction_sets"] = nullptr;
        }
        steps.push_back(std::move(js));
    }
    json out;
    out["k"] = cert.k;
    out["order"] = cert.order;
    out["steps"] = std::move(steps);
    out["accepted"] = cert.accepted;
    if (cert.accepted) {
        out["failure"] = nullptr;
    } else {
        out["failure"] = {{"j", cert.failure_j},
                          {"condition", cert.failure_condition == StepCondition::dimension ? "i" : "ii"}};
    }
    return out;
}

std::string face_text(const Complex& c, Face f) {
    if (f == 0) return "{}";
    std::string out = "{";
    bool head = true;
    for (const auto& l : c.labels_of(f)) {
        if (!head) out += ' ';
        out += l;
        head = false;
    }
    return out + "}";
}

std::string order_text(const std::vector<int>& order) {
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(order[i]);
    }
    return out;
}

std::string permutation_count(int r) {
    if (r > 20) return "> 2^62";
    unsigned long long f = 1;
    for (int i = 2; i <= r; ++i) f *= static_cast<unsigned long long>(i);
    return std::to_string(f);
}

int emit_search_result(const RunConfig& cfg, const Complex& cx, const SearchResult& res,
                       std::ostream& out) {
    if (cfg.format == "json") {
        json j;
        j["k"] = cfg.k;
        j["status"] = res.status == SearchStatus::found      ? "found"
                      : res.status == SearchStatus::none     ? "none"
                                                             : "undecided";
        j["nodes"] = res.nodes;
        j["permutations"] = permutation_count(cx.facet_count());
        if (res.order) {
            j["order"] = res.order->order;
            j["facets"] = json::array();
            for (int idx : res.order->order)
                j["facets"].push_back(face_json(cx, cx.facets()[static_cast<std::size_t>(idx)]));
        } else {
            j["order"] = nullptr;
        }
        out << j.dump(2) << '\n';
    } else {
        switch (res.status) {
            case SearchStatus::found: {
                out << "k-shelling found (k=" << cfg.k << "): " << order_text(res.order->order) << '\n';
                for (int idx : res.order->order)
                    out << "  " << face_text(cx, cx.facets()[static_cast<std::size_t>(idx)]) << '\n';
                break;
            }
            case SearchStatus::none:
                out << "no k-shelling exists (k=" << cfg.k << ")\n";
                break;
            case SearchStatus::undecided:
                out << "undecided: timeout before the search space was exhausted\n";
                break;
        }
        out << "search space: " << permutation_count(cx.facet_count())
            << " permutations, nodes explored: " << res.nodes << '\n';
    }
    switch (res.status) {
        case SearchStatus::found: return kExitAccept;
        case SearchStatus::none: return kExitReject;
        default: return kExitUndecided;
    }
}

int cmd_check_order(const RunConfig& cfg, std::ostream& out) {
    Complex cx = load_complex(cfg.input);
    if (!cfg.has_order) throw InputError("check-order needs --order");
    ShellingOrder order{cfg.k, cfg.order};
    ShellingCertificate cert = verify_k_shelling(cx, order);
    ConditionBResult b = check_condition_b(cx, order);
    bool c_ok = check_condition_c(cx, order);

    if (cfg.format == "json") {
        json j = certificate_json(cx, cert, &b);
        j["condition_b"] = b.ok;
        j["condition_c"] = c_ok;
        out << j.dump(2) << '\n';
    } else {
        if (cert.accepted) {
            out << "accepted: order " << order_text(cert.order) << " is a " << cfg.k << "-shelling\n";
        } else {
            out << "rejected at step j=" << cert.failure_j << " (condition "
                << (cert.failure_condition == StepCondition::dimension ? "i" : "ii") << ")\n";
        }
        for (const StepCertificate& step : cert.steps) {
            out << "  step j=" << step.j << ": intersection facets";
            for (Face f : step.intersection_facets) out << ' ' << face_text(cx, f);
            out << ", sigmas";
            for (Face f : step.sigmas) out << ' ' << face_text(cx, f);
            out << '\n';
        }
        out << "condition (b): " << (b.ok ? "holds" : "fails at j=" + std::to_string(b.failure_j))
            << '\n';
        out << "condition (c): " << (c_ok ? "holds" : "fails") << '\n';
    }
    return cert.accepted ? kExitAccept : kExitReject;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    Complex cx = load_complex(cfg.input);
    SearchResult res = find_k_shelling(cx, cfg.k, limits_of(cfg));
    return emit_search_result(cfg, cx, res, out);
}

int cmd_expand_complex(const RunConfig& cfg, std::ostream& out) {
    Complex cx = load_complex(cfg.input);
    Complex expanded = expand_complex(cx, alpha_of(cfg, cx.universe().size()));
    if (cfg.format == "json") {
        json j;
        j["vertices"] = expanded.universe().labels();
        j["facets"] = json::array();
        for (Face f : expanded.facets()) j["facets"].push_back(face_json(expanded, f));
        out << j.dump(2) << '\n';
    } else {
        out << emit_complex(expanded);
    }
    return kExitAccept;
}

int cmd_expand_ideal(const RunConfig& cfg, std::ostream& out) {
    MonomialIdeal ideal = load_ideal(cfg.input);
    MonomialIdeal expanded = expand_ideal(ideal, alpha_of(cfg, ideal.variables().size()));
    if (cfg.format == "json") {
        json j;
        j["vars"] = expanded.variables().labels();
        j["generators"] = json::array();
        for (const Monomial& g : expanded.generators())
            j["generators"].push_back(monomial_to_string(g, expanded.variables()));
        out << j.dump(2) << '\n';
    } else {
        out << emit_ideal(expanded);
    }
    return kExitAccept;
}

int cmd_sr_ideal(const RunConfig& cfg, std::ostream& out) {
    Complex cx = load_complex(cfg.input);
    MonomialIdeal ideal = stanley_reisner_ideal(cx);
    if (cfg.format == "json") {
        json j;
        j["vars"] = ideal.variables().labels();
        j["generators"] = json::array();
        for (const Monomial& g : ideal.generators())
            j["generators"].push_back(monomial_to_string(g, ideal.variables()));
        out << j.dump(2) << '\n';
    } else {
        out << emit_ideal(ideal);
    }
    return kExitAccept;
}

int cmd_indep(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_graph(cfg.input);
    Complex cx = independence_complex(g);
    if (cfg.format == "json") {
        json j;
        j["vertices"] = cx.universe().labels();
        j["facets"] = json::array();
        for (Face f : cx.facets()) j["facets"].push_back(face_json(cx, f));
        out << j.dump(2) << '\n';
    } else {
        out << emit_complex(cx);
    }
    return kExitAccept;
}

int cmd_duplicate(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_graph(cfg.input);
    Graph dup = duplicate(g, alpha_of(cfg, g.vertex_count()));
    if (cfg.format == "json") {
        json j;
        j["vertices"] = dup.vertices().labels();
        j["edges"] = json::array();
        for (auto [u, v] : dup.edges())
            j["edges"].push_back({dup.vertices().label(u), dup.vertices().label(v)});
        out << j.dump(2) << '\n';
    } else {
        out << emit_graph(dup);
    }
    return kExitAccept;
}

int cmd_simplicial_sets(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_graph(cfg.input);
    auto sets = find_k_simplicial_sets(g, cfg.k);
    auto set_text = [&](Face f) {
        std::string s = "{";
        bool head = true;
        for (int v : face_indices(f)) {
            if (!head) s += ' ';
            s += g.vertices().label(v);
            head = false;
        }
        return s + "}";
    };
    if (cfg.format == "json") {
        json j;
        j["k"] = cfg.k;
        j["sets"] = json::array();
        for (const auto& [s, parts] : sets) {
            json entry;
            entry["s"] = json::array();
            for (int v : face_indices(s)) entry["s"].push_back(g.vertices().label(v));
            entry["parts"] = json::array();
            for (Face p : parts) {
                json part = json::array();
                for (int v : face_indices(p)) part.push_back(g.vertices().label(v));
                entry["parts"].push_back(std::move(part));
            }
            j["sets"].push_back(std::move(entry));
        }
        out << j.dump(2) << '\n';
    } else {
        for (const auto& [s, parts] : sets) {
            out << "S=" << set_text(s) << " parts:";
            for (Face p : parts) out << ' ' << set_text(p);
            out << '\n';
        }
        out << sets.size() << " " << cfg.k << "-simplicial set(s)\n";
    }
    return sets.empty() ? kExitReject : kExitAccept;
}

int cmd_decide_graph(const RunConfig& cfg, std::ostream& out) {
    Graph g = load_graph(cfg.input);
    GraphStrategy strategy;
    if (cfg.strategy == "direct") {
        strategy = GraphStrategy::direct;
    } else if (cfg.strategy == "recursive") {
        strategy = GraphStrategy::recursive;
    } else {
        throw InputError("--strategy must be 'direct' or 'recursive'");
    }
    Complex cx = independence_complex(g);
    SearchResult res = decide_k_shellable_graph(g, cfg.k, strategy, limits_of(cfg));
    return emit_search_result(cfg, cx, res, out);
}

int cmd_stanley(const RunConfig& cfg, std::ostream& out) {
    Complex cx = load_complex(cfg.input);
    ShellingOrder order{cfg.k, {}};
    if (cfg.has_order) {
        order.order = cfg.order;
    } else {
        SearchResult res = find_k_shelling(cx, cfg.k, limits_of(cfg));
        if (res.status == SearchStatus::undecided) return kExitUndecided;
        if (res.status == SearchStatus::none) {
            out << "no k-shelling exists (k=" << cfg.k << "); no decomposition\n";
            return kExitReject;
        }
        order = *res.order;
    }

    StanleyDecomposition dec = stanley_decomposition(cx, order);
    build_filtration(cx, order);  // validates the step identities
    bool partition_ok = verify_partition(dec, cx, cfg.max_degree);
    int target = cfg.target;
    if (target < 0) {
        int facet = face_size(cx.facets().front());
        if (facet % cfg.k != 0)
            throw InputError("facet cardinality is not divisible by k; pass --target explicitly");
        target = facet / cfg.k;
    }
    SdepthCheck bound = sdepth_bound_check(dec, target);

    if (cfg.format == "json") {
        json spaces = json::array();
        for (const StanleySpace& sp : dec.spaces) {
            json s;
            s["i"] = sp.i;
            s["j"] = sp.j;
            s["u"] = monomial_to_string(sp.u, cx.universe());
            s["Z"] = face_json(cx, sp.z_vars);
            spaces.push_back(std::move(s));
        }
        json j;
        j["spaces"] = std::move(spaces);
        j["min_Z"] = bound.min_z;
        j["target"] = target;
        j["partition_ok"] = partition_ok;
        j["max_degree"] = cfg.max_degree;
        out << j.dump(2) << '\n';
    } else {
        out << "order: " << order_text(order.order) << " (k=" << order.k << ")\n";
        for (const StanleySpace& sp : dec.spaces) {
            out << "  (" << sp.i << "," << sp.j << ") u=" << monomial_to_string(sp.u, cx.universe())
                << "  Z=" << face_text(cx, sp.z_vars) << '\n';
        }
        out << "min |Z| = " << bound.min_z << ", target = " << target << " -> "
            << (bound.pass ? "bound holds" : "bound fails") << '\n';
        out << "partition to degree " << cfg.max_degree << ": " << (partition_ok ? "ok" : "BROKEN")
            << '\n';
    }
    return (partition_ok && bound.pass) ? kExitAccept : kExitReject;
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
    Complex cx = load_complex(cfg.input);
    if (cfg.format == "json") {
        json j;
        j["degrees"] = json::array();
        for (int d = 0; d <= cfg.max_degree; ++d) j["degrees"].push_back(hilbert_function(cx, d));
        out << j.dump(2) << '\n';
    } else {
        for (int d = 0; d <= cfg.max_degree; ++d)
            out << d << ' ' << hilbert_function(cx, d) << '\n';
    }
    return kExitAccept;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "check-order") return cmd_check_order(config, out);
        if (config.command == "search") return cmd_search(config, out);
        if (config.command == "expand-complex") return cmd_expand_complex(config, out);
        if (config.command == "expand-ideal") return cmd_expand_ideal(config, out);
        if (config.command == "sr-ideal") return cmd_sr_ideal(config, out);
        if (config.command == "indep") return cmd_indep(config, out);
        if (config.command == "duplicate") return cmd_duplicate(config, out);
        if (config.command == "simplicial-sets") return cmd_simplicial_sets(config, out);
        if (config.command == "decide-graph") return cmd_decide_graph(config, out);
        if (config.command == "stanley") return cmd_stanley(config, out);
        if (config.command == "hilbert") return cmd_hilbert(config, out);
        err << "error: unknown command '" << config.command << "'\n";
        return kExitInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInput;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-shellability toolkit for simplicial complexes, monomial ideals and graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string order_csv, alpha_csv;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input) sub->add_option("input", cfg.input, "input file")->required();
        sub->add_option("--format", cfg.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--timeout", cfg.timeout_seconds, "search timeout in seconds");
        sub->add_flag("--deterministic,!--no-deterministic", cfg.deterministic,
                      "reproducible output (default on)");
    };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", cfg.k, "codimension parameter k"); };
    auto add_alpha = [&](CLI::App* sub) {
        sub->add_option("--alpha", alpha_csv, "comma-separated multiplicities, one per vertex");
    };

    auto* check = app.add_subcommand("check-order", "verify an explicit facet order");
    add_common(check);
    add_k(check);
    check->add_option("--order", order_csv, "comma-separated facet indices")->required();

    auto* search = app.add_subcommand("search", "search for a k-shelling order");
    add_common(search);
    add_k(search);

    auto* expand_cx = app.add_subcommand("expand-complex", "expansion of a complex");
    add_common(expand_cx);
    add_k(expand_cx);
    add_alpha(expand_cx);

    auto* expand_id = app.add_subcommand("expand-ideal", "expansion of a monomial ideal");
    add_common(expand_id);
    add_k(expand_id);
    add_alpha(expand_id);

    auto* sr = app.add_subcommand("sr-ideal", "Stanley-Reisner ideal of a complex");
    add_common(sr);

    auto* indep = app.add_subcommand("indep", "independence complex of a graph");
    add_common(indep);

    auto* dup = app.add_subcommand("duplicate", "vertex duplication of a graph");
    add_common(dup);
    add_k(dup);
    add_alpha(dup);

    auto* simp = app.add_subcommand("simplicial-sets", "list the k-simplicial sets of a graph");
    add_common(simp);
    add_k(simp);

    auto* decide = app.add_subcommand("decide-graph", "decide k-shellability of a graph");
    add_common(decide);
    add_k(decide);
    decide->add_option("--strategy", cfg.strategy, "direct|recursive")
        ->check(CLI::IsMember({"direct", "recursive"}));

    auto* stanley = app.add_subcommand("stanley", "Stanley decomposition from a k-shelling");
    add_common(stanley);
    add_k(stanley);
    stanley->add_option("--order", order_csv, "comma-separated facet indices");
    stanley->add_option("--max-degree", cfg.max_degree, "partition verification degree cap");
    stanley->add_option("--target", cfg.target, "depth target (default: facet size / k)");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the face ring");
    add_common(hilbert);
    hilbert->add_option("--max-degree", cfg.max_degree, "largest degree to report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    auto parse_csv = [&](const std::string& csv, std::vector<int>& into, const char* what) {
        if (csv.empty()) return false;
        std::istringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                into.push_back(std::stoi(item));
            } catch (...) {
                err << "error: bad " << what << " entry '" << item << "'\n";
                throw CLI::RuntimeError(kExitInput);
            }
        }
        return true;
    };
    try {
        cfg.has_order = parse_csv(order_csv, cfg.order, "--order");
        parse_csv(alpha_csv, cfg.alpha, "--alpha");
    } catch (const CLI::RuntimeError&) {
        return kExitInput;
    }
    return run(cfg, out, err);
}

}  // namespace kshell::cli
