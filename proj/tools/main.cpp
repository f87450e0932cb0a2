// Command-line surface over the library: exact laws, unimodularity checks,
// quotient verdicts, weak-limit diagnostics.  Exit codes: 0 = success/PASS,
// 1 = FAIL or Lawless verdict, 2 = usage or input error.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unimod/canonical.hpp"
#include "unimod/errors.hpp"
#include "unimod/families.hpp"
#include "unimod/graph.hpp"
#include "unimod/io.hpp"
#include "unimod/limits.hpp"
#include "unimod/measures.hpp"
#include "unimod/quotient.hpp"

namespace {

using namespace unimod;

// Either a --family/--n pair or a JSON file (graph or family spec).
struct HostArgs {
    std::string file;
    std::string family;
    std::int64_t n = 0;
    int delta = kDefaultDelta;

    void attach(CLI::App* cmd, bool positional = true) {
        if (positional) cmd->add_option("host", file, "graph or family-spec JSON file");
        cmd->add_option("--family", family, "family name (e.g. T_ball, cycle)");
        cmd->add_option("--n", n, "family parameter");
        cmd->add_option("--delta", delta, "degree cap")->capture_default_str();
    }

    Generated load() const {
        if (!family.empty()) {
            FamilySpec spec;
            spec.family = family;
            spec.n = n;
            spec.delta = delta;
            return generate(spec);
        }
        if (file.empty()) throw InvalidInput("provide a host file or --family");
        return host_from_json(load_json_file(file));
    }
};

Json measure_json(const SustainedMeasure& m) {
    Json out = Json::array();
    for (int k = 0; k < m.classes().count(); ++k)
        out.push_back({{"class_rep_vertex", m.classes().rep(k)},
                       {"mass", rat_to_string(m.mass_at(k))}});
    return out;
}

void print_measure(const SustainedMeasure& m, bool json) {
    if (json) {
        std::cout << measure_json(m).dump(2) << "\n";
        return;
    }
    for (int k = 0; k < m.classes().count(); ++k)
        std::cout << "class " << k << "  rep=" << m.classes().rep(k)
                  << "  size=" << m.classes().orbit[k].size()
                  << "  mass=" << rat_to_string(m.mass_at(k)) << "\n";
}

// Load a measure file, resolving its host against the graph argument.
SustainedMeasure load_measure(const Graph& host, const std::string& path) {
    Json j = load_json_file(path);
    if (j.contains("host")) {
        SustainedMeasure m = measure_from_json(j);
        if (canonical_graph_key(m.host()) != canonical_graph_key(host))
            throw InvalidInput("measure host does not match the graph argument");
        return m;
    }
    std::vector<std::pair<Vertex, Rational>> mass;
    for (const auto& entry : j.at("mass"))
        mass.emplace_back(entry.at("class_rep_vertex").get<int>(), rat_from_json_fields(entry));
    return measure_from_vertex_masses(host, mass);
}

LocalFunction parse_function(const std::string& name, int delta) {
    if (name == "deg") return LocalFunction::degree(delta);
    if (name.rfind("const:", 0) == 0) return LocalFunction::constant(rat_from_string(name.substr(6)));
    throw InvalidInput("unknown function: " + name + " (use deg or const:<q>)");
}

LimitMeasure parse_target(const std::string& name, int delta) {
    if (name == "mu_S") return LimitMeasure::mu_s(delta);
    if (name == "mu_S_bar") return LimitMeasure::mu_s_bar(delta);
    if (name == "dirac_Z") return LimitMeasure::dirac(z_oracle(delta));
    if (name == "mix_X")
        return LimitMeasure::mixture({{Rational(2, 3), LimitMeasure::mu_s(delta)},
                                      {Rational(1, 3), LimitMeasure::mu_s_bar(delta)}});
    if (name == "mix_Y")
        return LimitMeasure::mixture({{Rational(1, 3), LimitMeasure::mu_s(delta)},
                                      {Rational(2, 3), LimitMeasure::mu_s_bar(delta)}});
    throw InvalidInput("unknown target: " + name +
                       " (use mu_S, mu_S_bar, dirac_Z, mix_X, mix_Y)");
}

int run(int argc, char** argv) {
    CLI::App app{"exact laws, unimodularity and weak limits of finite graphs"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (results are identical for any value)");

    bool json = false;
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "machine-readable output"); };

    // law
    auto* law_cmd = app.add_subcommand("law", "the law of a finite graph");
    HostArgs law_host;
    law_host.attach(law_cmd);
    add_json(law_cmd);

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "automorphism orbits of a finite graph");
    HostArgs orbits_host;
    orbits_host.attach(orbits_cmd);
    add_json(orbits_cmd);

    // check-unimodular
    auto* check_cmd = app.add_subcommand("check-unimodular", "mass-transport check of a measure");
    std::string check_graph, check_measure;
    bool use_criterion = false, use_definitional = false;
    check_cmd->add_option("graph", check_graph, "host graph JSON file")->required();
    check_cmd->add_option("measure", check_measure, "measure JSON file")->required();
    check_cmd->add_flag("--criterion", use_criterion, "neighbor-count criterion (connected hosts)");
    check_cmd->add_flag("--definitional", use_definitional, "mass-transport identity per class");
    add_json(check_cmd);

    // solve-unimodular
    auto* solve_cmd = app.add_subcommand("solve-unimodular", "all unimodular sustained measures");
    HostArgs solve_host;
    solve_host.attach(solve_cmd);
    add_json(solve_cmd);

    // quotient
    auto* quot_cmd = app.add_subcommand("quotient", "labeled orbit quotient operations");
    quot_cmd->require_subcommand(1);
    std::string quot_file, quot_base = "";
    std::string quot_mass = "1";
    auto* qv = quot_cmd->add_subcommand("validate", "cycle-consistency check");
    auto* qm = quot_cmd->add_subcommand("measure", "path-product measure from a base orbit");
    auto* qj = quot_cmd->add_subcommand("judicial", "decide judiciality");
    for (auto* c : {qv, qm, qj}) {
        c->add_option("quotient", quot_file, "quotient JSON file")->required();
        add_json(c);
    }
    qm->add_option("--base", quot_base, "base orbit (default: first)");
    qm->add_option("--mass", quot_mass, "mass at the base orbit")->capture_default_str();

    // dist
    auto* dist_cmd = app.add_subcommand("dist", "ultrametric distance of two rooted graphs");
    std::string dist_g1, dist_g2;
    int dist_r1 = 0, dist_r2 = 0;
    dist_cmd->add_option("g1", dist_g1, "first graph JSON file")->required();
    dist_cmd->add_option("root1", dist_r1, "first root vertex")->required();
    dist_cmd->add_option("g2", dist_g2, "second graph JSON file")->required();
    dist_cmd->add_option("root2", dist_r2, "second root vertex")->required();
    add_json(dist_cmd);

    // ball-dist
    auto* bd_cmd = app.add_subcommand("ball-dist", "radius-r ball-type distribution");
    HostArgs bd_host;
    int bd_r = 1;
    bd_host.attach(bd_cmd);
    bd_cmd->add_option("--r", bd_r, "ball radius")->required();
    add_json(bd_cmd);

    // weak-limit
    auto* wl_cmd = app.add_subcommand("weak-limit", "TV distance to a limit measure, per n (CSV)");
    std::string wl_family, wl_target;
    int wl_r = 2, wl_nmin = 2, wl_nmax = 10, wl_delta = kDefaultDelta;
    wl_cmd->add_option("--family", wl_family, "rooted family name")->required();
    wl_cmd->add_option("--target", wl_target, "limit measure name")->required();
    wl_cmd->add_option("--r", wl_r, "ball radius")->capture_default_str();
    wl_cmd->add_option("--n-min", wl_nmin, "first n")->capture_default_str();
    wl_cmd->add_option("--n-max", wl_nmax, "last n")->capture_default_str();
    wl_cmd->add_option("--delta", wl_delta, "degree cap")->capture_default_str();
    add_json(wl_cmd);

    // negligence
    auto* neg_cmd = app.add_subcommand("negligence", "law shift when deleting a vertex set");
    HostArgs neg_host;
    neg_host.attach(neg_cmd);
    std::vector<int> neg_delete;
    std::string neg_f = "deg";
    neg_cmd->add_option("--delete", neg_delete, "vertices to delete")
        ->required()
        ->delimiter(',');
    neg_cmd->add_option("--f", neg_f, "test function: deg or const:<q>")->capture_default_str();
    add_json(neg_cmd);

    // counterexample
    auto* ce_cmd = app.add_subcommand("counterexample", "decorated-ray counterexample numbers");
    ce_cmd->require_subcommand(1);
    auto* ce_avg = ce_cmd->add_subcommand("avg-degree", "average degrees at the stage indices");
    int ce_stages = 3;
    ce_avg->add_option("--stages", ce_stages, "number of stages")->capture_default_str();
    add_json(ce_avg);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a family instance as graph JSON");
    HostArgs gen_host;
    gen_host.attach(gen_cmd);
    add_json(gen_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    (void)threads;  // single-threaded evaluation is already deterministic

    if (*law_cmd) {
        print_measure(law(law_host.load().graph), json);
        return 0;
    }

    if (*orbits_cmd) {
        Graph X = orbits_host.load().graph;
        auto orbits = automorphism_orbits(X);
        if (json) {
            std::cout << Json(orbits).dump(2) << "\n";
        } else {
            for (size_t k = 0; k < orbits.size(); ++k) {
                std::cout << "orbit " << k << " :";
                for (Vertex v : orbits[k]) std::cout << " " << v;
                std::cout << "\n";
            }
        }
        return 0;
    }

    if (*check_cmd) {
        if (use_criterion && use_definitional)
            throw InvalidInput("choose at most one of --criterion/--definitional");
        Graph X = host_from_json(load_json_file(check_graph)).graph;
        SustainedMeasure m = load_measure(X, check_measure);
        UnimodularityVerdict v =
            use_criterion ? check_unimodular_criterion(m) : check_unimodular_definitional(m);
        if (json) {
            Json out{{"pass", v.pass}};
            if (v.witness)
                out["witness"] = {{"birooted_class", hex_encode(v.witness->birooted_class)},
                                  {"lhs", rat_to_string(v.witness->lhs)},
                                  {"rhs", rat_to_string(v.witness->rhs)}};
            std::cout << out.dump(2) << "\n";
        } else if (v.pass) {
            std::cout << "PASS\n";
        } else {
            std::cout << "FAIL  lhs=" << rat_to_string(v.witness->lhs)
                      << "  rhs=" << rat_to_string(v.witness->rhs) << "\n";
        }
        return v.pass ? 0 : 1;
    }

    if (*solve_cmd) {
        SolveResult r = solve_unimodular(solve_host.load().graph);
        if (json) {
            Json parts = Json::array();
            for (const auto& p : r.parts)
                parts.push_back({{"host_components", p.host_components},
                                 {"measure", measure_json(p.measure)}});
            std::cout << Json{{"parts", parts}}.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < r.parts.size(); ++i) {
                std::cout << "part " << i << "  components:";
                for (int c : r.parts[i].host_components) std::cout << " " << c;
                std::cout << "\n";
                print_measure(r.parts[i].measure, false);
            }
        }
        return 0;
    }

    if (*quot_cmd) {
        QuotientInput q = quotient_from_json(load_json_file(quot_file));
        if (*qv) {
            if (q.ray) {  // chain + period-1 tail: always consistent
                std::cout << (json ? "{\"pass\": true}" : "PASS") << "\n";
                return 0;
            }
            ConsistencyVerdict v = validate_consistency(*q.finite);
            if (json) {
                Json out{{"pass", v.pass}};
                if (v.witness)
                    out["witness"] = {{"cycle", v.witness->cycle},
                                      {"product", rat_to_string(v.witness->product)}};
                std::cout << out.dump(2) << "\n";
            } else if (v.pass) {
                std::cout << "PASS\n";
            } else {
                std::cout << "FAIL  cycle product " << rat_to_string(v.witness->product) << ":";
                for (const auto& o : v.witness->cycle) std::cout << " " << o;
                std::cout << "\n";
            }
            return v.pass ? 0 : 1;
        }
        if (*qm) {
            if (!q.finite) throw InvalidInput("path-product measure needs a finite quotient");
            if (quot_base.empty()) quot_base = q.finite->orbits.at(0);
            auto mu = path_product_measure(*q.finite, quot_base, rat_from_string(quot_mass));
            Json out = Json::object();
            for (const auto& [o, v] : mu) {
                if (json)
                    out[o] = rat_to_string(v);
                else
                    std::cout << o << "  " << rat_to_string(v) << "\n";
            }
            if (json) std::cout << out.dump(2) << "\n";
            return 0;
        }
        JudicialityVerdict v = q.ray ? decide_judicial(*q.ray) : decide_judicial(*q.finite);
        if (json) {
            Json out{{"judicial", v.judicial}};
            if (v.judicial && q.ray) {
                Json prefix = Json::array();
                for (const auto& m : v.ray->prefix_mass) prefix.push_back(rat_to_string(m));
                out["prefix_mass"] = prefix;
                out["tail_ratio"] = rat_to_string(v.ray->tail_ratio);
            } else if (v.judicial) {
                Json mu = Json::object();
                for (const auto& [o, m] : v.measure) mu[o] = rat_to_string(m);
                out["measure"] = mu;
            } else {
                out["reason"] = v.reason == LawlessReason::InconsistentCycle ? "InconsistentCycle"
                                                                            : "DivergentMass";
                if (v.witness)
                    out["witness"] = {{"cycle", v.witness->cycle},
                                      {"product", rat_to_string(v.witness->product)}};
            }
            std::cout << out.dump(2) << "\n";
        } else if (!v.judicial) {
            std::cout << "Lawless("
                      << (v.reason == LawlessReason::InconsistentCycle ? "InconsistentCycle"
                                                                       : "DivergentMass")
                      << ")\n";
        } else if (q.ray) {
            for (size_t i = 0; i < v.ray->prefix_mass.size(); ++i)
                std::cout << i << "  " << rat_to_string(v.ray->prefix_mass[i]) << "\n";
            std::cout << "tail ratio  " << rat_to_string(v.ray->tail_ratio) << "\n";
        } else {
            for (const auto& [o, m] : v.measure)
                std::cout << o << "  " << rat_to_string(m) << "\n";
        }
        return v.judicial ? 0 : 1;
    }

    if (*dist_cmd) {
        Graph g1 = host_from_json(load_json_file(dist_g1)).graph;
        Graph g2 = host_from_json(load_json_file(dist_g2)).graph;
        Rational d = rho({g1, dist_r1}, {g2, dist_r2});
        if (json)
            std::cout << Json{{"rho", rat_to_string(d)}}.dump(2) << "\n";
        else
            std::cout << rat_to_string(d) << "\n";
        return 0;
    }

    if (*bd_cmd) {
        BallDistribution d = ball_distribution(bd_host.load().graph, bd_r);
        if (json) {
            std::cout << distribution_to_json(d).dump(2) << "\n";
        } else {
            for (const auto& [k, v] : d.freq)
                std::cout << hex_encode(k) << "  " << rat_to_string(v) << "\n";
        }
        return 0;
    }

    if (*wl_cmd) {
        LimitMeasure target = parse_target(wl_target, wl_delta);
        std::vector<int> ns;
        for (int n = wl_nmin; n <= wl_nmax; ++n) ns.push_back(n);
        auto fam = [&](int n) {
            FamilySpec spec;
            spec.family = wl_family;
            spec.n = n;
            spec.delta = wl_delta;
            return generate(spec).graph;
        };
        auto rows = convergence_report(fam, target, wl_r, ns, pow2(-40));
        if (json) {
            Json out = Json::array();
            for (const auto& row : rows)
                out.push_back({{"n", row.n}, {"radius", wl_r}, {"tv_distance", rat_to_string(row.tv)}});
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "n,radius,tv_distance,tv_approx\n";  // tv_approx is approximate
            for (const auto& row : rows)
                std::cout << row.n << "," << wl_r << "," << rat_to_string(row.tv) << ","
                          << rat_to_double(row.tv) << "\n";
        }
        return 0;
    }

    if (*neg_cmd) {
        Generated g = neg_host.load();
        Rational d = negligence_delta(g.graph, neg_delete, parse_function(neg_f, neg_host.delta));
        if (json)
            std::cout << Json{{"delta", rat_to_string(d)}}.dump(2) << "\n";
        else
            std::cout << rat_to_string(d) << "\n";
        return 0;
    }

    if (*ce_cmd) {
        Json out = Json::array();
        if (!json) std::cout << "stage,k,l,avg_degree_at_k,avg_degree_at_l\n";
        // the stage-1 ball degenerates to a single vertex, so rows start at 2
        for (int s = 2; s < 2 + ce_stages; ++s) {
            auto [k, l] = counterexample_indices(s);
            Rational ak = average_degree(counterexample_ball(k - 1));
            Rational al = average_degree(counterexample_ball(l - 1));
            if (json)
                out.push_back({{"stage", s},
                               {"k", k},
                               {"l", l},
                               {"avg_degree_at_k", rat_to_string(ak)},
                               {"avg_degree_at_l", rat_to_string(al)}});
            else
                std::cout << s << "," << k << "," << l << "," << rat_to_string(ak) << ","
                          << rat_to_string(al) << "\n";
        }
        if (json) std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (*gen_cmd) {
        Generated g = gen_host.load();
        Json out = graph_to_json(g.graph);
        if (g.root) out["root"] = *g.root;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const unimod::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unimod::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
