/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Command line front end. run_command never exits the process; it returns
// 0 (ok or pass), 1 (verification failed), 2 (usage) or 3 (degenerate input).
// Results go to `out` (JSON or one point per line), summaries to `err`.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mf/brackets.hpp"
#include "mf/combinatorics.hpp"
#include "mf/cremona.hpp"
#include "mf/error.hpp"
#include "mf/json_io.hpp"
#include "mf/omega.hpp"
#include "mf/suites.hpp"
#include "mf/trees.hpp"
#include "mf/veronese.hpp"

namespace mf {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitDegenerate = 3 };

/// Seed from MF_SEED when it holds a decimal integer, else 0.
inline std::uint64_t default_seed() {
    const char* env = std::getenv("MF_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used == std::char_traits<char>::length(env)) return v;
    } catch (const std::exception&) {
    }
    return 0;
}

/// "a,b,c;d,e,f;..." -> points.
inline std::vector<ProjectivePoint> parse_point_list(std::string_view text) {
    std::vector<ProjectivePoint> pts;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(';', start);
        pts.push_back(parse_point(text.substr(start, end == std::string_view::npos ? end : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return pts;
}

namespace detail {

struct CliOptions {
    unsigned n = 0;
    std::string point;
    std::string points;
    std::string config;
    std::string tree_file;
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 10;
    std::int64_t bound = kDefaultCoefficientBound;
    bool timing = false;
};

inline int run_dim(const CliOptions& o, std::ostream& out, std::ostream& err) {
    require_half_count(o.n);
    const unsigned n = o.n;
    const Integer r = binomial(2 * n - 1, n), s = binomial(2 * n - 1, static_cast<long>(n) - 2);
    const Integer diff = r - s;
    const Integer hook = factorial(2 * n) / (factorial(n + 1) * factorial(n));
    const std::size_t basis = omega_basis(n)->dimension();
    const bool equal = diff == hook && Integer(static_cast<unsigned long>(basis)) == hook;
    Json j{{"n", n},
           {"R", r.get_str()},
           {"S", s.get_str()},
           {"incidence_difference", diff.get_str()},
           {"hook", hook.get_str()},
           {"basis_size", basis},
           {"status", equal ? "pass" : "fail"}};
    out << j.dump(2) << '\n';
    err << r.get_str() << " - " << s.get_str() << " = " << diff.get_str() << " = " << 2 * n << "!/(" << n + 1
        << "!*" << n << "!) = " << hook.get_str() << ", basis " << basis << ": " << (equal ? "pass" : "fail")
        << '\n';
    return equal ? kExitOk : kExitFail;
}

inline std::string profile_of(const StableTree& t) {
    const std::size_t a = t.labels_at(0).size(), b = t.labels_at(1).size();
    return std::to_string(std::min(a, b)) + "|" + std::to_string(std::max(a, b));
}

inline int run_enum2(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const auto trees = enumerate_two_vertex(o.n);
    std::map<std::string, std::size_t> hist;
    std::size_t no_central = 0;
    Json list = Json::array();
    for (const auto& t : trees) {
        ++hist[profile_of(t)];
        if (std::holds_alternative<BalancedSplit>(contract(t))) ++no_central;
        list.push_back(to_json(t));
    }
    Json profiles = Json::object();
    for (const auto& [k, v] : hist) profiles[k] = v;
    out << Json{{"n", o.n}, {"count", trees.size()}, {"no_central", no_central}, {"profiles", profiles},
                {"trees", list}}
               .dump(2)
        << '\n';
    err << trees.size() << " two-vertex stable trees, " << no_central << " without a central vertex\n";
    return kExitOk;
}

inline int run_contract(const CliOptions& o, std::ostream& out, std::ostream& err) {
    std::ifstream in(o.tree_file);
    if (!in) {
        err << "cannot read tree file '" << o.tree_file << "'\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const StableTree t = parse_tree(buf.str());
    const auto rep = is_stable(t);
    if (!rep.stable) {
        err << "tree is not stable at vertex " << *rep.failing_vertex << '\n';
        return kExitDegenerate;
    }
    out << to_json(contract(t)).dump(2) << '\n';
    return kExitOk;
}

inline int run_verify(const CliOptions& o, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r = verify_suite(o.suite, o.n, o.seed, o.samples, o.bound);
    if (o.timing) {
        r.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    out << to_json(r).dump(2) << '\n';
    err << r.suite << " (n=" << r.n << ", seed=" << r.seed << "): " << (r.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& c : r.checks) {
        err << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.actual;
        if (!c.passed) err << " (expected " << c.expected << ")";
        err << '\n';
    }
    return r.passed() ? kExitOk : kExitFail;
}

}  // namespace detail

/// args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::CliOptions o;
    o.seed = default_seed();
    CLI::App app{"Exact constructions and checks for 2n points on the projective line", "mf"};
    app.require_subcommand(1, 1);
    int (*action)(const detail::CliOptions&, std::ostream&, std::ostream&) = nullptr;
    std::function<int()> simple;

    auto* dim = app.add_subcommand("dim", "dimension of the system: #R - #S, hook value, computed basis");
    dim->add_option("--n", o.n, "half the number of points (n >= 2)")->required();
    dim->callback([&] { action = detail::run_dim; });

    auto* ob = app.add_subcommand("omega-basis", "canonical basis of the degree-n system on P^{2n-2} as JSON");
    ob->add_option("--n", o.n, "half the number of points (n >= 2)")->required();
    ob->callback([&] { simple = [&] { out << to_json(omega_basis(o.n)->system).dump(2) << '\n'; return 0; }; });

    auto* xb = app.add_subcommand("xi-basis", "canonical basis of the degree n-1 system on P^{2n-3} as JSON");
    xb->add_option("--n", o.n, "half the number of points (n >= 2)")->required();
    xb->callback([&] { simple = [&] { out << to_json(xi_basis(o.n)->system).dump(2) << '\n'; return 0; }; });

    auto* phi = app.add_subcommand("phi", "image of a point of P^{2n-2}");
    phi->add_option("--n", o.n, "half the number of points (n >= 2)")->required();
    phi->add_option("--point", o.point, "coordinates a,b,c,... (rationals p or p/q)")->required();
    phi->callback([&] { simple = [&] { out << to_string(phi_omega(o.n, parse_point(o.point))) << '\n'; return 0; }; });

    auto* rnc = app.add_subcommand("rnc", "rational normal curve through d+3 points of P^d");
    rnc->add_option("--points", o.points, "points separated by ';', coordinates by ','")->required();
    rnc->callback([&] { simple = [&] { out << to_json(rnc_through(parse_point_list(o.points))).dump(2) << '\n'; return 0; }; });

    auto* cr = app.add_subcommand("cremona", "standard Cremona inversion of a point");
    cr->add_option("--point", o.point, "coordinates a,b,c,...")->required();
    cr->callback([&] { simple = [&] { out << to_string(cremona_inv(parse_point(o.point))) << '\n'; return 0; }; });

    auto* cf = app.add_subcommand("config", "the 2n points of P^1 cut by the curve through W and x");
    cf->add_option("--n", o.n, "half the number of points (n >= 2)")->required();
    cf->add_option("--point", o.point, "coordinates of x in P^{2n-2}")->required();
    cf->callback([&] { simple = [&] { out << to_string(config_of_point(o.n, parse_point(o.point))) << '\n'; return 0; }; });

    auto* gp = app.add_subcommand("git-point", "bracket invariants of a configuration of 2n points of P^1");
    gp->add_option("--n", o.n, "half the number of points (n >= 1)")->required();
    gp->add_option("--config", o.config, "points s:t separated by ','")->required();
    gp->callback([&] {
        simple = [&] {
            const Configuration c = parse_configuration(o.config);
            const auto g = git_point(o.n, c);
            out << (g ? to_string(*g) : std::string("ZeroVector")) << '\n';
            err << to_string(classify_stability(o.n, c)) << '\n';
            return 0;
        };
    });

    auto* tree = app.add_subcommand("tree", "stable trees");
    tree->require_subcommand(1, 1);
    auto* tc = tree->add_subcommand("contract", "contract a stable tree onto its central vertex");
    tc->add_option("--tree", o.tree_file, "JSON file {vertices, edges, marking}")->required();
    tc->callback([&] { action = detail::run_contract; });
    auto* te = tree->add_subcommand("enum2", "two-vertex stable trees with n labels");
    te->add_option("--n", o.n, "number of labels (n >= 4)")->required();
    te->callback([&] { action = detail::run_enum2; });

    auto* vf = app.add_subcommand("verify", "run a verification suite and print its JSON report");
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    vf->add_option("--suite", o.suite, "one of: " + names)->required();
    vf->add_option("--n", o.n, "size parameter (labels for tree suites, half the points otherwise)")->required();
    vf->add_option("--seed", o.seed, "random seed (default: MF_SEED or 0)");
    vf->add_option("--samples", o.samples, "number of random trials")->capture_default_str();
    vf->add_option("--bound", o.bound, "bound on random numerators and denominators")->capture_default_str();
    vf->add_flag("--timing", o.timing, "add elapsed_ms to the report");
    vf->callback([&] { action = detail::run_verify; });

    auto deepest = [&app] {
        const CLI::App* a = &app;
        while (!a->get_subcommands().empty()) a = a->get_subcommands().front();
        return a;
    };
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << deepest()->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << deepest()->help();
        return kExitUsage;
    }
    try {
        if (action) return action(o, out, err);
        if (simple) return simple();
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what();
        if (!e.witness().empty()) err << " [witness: " << e.witness() << "]";
        err << '\n';
        return is_degenerate_input(e.kind()) ? kExitDegenerate : kExitUsage;
    }
}

}  // namespace mf
