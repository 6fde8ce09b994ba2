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

// Runs the thirteen acceptance criteria and prints one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mf/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20260101;

struct Run {
    const char* suite;
    unsigned n;
    std::size_t samples;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Run> runs;
    double limit_s;  // 0 means no time limit
};

/// Runs every suite of a criterion; returns false on any failed check,
/// error, or a time overrun.
bool run_criterion(const Criterion& c) {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& r : c.runs) {
        try {
            const mf::SuiteReport rep = mf::verify_suite(r.suite, r.n, kSeed, r.samples);
            if (!rep.passed()) {
                ok = false;
                for (const auto& ch : rep.checks)
                    if (!ch.passed)
                        detail += std::string("\n    ") + r.suite + " n=" + std::to_string(r.n) + " " + ch.name + ": " +
                                  ch.actual + " (expected " + ch.expected + ")" +
                                  (ch.witness.empty() ? "" : " [" + ch.witness + "]");
            }
        } catch (const std::exception& e) {
            ok = false;
            detail += std::string("\n    ") + r.suite + " n=" + std::to_string(r.n) + " threw " + e.what();
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
        ok = false;
        detail += "\n    took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << (c.id < 10 ? " " : "") << c.id << "] " << c.title << " ("
              << timing << ")" << detail << std::endl;
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "dimension identities, n = 2..6", {{"dimensions", 2, 0}, {"dimensions", 3, 0}, {"dimensions", 4, 0},
                                              {"dimensions", 5, 0}, {"dimensions", 6, 0}}, 60},
        {2, "incidence matrix has maximal rank, n = 2..5",
         {{"incidence-rank", 2, 0}, {"incidence-rank", 3, 0}, {"incidence-rank", 4, 0}, {"incidence-rank", 5, 0}}, 60},
        {3, "square-free and derivative constructions agree, n = 2..4",
         {{"basis-agreement", 2, 0}, {"basis-agreement", 3, 0}, {"basis-agreement", 4, 0}}, 120},
        {4, "forms vanish on spans of n-1 base points, n = 3,4, 100 points",
         {{"base-locus", 3, 100}, {"base-locus", 4, 100}}, 0},
        {5, "n-spans contracted and identified with complements, n = 3,4, 20 triples",
         {{"span-contraction", 3, 20}, {"span-contraction", 4, 20}}, 0},
        {6, "curves through W and x are contracted, n = 2..4, 10 curves",
         {{"fiber-contraction", 2, 10}, {"fiber-contraction", 3, 10}, {"fiber-contraction", 4, 10}}, 300},
        {7, "image dimension 2n-3, n = 2..4, 5 points",
         {{"jacobian-rank", 2, 5}, {"jacobian-rank", 3, 5}, {"jacobian-rank", 4, 5}}, 0},
        {8, "image for n = 3 is a single cubic hypersurface, 20 fresh points", {{"segre-cubic", 3, 20}}, 0},
        {9, "bracket invariants map linearly onto the image, n = 2,3, 10 held-out points",
         {{"rho-bridge", 2, 10}, {"rho-bridge", 3, 10}}, 0},
        {10, "Cremona involution, lines to curves (d = 2,4,6), fibers to lines through u",
         {{"cremona-line", 2, 50}, {"cremona-line", 3, 50}, {"cremona-line", 4, 50}, {"cremona-fiber", 2, 5},
          {"cremona-fiber", 3, 5}, {"cremona-fiber", 4, 5}},
         0},
        {11, "xi system has Catalan dimension (n = 2..5) and is injective for n = 3",
         {{"xi-dim", 2, 0}, {"xi-dim", 3, 20}, {"xi-dim", 4, 0}, {"xi-dim", 5, 0}}, 0},
        {12, "stable tree counts, central vertices and stability of contractions",
         {{"tree-counts", 4, 0}, {"tree-counts", 5, 0}, {"tree-counts", 6, 0}, {"tree-central", 3, 0},
          {"tree-central", 4, 0}, {"tree-central", 5, 0}, {"tree-central", 6, 0}, {"tree-central", 7, 0}},
         0},
        {13, "unstable exactly when all bracket monomials vanish, 4, 6 and 8 points",
         {{"stability-oracle", 2, 0}, {"stability-oracle", 3, 0}, {"stability-oracle", 4, 0}}, 0},
    };
    int failed = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c)) ++failed;
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
