#pragma once

#include "tutteforge/bipoly.hpp"
#include "tutteforge/constructions.hpp"
#include "tutteforge/multigraph.hpp"
#include "tutteforge/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tutteforge {

struct EquivalenceReport {
    std::string condition;
    int instances = 0;
    struct Failure {
        std::string instance;  // the offending S or P
        std::string left, right;
    };
    std::vector<Failure> failures;
    std::uint64_t work_nodes = 0;  // engine recursion nodes spent

    bool passed() const { return failures.empty(); }
    std::string render() const;  // key=value lines
};

struct CheckBudget {
    int max_k_subsets = 4;     // 2^C(k,2) instances
    int max_k_partitions = 6;  // Bell(k) instances
};

// T(G_S) = T(H_S) for every S.
EquivalenceReport check_theorem_subsets(const TerminalList& gt, const TerminalList& ht,
                                        const CheckBudget& budget = {});

// T(G(P)) = T(H(P)) for every partition P of [k].
EquivalenceReport check_theorem_partitions(const TerminalList& gt, const TerminalList& ht,
                                           const CheckBudget& budget = {});

// a = number of spanning forests of the simple graph on [k] with edge set s
// whose component vertex sets are exactly p's blocks;
// n = e(P,S) - k + r.
std::pair<long long, int> forest_coefficients(const PairSet& s, const Partition& p, int k);

// Full y-polynomial coefficient of T(G(P)) in the expansion of T(G_S):
// sum over those spanning forests of y^(number of non-forest in-block edges
// whose forest path precedes them in a fixed edge order). Evaluates to a at
// y=1 and has degree at most n.
BiPoly expansion_coefficient(const PairSet& s, const Partition& p, int k);

struct IdentityVerdict {
    bool ok = false;
    BiPoly lhs, rhs;
    std::string detail;
};

// T(G_S) = sum over P of a(P,S) y^n(P,S) T(G(P)), both sides computed by
// independent code paths. PreconditionError on disconnected input.
IdentityVerdict check_expansion_identity(const TerminalList& gt, const PairSet& s);

struct NecessaryVerdict {
    bool ok = false;
    std::string detail;
};

// Equal loop counts and eps(u_i,u_j) = eps(v_i,v_j) for all terminal pairs.
NecessaryVerdict check_necessary(const TerminalList& gt, const TerminalList& ht);

struct ProbeReport {
    int trials = 0;
    std::vector<std::string> counterexamples;  // descriptions of failing W
    bool passed() const { return counterexamples.empty(); }
};

// Randomized direct test of the glued statement: T(G glue W) = T(H glue W)
// for `trials` random multigraphs W. Deterministic under seed.
ProbeReport random_glue_probe(const TerminalList& gt, const TerminalList& ht, int trials,
                              std::uint64_t seed);

// Random multigraph on n vertices (ids 1..n): per-pair multiplicity at most
// 2, loop probability 0.1 per vertex.
Multigraph random_multigraph(Rng& rng, int n);

// Random connected multigraph: spanning tree plus extra edges, occasional
// loops and parallels.
Multigraph random_connected_multigraph(Rng& rng, int n, int extra_edges);

}  // namespace tutteforge
