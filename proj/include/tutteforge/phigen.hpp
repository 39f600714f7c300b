#pragma once

#include "tutteforge/iso.hpp"
#include "tutteforge/multigraph.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tutteforge {

// Certified quadruple (G, e, H, f) with G\e ~= H\f and G/e ~= H/f, plus the
// index bookkeeping: u_i is the i-th vertex of G (u_ids), v_i := phi(u_i),
// e = u_{s1}u_{s2}, f = v_{t1}v_{t2}. Indices are 1-based and stable under
// rotor attachment (new vertices extend the index range).
struct PhiWitness {
    Multigraph g, h;
    EdgeId e = 0, f = 0;
    VertexMapping phi;  // V(G\e) -> V(H\f), total on V(G)
    VertexMapping psi;  // V(G/e) -> V(H/f)
    int s1 = 0, s2 = 0, t1 = 0, t2 = 0;
    std::vector<VertexId> u_ids;  // u_ids[i-1] = id of u_i
    std::vector<VertexId> v_ids;  // v_ids[i-1] = id of v_i
    int phi_index = 0;            // positions in the deterministic enumeration
    int psi_index = 0;

    int n() const { return static_cast<int>(u_ids.size()); }
    VertexId merged_u() const { return std::min(u_ids[s1 - 1], u_ids[s2 - 1]); }
    VertexId merged_v() const { return std::min(v_ids[t1 - 1], v_ids[t2 - 1]); }
    int u_index(VertexId id) const;  // 0 if not a u-vertex
    int v_index(VertexId id) const;
};

// First witness in deterministic order (phi, then psi, both lexicographic),
// or nullopt. PreconditionError unless both graphs are connected and
// loopless.
std::optional<PhiWitness> certify_phi_prime(const Multigraph& g, const Multigraph& h, EdgeId e,
                                            EdgeId f, const IsoLimits& limits = {});

// All (phi, psi) choices, ordered by (phi_index, psi_index).
std::vector<PhiWitness> enumerate_phi_witnesses(const Multigraph& g, const Multigraph& h,
                                                EdgeId e, EdgeId f, const IsoLimits& limits = {});

struct PsiDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // sorted, deduplicated
    bool has_arc(int i, int j) const;
};

PsiDigraph build_psi_digraph(const PhiWitness& w);

// All elementary directed cycles, each rotated to start at its smallest
// vertex, listed in lexicographic order. Self-loops give 1-cycles.
std::vector<std::vector<int>> directed_cycles(const PsiDigraph& d);

struct Dig1Verdict {
    bool holds = false;
    bool s_on_cycle = false;
    bool t_on_cycle = false;
    std::string detail;
};

// Checks the cycle biconditional: s1,s2 on C iff t1,t2 on C, and in the
// positive case that psi maps the merged vertices onto each other and C uses
// arcs s1->t_j, s2->t_{3-j}.
Dig1Verdict check_dig1(const PhiWitness& w, const std::vector<int>& cycle);

struct CycleRotorAssignment {
    std::vector<int> cycle;        // indices pi(1..k)
    Multigraph rotor;              // W_i
    std::vector<VertexId> orbit;   // w_{i,1..k}
};

struct AttachResult {
    PhiWitness witness;  // extended witness for (G_r, e, H_r, f)
    std::vector<std::string> notes;
};

// Iteratively glues each assignment's rotor onto both sides, extending and
// re-verifying the witness mappings after every step.
AttachResult attach_rotors(const PhiWitness& w,
                           std::span<const CycleRotorAssignment> assignments,
                           const IsoLimits& limits = {});

struct MemberVerdict {
    bool in_phi_prime = false;
    bool t_equivalent = false;
    std::optional<bool> isomorphic;  // nullopt when the iso check exceeded limits
    std::string detail;
};

MemberVerdict verify_new_member(const Multigraph& g_r, const Multigraph& h_r, EdgeId e, EdgeId f,
                                const IsoLimits& limits = {});

// Replayable record of a generation run.
struct WitnessFile {
    std::string g_path, h_path;
    EdgeId e = 0, f = 0;
    int phi_index = 0, psi_index = 0;
    std::string phi_render, psi_render;
    struct Assignment {
        std::vector<int> cycle;
        std::string rotor_path;
        std::vector<VertexId> orbit;
    };
    std::vector<Assignment> assignments;
};

void write_witness(std::ostream& out, const WitnessFile& wf);
WitnessFile read_witness(std::istream& in);
void write_witness_file(const std::string& path, const WitnessFile& wf);
WitnessFile read_witness_file(const std::string& path);

}  // namespace tutteforge
