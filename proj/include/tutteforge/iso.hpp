#pragma once

#include "tutteforge/multigraph.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tutteforge {

struct IsoLimits {
    int max_vertices = 12;
};

// A bijection between vertex sets, stored as (source, target) pairs sorted by
// source id. Serialized as "i->j,i->j" for CLI display and witness files.
class VertexMapping {
public:
    VertexMapping() = default;
    static VertexMapping from_pairs(std::vector<std::pair<VertexId, VertexId>> pairs);

    VertexId image(VertexId v) const;           // InvalidReferenceError if absent
    std::optional<VertexId> try_image(VertexId v) const;
    const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    VertexMapping inverse() const;
    // (f.compose(g))(v) = f(g(v))
    VertexMapping compose(const VertexMapping& inner) const;

    std::string render() const;
    static VertexMapping parse(const std::string& text);

    bool operator==(const VertexMapping&) const = default;

private:
    std::vector<std::pair<VertexId, VertexId>> pairs_;
};

// True iff m is a bijection V(g) -> V(h) with eps_g(u,v) = eps_h(m(u),m(v))
// for every vertex pair, loops included.
bool preserves_multiplicities(const Multigraph& g, const Multigraph& h, const VertexMapping& m);

std::optional<VertexMapping> find_isomorphism(const Multigraph& g, const Multigraph& h,
                                              const IsoLimits& limits = {});

// Complete list in lexicographic order of the image sequence (sources in
// ascending id order).
std::vector<VertexMapping> enumerate_isomorphisms(const Multigraph& g, const Multigraph& h,
                                                  const IsoLimits& limits = {});

std::vector<VertexMapping> automorphisms(const Multigraph& g, const IsoLimits& limits = {});

// First isomorphism extending the given partial assignment, if any.
std::optional<VertexMapping> find_isomorphism_pinned(
    const Multigraph& g, const Multigraph& h,
    std::span<const std::pair<VertexId, VertexId>> pins, const IsoLimits& limits = {});

// Automorphism psi of r with psi(orbit[i]) = orbit[i+1], indices cyclic.
std::optional<VertexMapping> check_cyclic_orbit(const Multigraph& r,
                                                std::span<const VertexId> orbit,
                                                const IsoLimits& limits = {});

// Automorphism rho of w with rho(ws[s]) = ws[(a-1-s) mod k] for all s,
// i.e. rho(w_{1+s}) = w_{a-s} in 1-based cyclic index notation.
std::optional<VertexMapping> check_reflection(const Multigraph& w, std::span<const VertexId> ws,
                                              int a, const IsoLimits& limits = {});

// Complete isomorphism invariant: equal codes iff isomorphic.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Multigraph& g, const IsoLimits& limits = {});

}  // namespace tutteforge
