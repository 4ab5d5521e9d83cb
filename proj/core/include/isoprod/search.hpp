#pragma once

#include "isoprod/prodquot.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace isoprod {

struct SearchParams {
    std::vector<AbelianGroup> groups;        // empty = all abelian groups of order 2..8
    std::pair<int, int> base_split = {1, 0};  // (h_C, h_D); (1,0) realizes q = 1
    int max_branch_points = 8;                // per cover
    long long max_chi = 4;
    bool require_free = true;

    void validate() const;  // throws std::invalid_argument on bad bounds
    std::vector<AbelianGroup> effective_groups() const;
};

/// All valid cover data over the group with at most max_branch_points branch
/// points: sorted branch multisets with zero sum, no identity entries, and
/// the generation-existence criterion. Deterministic order (branch count,
/// then lexicographic). Handle images are never enumerated.
std::vector<CoverDatum> enumerate_covers(const AbelianGroup& group, int base_genus,
                                         int max_branch_points);

/// Lexicographic minimum of the pair over Aut(G) acting simultaneously on
/// both covers (branch multisets re-sorted after transport; handle images
/// transported in place). Idempotent; constant on Aut(G)-orbits.
std::pair<CoverDatum, CoverDatum> canonicalize(const CoverDatum& cover_c,
                                               const CoverDatum& cover_d,
                                               long long aut_order_bound = 16);

struct CensusEntry {
    AbelianGroup group;
    CoverDatum cover_c;  // canonical form
    CoverDatum cover_d;
    bool free;
    std::optional<Element> witness;        // shared stabilizer element when not free
    std::optional<SurfaceRecord> record;   // present iff free
    long long kernel_order = 0;            // 0 when not free
    AbelianGroup kernel_type;
    bool anomaly = false;  // free, q = 1 and kernel order > 4

    friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Bounded census of product-quotient pairs, deduplicated up to Aut(G),
/// sorted by (group, chi, kernel order, canonical form). Runs with identical
/// parameters produce identical output; thread counts > 1 evaluate candidate
/// pairs in parallel and merge into the same canonical order.
std::vector<CensusEntry> run_census(const SearchParams& params, int threads = 1);

}  // namespace isoprod
