#pragma once

#include "isoprod/abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isoprod {

/// Branch datum of an abelian G-cover of a smooth curve of genus h:
/// the base genus, the local monodromy elements g_1..g_r at the branch
/// points (stored as a sorted multiset of nonidentity elements), and
/// optionally the images of the 2h handle generators.
///
/// The constructor checks shape only (membership, handle count = 2h);
/// the Riemann-existence conditions live in validate().
class CoverDatum {
  public:
    CoverDatum(AbelianGroup group, int base_genus, std::vector<Element> branch_elements,
               std::optional<std::vector<Element>> handle_images = std::nullopt);

    const AbelianGroup& group() const { return group_; }
    int base_genus() const { return base_genus_; }
    const std::vector<Element>& branch_elements() const { return branch_; }
    const std::optional<std::vector<Element>>& handle_images() const { return handles_; }
    int branch_count() const { return static_cast<int>(branch_.size()); }

    friend auto operator<=>(const CoverDatum&, const CoverDatum&) = default;

  private:
    AbelianGroup group_;
    int base_genus_;
    std::vector<Element> branch_;  // sorted multiset
    std::optional<std::vector<Element>> handles_;
};

enum class CoverViolation {
    SumNonzero,
    NotGenerating,
    IdentityBranchElement,
};

std::string describe(CoverViolation v);

struct ValidationReport {
    std::vector<CoverViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Riemann-existence check: branch elements sum to zero, none is the
/// identity, and the datum can generate. With explicit handles the handles
/// and branches together must generate G; without handles it is enough
/// that G/<branches> needs at most 2h generators (for h = 0 the branches
/// must generate G outright).
ValidationReport validate(const CoverDatum& d);

/// Genus of the total space, by Riemann-Hurwitz:
///   2g - 2 = |G|(2h - 2) + sum_j (|G|/m_j)(m_j - 1),  m_j = ord(g_j).
/// Requires validate(d).ok(); an odd right side or negative genus signals a
/// corrupted datum and throws std::logic_error.
long long total_genus(const CoverDatum& d);

/// dim H^1(C,C)^chi. For the trivial character this is 2h; otherwise the
/// Chevalley-Weil count (2h - 2 + r) - #{j : chi(g_j) = 1}, valid for
/// total genus >= 2 (smaller genus is refused for nontrivial chi).
long long char_dim(const CoverDatum& d, const Character& chi);

/// Whether H^1(C,C)^chi != 0, decided for h = 0 and h = 1 by the branch-value
/// counting criterion (at least one branch point with chi(g_j) != 1 over an
/// elliptic base; at least three over a rational base) rather than through
/// char_dim; h >= 2 falls back to char_dim > 0.
bool has_nonzero_char_space(const CoverDatum& d, const Character& chi);

/// Nonidentity elements with fixed points on the cover: union of the cyclic
/// groups <g_j> minus the identity, sorted.
std::vector<Element> stabilizer_union(const CoverDatum& d);

/// Genus of C/H for a subgroup H of G, via the induced (G/H)-cover: same
/// base genus, branch images reduced mod H with identity images dropped.
long long quotient_genus(const CoverDatum& d, const Subgroup& h);

}  // namespace isoprod
