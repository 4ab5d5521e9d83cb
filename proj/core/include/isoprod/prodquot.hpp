#pragma once

#include "isoprod/cover.hpp"
#include "isoprod/fiber.hpp"

#include <map>
#include <optional>

namespace isoprod {

/// S = (C x D)/G for two covers over the same abelian group, both of total
/// genus >= 2. Freeness of the diagonal action is not a construction
/// requirement (is_free reports it, with a witness on failure); the surface
/// invariants are defined only for free pairs.
class ProductQuotient {
  public:
    ProductQuotient(CoverDatum cover_c, CoverDatum cover_d);

    const AbelianGroup& group() const { return cover_c_.group(); }
    const CoverDatum& cover_c() const { return cover_c_; }
    const CoverDatum& cover_d() const { return cover_d_; }
    long long genus_c() const { return genus_c_; }
    long long genus_d() const { return genus_d_; }

  private:
    CoverDatum cover_c_;
    CoverDatum cover_d_;
    long long genus_c_;
    long long genus_d_;
};

struct FreenessResult {
    bool free;
    std::optional<Element> witness;  // fixed points on both curves
};

/// The diagonal action is free iff no nonidentity element has fixed points
/// on both curves.
FreenessResult is_free(const ProductQuotient& s);

struct SurfaceRecord {
    long long g_c, g_d;
    long long q;    // irregularity, g(C/G) + g(D/G)
    long long chi;  // chi(O_S) = (g_c - 1)(g_d - 1)/|G|
    long long k2;   // 8 chi
    long long pg;   // chi + q - 1
    long long e;    // 4 chi
    long long b2;   // e - 2 + 4q
    Subgroup trivial_kernel;
    AbelianGroup trivial_kernel_type;
    std::optional<long long> albanese_fiber_genus;  // set when q = 1

    friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

/// Numerical invariants plus the cohomologically trivial kernel. Requires a
/// free pair; chi integrality is asserted, never rounded.
SurfaceRecord invariants(const ProductQuotient& s);

/// dim H^2(S,C) = 2 + sum_chi dim H^1(C)^chi * dim H^1(D)^{conj chi}
/// (Kuenneth over the character decomposition).
long long h2_dimension(const ProductQuotient& s);

/// Subgroup of (G x G)/Delta_G ~ G acting trivially on H^*(S,Q): the
/// elements on which every "doubly nonzero" character (nonzero eigenspace
/// on both factors) evaluates to 1.
Subgroup trivial_kernel(const ProductQuotient& s);

/// Exact root-of-unity scalars of a candidate automorphism pair of C x D on
/// each H^1 eigenspace; entries for zero-dimensional spaces are ignored.
struct EigenScalars {
    std::optional<Rotation> v;  // action on H^1(C)^chi
    std::optional<Rotation> u;  // action on H^1(D)^chi

    friend bool operator==(const EigenScalars&, const EigenScalars&) = default;
};

struct EigenTable {
    std::map<Character, EigenScalars> entries;

    friend bool operator==(const EigenTable&, const EigenTable&) = default;
};

/// Whether the tabulated automorphism pair acts trivially on H^*(S): every
/// doubly nonzero character must have scalar_V(chi) * scalar_U(conj chi) = 1,
/// and the trivial-character scalars must be 1 wherever H^1 of a quotient
/// curve is nonzero. Missing required entries raise std::invalid_argument.
bool extended_triviality(const ProductQuotient& s, const EigenTable& table);

/// Singular fibers of the Albanese fibration for q = 1 pairs with base
/// genera {1, 0}: one pure multiple fiber m F' per branch point of the
/// elliptic-base cover, with m the branch element's order and F' the
/// (smooth, by freeness) quotient of the other curve by that element.
std::vector<FiberModel> singular_fibers(const ProductQuotient& s);

/// Genus of the general Albanese fiber for q = 1 pairs: the total genus of
/// the rational-base cover.
long long albanese_fiber_genus(const ProductQuotient& s);

}  // namespace isoprod
