#pragma once

#include <string>
#include <variant>
#include <vector>

namespace isoprod {

/// Ordinary singular point of a reduced fiber: branches[i] local branches
/// lie on component i; the multiplicity mu is the total branch count.
struct OrdinaryPoint {
    std::vector<int> branches;

    int multiplicity() const;

    friend auto operator<=>(const OrdinaryPoint&, const OrdinaryPoint&) = default;
};

/// Connected reduced curve with smooth components of the given geometric
/// genera, singular exactly at the listed ordinary points.
struct ReducedConfig {
    std::vector<long long> component_genera;
    std::vector<OrdinaryPoint> points;

    friend auto operator<=>(const ReducedConfig&, const ReducedConfig&) = default;
};

struct SmoothFiber {
    long long genus;

    friend auto operator<=>(const SmoothFiber&, const SmoothFiber&) = default;
};

/// F = m F' with F' a smooth curve of the given genus, m >= 2.
struct MultipleOfSmooth {
    int multiplicity;
    long long component_genus;

    friend auto operator<=>(const MultipleOfSmooth&, const MultipleOfSmooth&) = default;
};

/// F = m F' with F' a reduced ordinary-singular configuration, m >= 2.
struct MultipleOfReduced {
    int multiplicity;
    ReducedConfig config;

    friend auto operator<=>(const MultipleOfReduced&, const MultipleOfReduced&) = default;
};

/// Irreducible curve with a single cusp, asserted by the caller. Outside the
/// ordinary-singularity model language; its defect ledger is not re-derivable
/// here and is reported unchecked.
struct AssertedCusp {
    friend auto operator<=>(const AssertedCusp&, const AssertedCusp&) = default;
};

using FiberModel =
    std::variant<SmoothFiber, MultipleOfSmooth, ReducedConfig, MultipleOfReduced, AssertedCusp>;

/// Rows of the small-defect classification tables, plus the two trivial tags.
enum class FiberClass {
    Smooth,
    Delta1_OneNode,             // irreducible with exactly one node
    Delta1_TwoCurvesOnePoint,   // two smooth curves meeting transversally once
    Delta2_DoubleGenusTwo,      // 2C, C smooth of genus 2 (only for g = 3)
    Delta2_TwoNodes,            // irreducible with exactly two nodes
    Delta2_Cusp,                // irreducible with one cusp (asserted input only)
    Delta2_OnePointPlusNode,    // C1 + C2 meeting once, exactly one with a node
    Delta2_TwoCurvesTwoPoints,  // C1 + C2 smooth meeting twice, g1 + g2 = g - 1
    Delta2_ChainOfThree,        // C1 + C2 + C3, C1C2 = C2C3 = 1, C1C3 = 0
    Unclassified,
};

std::string tag(FiberClass c);  // "smooth", "δ1(i)", ..., "δ2(vi)", "unclassified"

struct DefectReport {
    long long euler;             // e(F') of the reduced curve
    long long arithmetic_genus;  // p_a of the fiber divisor
    long long delta;             // e + 2 p_a - 2
    FiberClass classification;
    bool asserted = false;  // true for asserted-cusp input (ledger unchecked)

    friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

/// Topological defect of a fiber of a genus-g fibration.
///   Smooth             -> 0
///   ReducedConfig      -> sum_p (mu_p - 1)^2, with e and p_a reported from
///                         their own formulas (the identity is re-derived)
///   m F' (F' smooth)   -> (m-1)(2g-2)/m, requiring m(2h-2) = 2g-2
///   m F' (F' reduced)  -> sum_p (mu_p - 1)^2 + (m-1)(2g-2)/m
/// Rejects models inconsistent with the ambient genus (divisibility,
/// p_a mismatch, disconnected configurations).
DefectReport defect(const FiberModel& f, long long ambient_genus);

/// Table row for fibers with delta <= 2 of a fibration of genus g >= 3;
/// "smooth" / "unclassified" otherwise.
FiberClass classify(const FiberModel& f, long long ambient_genus);

/// e(S) = e(F) e(B) + sum_b delta(F_b) for a fibration of genus g over a
/// base of genus b, given the singular fibers.
long long euler_ledger(const std::vector<FiberModel>& fibers, long long genus,
                       long long base_genus);

}  // namespace isoprod
