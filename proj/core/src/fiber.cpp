#include "isoprod/fiber.hpp"

#include <numeric>
#include <stdexcept>

namespace isoprod {

int OrdinaryPoint::multiplicity() const {
    int mu = 0;
    for (int b : branches)
        mu += b;
    return mu;
}

std::string tag(FiberClass c) {
    switch (c) {
        case FiberClass::Smooth: return "smooth";
        case FiberClass::Delta1_OneNode: return "δ1(i)";
        case FiberClass::Delta1_TwoCurvesOnePoint: return "δ1(ii)";
        case FiberClass::Delta2_DoubleGenusTwo: return "δ2(i)";
        case FiberClass::Delta2_TwoNodes: return "δ2(ii)";
        case FiberClass::Delta2_Cusp: return "δ2(iii)";
        case FiberClass::Delta2_OnePointPlusNode: return "δ2(iv)";
        case FiberClass::Delta2_TwoCurvesTwoPoints: return "δ2(v)";
        case FiberClass::Delta2_ChainOfThree: return "δ2(vi)";
        case FiberClass::Unclassified: return "unclassified";
    }
    return "?";
}

namespace {

void check_config(const ReducedConfig& c) {
    const size_t n = c.component_genera.size();
    if (n == 0)
        throw std::invalid_argument("reduced configuration needs at least one component");
    if (c.points.empty())
        throw std::invalid_argument(
            "reduced configuration must be singular; use a smooth fiber otherwise");
    for (long long g : c.component_genera)
        if (g < 0)
            throw std::invalid_argument("component genus must be nonnegative");
    for (const OrdinaryPoint& p : c.points) {
        if (p.branches.size() != n)
            throw std::invalid_argument("point incidence record does not match component count");
        for (int b : p.branches)
            if (b < 0)
                throw std::invalid_argument("negative branch count");
        if (p.multiplicity() < 2)
            throw std::invalid_argument("singular point needs multiplicity >= 2");
    }
    // connectivity of the component/point incidence graph (union-find)
    std::vector<size_t> root(n);
    std::iota(root.begin(), root.end(), size_t{0});
    auto find = [&](size_t x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };
    for (const OrdinaryPoint& p : c.points) {
        size_t first = n;
        for (size_t i = 0; i < n; ++i)
            if (p.branches[i] > 0) {
                if (first == n)
                    first = i;
                else
                    root[find(i)] = find(first);
            }
    }
    for (size_t i = 1; i < n; ++i)
        if (find(i) != find(0))
            throw std::invalid_argument("reduced configuration is disconnected");
}

long long config_euler(const ReducedConfig& c) {
    long long e = 0;
    for (long long g : c.component_genera)
        e += 2 - 2 * g;
    for (const OrdinaryPoint& p : c.points)
        e -= p.multiplicity() - 1;
    return e;
}

long long config_pa(const ReducedConfig& c) {
    long long pa = 1 - static_cast<long long>(c.component_genera.size());
    for (long long g : c.component_genera)
        pa += g;
    for (const OrdinaryPoint& p : c.points) {
        long long mu = p.multiplicity();
        pa += mu * (mu - 1) / 2;
    }
    return pa;
}

long long config_delta_closed_form(const ReducedConfig& c) {
    long long d = 0;
    for (const OrdinaryPoint& p : c.points) {
        long long mu = p.multiplicity();
        d += (mu - 1) * (mu - 1);
    }
    return d;
}

// (m-1)(2g-2)/m, the K_S(F - F') part of a pure multiple fiber.
long long multiple_part(int m, long long ambient_genus) {
    if (m < 2)
        throw std::invalid_argument("multiple fiber needs multiplicity >= 2");
    long long kf = 2 * ambient_genus - 2;
    if (kf <= 0 || kf % m != 0)
        throw std::invalid_argument("multiplicity must divide 2g-2 > 0 (Zariski)");
    return (m - 1) * (kf / m);
}

struct DefectVisitor {
    long long g;  // ambient fiber genus

    DefectReport operator()(const SmoothFiber& f) const {
        if (f.genus != g)
            throw std::invalid_argument("smooth fiber genus must equal the fibration genus");
        return {2 - 2 * g, g, 0, FiberClass::Smooth, false};
    }

    DefectReport operator()(const MultipleOfSmooth& f) const {
        long long extra = multiple_part(f.multiplicity, g);
        if (f.multiplicity * (2 * f.component_genus - 2) != 2 * g - 2)
            throw std::invalid_argument("m(2h-2) = 2g-2 fails for this multiple fiber");
        long long e = 2 - 2 * f.component_genus;
        long long delta = extra;  // = (m-1)(2h-2)
        // p_a of the divisor mF' is g; the definitional identity holds.
        return {e, g, delta, FiberClass::Unclassified, false};
    }

    DefectReport operator()(const ReducedConfig& f) const {
        check_config(f);
        long long e = config_euler(f);
        long long pa = config_pa(f);
        if (pa != g)
            throw std::invalid_argument("reduced fiber has p_a != fibration genus");
        long long delta = e + 2 * pa - 2;
        if (delta != config_delta_closed_form(f))
            throw std::logic_error("defect identity violated for ordinary configuration");
        return {e, pa, delta, FiberClass::Unclassified, false};
    }

    DefectReport operator()(const MultipleOfReduced& f) const {
        check_config(f.config);
        long long extra = multiple_part(f.multiplicity, g);
        long long pa_red = config_pa(f.config);
        if (f.multiplicity * (2 * pa_red - 2) != 2 * g - 2)
            throw std::invalid_argument("m(2p_a(F')-2) = 2g-2 fails for this multiple fiber");
        long long delta = config_delta_closed_form(f.config) + extra;
        return {config_euler(f.config), g, delta, FiberClass::Unclassified, false};
    }

    DefectReport operator()(const AssertedCusp&) const {
        if (g < 2)
            throw std::invalid_argument("cuspidal fiber needs fibration genus >= 2");
        // normalization has genus g-1 and a single point over the cusp
        return {4 - 2 * g, g, 2, FiberClass::Unclassified, true};
    }
};

}  // namespace

FiberClass classify(const FiberModel& f, long long ambient_genus) {
    if (ambient_genus < 3)
        throw std::invalid_argument("classification tables assume fibration genus >= 3");
    DefectReport r = std::visit(DefectVisitor{ambient_genus}, f);

    if (std::holds_alternative<SmoothFiber>(f))
        return FiberClass::Smooth;
    if (std::holds_alternative<AssertedCusp>(f))
        return FiberClass::Delta2_Cusp;
    if (r.delta > 2)
        return FiberClass::Unclassified;

    if (const auto* m = std::get_if<MultipleOfSmooth>(&f)) {
        // delta = 2 forces m = 2, h = 2, g = 3
        if (r.delta == 2) {
            if (m->multiplicity != 2 || m->component_genus != 2 || ambient_genus != 3)
                throw std::logic_error("delta-2 multiple fiber outside its table row");
            return FiberClass::Delta2_DoubleGenusTwo;
        }
        throw std::logic_error("multiple fiber with impossible small defect");
    }
    if (std::holds_alternative<MultipleOfReduced>(f))
        throw std::logic_error("multiple of singular curve cannot have defect <= 2");

    const auto& c = std::get<ReducedConfig>(f);
    const size_t ncomp = c.component_genera.size();
    auto on_two_components = [](const OrdinaryPoint& p) {
        int touched = 0;
        for (int b : p.branches)
            if (b > 0)
                ++touched;
        return touched == 2;
    };

    if (r.delta == 1) {
        // one point of multiplicity 2
        return ncomp == 1 ? FiberClass::Delta1_OneNode : FiberClass::Delta1_TwoCurvesOnePoint;
    }
    // delta = 2: two points of multiplicity 2
    if (ncomp == 1)
        return FiberClass::Delta2_TwoNodes;
    if (ncomp == 2) {
        int crossings = 0;
        for (const OrdinaryPoint& p : c.points)
            if (on_two_components(p))
                ++crossings;
        if (crossings == 2) {
            if (c.component_genera[0] + c.component_genera[1] != ambient_genus - 1)
                throw std::logic_error("two-curve two-point fiber violates g1+g2 = g-1");
            return FiberClass::Delta2_TwoCurvesTwoPoints;
        }
        if (crossings == 1)
            return FiberClass::Delta2_OnePointPlusNode;
        throw std::logic_error("disconnected two-component fiber slipped through");
    }
    if (ncomp == 3) {
        long long genus_sum = 0;
        for (long long gi : c.component_genera)
            genus_sum += gi;
        if (genus_sum != ambient_genus)
            throw std::logic_error("chain fiber violates g1+g2+g3 = g");
        return FiberClass::Delta2_ChainOfThree;
    }
    throw std::logic_error("small-defect fiber matches no classification row");
}

DefectReport defect(const FiberModel& f, long long ambient_genus) {
    DefectReport r = std::visit(DefectVisitor{ambient_genus}, f);
    if (std::holds_alternative<SmoothFiber>(f))
        r.classification = FiberClass::Smooth;
    else if (ambient_genus >= 3 && r.delta <= 2)
        r.classification = classify(f, ambient_genus);
    else
        r.classification = FiberClass::Unclassified;
    return r;
}

long long euler_ledger(const std::vector<FiberModel>& fibers, long long genus,
                       long long base_genus) {
    long long e = (2 - 2 * genus) * (2 - 2 * base_genus);
    for (const FiberModel& f : fibers)
        e += defect(f, genus).delta;
    return e;
}

}  // namespace isoprod
