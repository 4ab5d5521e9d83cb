#include "isoprod/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace isoprod {

CoverDatum::CoverDatum(AbelianGroup group, int base_genus, std::vector<Element> branch_elements,
                       std::optional<std::vector<Element>> handle_images)
    : group_(std::move(group)), base_genus_(base_genus), branch_(std::move(branch_elements)),
      handles_(std::move(handle_images)) {
    if (base_genus_ < 0)
        throw std::invalid_argument("base genus must be nonnegative");
    for (const Element& g : branch_)
        group_.require(g);
    std::sort(branch_.begin(), branch_.end());
    if (handles_) {
        if (handles_->size() != 2 * static_cast<size_t>(base_genus_))
            throw std::invalid_argument("handle images must number exactly 2h");
        for (const Element& g : *handles_)
            group_.require(g);
    }
}

std::string describe(CoverViolation v) {
    switch (v) {
        case CoverViolation::SumNonzero: return "sum-nonzero";
        case CoverViolation::NotGenerating: return "not-generating";
        case CoverViolation::IdentityBranchElement: return "identity-branch-element";
    }
    return "?";
}

namespace {

// Minimal number of generators of G/H = number of invariant factors,
// recovered from the coset order multiset.
int quotient_generator_count(const AbelianGroup& group, const Subgroup& h) {
    std::set<Element> assigned;
    std::vector<long long> coset_orders;
    for (const Element& g : group.elements()) {
        if (assigned.count(g))
            continue;
        long long m = 1;
        Element x = g;
        while (!h.contains(x)) {
            x = group.add(x, g);
            ++m;
        }
        coset_orders.push_back(m);
        for (const Element& k : h.elements())
            assigned.insert(group.add(g, k));
    }
    return group_from_order_multiset(std::move(coset_orders)).rank();
}

}  // namespace

ValidationReport validate(const CoverDatum& d) {
    ValidationReport report;
    const AbelianGroup& G = d.group();

    Element sum = G.identity();
    bool has_identity_branch = false;
    for (const Element& g : d.branch_elements()) {
        sum = G.add(sum, g);
        if (g == G.identity())
            has_identity_branch = true;
    }
    if (has_identity_branch)
        report.violations.push_back(CoverViolation::IdentityBranchElement);
    if (sum != G.identity())
        report.violations.push_back(CoverViolation::SumNonzero);

    bool generates;
    if (d.handle_images()) {
        std::vector<Element> gens = *d.handle_images();
        gens.insert(gens.end(), d.branch_elements().begin(), d.branch_elements().end());
        generates = Subgroup::generated_by(G, gens).order() == G.order();
    } else {
        Subgroup h = Subgroup::generated_by(G, d.branch_elements());
        generates = quotient_generator_count(G, h) <= 2 * d.base_genus();
    }
    if (!generates)
        report.violations.push_back(CoverViolation::NotGenerating);
    return report;
}

namespace {

void require_valid(const CoverDatum& d) {
    ValidationReport report = validate(d);
    if (report.ok())
        return;
    std::string msg = "invalid cover datum:";
    for (CoverViolation v : report.violations)
        msg += " " + describe(v);
    throw std::invalid_argument(msg);
}

// Shared Riemann-Hurwitz kernel: the deck group order, base genus and the
// branch stabilizer orders determine the total genus.
long long genus_from(long long group_order, int base_genus,
                     const std::vector<long long>& branch_orders) {
    long long rhs = group_order * (2LL * base_genus - 2);
    for (long long m : branch_orders)
        rhs += (group_order / m) * (m - 1);
    if (rhs % 2 != 0)
        throw std::logic_error("Riemann-Hurwitz right side is odd; corrupted datum");
    long long g = rhs / 2 + 1;
    if (g < 0)
        throw std::logic_error("Riemann-Hurwitz gives negative genus; corrupted datum");
    return g;
}

}  // namespace

long long total_genus(const CoverDatum& d) {
    require_valid(d);
    std::vector<long long> orders;
    orders.reserve(d.branch_elements().size());
    for (const Element& g : d.branch_elements())
        orders.push_back(d.group().element_order(g));
    return genus_from(d.group().order(), d.base_genus(), orders);
}

long long char_dim(const CoverDatum& d, const Character& chi) {
    const AbelianGroup& G = d.group();
    G.require(chi);
    require_valid(d);
    if (chi == G.trivial_character())
        return 2LL * d.base_genus();
    if (total_genus(d) < 2)
        throw std::invalid_argument(
            "eigenspace dimensions are defined here only for covers of genus >= 2");
    long long fixed = 0;
    for (const Element& g : d.branch_elements())
        if (G.eval(chi, g).is_zero())
            ++fixed;
    long long dim = (2LL * d.base_genus() - 2 + d.branch_count()) - fixed;
    if (dim < 0)
        throw std::logic_error("negative eigenspace dimension; corrupted datum");
    return dim;
}

bool has_nonzero_char_space(const CoverDatum& d, const Character& chi) {
    const AbelianGroup& G = d.group();
    G.require(chi);
    require_valid(d);
    if (chi == G.trivial_character())
        return d.base_genus() > 0;
    if (total_genus(d) < 2)
        throw std::invalid_argument(
            "eigenspace dimensions are defined here only for covers of genus >= 2");
    if (d.base_genus() >= 2)
        return char_dim(d, chi) > 0;
    long long moved = 0;  // branch points with chi(g_j) != 1
    for (const Element& g : d.branch_elements())
        if (!G.eval(chi, g).is_zero())
            ++moved;
    return d.base_genus() == 1 ? moved >= 1 : moved >= 3;
}

std::vector<Element> stabilizer_union(const CoverDatum& d) {
    const AbelianGroup& G = d.group();
    std::set<Element> out;
    for (const Element& g : d.branch_elements()) {
        Element x = g;
        while (x != G.identity()) {
            out.insert(x);
            x = G.add(x, g);
        }
    }
    return std::vector<Element>(out.begin(), out.end());
}

long long quotient_genus(const CoverDatum& d, const Subgroup& h) {
    if (h.parent() != d.group())
        throw std::invalid_argument("subgroup does not live in the cover's group");
    require_valid(d);
    const AbelianGroup& G = d.group();
    long long quotient_order = G.order() / h.order();
    std::vector<long long> image_orders;
    for (const Element& g : d.branch_elements()) {
        // order of g mod H = least m with m*g in H
        long long m = 1;
        Element x = g;
        while (!h.contains(x)) {
            x = G.add(x, g);
            ++m;
        }
        if (m > 1)
            image_orders.push_back(m);
    }
    return genus_from(quotient_order, d.base_genus(), image_orders);
}

}  // namespace isoprod
