#include "isoprod/prodquot.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace isoprod {

ProductQuotient::ProductQuotient(CoverDatum cover_c, CoverDatum cover_d)
    : cover_c_(std::move(cover_c)), cover_d_(std::move(cover_d)) {
    if (cover_c_.group() != cover_d_.group())
        throw std::invalid_argument("both covers must share one group");
    genus_c_ = total_genus(cover_c_);  // validates the datum
    genus_d_ = total_genus(cover_d_);
    if (genus_c_ < 2 || genus_d_ < 2)
        throw std::invalid_argument("both curves must have genus >= 2");
}

FreenessResult is_free(const ProductQuotient& s) {
    std::vector<Element> sc = stabilizer_union(s.cover_c());
    std::vector<Element> sd = stabilizer_union(s.cover_d());
    std::vector<Element> shared;
    std::set_intersection(sc.begin(), sc.end(), sd.begin(), sd.end(),
                          std::back_inserter(shared));
    if (shared.empty())
        return {true, std::nullopt};
    return {false, shared.front()};
}

namespace {

void require_free(const ProductQuotient& s) {
    FreenessResult f = is_free(s);
    if (!f.free)
        throw std::invalid_argument("diagonal action is not free");
}

// Characters whose eigenspace is nonzero on both factors (conjugate taken
// on the D side, matching the Kuenneth pairing).
std::vector<Character> doubly_nonzero_characters(const ProductQuotient& s) {
    const AbelianGroup& G = s.group();
    std::vector<Character> out;
    for (const Character& chi : G.characters())
        if (char_dim(s.cover_c(), chi) > 0 && char_dim(s.cover_d(), G.conjugate(chi)) > 0)
            out.push_back(chi);
    return out;
}

}  // namespace

Subgroup trivial_kernel(const ProductQuotient& s) {
    require_free(s);
    const AbelianGroup& G = s.group();
    std::vector<Character> doubly = doubly_nonzero_characters(s);
    std::vector<Element> ker;
    for (const Element& g : G.elements()) {
        bool trivial_on_all = true;
        for (const Character& chi : doubly)
            if (!G.eval(chi, g).is_zero()) {
                trivial_on_all = false;
                break;
            }
        if (trivial_on_all)
            ker.push_back(g);
    }
    return Subgroup(G, std::move(ker));
}

SurfaceRecord invariants(const ProductQuotient& s) {
    require_free(s);
    const long long order = s.group().order();
    long long gc = s.genus_c(), gd = s.genus_d();
    long long chi_num = (gc - 1) * (gd - 1);
    if (chi_num % order != 0)
        throw std::logic_error("chi(O_S) is not integral for a free action");
    long long chi = chi_num / order;
    long long q = s.cover_c().base_genus() + s.cover_d().base_genus();
    Subgroup ker = trivial_kernel(s);
    SurfaceRecord rec{
        gc,
        gd,
        q,
        chi,
        8 * chi,
        chi + q - 1,
        4 * chi,
        4 * chi - 2 + 4 * q,
        ker,
        ker.isomorphism_type(),
        std::nullopt,
    };
    if (q == 1)
        rec.albanese_fiber_genus = albanese_fiber_genus(s);
    return rec;
}

long long h2_dimension(const ProductQuotient& s) {
    require_free(s);
    const AbelianGroup& G = s.group();
    long long sum = 2;  // W = H^2(C) ox H^0(D) + H^0(C) ox H^2(D)
    for (const Character& chi : G.characters())
        sum += char_dim(s.cover_c(), chi) * char_dim(s.cover_d(), G.conjugate(chi));
    return sum;
}

bool extended_triviality(const ProductQuotient& s, const EigenTable& table) {
    require_free(s);
    const AbelianGroup& G = s.group();

    auto scalar = [&](const Character& chi, bool v_side) -> Rotation {
        auto it = table.entries.find(chi);
        const std::optional<Rotation>* r = nullptr;
        if (it != table.entries.end())
            r = v_side ? &it->second.v : &it->second.u;
        if (r == nullptr || !r->has_value())
            throw std::invalid_argument("eigen table is missing the " +
                                        std::string(v_side ? "V" : "U") +
                                        " scalar for a required character");
        return **r;
    };

    // (a) every doubly nonzero character pairs to the identity scalar
    for (const Character& chi : doubly_nonzero_characters(s)) {
        Rotation product = scalar(chi, true) + scalar(G.conjugate(chi), false);
        if (!product.is_zero())
            return false;
    }
    // (b) triviality on H^1 of the quotient curves
    const Character one = G.trivial_character();
    if (s.cover_c().base_genus() > 0 && !scalar(one, true).is_zero())
        return false;
    if (s.cover_d().base_genus() > 0 && !scalar(one, false).is_zero())
        return false;
    return true;
}

namespace {

// Identifies the elliptic-base cover of a q = 1 pair; throws otherwise.
std::pair<const CoverDatum*, const CoverDatum*> albanese_split(const ProductQuotient& s) {
    int hc = s.cover_c().base_genus(), hd = s.cover_d().base_genus();
    if (hc == 1 && hd == 0)
        return {&s.cover_c(), &s.cover_d()};
    if (hc == 0 && hd == 1)
        return {&s.cover_d(), &s.cover_c()};
    throw std::invalid_argument("operation requires q = 1 with base genera {1, 0}");
}

}  // namespace

std::vector<FiberModel> singular_fibers(const ProductQuotient& s) {
    require_free(s);
    auto [elliptic, other] = albanese_split(s);
    const AbelianGroup& G = s.group();
    std::vector<FiberModel> fibers;
    for (const Element& g : elliptic->branch_elements()) {
        int m = static_cast<int>(G.element_order(g));
        // g is free on the other curve (diagonal freeness), so the reduced
        // fiber is the smooth quotient by <g>
        long long h = quotient_genus(*other, Subgroup::generated_by(G, {g}));
        fibers.push_back(MultipleOfSmooth{m, h});
    }
    return fibers;
}

long long albanese_fiber_genus(const ProductQuotient& s) {
    auto [elliptic, other] = albanese_split(s);
    (void)elliptic;
    return total_genus(*other);
}

}  // namespace isoprod
