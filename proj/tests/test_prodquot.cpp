#include "isoprod/prodquot.hpp"

#include "families.hpp"

#include <doctest.h>

#include <algorithm>

using namespace isoprod;
using namespace isoprod::testing;

namespace {

// free pair with q = 0: the seven involutions of Z2^3 split into two
// generating triples
ProductQuotient q0_pair() {
    AbelianGroup g({2, 2, 2});
    Element s = el({1, 1, 1});
    CoverDatum c(g, 0, {el({1, 0, 0}), el({1, 0, 0}), el({0, 1, 0}), el({0, 1, 0}), s, s});
    CoverDatum d(g, 0,
                 {el({0, 0, 1}), el({0, 0, 1}), el({1, 1, 0}), el({1, 1, 0}), el({1, 0, 1}),
                  el({1, 0, 1})});
    return ProductQuotient(std::move(c), std::move(d));
}

}  // namespace

TEST_CASE("freeness of the diagonal action") {
    CHECK(is_free(genus5_family(1)).free);
    CHECK(is_free(genus3_family(1)).free);
    CHECK(is_free(extended_family(1)).free);

    AbelianGroup z2({2});
    CoverDatum c(z2, 1, {el({1}), el({1})});
    ProductQuotient shared(c, c);
    FreenessResult f = is_free(shared);
    CHECK_FALSE(f.free);
    CHECK(*f.witness == el({1}));
}

TEST_CASE("construction rejects bad pairs") {
    AbelianGroup z2({2});
    CoverDatum genus1(z2, 1, {});
    CHECK_THROWS_AS(ProductQuotient(genus1, genus1), std::invalid_argument);

    AbelianGroup z4({4});
    CoverDatum c(z2, 1, {el({1}), el({1})});
    CoverDatum d(z4, 1, {el({2}), el({2})});
    CHECK_THROWS_AS(ProductQuotient(c, d), std::invalid_argument);
}

TEST_CASE("numerical invariants of the bundled families") {
    for (int rp = 1; rp <= 2; ++rp) {
        SurfaceRecord r = invariants(genus5_family(rp));
        CHECK(r.g_c == 4 * rp + 1);
        CHECK(r.g_d == 5);
        CHECK(r.q == 1);
        CHECK(r.chi == 2 * rp);
        CHECK(r.k2 == 16 * rp);
        CHECK(r.pg == 2 * rp);
        CHECK(r.e == 8 * rp);
        CHECK(r.albanese_fiber_genus == 5);
        CHECK(r.trivial_kernel_type == AbelianGroup({2, 2}));
    }
    SurfaceRecord r3 = invariants(genus3_family(1));
    CHECK(r3.g_c == 5);
    CHECK(r3.g_d == 3);
    CHECK(r3.chi == 1);
    CHECK(r3.k2 == 8);
    CHECK(r3.pg == 1);
    CHECK(r3.albanese_fiber_genus == 3);

    SurfaceRecord re = invariants(extended_family(1));
    CHECK(re.g_c == 3);
    CHECK(re.g_d == 3);
    CHECK(re.chi == 1);
    CHECK(re.pg == 1);
    CHECK(re.q == 1);
    CHECK(re.k2 == 8);

    SurfaceRecord r0 = invariants(q0_pair());
    CHECK(r0.q == 0);
    CHECK(r0.chi == 2);
    CHECK(r0.pg == 1);
    CHECK_FALSE(r0.albanese_fiber_genus.has_value());

    AbelianGroup z2({2});
    CoverDatum c(z2, 1, {el({1}), el({1})});
    CHECK_THROWS_AS(invariants(ProductQuotient(c, c)), std::invalid_argument);
}

TEST_CASE("kunneth dimension equals the second betti number") {
    CHECK(h2_dimension(genus3_family(1)) == 6);
    CHECK(h2_dimension(genus5_family(1)) == 10);
    for (const ProductQuotient& s :
         {genus5_family(1), genus5_family(2), genus3_family(1), genus3_family(2),
          extended_family(1), extended_family(2), q0_pair()})
        CHECK(h2_dimension(s) == invariants(s).b2);
}

TEST_CASE("trivial kernels") {
    Subgroup k5 = trivial_kernel(genus5_family(1));
    CHECK(k5.elements() == std::vector<Element>{el({0, 0, 0}), el({0, 1, 1}), el({1, 0, 1}),
                                                el({1, 1, 0})});
    CHECK(k5.isomorphism_type() == AbelianGroup({2, 2}));

    Subgroup k3 = trivial_kernel(genus3_family(1));
    CHECK(k3.elements() == std::vector<Element>{el({0, 0, 0}), el({0, 0, 1}), el({1, 1, 0}),
                                                el({1, 1, 1})});
    CHECK(k3.isomorphism_type() == AbelianGroup({2, 2}));

    // the only doubly nonzero character has kernel <e2>
    Subgroup ke = trivial_kernel(extended_family(1));
    CHECK(ke.elements() == std::vector<Element>{el({0, 0}), el({0, 1})});
    CHECK(ke.order() == 2);
}

TEST_CASE("kernel is contained in every doubly nonzero character kernel") {
    for (const ProductQuotient& s : {genus5_family(1), genus3_family(2), extended_family(1)}) {
        const AbelianGroup& g = s.group();
        Subgroup k = trivial_kernel(s);
        for (const Character& chi : g.characters()) {
            if (char_dim(s.cover_c(), chi) == 0 ||
                char_dim(s.cover_d(), g.conjugate(chi)) == 0)
                continue;
            for (const Element& x : k.elements())
                CHECK(g.eval(chi, x).is_zero());
        }
    }
}

TEST_CASE("kernel is stable under transport and factor swap") {
    ProductQuotient s = genus3_family(1);
    const AbelianGroup& g = s.group();
    Subgroup k = trivial_kernel(s);

    for (const Automorphism& phi : automorphisms(g)) {
        auto move_cover = [&](const CoverDatum& d) {
            std::vector<Element> branches;
            for (const Element& b : d.branch_elements())
                branches.push_back(apply(g, phi, b));
            return CoverDatum(g, d.base_genus(), branches);
        };
        ProductQuotient moved(move_cover(s.cover_c()), move_cover(s.cover_d()));
        std::vector<Element> transported;
        for (const Element& x : k.elements())
            transported.push_back(apply(g, phi, x));
        std::sort(transported.begin(), transported.end());
        CHECK(trivial_kernel(moved).elements() == transported);
    }

    ProductQuotient swapped(s.cover_d(), s.cover_c());
    CHECK(trivial_kernel(swapped).elements() == k.elements());
}

TEST_CASE("extended triviality from eigenvalue tables") {
    ProductQuotient s = extended_family(1);
    CHECK(extended_triviality(s, extended_family_table()));

    // identity pair: scalar 1 everywhere
    EigenTable identity;
    for (const Character& chi : s.group().characters())
        identity.entries[chi] = EigenScalars{Rotation(0, 1), Rotation(0, 1)};
    CHECK(extended_triviality(s, identity));

    // replacing the U-scalar by i breaks the pairing: (-1) * i != 1
    EigenTable broken = extended_family_table();
    broken.entries[ch({1, 0})].u = Rotation(1, 4);
    CHECK_FALSE(extended_triviality(s, broken));

    EigenTable missing = extended_family_table();
    missing.entries.erase(ch({1, 0}));
    CHECK_THROWS_AS(extended_triviality(s, missing), std::invalid_argument);

    EigenTable no_trivial = extended_family_table();
    no_trivial.entries.erase(ch({0, 0}));
    CHECK_THROWS_AS(extended_triviality(s, no_trivial), std::invalid_argument);

    // a nontrivial scalar on the invariant part of H^1(C) is not trivial
    EigenTable bad_h1 = extended_family_table();
    bad_h1.entries[ch({0, 0})].v = Rotation(1, 2);
    CHECK_FALSE(extended_triviality(s, bad_h1));
}

TEST_CASE("singular fibers of the albanese fibration") {
    for (int rp = 1; rp <= 2; ++rp) {
        ProductQuotient s3 = genus3_family(rp);
        std::vector<FiberModel> f3 = singular_fibers(s3);
        CHECK(f3.size() == 2 * static_cast<size_t>(rp));
        for (const FiberModel& f : f3) {
            const auto& m = std::get<MultipleOfSmooth>(f);
            CHECK(m.multiplicity == 2);
            CHECK(m.component_genus == 2);
            CHECK(m.multiplicity * (2 * m.component_genus - 2) ==
                  2 * *invariants(s3).albanese_fiber_genus - 2);
        }
        CHECK(euler_ledger(f3, 3, 1) == 4 * invariants(s3).chi);

        ProductQuotient s5 = genus5_family(rp);
        std::vector<FiberModel> f5 = singular_fibers(s5);
        CHECK(f5.size() == 2 * static_cast<size_t>(rp));
        for (const FiberModel& f : f5) {
            const auto& m = std::get<MultipleOfSmooth>(f);
            CHECK(m.multiplicity == 2);
            CHECK(m.component_genus == 3);
        }
        CHECK(euler_ledger(f5, 5, 1) == 4 * invariants(s5).chi);
    }

    CHECK_THROWS_AS(singular_fibers(q0_pair()), std::invalid_argument);
    CHECK_THROWS_AS(albanese_fiber_genus(q0_pair()), std::invalid_argument);
}

TEST_CASE("albanese fiber genus") {
    CHECK(albanese_fiber_genus(genus5_family(1)) == 5);
    CHECK(albanese_fiber_genus(genus3_family(1)) == 3);
    CHECK(albanese_fiber_genus(extended_family(2)) == 3);
    // the elliptic base may sit on either factor
    ProductQuotient swapped(genus5_family(1).cover_d(), genus5_family(1).cover_c());
    CHECK(albanese_fiber_genus(swapped) == 5);
}
