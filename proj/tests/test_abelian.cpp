#include "isoprod/abelian.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace isoprod;

namespace {

Element el(std::vector<int> r) { return Element{std::move(r)}; }
Character ch(std::vector<int> c) { return Character{std::move(c)}; }

}  // namespace

TEST_CASE("constructor canonicalizes cyclic factor lists") {
    CHECK(AbelianGroup({4, 2}).invariant_factors() == std::vector<long long>{2, 4});
    CHECK(AbelianGroup({2, 3}).invariant_factors() == std::vector<long long>{6});
    CHECK(AbelianGroup({1}).invariant_factors().empty());
    CHECK(AbelianGroup({6, 4}).invariant_factors() == std::vector<long long>{2, 12});
    CHECK(AbelianGroup({6, 10, 15}).invariant_factors() == std::vector<long long>{30, 30});
    CHECK(AbelianGroup({2, 2, 2}).invariant_factors() == std::vector<long long>{2, 2, 2});
    CHECK(AbelianGroup({2, 2, 2}).order() == 8);
    CHECK(AbelianGroup().order() == 1);
    CHECK_THROWS_AS(AbelianGroup({0}), std::invalid_argument);
    CHECK(AbelianGroup({2, 4}).name() == "Z2xZ4");
    CHECK(AbelianGroup({2, 2, 2}).name() == "Z2^3");
    CHECK(AbelianGroup().name() == "1");
}

TEST_CASE("addition is componentwise mod the invariant factors") {
    AbelianGroup z2cubed({2, 2, 2});
    CHECK(z2cubed.add(el({1, 0, 0}), el({1, 0, 0})) == z2cubed.identity());
    CHECK(z2cubed.add(el({1, 0, 0}), el({0, 1, 0})) == el({1, 1, 0}));
    AbelianGroup z4({4});
    CHECK(z4.add(el({1}), el({3})) == el({0}));
    CHECK_THROWS_AS(z4.add(el({1}), el({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(z4.add(el({5}), el({1})), std::invalid_argument);
}

TEST_CASE("element orders") {
    AbelianGroup z2cubed({2, 2, 2});
    AbelianGroup z4({4});
    CHECK(z2cubed.element_order(z2cubed.identity()) == 1);
    CHECK(z2cubed.element_order(el({1, 0, 0})) == 2);
    CHECK(z4.element_order(el({1})) == 4);
    CHECK(z4.element_order(el({2})) == 2);
    CHECK(AbelianGroup({2, 4}).element_order(el({1, 2})) == 2);
}

TEST_CASE("generated subgroups") {
    AbelianGroup z2cubed({2, 2, 2});
    CHECK(Subgroup::generated_by(z2cubed, {}).order() == 1);

    Subgroup k = Subgroup::generated_by(z2cubed, {el({1, 1, 0}), el({1, 0, 1})});
    CHECK(k.order() == 4);
    CHECK(k.elements() ==
          std::vector<Element>{el({0, 0, 0}), el({0, 1, 1}), el({1, 0, 1}), el({1, 1, 0})});

    // brute-force closure oracle for <(2)> in Z4
    AbelianGroup z4({4});
    std::set<Element> closure{z4.identity()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Element& a : std::set<Element>(closure))
            if (closure.insert(z4.add(a, el({2}))).second)
                grew = true;
    }
    Subgroup h = Subgroup::generated_by(z4, {el({2})});
    CHECK(std::vector<Element>(closure.begin(), closure.end()) == h.elements());
    CHECK(h.elements() == std::vector<Element>{el({0}), el({2})});
}

TEST_CASE("generated_by is idempotent on subgroup element lists") {
    for (const AbelianGroup& g : abelian_groups_up_to(8)) {
        std::vector<Element> all = g.elements();
        for (size_t i = 0; i < all.size(); i += 2) {
            Subgroup h = Subgroup::generated_by(g, {all[i]});
            CHECK(Subgroup::generated_by(g, h.elements()).elements() == h.elements());
        }
    }
}

TEST_CASE("subgroup constructor rejects non-closed sets") {
    AbelianGroup z4({4});
    CHECK_THROWS_AS(Subgroup(z4, {el({0}), el({1})}), std::invalid_argument);
    CHECK_THROWS_AS(Subgroup(z4, {el({1}), el({3})}), std::invalid_argument);
}

TEST_CASE("character evaluation as exact rotation numbers") {
    AbelianGroup z2cubed({2, 2, 2});
    for (const Element& g : z2cubed.elements())
        CHECK(z2cubed.eval(z2cubed.trivial_character(), g).is_zero());
    CHECK(z2cubed.eval(ch({1, 1, 1}), el({1, 0, 0})) == Rotation(1, 2));
    AbelianGroup z4({4});
    CHECK(z4.eval(ch({1}), el({1})) == Rotation(1, 4));
    CHECK(z4.eval(ch({1}), el({2})) == Rotation(1, 2));

    // conjugate character negates the rotation
    for (const Character& chi : z4.characters())
        for (const Element& g : z4.elements())
            CHECK(z4.eval(z4.conjugate(chi), g) == -z4.eval(chi, g));
}

TEST_CASE("kernels of characters") {
    AbelianGroup z2cubed({2, 2, 2});
    CHECK(kernel(z2cubed, z2cubed.trivial_character()).order() == 8);

    Subgroup k = kernel(z2cubed, ch({1, 1, 1}));
    CHECK(k.elements() ==
          std::vector<Element>{el({0, 0, 0}), el({0, 1, 1}), el({1, 0, 1}), el({1, 1, 0})});

    // oracle: dot-product parity over all residue vectors, plain integers
    std::vector<Element> expected;
    for (const Element& g : z2cubed.elements())
        if ((g.residues[0] + g.residues[1]) % 2 == 0)
            expected.push_back(g);
    CHECK(kernel(z2cubed, ch({1, 1, 0})).elements() == expected);
    CHECK(kernel(z2cubed, ch({1, 1, 0})).elements() ==
          std::vector<Element>{el({0, 0, 0}), el({0, 0, 1}), el({1, 1, 0}), el({1, 1, 1})});
}

TEST_CASE("dual pairing over all groups of order <= 16") {
    for (long long n = 1; n <= 16; ++n)
        for (const AbelianGroup& g : abelian_groups_of_order(n)) {
            CHECK(static_cast<long long>(g.characters().size()) == g.order());
            // nondegeneracy
            for (const Element& x : g.elements()) {
                if (x == g.identity())
                    continue;
                bool separated = false;
                for (const Character& chi : g.characters())
                    if (!g.eval(chi, x).is_zero()) {
                        separated = true;
                        break;
                    }
                CHECK(separated);
            }
            // |ker chi| * ord(chi) = |G|
            for (const Character& chi : g.characters())
                CHECK(kernel(g, chi).order() * g.character_order(chi) == g.order());
            CHECK(Subgroup(g, g.elements()).isomorphism_type() == g);
        }
}

TEST_CASE("isomorphism types from element orders") {
    AbelianGroup z2cubed({2, 2, 2});
    AbelianGroup z4({4});
    CHECK(Subgroup::generated_by(z2cubed, {}).isomorphism_type() == AbelianGroup());
    CHECK(kernel(z2cubed, ch({1, 1, 1})).isomorphism_type() == AbelianGroup({2, 2}));
    CHECK(Subgroup(z4, z4.elements()).isomorphism_type() == z4);
    AbelianGroup z2z4({2, 4});
    CHECK(Subgroup::generated_by(z2z4, {el({0, 1})}).isomorphism_type() == AbelianGroup({4}));
    CHECK(Subgroup(z2z4, z2z4.elements()).isomorphism_type() == z2z4);
    CHECK_THROWS_AS(group_from_order_multiset({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("character listing is lexicographic and complete") {
    CHECK(AbelianGroup().characters().size() == 1);
    CHECK(AbelianGroup({2, 2, 2}).characters().size() == 8);
    CHECK(AbelianGroup({2, 4}).characters().size() == 8);
    std::vector<Character> chars = AbelianGroup({2, 4}).characters();
    CHECK(chars.front() == ch({0, 0}));
    CHECK(chars[1] == ch({0, 1}));
    CHECK(std::is_sorted(chars.begin(), chars.end()));
}

TEST_CASE("automorphism counts against independent oracles") {
    CHECK(automorphisms(AbelianGroup({2})).size() == 1);

    // GL(2, F2) by brute force over 2x2 matrices
    int gl2 = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    if ((a * d - b * c) % 2 != 0)
                        ++gl2;
    CHECK(gl2 == 6);
    CHECK(automorphisms(AbelianGroup({2, 2})).size() == 6);

    // units mod 4
    int units = 0;
    for (int u = 1; u < 4; ++u)
        if (std::gcd(u, 4) == 1)
            ++units;
    CHECK(units == 2);
    CHECK(automorphisms(AbelianGroup({4})).size() == 2);

    CHECK(automorphisms(AbelianGroup({2, 2, 2})).size() == 168);  // |GL(3, F2)|
    CHECK_THROWS_AS(automorphisms(AbelianGroup({2, 2, 2, 2, 2})), std::invalid_argument);
}

TEST_CASE("automorphisms are additive and preserve order statistics") {
    for (const AbelianGroup& g : abelian_groups_up_to(8)) {
        std::multiset<long long> orders;
        for (const Element& x : g.elements())
            orders.insert(g.element_order(x));
        for (const Automorphism& phi : automorphisms(g)) {
            std::multiset<long long> image_orders;
            for (const Element& x : g.elements())
                image_orders.insert(g.element_order(apply(g, phi, x)));
            CHECK(image_orders == orders);
        }
    }
    // hom property and pullback consistency, spot on Z2xZ4
    AbelianGroup g({2, 4});
    for (const Automorphism& phi : automorphisms(g)) {
        for (const Element& x : g.elements())
            for (const Element& y : g.elements())
                CHECK(apply(g, phi, g.add(x, y)) == g.add(apply(g, phi, x), apply(g, phi, y)));
        for (const Character& chi : g.characters())
            for (const Element& x : g.elements())
                CHECK(g.eval(pullback(g, phi, chi), x) == g.eval(chi, apply(g, phi, x)));
    }
}

TEST_CASE("small-group catalogue") {
    std::vector<AbelianGroup> order8 = abelian_groups_of_order(8);
    CHECK(order8 == std::vector<AbelianGroup>{AbelianGroup({2, 2, 2}), AbelianGroup({2, 4}),
                                              AbelianGroup({8})});
    CHECK(abelian_groups_up_to(8).size() == 10);
    CHECK(abelian_groups_of_order(1) == std::vector<AbelianGroup>{AbelianGroup()});
}
