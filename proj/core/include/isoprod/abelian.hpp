#pragma once

#include "isoprod/rotation.hpp"

#include <compare>
#include <string>
#include <vector>

namespace isoprod {

/// Element of a finite abelian group, as a residue vector against the
/// group's invariant factors. Elements are plain values; the owning group
/// validates membership on use.
struct Element {
    std::vector<int> residues;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/// Character of a finite abelian group, as a dual residue vector: it sends
/// g to the rotation number sum_i c_i g_i / n_i (mod 1).
struct Character {
    std::vector<int> dual_residues;

    friend auto operator<=>(const Character&, const Character&) = default;
};

/// Finite abelian group in invariant-factor form Z_{n1} + ... + Z_{nk},
/// n1 | n2 | ... | nk, every n_i >= 2; the empty list is the trivial group.
/// The constructor accepts an arbitrary list of cyclic orders and
/// canonicalizes it (Smith reduction of the diagonal relation matrix).
class AbelianGroup {
  public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<long long> cyclic_orders);

    const std::vector<long long>& invariant_factors() const { return factors_; }
    long long order() const;
    int rank() const { return static_cast<int>(factors_.size()); }
    bool is_trivial() const { return factors_.empty(); }

    Element identity() const;
    /// i-th standard generator (1 in slot i).
    Element generator(int i) const;
    bool contains(const Element& g) const;
    void require(const Element& g) const;  // throws std::invalid_argument

    Element add(const Element& a, const Element& b) const;
    Element negate(const Element& a) const;
    Element multiple(long long n, const Element& a) const;
    long long element_order(const Element& a) const;
    /// All elements in lexicographic order of residue vectors.
    std::vector<Element> elements() const;

    Character trivial_character() const;
    bool contains(const Character& chi) const;
    void require(const Character& chi) const;
    /// All |G| characters in lexicographic order of dual residue vectors.
    std::vector<Character> characters() const;
    Character conjugate(const Character& chi) const;
    long long character_order(const Character& chi) const;
    /// chi(g) as an exact rotation number.
    Rotation eval(const Character& chi, const Element& g) const;

    /// "Z2^3", "Z2xZ4", "1" for the trivial group.
    std::string name() const;

    friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

  private:
    std::vector<long long> factors_;
};

/// Subgroup given by its full sorted element list. The constructor checks
/// closure; use generated_by to close a generating set.
class Subgroup {
  public:
    Subgroup(AbelianGroup parent, std::vector<Element> elements);
    static Subgroup generated_by(const AbelianGroup& parent,
                                 const std::vector<Element>& generators);

    const AbelianGroup& parent() const { return parent_; }
    const std::vector<Element>& elements() const { return elements_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    bool contains(const Element& g) const;

    /// Abstract type of the subgroup, recovered from the multiset of element
    /// orders (which determines a finite abelian group).
    AbelianGroup isomorphism_type() const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;

  private:
    AbelianGroup parent_;
    std::vector<Element> elements_;  // sorted
};

/// ker(chi) = { g : chi(g) = 1 }.
Subgroup kernel(const AbelianGroup& group, const Character& chi);

/// Group automorphism, stored by its images of the standard generators.
struct Automorphism {
    std::vector<Element> generator_images;

    friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

Element apply(const AbelianGroup& group, const Automorphism& phi, const Element& g);
/// Pullback of chi along phi: (pullback)(g) = chi(phi(g)).
Character pullback(const AbelianGroup& group, const Automorphism& phi, const Character& chi);

/// Every automorphism of the group, by brute force over generator images,
/// in lexicographic order of the image tuples. Refuses groups of order
/// beyond max_order.
std::vector<Automorphism> automorphisms(const AbelianGroup& group, long long max_order = 16);

/// Invariant factors of the finite abelian group determined by a multiset of
/// element orders. Throws if no such group exists.
AbelianGroup group_from_order_multiset(std::vector<long long> orders);

/// All abelian groups of exactly / at most the given order, sorted by
/// (order, invariant factors). The trivial group is excluded from the
/// up-to listing.
std::vector<AbelianGroup> abelian_groups_of_order(long long n);
std::vector<AbelianGroup> abelian_groups_up_to(long long n);

}  // namespace isoprod
