#include "isoprod/abelian.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace isoprod {

AbelianGroup::AbelianGroup(std::vector<long long> cyclic_orders) {
    for (long long n : cyclic_orders) {
        if (n < 1)
            throw std::invalid_argument("cyclic factor must be a positive integer");
    }
    // Smith reduction of the diagonal relation matrix diag(a_1..a_m):
    // sweep (a_i, a_j) -> (gcd, lcm) until the list is divisibility-sorted.
    std::vector<long long>& a = cyclic_orders;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < a.size(); ++i) {
            for (size_t j = i + 1; j < a.size(); ++j) {
                if (a[j] % a[i] != 0) {
                    long long g = std::gcd(a[i], a[j]);
                    long long l = a[i] / g * a[j];
                    a[i] = g;
                    a[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(a.begin(), a.end());
    for (long long n : a)
        if (n > 1)
            factors_.push_back(n);
}

long long AbelianGroup::order() const {
    long long n = 1;
    for (long long f : factors_)
        n *= f;
    return n;
}

Element AbelianGroup::identity() const {
    return Element{std::vector<int>(factors_.size(), 0)};
}

Element AbelianGroup::generator(int i) const {
    if (i < 0 || i >= rank())
        throw std::invalid_argument("generator index out of range");
    Element e = identity();
    e.residues[i] = 1;
    return e;
}

bool AbelianGroup::contains(const Element& g) const {
    if (g.residues.size() != factors_.size())
        return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (g.residues[i] < 0 || g.residues[i] >= factors_[i])
            return false;
    return true;
}

void AbelianGroup::require(const Element& g) const {
    if (!contains(g))
        throw std::invalid_argument("element does not belong to " + name());
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
    require(a);
    require(b);
    Element c = identity();
    for (size_t i = 0; i < factors_.size(); ++i)
        c.residues[i] = static_cast<int>((a.residues[i] + b.residues[i]) % factors_[i]);
    return c;
}

Element AbelianGroup::negate(const Element& a) const {
    require(a);
    Element c = identity();
    for (size_t i = 0; i < factors_.size(); ++i)
        c.residues[i] = static_cast<int>((factors_[i] - a.residues[i]) % factors_[i]);
    return c;
}

Element AbelianGroup::multiple(long long n, const Element& a) const {
    require(a);
    Element c = identity();
    for (size_t i = 0; i < factors_.size(); ++i) {
        long long r = (n % factors_[i]) * a.residues[i] % factors_[i];
        if (r < 0)
            r += factors_[i];
        c.residues[i] = static_cast<int>(r);
    }
    return c;
}

long long AbelianGroup::element_order(const Element& a) const {
    require(a);
    long long m = 1;
    for (size_t i = 0; i < factors_.size(); ++i)
        m = std::lcm(m, factors_[i] / std::gcd(factors_[i], static_cast<long long>(a.residues[i])));
    return m;
}

namespace {

// Mixed-radix counting; emits vectors in lexicographic order.
std::vector<std::vector<int>> all_vectors(const std::vector<long long>& radices) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(radices.size(), 0);
    while (true) {
        out.push_back(v);
        int i = static_cast<int>(radices.size()) - 1;
        while (i >= 0 && v[i] + 1 == radices[i]) {
            v[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++v[i];
    }
    return out;
}

}  // namespace

std::vector<Element> AbelianGroup::elements() const {
    std::vector<Element> out;
    for (auto& v : all_vectors(factors_))
        out.push_back(Element{v});
    return out;
}

Character AbelianGroup::trivial_character() const {
    return Character{std::vector<int>(factors_.size(), 0)};
}

bool AbelianGroup::contains(const Character& chi) const {
    if (chi.dual_residues.size() != factors_.size())
        return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (chi.dual_residues[i] < 0 || chi.dual_residues[i] >= factors_[i])
            return false;
    return true;
}

void AbelianGroup::require(const Character& chi) const {
    if (!contains(chi))
        throw std::invalid_argument("character does not belong to the dual of " + name());
}

std::vector<Character> AbelianGroup::characters() const {
    std::vector<Character> out;
    for (auto& v : all_vectors(factors_))
        out.push_back(Character{v});
    return out;
}

Character AbelianGroup::conjugate(const Character& chi) const {
    require(chi);
    Character c = trivial_character();
    for (size_t i = 0; i < factors_.size(); ++i)
        c.dual_residues[i] = static_cast<int>((factors_[i] - chi.dual_residues[i]) % factors_[i]);
    return c;
}

long long AbelianGroup::character_order(const Character& chi) const {
    require(chi);
    long long m = 1;
    for (size_t i = 0; i < factors_.size(); ++i)
        m = std::lcm(m, factors_[i] / std::gcd(factors_[i], static_cast<long long>(chi.dual_residues[i])));
    return m;
}

Rotation AbelianGroup::eval(const Character& chi, const Element& g) const {
    require(chi);
    require(g);
    Rotation r;
    for (size_t i = 0; i < factors_.size(); ++i)
        r = r + Rotation(static_cast<long long>(chi.dual_residues[i]) * g.residues[i], factors_[i]);
    return r;
}

std::string AbelianGroup::name() const {
    if (factors_.empty())
        return "1";
    std::string s;
    size_t i = 0;
    while (i < factors_.size()) {
        size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i])
            ++j;
        if (!s.empty())
            s += "x";
        s += "Z" + std::to_string(factors_[i]);
        if (j - i > 1)
            s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

/* ---------------------------------------------------------------- */
/*  Subgroups                                                        */
/* ---------------------------------------------------------------- */

Subgroup::Subgroup(AbelianGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty())
        throw std::invalid_argument("subgroup must contain the identity");
    for (const Element& g : elements_)
        parent_.require(g);
    if (!std::binary_search(elements_.begin(), elements_.end(), parent_.identity()))
        throw std::invalid_argument("subgroup must contain the identity");
    for (const Element& g : elements_)
        for (const Element& h : elements_)
            if (!std::binary_search(elements_.begin(), elements_.end(), parent_.add(g, h)))
                throw std::invalid_argument("element set is not closed under the group operation");
}

Subgroup Subgroup::generated_by(const AbelianGroup& parent,
                                const std::vector<Element>& generators) {
    std::set<Element> closure;
    closure.insert(parent.identity());
    for (const Element& g : generators)
        parent.require(g);
    // breadth-first closure under addition of generators
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Element> next;
        for (const Element& x : closure)
            for (const Element& g : generators) {
                Element y = parent.add(x, g);
                if (!closure.count(y))
                    next.push_back(y);
            }
        for (Element& y : next)
            grew |= closure.insert(std::move(y)).second;
    }
    return Subgroup(parent, std::vector<Element>(closure.begin(), closure.end()));
}

bool Subgroup::contains(const Element& g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

AbelianGroup Subgroup::isomorphism_type() const {
    std::vector<long long> orders;
    orders.reserve(elements_.size());
    for (const Element& g : elements_)
        orders.push_back(parent_.element_order(g));
    return group_from_order_multiset(std::move(orders));
}

Subgroup kernel(const AbelianGroup& group, const Character& chi) {
    group.require(chi);
    std::vector<Element> ker;
    for (const Element& g : group.elements())
        if (group.eval(chi, g).is_zero())
            ker.push_back(g);
    return Subgroup(group, std::move(ker));
}

/* ---------------------------------------------------------------- */
/*  Automorphisms                                                    */
/* ---------------------------------------------------------------- */

Element apply(const AbelianGroup& group, const Automorphism& phi, const Element& g) {
    group.require(g);
    if (phi.generator_images.size() != static_cast<size_t>(group.rank()))
        throw std::invalid_argument("automorphism does not match group rank");
    Element out = group.identity();
    for (int i = 0; i < group.rank(); ++i)
        out = group.add(out, group.multiple(g.residues[i], phi.generator_images[i]));
    return out;
}

Character pullback(const AbelianGroup& group, const Automorphism& phi, const Character& chi) {
    group.require(chi);
    const auto& factors = group.invariant_factors();
    Character out = group.trivial_character();
    for (int j = 0; j < group.rank(); ++j) {
        Rotation r = group.eval(chi, apply(group, phi, group.generator(j)));
        // chi(phi(e_j)) has order dividing n_j, so den | n_j
        if (factors[j] % r.den() != 0)
            throw std::logic_error("pullback character value of unexpected order");
        out.dual_residues[j] = static_cast<int>(r.num() * (factors[j] / r.den()) % factors[j]);
    }
    return out;
}

std::vector<Automorphism> automorphisms(const AbelianGroup& group, long long max_order) {
    if (group.order() > max_order)
        throw std::invalid_argument("automorphism enumeration refused: group order " +
                                    std::to_string(group.order()) + " exceeds bound " +
                                    std::to_string(max_order));
    const auto& factors = group.invariant_factors();
    const std::vector<Element> all = group.elements();

    // candidate images of generator i: elements of order dividing n_i
    std::vector<std::vector<Element>> candidates(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
        for (const Element& g : all)
            if (factors[i] % group.element_order(g) == 0)
                candidates[i].push_back(g);

    std::vector<Automorphism> out;
    std::vector<size_t> pick(factors.size(), 0);
    if (factors.empty()) {
        out.push_back(Automorphism{{}});
        return out;
    }
    while (true) {
        Automorphism phi;
        for (size_t i = 0; i < factors.size(); ++i)
            phi.generator_images.push_back(candidates[i][pick[i]]);
        std::set<Element> image;
        for (const Element& g : all)
            image.insert(apply(group, phi, g));
        if (static_cast<long long>(image.size()) == group.order())
            out.push_back(std::move(phi));
        int i = static_cast<int>(factors.size()) - 1;
        while (i >= 0 && pick[i] + 1 == candidates[i].size()) {
            pick[i] = 0;
            --i;
        }
        if (i < 0)
            break;
        ++pick[i];
    }
    return out;
}

/* ---------------------------------------------------------------- */
/*  Recognition from order statistics                                */
/* ---------------------------------------------------------------- */

AbelianGroup group_from_order_multiset(std::vector<long long> orders) {
    long long n = static_cast<long long>(orders.size());
    if (n == 0)
        throw std::invalid_argument("empty order multiset");

    // primes dividing the group order
    std::vector<long long> primes;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0)
                m /= p;
        }
    if (m > 1)
        primes.push_back(m);

    // For each prime: lambda_i from the counts c_j = #{x : ord(x) | p^j}
    // restricted to the Sylow p-part. The differences log_p(c_j/c_{j-1})
    // are the conjugate partition of lambda.
    std::map<long long, std::vector<int>> lambda;  // prime -> descending exponents
    for (long long p : primes) {
        std::vector<long long> counts{1};  // counts[j] = #{x : ord(x) | p^j}
        long long pj = 1;
        while (true) {
            pj *= p;  // p^j for j = counts.size()
            long long c = 0;
            for (long long o : orders) {
                long long q = o;
                while (q % p == 0)
                    q /= p;
                if (q == 1 && pj % o == 0)  // o is a p-power dividing p^j
                    ++c;
            }
            if (c == counts.back())
                break;
            counts.push_back(c);
        }
        std::vector<int> conj;  // conj[j-1] = #{i : lambda_i >= j}
        for (size_t j = 1; j < counts.size(); ++j) {
            if (counts[j] % counts[j - 1] != 0)
                throw std::invalid_argument("order multiset is not that of an abelian group");
            long long ratio = counts[j] / counts[j - 1];
            int e = 0;
            while (ratio > 1) {
                if (ratio % p != 0)
                    throw std::invalid_argument("order multiset is not that of an abelian group");
                ratio /= p;
                ++e;
            }
            conj.push_back(e);
        }
        std::vector<int> parts;
        int nparts = conj.empty() ? 0 : conj[0];
        for (int i = 1; i <= nparts; ++i) {
            int cnt = 0;
            for (int e : conj)
                if (e >= i)
                    ++cnt;
            parts.push_back(cnt);
        }
        // parts is lambda in descending order
        lambda[p] = parts;
    }

    size_t width = 0;
    for (auto& [p, parts] : lambda)
        width = std::max(width, parts.size());
    std::vector<long long> invariant;
    for (size_t i = 0; i < width; ++i) {  // i = 0 is the largest factor
        long long f = 1;
        for (auto& [p, parts] : lambda)
            if (i < parts.size()) {
                for (int e = 0; e < parts[i]; ++e)
                    f *= p;
            }
        invariant.push_back(f);
    }
    std::reverse(invariant.begin(), invariant.end());
    AbelianGroup out(invariant);
    if (out.order() != n)
        throw std::invalid_argument("order multiset is not that of an abelian group");
    return out;
}

/* ---------------------------------------------------------------- */
/*  Small-group catalogues                                           */
/* ---------------------------------------------------------------- */

namespace {

void partitions_of(int k, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(k, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_of(k - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_of_order(long long n) {
    if (n < 1)
        throw std::invalid_argument("group order must be positive");
    std::vector<std::pair<long long, int>> factorization;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            factorization.push_back({p, e});
        }
    if (m > 1)
        factorization.push_back({m, 1});

    std::vector<std::vector<long long>> pieces{{}};  // lists of prime-power factors
    for (auto [p, e] : factorization) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions_of(e, e, cur, parts);
        std::vector<std::vector<long long>> next;
        for (const auto& prefix : pieces)
            for (const auto& part : parts) {
                std::vector<long long> piece = prefix;
                for (int exp : part) {
                    long long q = 1;
                    for (int i = 0; i < exp; ++i)
                        q *= p;
                    piece.push_back(q);
                }
                next.push_back(std::move(piece));
            }
        pieces = std::move(next);
    }
    std::vector<AbelianGroup> out;
    for (auto& piece : pieces)
        out.emplace_back(piece);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AbelianGroup> abelian_groups_up_to(long long n) {
    std::vector<AbelianGroup> out;
    for (long long k = 2; k <= n; ++k)
        for (auto& g : abelian_groups_of_order(k))
            out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
        return std::pair(a.order(), a.invariant_factors()) <
               std::pair(b.order(), b.invariant_factors());
    });
    return out;
}

}  // namespace isoprod
