#include "isoprod/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace isoprod {

void SearchParams::validate() const {
    if (max_branch_points < 0)
        throw std::invalid_argument("max branch points must be nonnegative");
    if (max_chi < 1)
        throw std::invalid_argument("max chi must be positive");
    if (base_split.first < 0 || base_split.second < 0)
        throw std::invalid_argument("base genera must be nonnegative");
    for (const AbelianGroup& g : groups)
        if (g.order() > 16)
            throw std::invalid_argument("census group exceeds the automorphism bound");
}

std::vector<AbelianGroup> SearchParams::effective_groups() const {
    if (!groups.empty()) {
        std::vector<AbelianGroup> out = groups;
        std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
            return std::pair(a.order(), a.invariant_factors()) <
                   std::pair(b.order(), b.invariant_factors());
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    return abelian_groups_up_to(8);
}

/* ---------------------------------------------------------------- */
/*  Cover enumeration                                                */
/* ---------------------------------------------------------------- */

namespace {

// Index-level view of a small group: elements in lexicographic order with a
// dense addition table, everything a bitmask fits (order <= 16 suffices for
// the census and the automorphism bound).
struct IndexedGroup {
    const AbelianGroup& group;
    std::vector<Element> elements;       // elements[0] = identity
    std::vector<std::vector<int>> add;   // add[i][j]
    std::unordered_map<std::string, int> index;

    explicit IndexedGroup(const AbelianGroup& g) : group(g), elements(g.elements()) {
        for (size_t i = 0; i < elements.size(); ++i)
            index.emplace(pack(elements[i]), static_cast<int>(i));
        add.assign(elements.size(), std::vector<int>(elements.size(), 0));
        for (size_t i = 0; i < elements.size(); ++i)
            for (size_t j = 0; j < elements.size(); ++j)
                add[i][j] = index.at(pack(group.add(elements[i], elements[j])));
    }

    static std::string pack(const Element& e) {
        std::string s;
        s.reserve(e.residues.size());
        for (int r : e.residues)
            s.push_back(static_cast<char>('0' + r));
        return s;
    }

    int index_of(const Element& e) const { return index.at(pack(e)); }
};

// Bitmask of the subgroup generated by the element indices set in gens.
uint32_t closure_mask(const IndexedGroup& ig, uint32_t gens) {
    uint32_t sub = 1;  // identity
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < ig.elements.size(); ++i) {
            if (!(sub >> i & 1))
                continue;
            for (size_t j = 0; j < ig.elements.size(); ++j) {
                if (!(gens >> j & 1))
                    continue;
                uint32_t bit = 1u << ig.add[i][j];
                if (!(sub & bit)) {
                    sub |= bit;
                    grew = true;
                }
            }
        }
    }
    return sub;
}

// Minimal generator count of G/H where H is given as a subgroup bitmask.
int quotient_rank(const IndexedGroup& ig, uint32_t sub) {
    const size_t n = ig.elements.size();
    std::vector<long long> coset_orders;
    uint32_t assigned = 0;
    for (size_t i = 0; i < n; ++i) {
        if (assigned >> i & 1)
            continue;
        long long m = 1;
        int x = static_cast<int>(i);
        while (!(sub >> x & 1)) {
            x = ig.add[x][i];
            ++m;
        }
        coset_orders.push_back(m);
        for (size_t j = 0; j < n; ++j)
            if (sub >> j & 1)
                assigned |= 1u << ig.add[i][j];
    }
    return group_from_order_multiset(std::move(coset_orders)).rank();
}

struct CoverEnumerator {
    const IndexedGroup& ig;
    int base_genus;
    // reach[k][s] = sums attainable with k branch elements of index >= s
    std::vector<std::vector<uint32_t>> reach;
    std::unordered_map<uint32_t, bool> generation_cache;  // by distinct-element mask
    std::vector<CoverDatum> out;
    std::vector<int> chosen;

    CoverEnumerator(const IndexedGroup& g, int h, int r_max) : ig(g), base_genus(h) {
        const int n = static_cast<int>(ig.elements.size());
        reach.assign(r_max + 1, std::vector<uint32_t>(n + 1, 0));
        for (int s = 0; s <= n; ++s)
            reach[0][s] = 1;  // identity only
        for (int k = 1; k <= r_max; ++k)
            for (int s = n - 1; s >= 1; --s) {
                uint32_t mask = reach[k][s + 1];
                uint32_t prev = reach[k - 1][s];
                for (int b = 0; b < n; ++b)
                    if (prev >> b & 1)
                        mask |= 1u << ig.add[b][s];
                reach[k][s] = mask;
            }
    }

    bool generates(uint32_t distinct_mask) {
        auto it = generation_cache.find(distinct_mask);
        if (it != generation_cache.end())
            return it->second;
        uint32_t sub = closure_mask(ig, distinct_mask);
        bool ok = quotient_rank(ig, sub) <= 2 * base_genus;
        generation_cache.emplace(distinct_mask, ok);
        return ok;
    }

    void emit() {
        uint32_t distinct = 0;
        for (int i : chosen)
            distinct |= 1u << i;
        if (!generates(distinct))
            return;
        std::vector<Element> branches;
        branches.reserve(chosen.size());
        for (int i : chosen)
            branches.push_back(ig.elements[i]);
        out.emplace_back(ig.group, base_genus, std::move(branches));
    }

    void recurse(int start, int remaining, int sum_idx) {
        if (remaining == 0) {
            if (sum_idx == 0)
                emit();
            return;
        }
        const int n = static_cast<int>(ig.elements.size());
        int neg = 0;  // index of -sum
        for (int j = 0; j < n; ++j)
            if (ig.add[sum_idx][j] == 0) {
                neg = j;
                break;
            }
        for (int i = start; i < n; ++i) {
            if (!(reach[remaining][i] >> neg & 1))
                break;  // no completion with indices >= i (reach shrinks in i)
            chosen.push_back(i);
            recurse(i, remaining - 1, ig.add[sum_idx][i]);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::vector<CoverDatum> enumerate_covers(const AbelianGroup& group, int base_genus,
                                         int max_branch_points) {
    if (base_genus < 0 || max_branch_points < 0)
        throw std::invalid_argument("negative enumeration bound");
    IndexedGroup ig(group);
    CoverEnumerator en(ig, base_genus, max_branch_points);
    for (int r = 0; r <= max_branch_points; ++r)
        en.recurse(1, r, 0);
    return std::move(en.out);
}

/* ---------------------------------------------------------------- */
/*  Canonical forms                                                  */
/* ---------------------------------------------------------------- */

namespace {

CoverDatum transported(const AbelianGroup& g, const Automorphism& phi, const CoverDatum& d) {
    std::vector<Element> branches;
    branches.reserve(d.branch_elements().size());
    for (const Element& b : d.branch_elements())
        branches.push_back(apply(g, phi, b));
    std::optional<std::vector<Element>> handles;
    if (d.handle_images()) {
        handles.emplace();
        for (const Element& h : *d.handle_images())
            handles->push_back(apply(g, phi, h));
    }
    return CoverDatum(g, d.base_genus(), std::move(branches), std::move(handles));
}

std::pair<CoverDatum, CoverDatum> canonical_under(const AbelianGroup& g,
                                                  const std::vector<Automorphism>& autos,
                                                  const CoverDatum& c, const CoverDatum& d) {
    std::optional<std::pair<CoverDatum, CoverDatum>> best;
    for (const Automorphism& phi : autos) {
        std::pair<CoverDatum, CoverDatum> cand{transported(g, phi, c), transported(g, phi, d)};
        if (!best || cand < *best)
            best = std::move(cand);
    }
    return *best;
}

}  // namespace

std::pair<CoverDatum, CoverDatum> canonicalize(const CoverDatum& cover_c,
                                               const CoverDatum& cover_d,
                                               long long aut_order_bound) {
    if (cover_c.group() != cover_d.group())
        throw std::invalid_argument("covers of a pair must share one group");
    std::vector<Automorphism> autos = automorphisms(cover_c.group(), aut_order_bound);
    return canonical_under(cover_c.group(), autos, cover_c, cover_d);
}

/* ---------------------------------------------------------------- */
/*  Census                                                           */
/* ---------------------------------------------------------------- */

namespace {

struct PreparedCover {
    CoverDatum datum;
    long long genus;
    uint32_t stab_mask;
};

std::string pair_key(const CoverDatum& c, const CoverDatum& d) {
    std::string s;
    auto append = [&s](const CoverDatum& cover) {
        for (const Element& e : cover.branch_elements()) {
            s += IndexedGroup::pack(e);
            s.push_back(',');
        }
        s.push_back('|');
    };
    append(c);
    append(d);
    return s;
}

// Canonical form of the pair; marks every orbit member in seen so later
// pairs of the same orbit are skipped before any transport work.
std::pair<CoverDatum, CoverDatum> canonical_marking(const AbelianGroup& g,
                                                    const std::vector<Automorphism>& autos,
                                                    const CoverDatum& c, const CoverDatum& d,
                                                    std::unordered_set<std::string>& seen) {
    std::optional<std::pair<CoverDatum, CoverDatum>> best;
    for (const Automorphism& phi : autos) {
        std::pair<CoverDatum, CoverDatum> cand{transported(g, phi, c), transported(g, phi, d)};
        seen.insert(pair_key(cand.first, cand.second));
        if (!best || cand < *best)
            best = std::move(cand);
    }
    return *best;
}

CensusEntry make_entry(const AbelianGroup& g, std::pair<CoverDatum, CoverDatum> canonical,
                       bool free) {
    CensusEntry entry{g,
                      std::move(canonical.first),
                      std::move(canonical.second),
                      free,
                      std::nullopt,
                      std::nullopt,
                      0,
                      AbelianGroup{},
                      false};
    ProductQuotient s(entry.cover_c, entry.cover_d);
    if (!free) {
        entry.witness = is_free(s).witness;
        return entry;
    }
    SurfaceRecord rec = invariants(s);
    entry.kernel_order = rec.trivial_kernel.order();
    entry.kernel_type = rec.trivial_kernel_type;
    entry.anomaly = rec.q == 1 && entry.kernel_order > 4;
    entry.record = std::move(rec);
    return entry;
}

std::vector<CensusEntry> census_slice(const AbelianGroup& g,
                                      const std::vector<Automorphism>& autos,
                                      const std::vector<PreparedCover>& covers_c,
                                      const std::vector<PreparedCover>& covers_d,
                                      const SearchParams& params, size_t begin, size_t end) {
    std::vector<CensusEntry> out;
    std::unordered_set<std::string> seen_orbits;
    const long long chi_cap = params.max_chi * g.order();
    for (size_t ic = begin; ic < end; ++ic) {
        const PreparedCover& c = covers_c[ic];
        for (const PreparedCover& d : covers_d) {
            if ((c.genus - 1) * (d.genus - 1) > chi_cap)
                continue;
            bool free = (c.stab_mask & d.stab_mask) == 0;
            if (!free && params.require_free)
                continue;
            if (seen_orbits.count(pair_key(c.datum, d.datum)))
                continue;
            auto canonical = canonical_marking(g, autos, c.datum, d.datum, seen_orbits);
            out.push_back(make_entry(g, std::move(canonical), free));
        }
    }
    return out;
}

}  // namespace

std::vector<CensusEntry> run_census(const SearchParams& params, int threads) {
    params.validate();
    if (threads < 1)
        throw std::invalid_argument("thread count must be positive");

    std::vector<CensusEntry> entries;
    for (const AbelianGroup& g : params.effective_groups()) {
        std::vector<Automorphism> autos = automorphisms(g);
        IndexedGroup ig(g);

        auto prepare = [&](int base_genus) {
            std::vector<PreparedCover> out;
            for (CoverDatum& d :
                 enumerate_covers(g, base_genus, params.max_branch_points)) {
                long long genus = total_genus(d);
                if (genus < 2)
                    continue;
                uint32_t mask = 0;
                for (const Element& e : stabilizer_union(d))
                    mask |= 1u << ig.index_of(e);
                out.push_back(PreparedCover{std::move(d), genus, mask});
            }
            return out;
        };
        std::vector<PreparedCover> covers_c = prepare(params.base_split.first);
        std::vector<PreparedCover> covers_d = prepare(params.base_split.second);
        if (covers_c.empty() || covers_d.empty())
            continue;

        if (threads == 1) {
            auto part = census_slice(g, autos, covers_c, covers_d, params, 0, covers_c.size());
            entries.insert(entries.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
        } else {
            size_t n = covers_c.size();
            size_t slices = std::min<size_t>(threads, n);
            std::vector<std::future<std::vector<CensusEntry>>> futures;
            for (size_t s = 0; s < slices; ++s) {
                size_t begin = n * s / slices, end = n * (s + 1) / slices;
                futures.push_back(std::async(std::launch::async, [&, begin, end] {
                    return census_slice(g, autos, covers_c, covers_d, params, begin, end);
                }));
            }
            for (auto& f : futures) {
                auto part = f.get();
                entries.insert(entries.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
            }
        }
    }

    auto key = [](const CensusEntry& e) {
        return std::tuple(e.group.order(), e.group.invariant_factors(),
                          e.record ? e.record->chi : -1, e.kernel_order, e.cover_c, e.cover_d);
    };
    std::sort(entries.begin(), entries.end(),
              [&](const CensusEntry& a, const CensusEntry& b) { return key(a) < key(b); });
    entries.erase(std::unique(entries.begin(), entries.end(),
                              [](const CensusEntry& a, const CensusEntry& b) {
                                  return a.group == b.group && a.cover_c == b.cover_c &&
                                         a.cover_d == b.cover_d;
                              }),
                  entries.end());
    return entries;
}

}  // namespace isoprod
