#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "orbitfin/finstruct.hpp"

using namespace orbitfin;

namespace {

FinStructure graph(int n, const std::vector<std::pair<int, int>>& edges, bool symmetric = true) {
    std::vector<Tuple> t;
    for (auto [a, b] : edges) {
        t.push_back({a, b});
        if (symmetric) t.push_back({b, a});
    }
    return FinStructure(Signature({{"E", 2}}), n, {t});
}

FinStructure clique(int n) {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return graph(n, e);
}

FinStructure random_structure(std::mt19937_64& rng, int n) {
    Signature sig({{"A", 1}, {"B", 2}, {"C", 3}});
    std::vector<std::vector<Tuple>> rels(3);
    for (int a = 0; a < n; ++a) {
        if (rng() % 3 == 0) rels[0].push_back({a});
        for (int b = 0; b < n; ++b) {
            if (rng() % 4 == 0) rels[1].push_back({a, b});
            for (int c = 0; c < n; ++c)
                if (rng() % 12 == 0) rels[2].push_back({a, b, c});
        }
    }
    return FinStructure(sig, n, rels);
}

// All maps from an n-set to an m-set, by brute force.
std::vector<std::vector<int>> all_maps(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    if (m == 0) return n == 0 ? std::vector<std::vector<int>>{{}} : out;
    while (true) {
        out.push_back(f);
        int i = n - 1;
        while (i >= 0 && f[i] == m - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

// Oracle: direct tuple-by-tuple check, independent of the library's is_hom.
bool brute_is_hom(const FinStructure& s, const FinStructure& t, const std::vector<int>& f, bool strong, bool injective) {
    if (injective && std::set<int>(f.begin(), f.end()).size() != f.size()) return false;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const int k = s.signature()[r].arity;
        for (const auto& tup : all_maps(k, s.size())) {
            Tuple img;
            for (int x : tup) img.push_back(f[x]);
            const bool in_s = std::find(s.tuples(r).begin(), s.tuples(r).end(), tup) != s.tuples(r).end();
            const bool in_t = std::find(t.tuples(r).begin(), t.tuples(r).end(), img) != t.tuples(r).end();
            if (in_s && !in_t) return false;
            if (strong && in_t && !in_s) return false;
        }
    }
    return true;
}

} // namespace

TEST(Signature, RejectsDuplicatesAndBadArity) {
    EXPECT_THROW(Signature({{"E", 2}, {"E", 1}}), Error);
    EXPECT_THROW(Signature({{"E", 0}}), Error);
    EXPECT_EQ(Signature({{"E", 2}, {"U", 1}}).index_of("U"), 1u);
}

TEST(FinStructure, SortsDedupsAndValidates) {
    const FinStructure s(Signature({{"E", 2}}), 3, {{{2, 1}, {0, 1}, {2, 1}}});
    EXPECT_EQ(s.tuples(0).size(), 2u);
    EXPECT_EQ(s.tuples(0)[0], (Tuple{0, 1}));
    EXPECT_TRUE(s.holds2(0, 2, 1));
    EXPECT_FALSE(s.holds2(0, 1, 2));
    EXPECT_THROW(FinStructure(Signature({{"E", 2}}), 2, {{{0, 2}}}), Error);
    EXPECT_THROW(FinStructure(Signature({{"E", 2}}), 2, {{{0}}}), Error);
}

TEST(Hom, ValidationFailsLoudly) {
    const FinStructure k3 = clique(3), k2 = clique(2);
    EXPECT_THROW(Hom::validated(k3, k2, {0, 1, 0}), Error);
    const Hom h = Hom::validated(k2, k3, {0, 2});
    EXPECT_EQ(h(1), 2);
    const Hom id = Hom::validated(k3, k3, {0, 1, 2}, HomMode::Iso);
    EXPECT_EQ(compose(h, id).map(), h.map());
}

TEST(FindHom, CliquesAndCycles) {
    EXPECT_FALSE(find_hom(clique(3), clique(2)).has_value());
    EXPECT_TRUE(find_hom(clique(2), clique(3)).has_value());
    const FinStructure c5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const FinStructure c6 = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    EXPECT_FALSE(find_hom(c5, clique(2)).has_value());
    EXPECT_TRUE(find_hom(c6, clique(2)).has_value());
    EXPECT_TRUE(find_hom(c5, clique(3)).has_value());
    EXPECT_TRUE(find_hom(c5, c5, HomMode::Iso).has_value());
    EXPECT_FALSE(find_hom(c5, c6, HomMode::Embedding).has_value());
}

TEST(FindHom, ForcedAssignments) {
    const FinStructure k3 = clique(3);
    const auto h = find_hom(k3, k3, HomMode::Hom, {{0, 2}});
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ((*h)(0), 2);
    EXPECT_FALSE(find_hom(k3, k3, HomMode::Hom, {{0, 1}, {1, 1}}).has_value());
}

TEST(FindHom, AgreesWithBruteForce) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4), m = 1 + static_cast<int>(rng() % 4);
        const FinStructure s = random_structure(rng, n), t = random_structure(rng, m);
        for (HomMode mode : {HomMode::Hom, HomMode::Embedding, HomMode::Iso}) {
            bool exists = false;
            if (mode != HomMode::Iso || n == m)
                for (const auto& f : all_maps(n, m))
                    if (brute_is_hom(s, t, f, mode != HomMode::Hom, mode != HomMode::Hom)) {
                        exists = true;
                        break;
                    }
            const auto h = find_hom(s, t, mode);
            ASSERT_EQ(h.has_value(), exists) << "trial " << trial << " mode " << to_string(mode);
            if (h) {
                EXPECT_TRUE(brute_is_hom(s, t, h->map(), mode != HomMode::Hom, mode != HomMode::Hom));
            }
        }
    }
}

TEST(Endomorphisms, MatchBruteForceAndThreading) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const FinStructure s = random_structure(rng, n);
        std::vector<std::vector<int>> brute;
        for (const auto& f : all_maps(n, n))
            if (brute_is_hom(s, s, f, false, false)) brute.push_back(f);
        const auto endos = enumerate_endos(s);
        std::vector<std::vector<int>> got;
        for (const auto& e : endos) got.push_back(e.map());
        ASSERT_EQ(got, brute);
        std::vector<std::vector<int>> threaded;
        for (const auto& e : enumerate_endos(s, std::nullopt, 3)) threaded.push_back(e.map());
        EXPECT_EQ(threaded, got);
        if (brute.size() > 2) {
            const auto limited = enumerate_endos(s, 2, 2);
            ASSERT_EQ(limited.size(), 2u);
            EXPECT_EQ(limited[1].map(), brute[1]);
        }
    }
}

TEST(Core, SmallGraphs) {
    EXPECT_TRUE(is_core(clique(3)));
    const FinStructure c6 = graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    EXPECT_FALSE(is_core(c6));
    const CoreResult r = compute_core(c6);
    EXPECT_EQ(r.core.size(), 2);
    EXPECT_FALSE(r.was_core);
    const CoreResult k = compute_core(clique(4));
    EXPECT_TRUE(k.was_core);
    EXPECT_EQ(k.core, clique(4));
}

TEST(Core, BruteForceCoreSize) {
    // Oracle: the core size is the least image size over all endomorphisms.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const FinStructure s = random_structure(rng, n);
        std::size_t least = static_cast<std::size_t>(n);
        bool only_bijective = true;
        for (const auto& f : all_maps(n, n))
            if (brute_is_hom(s, s, f, false, false)) {
                const std::size_t img = std::set<int>(f.begin(), f.end()).size();
                least = std::min(least, img);
                if (img < static_cast<std::size_t>(n) || !brute_is_hom(s, s, f, true, true)) only_bijective = false;
            }
        const CoreResult r = compute_core(s);
        EXPECT_EQ(static_cast<std::size_t>(r.core.size()), least);
        EXPECT_EQ(is_core(s), only_bijective);
        for (std::size_t i = 0; i < r.elements.size(); ++i) EXPECT_EQ(r.retraction(r.elements[i]), static_cast<int>(i));
    }
}

TEST(Constructions, InducedUnionPower) {
    const FinStructure p3 = graph(3, {{0, 1}, {1, 2}}, false);
    const auto sub = induced_substructure(p3, std::vector<int>{2, 1});
    EXPECT_EQ(sub.structure.size(), 2);
    EXPECT_EQ(sub.structure.tuples(0), (std::vector<Tuple>{{0, 1}}));
    EXPECT_EQ(sub.to_original, (std::vector<int>{1, 2}));
    EXPECT_EQ(induced_substructure(p3, std::vector<int>{}).structure.size(), 0);
    EXPECT_THROW(induced_substructure(p3, std::vector<int>{3}), Error);

    const FinStructure u = disjoint_union(p3, p3);
    EXPECT_EQ(u.size(), 6);
    EXPECT_EQ(u.tuples(0).size(), 4u);
    EXPECT_THROW(disjoint_union(p3, FinStructure(Signature({{"F", 2}}), 1, {{}})), Error);

    const FinStructure sq = full_power(p3, 2);
    EXPECT_EQ(sq.size(), 9);
    ASSERT_TRUE(sq.signature().index_of("E@1,2").has_value());
    ASSERT_TRUE(sq.signature().index_of("=@2,2").has_value());
    // (0,1) -> (1,x) under E@1,1: first coordinates 0 -> 1.
    const std::size_t e11 = *sq.signature().index_of("E@1,1");
    EXPECT_TRUE(sq.holds2(e11, 0 * 3 + 1, 1 * 3 + 2));
    EXPECT_FALSE(sq.holds2(e11, 1 * 3 + 1, 0 * 3 + 2));
    const std::size_t eq12 = *sq.signature().index_of("=@1,2");
    EXPECT_TRUE(sq.holds2(eq12, 2 * 3 + 0, 1 * 3 + 2));
    // d = 1 adds equality and renames.
    EXPECT_EQ(full_power(p3, 1).signature().size(), 2u);
}

TEST(CanonicalForm, AgreesWithIsomorphism) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const FinStructure s = random_structure(rng, n), t = random_structure(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<Tuple>> rels(3);
        for (std::size_t r = 0; r < 3; ++r)
            for (auto tup : s.tuples(r)) {
                for (int& x : tup) x = perm[x];
                rels[r].push_back(tup);
            }
        const FinStructure moved(s.signature(), n, rels);
        EXPECT_EQ(canonical_form(s), canonical_form(moved));
        bool iso = false;
        for (const auto& f : all_maps(n, n))
            if (brute_is_hom(s, t, f, true, true)) {
                iso = true;
                break;
            }
        EXPECT_EQ(canonical_form(s) == canonical_form(t), iso);
    }
    EXPECT_THROW(canonical_form(clique(11)), Error);
}

TEST(CanonicalForm, TournamentsOnFourVertices) {
    // Oracle: there are exactly 4 tournaments on 4 vertices up to isomorphism.
    std::set<std::string> forms;
    const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < 6; ++i) arcs.push_back(mask >> i & 1 ? pairs[i] : std::pair{pairs[i].second, pairs[i].first});
        forms.insert(canonical_form(graph(4, arcs, false)));
    }
    EXPECT_EQ(forms.size(), 4u);
}
