#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "orbitfin/gallery.hpp"

using namespace orbitfin;
namespace gal = orbitfin::gallery;

namespace {

SampledStructure sample_x(int atoms) { return sample(gal::build_X(), make_sample(AtomBase::dlo(), atoms)); }
SampledStructure sample_y(int atoms) { return sample(gal::build_Y().total, make_sample(AtomBase::dlo(), atoms)); }
SampledStructure sample_j(int atoms) { return sample(gal::johnson(), make_sample(AtomBase::dlo(), atoms)); }

int id_of(const SampledStructure& s, int sort, std::vector<int> support) { return *s.find(sort, support); }

std::vector<int> compose(const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
}

std::vector<int> identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST(X, RelationExamples) {
    const SampledStructure x = sample_x(4);
    const auto& s = x.structure;
    const int p010 = id_of(x, gal::x_sort(0, true), {0, 1});
    const int p011 = id_of(x, gal::x_sort(1, true), {0, 1});
    const int p230 = id_of(x, gal::x_sort(0, true), {2, 3});
    const int p020 = id_of(x, gal::x_sort(0, true), {0, 2});
    EXPECT_TRUE(s.holds2(*s.signature().index_of("R"), p010, p011));
    EXPECT_TRUE(s.holds2(*s.signature().index_of("N"), p010, p230));
    EXPECT_TRUE(s.holds2(*s.signature().index_of("E"), p010, p020));
    EXPECT_FALSE(s.holds2(*s.signature().index_of("N"), p010, p020));
    const DefStructure def = gal::build_X();
    for (const auto& c : def.relations()) EXPECT_FALSE(uses_order(c.formula));
}

TEST(Y, OneFiberIsAFourCycle) {
    const SampledStructure y = sample_y(2);
    ASSERT_EQ(y.size(), 4u);
    const auto r = *y.structure.signature().index_of("R");
    EXPECT_EQ(y.structure.tuples(r), (std::vector<Tuple>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
}

TEST(Y, EdgesBetweenFibersRespectParity) {
    const SampledStructure y = sample_y(3);
    const auto e = *y.structure.signature().index_of("E");
    int count = 0;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            const bool edge = y.structure.holds2(e, id_of(y, m, {0, 1}), id_of(y, n, {0, 2}));
            EXPECT_EQ(edge, m % 2 == 0 && n % 2 == 0);
            count += edge;
        }
    EXPECT_EQ(count, 4);
}

TEST(Cover, ProjectionFibersHaveFourPoints) {
    for (int n = 2; n <= 5; ++n) {
        const SampledStructure y = sample_y(n), j = sample_j(n);
        const auto proj = gal::projection(y, j);
        std::vector<int> fiber(j.size(), 0);
        for (std::size_t p = 0; p < y.size(); ++p) {
            ++fiber[proj[p]];
            EXPECT_EQ(j.point_support[proj[p]], y.point_support[p]);
        }
        for (int f : fiber) EXPECT_EQ(f, 4);
    }
}

TEST(Hom, XToYExamples) {
    auto pt = [](int sort, long a, long b) { return Point{sort, {Atom(a, 0), Atom(b, 0)}}; };
    // (0,1,2) stays; (1,0,0) turns into (0,1,1).
    const Point a = gal::hom_X_to_Y(pt(gal::x_sort(2, true), 0, 1));
    EXPECT_EQ(a.sort, 2);
    const Point b = gal::hom_X_to_Y(pt(gal::x_sort(0, false), 0, 1));
    EXPECT_EQ(b.sort, 1);
    EXPECT_EQ(b.atoms[0].value(), 0);
    EXPECT_EQ(b.atoms[1].value(), 1);
    EXPECT_THROW(gal::hom_X_to_Y(Point{8, {Atom(0L, 0), Atom(1L, 0)}}), Error);
}

TEST(Hom, XToYValidatesAndSearchFindsIt) {
    for (int n = 2; n <= 6; ++n) {
        const SampledStructure x = sample_x(n), y = sample_y(n);
        EXPECT_NO_THROW(Hom::validated(x.structure, y.structure, gal::hom_X_to_Y_map(x, y)));
    }
    const SampledStructure x = sample_x(3), y = sample_y(3);
    const auto h = gal::hom_X_to_Y_map(x, y);
    Assignment fiber;
    for (int p = 0; p < static_cast<int>(x.size()); ++p)
        if (x.point_support[p] == std::vector<int>{0, 1}) fiber.emplace_back(p, h[p]);
    const auto found = find_hom(x.structure, y.structure, HomMode::Hom, fiber);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->map(), h);
}

TEST(Kernel, HoldsAndDetectsMutation) {
    for (int n = 2; n <= 4; ++n) EXPECT_TRUE(gal::kernel_check(sample_y(n)));
    SampledStructure y = sample_y(4);
    const auto r = *y.structure.signature().index_of("R");
    auto tuples = y.structure.tuples(r);
    tuples.erase(tuples.begin());
    y.structure = y.structure.with_relation(r, tuples);
    EXPECT_FALSE(gal::kernel_check(y));
}

TEST(MuPi, IdentityFlipsAndLifts) {
    const SampledStructure y = sample_y(4), j = sample_j(4);
    EXPECT_EQ(gal::mu_pi(y, j, identity(y.size())).map(), identity(j.size()));
    std::set<std::vector<int>> some{{0, 1}, {1, 3}};
    for (int k = 0; k < 4; ++k) EXPECT_EQ(gal::mu_pi(y, j, gal::flip(y, some, k)).map(), identity(j.size()));
    std::vector<int> alpha{0, 1, 2, 3};
    do {
        const auto lift = gal::lift_atom_permutation(y, alpha);
        EXPECT_NO_THROW(Hom::validated(y.structure, y.structure, lift, HomMode::Iso));
        const auto mu = gal::mu_pi(y, j, lift).map();
        for (int v = 0; v < static_cast<int>(j.size()); ++v) {
            std::vector<int> img{alpha[j.point_support[v][0]], alpha[j.point_support[v][1]]};
            std::sort(img.begin(), img.end());
            EXPECT_EQ(j.point_support[mu[v]], img);
        }
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    EXPECT_EQ(gal::lift_atom_permutation(y, std::vector<int>{0, 1, 2, 3}), identity(y.size()));
}

TEST(MuPi, RejectsMapsSplittingFibers) {
    const SampledStructure y = sample_y(3), j = sample_j(3);
    auto m = identity(y.size());
    m[0] = id_of(y, 0, {1, 2});
    EXPECT_THROW(gal::mu_pi(y, j, m), Error);
}

TEST(Flip, GroupLaws) {
    const SampledStructure y = sample_y(4);
    EXPECT_EQ(gal::flip(y, {}, 1), identity(y.size()));
    std::vector<std::vector<int>> vertices;
    for (const auto& sup : y.point_support)
        if (vertices.empty() || vertices.back() != sup) vertices.push_back(sup);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    ASSERT_EQ(vertices.size(), 6u);
    std::vector<std::vector<int>> flips;
    for (int mask = 0; mask < 64; ++mask) {
        std::set<std::vector<int>> S;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) S.insert(vertices[i]);
        flips.push_back(gal::flip(y, S, 2));
        EXPECT_TRUE(is_hom(y.structure, y.structure, flips.back(), HomMode::Iso));
        EXPECT_EQ(compose(flips.back(), flips.back()), identity(y.size()));
    }
    for (const auto& f : flips)
        for (const auto& g : flips) EXPECT_EQ(compose(f, g), compose(g, f));
}

TEST(Involutions, YFlipsAndXControl) {
    for (int n : {3, 4}) {
        const auto r = gal::involution_commutation_check(n);
        EXPECT_TRUE(r.all_commute);
        EXPECT_TRUE(r.all_flips);
        EXPECT_EQ(r.involutions, (std::size_t{1} << (n * (n - 1) / 2)) - 1);
    }
    const auto x = gal::involution_commutation_check_X(3);
    EXPECT_FALSE(x.all_commute);
    ASSERT_TRUE(x.non_commuting.has_value());
    const auto& [a, b] = *x.non_commuting;
    EXPECT_EQ(compose(a, a), identity(a.size()));
    EXPECT_EQ(compose(b, b), identity(b.size()));
    EXPECT_NE(compose(a, b), compose(b, a));
    EXPECT_THROW(gal::involution_commutation_check(6), Error);
}

TEST(Spider, CoreHasTwoNPlusOneElements) {
    EXPECT_THROW(gal::build_spider(1), Error);
    for (int n = 2; n <= 4; ++n) {
        const FinStructure s = gal::build_spider(n);
        EXPECT_EQ(s.size(), 3 * n);
        EXPECT_FALSE(is_core(s));
        const auto collapse = gal::spider_collapse(n);
        EXPECT_TRUE(is_hom(s, s, collapse));
        EXPECT_EQ(std::set<int>(collapse.begin(), collapse.end()).size(), static_cast<std::size_t>(2 * n + 1));
        const CoreResult c = compute_core(s);
        EXPECT_EQ(c.core.size(), 2 * n + 1);
        EXPECT_TRUE(is_core(c.core));
        // The collapsed image is itself a core of the same size.
        std::vector<int> image(collapse.begin(), collapse.end());
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        EXPECT_TRUE(find_hom(c.core, induced_substructure(s, image).structure, HomMode::Iso).has_value());
    }
}

TEST(QST, SamplesAndMutualEmbeddings) {
    const SampledStructure q = sample(gal::build_QST(), make_sample(AtomBase::labeled_dlo(2), 4, std::vector<int>{0, 1, 0, 1}));
    EXPECT_EQ(q.structure.tuples("S").size(), 2u);
    EXPECT_EQ(q.structure.tuples("T").size(), 2u);
    const SampledStructure a = sample(gal::build_QST_companion(), make_sample(AtomBase::dlo(), 3));
    EXPECT_EQ(a.size(), 6u);
    EXPECT_TRUE(gal::is_strict_total_order(a.structure, *a.structure.signature().index_of("<")));

    for (int n = 2; n <= 5; ++n) {
        const AtomSample atoms = make_sample(AtomBase::dlo(), n);
        const SampledStructure comp = sample(gal::build_QST_companion(), atoms);
        const SampledStructure qst = sample(gal::build_QST(), gal::qst_atoms_for_companion(atoms));
        EXPECT_TRUE(is_hom(comp.structure, qst.structure, gal::companion_to_qst(comp, qst), HomMode::Embedding));
        const AtomSample labeled = make_sample(AtomBase::labeled_dlo(2), n);
        const SampledStructure q2 = sample(gal::build_QST(), labeled);
        const SampledStructure c2 = sample(gal::build_QST_companion(), make_sample(AtomBase::dlo(), n));
        EXPECT_TRUE(is_hom(q2.structure, c2.structure, gal::qst_to_companion(q2, c2), HomMode::Embedding));
    }
}

TEST(S2, LocalOrderExamples) {
    const SampledStructure s = sample(gal::build_S2(), make_sample(AtomBase::labeled_dlo(2), 2, std::vector<int>{0, 1}));
    EXPECT_TRUE(s.structure.holds2(0, 1, 0));
    EXPECT_FALSE(s.structure.holds2(0, 0, 1));
    for (int w = 0; w < 8; ++w) {
        const std::vector<int> word{w & 1, w >> 1 & 1, w >> 2 & 1};
        const SampledStructure t = sample(gal::build_S2(), make_sample(AtomBase::labeled_dlo(2), 3, word));
        for (int a = 0; a < 3; ++a) {
            EXPECT_FALSE(t.structure.holds2(0, a, a));
            for (int b = a + 1; b < 3; ++b) EXPECT_NE(t.structure.holds2(0, a, b), t.structure.holds2(0, b, a));
        }
    }
}

TEST(S2, BetweennessIsMonotoneLocalOrder) {
    const std::vector<int> word{0, 1, 1, 0, 1};
    const SampledStructure s = sample(gal::build_S2(), make_sample(AtomBase::labeled_dlo(2), 5, word));
    const SampledStructure b = sample(gal::build_betw(), make_sample(AtomBase::labeled_dlo(2), 5, word));
    auto prec = [&](int x, int y) { return s.structure.holds2(0, x, y); };
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            for (int z = 0; z < 5; ++z) {
                const int t[] = {x, y, z};
                EXPECT_EQ(b.structure.holds(0, t), (prec(x, y) && prec(y, z)) || (prec(z, y) && prec(y, x)));
            }
}

TEST(S2, CutRoundtrip) {
    for (int n : {5, 7}) {
        const SampledStructure s = sample(gal::build_S2(), make_sample(AtomBase::labeled_dlo(2), n));
        for (int c = 0; c < n; ++c) EXPECT_TRUE(gal::s2_cut_roundtrip(s.structure, c));
    }
    // Reversing one edge of the 5-point sample: 0 -> 2 breaks every cut, while
    // 0 -> 4 yields another local order.
    const SampledStructure five = sample(gal::build_S2(), make_sample(AtomBase::labeled_dlo(2), 5));
    auto reversed = [&](int a, int b) {
        auto t = five.structure.tuples(0);
        const auto it = std::find(t.begin(), t.end(), Tuple{a, b});
        EXPECT_NE(it, t.end());
        if (it != t.end()) *it = Tuple{b, a};
        return five.structure.with_relation(0, t);
    };
    const FinStructure broken = reversed(0, 2), still_local = reversed(0, 4);
    for (int c = 0; c < 5; ++c) {
        EXPECT_FALSE(gal::s2_cut_roundtrip(broken, c));
        EXPECT_TRUE(gal::s2_cut_roundtrip(still_local, c));
    }
    // A 3-cycle: 0 -> 1 -> 2 -> 0.
    const FinStructure cycle(Signature({{"prec", 2}}), 3, {{{0, 1}, {1, 2}, {2, 0}}});
    for (int c = 0; c < 3; ++c) EXPECT_TRUE(gal::s2_cut_roundtrip(cycle, c));
    // 0 beats a 3-cycle on {1,2,3}: cut at 0 puts all three on one side.
    const FinStructure bad(Signature({{"prec", 2}}), 4, {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}});
    EXPECT_FALSE(gal::s2_cut_roundtrip(bad, 0));
    // A missing edge leaves an element on neither side.
    const FinStructure partial(Signature({{"prec", 2}}), 3, {{{0, 1}, {1, 2}}});
    EXPECT_FALSE(gal::s2_cut_roundtrip(partial, 0));
    EXPECT_THROW(gal::s2_cut_roundtrip(cycle, 3), Error);
}

TEST(GenericPerm, OrdersAndAge) {
    const DefStructure d = gal::build_generic_perm_companion();
    const SampledStructure s4 = sample(d, make_sample(AtomBase::dlo(), 4));
    EXPECT_EQ(s4.size(), 16u);
    for (const char* r : {"prec1", "prec2"}) EXPECT_TRUE(gal::is_strict_total_order(s4.structure, *s4.structure.signature().index_of(r)));
    // prec1 is lexicographic on presented pairs, prec2 lexicographic on swapped pairs.
    for (int p = 0; p < 16; ++p)
        for (int q = 0; q < 16; ++q) {
            const auto [a, b] = gal::perm_point(s4, p);
            const auto [c, e] = gal::perm_point(s4, q);
            EXPECT_EQ(s4.structure.holds2(0, p, q), a < c || (a == c && b < e));
            EXPECT_EQ(s4.structure.holds2(1, p, q), b < e || (b == e && a < c));
        }
    const SampledStructure s6 = sample(d, make_sample(AtomBase::dlo(), 6));
    std::vector<int> perm{0, 1, 2};
    int embedded = 0;
    do embedded += find_hom(gal::two_orders(perm), s6.structure, HomMode::Embedding).has_value();
    while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(embedded, 6);
}

TEST(GenericPerm, InterpretationOfQST) {
    std::vector<int> perm{0, 1, 2, 3};
    do {
        const FinStructure p = gal::two_orders(perm);
        const auto in = gal::interpret_qst_in_perm(p);
        EXPECT_EQ(in.elements.size(), 6u);
        std::vector<int> pos(4);
        for (int i = 0; i < 4; ++i) pos[perm[i]] = i;
        for (int x = 0; x < 6; ++x) {
            const auto [u, v] = in.elements[x];
            EXPECT_LT(u, v);
            const int t[] = {x};
            EXPECT_EQ(in.structure.holds(1, t), pos[u] < pos[v]);
            EXPECT_EQ(in.structure.holds(2, t), pos[u] > pos[v]);
        }
        EXPECT_TRUE(gal::is_strict_total_order(in.structure, 0));
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_THROW(gal::two_orders(std::vector<int>{0, 0}), Error);
}

TEST(Lookup, ManifestNamesResolve) {
    for (const auto& e : gal::manifest()) {
        if (e.name == "spider<n>") continue;
        const auto obj = gal::lookup(e.name);
        ASSERT_TRUE(obj.has_value()) << e.name;
        EXPECT_EQ(std::holds_alternative<DefStructure>(*obj), e.kind == "definable") << e.name;
    }
    EXPECT_TRUE(gal::lookup("gallery:spider5").has_value());
    EXPECT_FALSE(gal::lookup("gallery:nothing").has_value());
}
