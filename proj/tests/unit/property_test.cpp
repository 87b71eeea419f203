#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "orbitfin/verify.hpp"

using namespace orbitfin;

namespace {

FinStructure relabel(const FinStructure& s, const std::vector<int>& perm) {
    std::vector<std::vector<Tuple>> rels;
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        rels.emplace_back();
        for (auto t : s.tuples(r)) {
            for (int& x : t) x = perm[x];
            rels.back().push_back(std::move(t));
        }
    }
    return FinStructure(s.signature(), s.size(), rels);
}

} // namespace

TEST(Properties, CoreOfRelabelingIsIsomorphic) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const FinStructure s = verify::random_structure(rng, 6);
        std::vector<int> perm(static_cast<std::size_t>(s.size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const FinStructure t = relabel(s, perm);
        EXPECT_EQ(canonical_form(compute_core(s).core), canonical_form(compute_core(t).core));
        EXPECT_EQ(is_core(s), is_core(t));
    }
}

TEST(Properties, CoreOfDoubledStructure) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        const FinStructure s = verify::random_structure(rng, 5);
        const FinStructure c = compute_core(s).core;
        const FinStructure cc = compute_core(disjoint_union(s, s)).core;
        EXPECT_EQ(canonical_form(c), canonical_form(cc));
    }
}

TEST(Properties, HomEquivalentToCore) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const FinStructure s = verify::random_structure(rng, 7);
        const CoreResult r = compute_core(s);
        EXPECT_TRUE(is_hom(s, r.core, r.retraction.map()));
        EXPECT_TRUE(is_hom(r.core, s, r.elements, HomMode::Embedding));
        EXPECT_TRUE(find_hom(s, r.core).has_value());
    }
}

TEST(Properties, ComposedHomsAreHoms) {
    std::mt19937_64 rng(4);
    int composed = 0;
    for (int trial = 0; trial < 200 && composed < 30; ++trial) {
        const FinStructure a = verify::random_structure(rng, 4);
        const FinStructure b = verify::random_structure(rng, 4);
        if (!(a.signature() == b.signature())) continue;
        const FinStructure c = compute_core(b).core;
        const auto f = find_hom(a, b);
        if (!f) continue;
        const Hom g = compute_core(b).retraction;
        EXPECT_TRUE(is_hom(a, c, compose(*f, g).map()));
        ++composed;
    }
    EXPECT_GT(composed, 0);
}

TEST(Properties, SamplingIsFunctorial) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto c = verify::random_sampling_case(rng);
        const SampledStructure big = sample(c.structure, c.big);
        const SampledStructure small = sample(c.structure, c.small);
        std::vector<int> ids;
        for (std::size_t p = 0; p < small.size(); ++p) {
            std::vector<int> sup;
            for (int a : small.point_support[p]) sup.push_back(static_cast<int>(*c.big.index_of(small.atoms[a].value())));
            ids.push_back(*big.find(small.point_sort[p], sup));
        }
        EXPECT_EQ(induced_substructure(big.structure, ids).structure, small.structure);
    }
}

TEST(Properties, ReportsAreDeterministic) {
    const auto a = verify::run_suite("spider").to_json().dump();
    const auto b = verify::run_suite("spider").to_json().dump();
    EXPECT_EQ(a, b);
    EXPECT_THROW(verify::run_suite("nonexistent"), Error);
    for (int n = 1; n <= 8; ++n) EXPECT_GT(verify::local_order_growth_formula(n), 0u);
}
