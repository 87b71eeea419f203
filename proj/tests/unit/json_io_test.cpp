#include <gtest/gtest.h>

#include "orbitfin/gallery.hpp"
#include "orbitfin/json_io.hpp"

using namespace orbitfin;
namespace io = orbitfin::json;
namespace gal = orbitfin::gallery;

TEST(JsonIo, BaseRoundTrip) {
    for (const AtomBase& b : {AtomBase::pure_set(), AtomBase::dlo(), AtomBase::labeled_dlo(3)})
        EXPECT_EQ(io::base_from_json(io::to_json(b)), b);
    EXPECT_THROW(io::base_from_json(io::parse(R"({"alphabet":2})")), Error);
}

TEST(JsonIo, FormulaRoundTrip) {
    const Formula f = (Formula::less(0, 1) && !Formula::eq(1, 2)) || Formula::label(2, 1) || Formula::bottom();
    EXPECT_EQ(io::formula_from_json(io::to_json(f)), f);
    EXPECT_EQ(io::formula_from_json(io::to_json(Formula::top())), Formula::top());
    EXPECT_THROW(io::formula_from_json(io::parse(R"({"op":"xor"})")), Error);
    EXPECT_THROW(io::formula_from_json(io::parse(R"({"op":"lt","i":0})")), Error);
}

TEST(JsonIo, FinStructureRoundTrip) {
    const FinStructure s = gal::build_spider(3);
    EXPECT_EQ(io::finstructure_from_json(io::to_json(s)), s);
    const auto j = io::to_json(s);
    EXPECT_EQ(j.at("size"), 9);
    EXPECT_THROW(io::finstructure_from_json(io::parse(R"({"signature":[{"name":"E","arity":2}],"size":2,"relations":{"E":[[0,5]]}})")),
                 Error);
}

TEST(JsonIo, DefStructureRoundTripPreservesSamples) {
    for (const auto& e : gal::manifest()) {
        if (e.name == "spider<n>") continue;
        const auto obj = gal::lookup(e.name);
        ASSERT_TRUE(obj.has_value());
        const auto* d = std::get_if<DefStructure>(&*obj);
        if (!d) continue;
        const DefStructure back = io::defstructure_from_json(io::to_json(*d));
        EXPECT_EQ(io::to_json(back), io::to_json(*d)) << e.name;
        const AtomSample atoms = make_sample(d->base(), 4);
        EXPECT_EQ(sample(back, atoms).structure, sample(*d, atoms).structure) << e.name;
    }
}

TEST(JsonIo, WildcardGuardForms) {
    const auto j = io::parse(R"({
        "base": {"ordered": true},
        "sorts": [{"name": "p", "dim": 1}],
        "relations": [
            {"name": "<", "arity": 2, "guard": ["*", "p"], "formula": {"op": "lt", "i": 0, "j": 1}},
            {"name": "=", "arity": 2, "guard": "*", "formula": {"op": "eq", "i": 0, "j": 1}},
            {"name": "U", "arity": 1, "formula": {"op": "true"}}
        ]})");
    const DefStructure d = io::defstructure_from_json(j);
    ASSERT_EQ(d.relations().size(), 3u);
    EXPECT_FALSE(d.relations()[0].guard[0].has_value());
    EXPECT_EQ(d.relations()[0].guard[1], 0);
    EXPECT_FALSE(d.relations()[2].guard[0].has_value());
    const SampledStructure s = sample(d, make_sample(AtomBase::dlo(), 3));
    EXPECT_EQ(s.structure.tuples("<").size(), 3u);
    EXPECT_EQ(s.structure.tuples("=").size(), 3u);
}

TEST(JsonIo, SampleCarriesPointTable) {
    const DefStructure x = gal::build_X();
    const auto j = io::to_json(sample(x, make_sample(AtomBase::dlo(), 3)), x);
    ASSERT_EQ(j.at("points").size(), 24u);
    EXPECT_EQ(j.at("points")[0].at("sort"), "x0+");
    EXPECT_EQ(io::finstructure_from_json(j.at("structure")).size(), 24);
}

TEST(JsonIo, ParseErrors) {
    EXPECT_THROW(io::parse("{\"size\": 3"), Error);
    try {
        io::parse("[1,");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
    }
}
