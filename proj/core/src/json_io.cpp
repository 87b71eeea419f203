#include "orbitfin/json_io.hpp"

namespace orbitfin::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) fail(std::string("field \"") + key + "\" must be an array");
    return v;
}

} // namespace

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
}

json to_json(const AtomBase& base) { return {{"ordered", base.ordered}, {"alphabet", base.alphabet}}; }

AtomBase base_from_json(const json& j) {
    const json& o = field(j, "ordered");
    if (!o.is_boolean()) fail("field \"ordered\" must be a boolean");
    AtomBase b{o.get<bool>(), j.contains("alphabet") ? int_field(j, "alphabet") : 1};
    b.validate();
    return b;
}

json to_json(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: return {{"op", "true"}};
    case K::False: return {{"op", "false"}};
    case K::Less: return {{"op", "lt"}, {"i", f.i()}, {"j", f.j()}};
    case K::Eq: return {{"op", "eq"}, {"i", f.i()}, {"j", f.j()}};
    case K::Label: return {{"op", "label"}, {"i", f.i()}, {"l", f.l()}};
    case K::Not: return {{"op", "not"}, {"args", json::array({to_json(f.args().front())})}};
    case K::And:
    case K::Or: {
        json args = json::array();
        for (const auto& a : f.args()) args.push_back(to_json(a));
        return {{"op", f.kind() == K::And ? "and" : "or"}, {"args", std::move(args)}};
    }
    }
    fail("unknown formula node");
}

Formula formula_from_json(const json& j) {
    const std::string op = string_field(j, "op");
    if (op == "true") return Formula::top();
    if (op == "false") return Formula::bottom();
    if (op == "lt") return Formula::less(int_field(j, "i"), int_field(j, "j"));
    if (op == "eq") return Formula::eq(int_field(j, "i"), int_field(j, "j"));
    if (op == "label") return Formula::label(int_field(j, "i"), int_field(j, "l"));
    if (op == "not" || op == "and" || op == "or") {
        std::vector<Formula> args;
        for (const auto& a : array_field(j, "args")) args.push_back(formula_from_json(a));
        if (op == "not") {
            if (args.size() != 1) fail("\"not\" takes exactly one argument");
            return Formula::negation(args.front());
        }
        return op == "and" ? Formula::conj(std::move(args)) : Formula::disj(std::move(args));
    }
    fail("unknown formula op \"" + op + "\"");
}

json to_json(const FinStructure& s) {
    json sig = json::array();
    json rels = json::object();
    for (std::size_t r = 0; r < s.signature().size(); ++r) {
        const auto& sym = s.signature()[r];
        sig.push_back({{"name", sym.name}, {"arity", sym.arity}});
        rels[sym.name] = s.tuples(r);
    }
    return {{"signature", std::move(sig)}, {"size", s.size()}, {"relations", std::move(rels)}};
}

FinStructure finstructure_from_json(const json& j) {
    std::vector<RelationSymbol> symbols;
    for (const auto& e : array_field(j, "signature")) symbols.push_back({string_field(e, "name"), int_field(e, "arity")});
    Signature sig(std::move(symbols));
    const int size = int_field(j, "size");
    if (size < 0) fail("negative size");
    const json& rels = field(j, "relations");
    if (!rels.is_object()) fail("\"relations\" must be an object");
    for (auto it = rels.begin(); it != rels.end(); ++it)
        if (!sig.index_of(it.key())) fail("relation \"" + it.key() + "\" is not in the signature");
    std::vector<std::vector<Tuple>> tuples(sig.size());
    for (std::size_t r = 0; r < sig.size(); ++r) {
        if (!rels.contains(sig[r].name)) continue;
        const json& list = rels.at(sig[r].name);
        if (!list.is_array()) fail("tuples of \"" + sig[r].name + "\" must be an array");
        for (const auto& t : list) {
            if (!t.is_array()) fail("tuple must be an array");
            Tuple tup;
            for (const auto& x : t) {
                if (!x.is_number_integer()) fail("tuple entries must be integers");
                tup.push_back(x.get<int>());
            }
            tuples[r].push_back(std::move(tup));
        }
    }
    return FinStructure(std::move(sig), size, std::move(tuples));
}

json to_json(const DefStructure& d) {
    json sorts = json::array();
    for (const auto& s : d.sorts()) {
        json e = {{"name", s.name}, {"dim", s.dim}};
        if (!s.family.empty()) e["family"] = s.family;
        if (!s.orientation.empty()) e["orientation"] = s.orientation;
        sorts.push_back(std::move(e));
    }
    json rels = json::array();
    for (const auto& c : d.relations()) {
        json g = json::array();
        for (const auto& x : c.guard) {
            if (x) g.push_back(d.sorts()[*x].name);
            else g.push_back("*");
        }
        rels.push_back({{"name", c.name}, {"arity", c.arity}, {"guard", std::move(g)}, {"formula", to_json(c.formula)}});
    }
    return {{"base", to_json(d.base())}, {"sorts", std::move(sorts)}, {"relations", std::move(rels)}};
}

DefStructure defstructure_from_json(const json& j) {
    const AtomBase base = base_from_json(field(j, "base"));
    std::vector<Sort> sorts;
    for (const auto& e : array_field(j, "sorts")) {
        Sort s{string_field(e, "name"), int_field(e, "dim"), {}, {}};
        if (e.contains("family")) s.family = string_field(e, "family");
        if (e.contains("orientation")) {
            for (const auto& x : array_field(e, "orientation")) {
                if (!x.is_number_integer()) fail("orientation entries must be integers");
                s.orientation.push_back(x.get<int>());
            }
        }
        sorts.push_back(std::move(s));
    }
    auto sort_of = [&](const std::string& name) -> std::optional<int> {
        if (name == "*") return std::nullopt;
        for (std::size_t i = 0; i < sorts.size(); ++i)
            if (sorts[i].name == name) return static_cast<int>(i);
        fail("guard names unknown sort \"" + name + "\"");
    };
    std::vector<RelationClause> rels;
    for (const auto& e : array_field(j, "relations")) {
        RelationClause c{string_field(e, "name"), int_field(e, "arity"), {}, formula_from_json(field(e, "formula"))};
        if (e.contains("guard")) {
            const json& g = field(e, "guard");
            if (g.is_string()) {
                if (g.get<std::string>() != "*") fail("a string guard must be \"*\"");
                c.guard.assign(static_cast<std::size_t>(std::max(c.arity, 0)), std::nullopt);
            } else {
                if (!g.is_array()) fail("guard must be an array or \"*\"");
                for (const auto& x : g) {
                    if (!x.is_string()) fail("guard entries must be sort names or \"*\"");
                    c.guard.push_back(sort_of(x.get<std::string>()));
                }
            }
        } else {
            c.guard.assign(static_cast<std::size_t>(std::max(c.arity, 0)), std::nullopt);
        }
        rels.push_back(std::move(c));
    }
    return DefStructure(base, std::move(sorts), std::move(rels));
}

json to_json(const SampledStructure& s, const DefStructure& d) {
    json points = json::array();
    for (std::size_t p = 0; p < s.size(); ++p) {
        json atoms = json::array();
        for (int a : s.point_support[p]) atoms.push_back(format_atom(s.atoms[a], d.base().labeled()));
        points.push_back({{"id", p}, {"sort", d.sorts()[s.point_sort[p]].name}, {"atoms", std::move(atoms)}});
    }
    return {{"structure", to_json(s.structure)}, {"points", std::move(points)}};
}

} // namespace orbitfin::json
