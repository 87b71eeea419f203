#include "orbitfin/definable.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "detail.hpp"

namespace orbitfin {

namespace {

constexpr std::size_t kMaxSamplePoints = 200000;

bool is_permutation_of(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<int> s = v;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
        if (s[i] != i) return false;
    return true;
}

// Dimension a wildcard position stands for.
int wildcard_dim(const std::vector<Sort>& sorts) {
    if (sorts.empty()) return 0;
    for (const auto& s : sorts)
        if (s.dim != sorts.front().dim)
            throw Error(ErrorCode::InvalidDimension, "wildcard guard over sorts of different dimensions");
    return sorts.front().dim;
}

std::string fresh_name(std::string name, const std::set<std::string>& taken) {
    while (taken.count(name)) name += '\'';
    return name;
}

// Replace wildcard positions by every concrete sort index in [first, first+count).
std::vector<std::vector<std::optional<int>>> expand_guard(const std::vector<std::optional<int>>& guard, int first,
                                                          int count) {
    std::vector<std::vector<std::optional<int>>> out{{}};
    for (const auto& g : guard) {
        std::vector<std::vector<std::optional<int>>> next;
        for (const auto& prefix : out) {
            if (g) {
                auto p = prefix;
                p.push_back(*g + first);
                next.push_back(std::move(p));
            } else {
                for (int s = 0; s < count; ++s) {
                    auto p = prefix;
                    p.push_back(first + s);
                    next.push_back(std::move(p));
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

std::vector<int> Sort::orientation_or_identity() const {
    if (!orientation.empty()) return orientation;
    std::vector<int> id(static_cast<std::size_t>(dim));
    std::iota(id.begin(), id.end(), 0);
    return id;
}

DefStructure::DefStructure(AtomBase base, std::vector<Sort> sorts, std::vector<RelationClause> relations)
    : base_(base), sorts_(std::move(sorts)), relations_(std::move(relations)) {
    base_.validate();
    std::set<std::string> names;
    for (const auto& s : sorts_) {
        if (s.name.empty()) throw Error(ErrorCode::ParseError, "sort without a name");
        if (!names.insert(s.name).second) throw Error(ErrorCode::ParseError, "duplicate sort name " + s.name);
        if (s.dim < 0) throw Error(ErrorCode::InvalidDimension, "negative dimension for sort " + s.name);
        if (!s.orientation.empty() && !is_permutation_of(s.orientation, s.dim))
            throw Error(ErrorCode::InvalidDimension, "orientation of sort " + s.name + " is not a permutation");
    }
    std::vector<RelationSymbol> symbols;
    for (const auto& c : relations_) {
        if (c.arity <= 0) throw Error(ErrorCode::ArityMismatch, "relation " + c.name + " needs positive arity");
        if (static_cast<int>(c.guard.size()) != c.arity)
            throw Error(ErrorCode::ArityMismatch, "guard length differs from arity in relation " + c.name);
        int positions = 0;
        for (const auto& g : c.guard) {
            if (g) {
                if (*g < 0 || *g >= static_cast<int>(sorts_.size()))
                    throw Error(ErrorCode::InvalidElement, "guard of relation " + c.name + " names an unknown sort");
                positions += sorts_[*g].dim;
            } else {
                positions += wildcard_dim(sorts_);
            }
        }
        check_formula(c.formula, positions, base_);
        auto it = std::find_if(symbols.begin(), symbols.end(), [&](const RelationSymbol& r) { return r.name == c.name; });
        if (it == symbols.end()) symbols.push_back({c.name, c.arity});
        else if (it->arity != c.arity)
            throw Error(ErrorCode::ArityMismatch, "clauses of relation " + c.name + " disagree on arity");
    }
    signature_ = Signature(std::move(symbols));
}

std::optional<int> DefStructure::sort_index(const std::string& name) const {
    for (std::size_t i = 0; i < sorts_.size(); ++i)
        if (sorts_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

int DefStructure::max_dim() const {
    int m = 0;
    for (const auto& s : sorts_) m = std::max(m, s.dim);
    return m;
}

Point SampledStructure::point(int id) const {
    Point p;
    p.sort = point_sort.at(id);
    for (int i : point_support.at(id)) p.atoms.push_back(atoms[i]);
    return p;
}

std::optional<int> SampledStructure::find(int sort, std::span<const int> support) const {
    auto it = lookup.find({sort, std::vector<int>(support.begin(), support.end())});
    if (it == lookup.end()) return std::nullopt;
    return it->second;
}

SampledStructure sample(const DefStructure& d, const AtomSample& atoms) {
    if (!(atoms.base() == d.base()))
        throw Error(ErrorCode::BaseMismatch, "sample drawn from " + to_string(atoms.base()) + ", structure over " +
                                                 to_string(d.base()));
    SampledStructure out;
    out.atoms = atoms;
    const int n = static_cast<int>(atoms.size());
    std::vector<std::vector<int>> by_sort(d.sorts().size());
    for (std::size_t s = 0; s < d.sorts().size(); ++s) {
        for (auto& c : detail::combinations(n, d.sorts()[s].dim)) {
            const int id = static_cast<int>(out.point_sort.size());
            out.point_sort.push_back(static_cast<int>(s));
            out.lookup.emplace(std::make_pair(static_cast<int>(s), c), id);
            out.point_support.push_back(std::move(c));
            by_sort[s].push_back(id);
            if (out.point_sort.size() > kMaxSamplePoints)
                throw Error(ErrorCode::TooLarge, "sample exceeds " + std::to_string(kMaxSamplePoints) + " points");
        }
    }
    std::vector<int> all(out.point_sort.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[i] = atoms[i].label();

    const Signature& sig = d.signature();
    std::vector<std::vector<Tuple>> rels(sig.size());
    for (const auto& clause : d.relations()) {
        const std::size_t r = *sig.index_of(clause.name);
        std::vector<const std::vector<int>*> pools;
        for (const auto& g : clause.guard) pools.push_back(g ? &by_sort[*g] : &all);
        if (std::any_of(pools.begin(), pools.end(), [](auto p) { return p->empty(); })) continue;
        const int k = clause.arity;
        std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
        Tuple t(static_cast<std::size_t>(k));
        std::vector<int> keys, labs;
        while (true) {
            keys.clear();
            labs.clear();
            for (int m = 0; m < k; ++m) {
                t[m] = (*pools[m])[idx[m]];
                for (int a : out.point_support[t[m]]) {
                    keys.push_back(a);
                    labs.push_back(labels[a]);
                }
            }
            if (eval_keys(clause.formula, keys, labs)) rels[r].push_back(t);
            int m = k - 1;
            while (m >= 0 && ++idx[m] == pools[m]->size()) idx[m--] = 0;
            if (m < 0) break;
        }
    }
    out.structure = FinStructure(sig, static_cast<int>(out.point_sort.size()), std::move(rels));
    return out;
}

DefStructure reduct(const DefStructure& d, std::vector<RelationClause> relations) {
    return DefStructure(d.base(), d.sorts(), std::move(relations));
}

DefStructure disjoint_union_def(const DefStructure& a, const DefStructure& b) {
    if (!(a.base() == b.base())) throw Error(ErrorCode::BaseMismatch, "disjoint union over different bases");
    std::vector<Sort> sorts = a.sorts();
    std::set<std::string> names, families;
    for (const auto& s : a.sorts()) {
        names.insert(s.name);
        families.insert(s.family_name());
    }
    std::map<std::string, std::string> family_rename;
    for (Sort s : b.sorts()) {
        const std::string fam = s.family_name();
        s.name = fresh_name(s.name, names);
        names.insert(s.name);
        auto it = family_rename.find(fam);
        if (it == family_rename.end()) it = family_rename.emplace(fam, fresh_name(fam, families)).first;
        s.family = it->second;
        sorts.push_back(std::move(s));
    }
    for (const auto& [from, to] : family_rename) families.insert(to);

    std::vector<RelationClause> clauses;
    auto add = [&](const DefStructure& src, int first) {
        for (const auto& c : src.relations())
            for (auto& g : expand_guard(c.guard, first, static_cast<int>(src.sorts().size())))
                clauses.push_back({c.name, c.arity, std::move(g), c.formula});
    };
    add(a, 0);
    add(b, static_cast<int>(a.sorts().size()));
    return DefStructure(a.base(), std::move(sorts), std::move(clauses));
}

namespace {

struct PowerPattern {
    int support = 0;
    std::vector<std::vector<int>> entries;
};

std::vector<PowerPattern> power_patterns(const DefStructure& d, int power, const Limits& limits) {
    if (d.sorts().size() != 1) throw Error(ErrorCode::Unsupported, "full power needs a single-sort structure");
    if (!d.base().ordered) throw Error(ErrorCode::Unsupported, "full power needs an ordered base");
    if (power < 1) throw Error(ErrorCode::InvalidDimension, "power must be positive");
    const int e = d.sorts().front().dim;
    if (power * e > limits.atom_budget) throw Error(ErrorCode::TooLarge, "full power exceeds the atom budget");
    std::vector<PowerPattern> out;
    for (int k = 0; k <= power * e; ++k) {
        const auto subsets = detail::combinations(k, e);
        if (subsets.empty()) continue;
        std::vector<std::size_t> idx(static_cast<std::size_t>(power), 0);
        while (true) {
            std::vector<char> covered(static_cast<std::size_t>(k), 0);
            for (auto i : idx)
                for (int a : subsets[i]) covered[a] = 1;
            if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) {
                PowerPattern p{k, {}};
                for (auto i : idx) p.entries.push_back(subsets[i]);
                out.push_back(std::move(p));
            }
            int m = power - 1;
            while (m >= 0 && ++idx[m] == subsets.size()) idx[m--] = 0;
            if (m < 0) break;
        }
    }
    return out;
}

std::string pattern_name(const PowerPattern& p) {
    std::string s = "[";
    for (std::size_t t = 0; t < p.entries.size(); ++t) {
        if (t) s += '|';
        s += detail::join(p.entries[t]);
    }
    return s + "]";
}

} // namespace

std::vector<PowerSortLayout> power_layouts(const DefStructure& d, int power, const Limits& limits) {
    std::vector<PowerSortLayout> out;
    for (auto& p : power_patterns(d, power, limits)) out.push_back({std::move(p.entries)});
    return out;
}

DefStructure full_power_def(const DefStructure& d, int power, const Limits& limits) {
    const auto patterns = power_patterns(d, power, limits);
    const int e = d.sorts().front().dim;
    std::vector<Sort> sorts;
    for (const auto& p : patterns) sorts.push_back({pattern_name(p), p.support, {}, {}});

    struct Source {
        std::string name;
        int arity;
        Formula formula;
    };
    std::vector<Source> sources;
    for (const auto& sym : d.signature().symbols()) {
        std::vector<Formula> parts;
        for (const auto& c : d.relations())
            if (c.name == sym.name) parts.push_back(c.formula);
        sources.push_back({sym.name, sym.arity, Formula::disj(std::move(parts))});
    }
    {
        std::vector<Formula> parts;
        for (int c = 0; c < e; ++c) parts.push_back(Formula::eq(c, e + c));
        sources.push_back({"=", 2, Formula::conj(std::move(parts))});
    }

    const int P = static_cast<int>(patterns.size());
    std::vector<RelationClause> clauses;
    for (const auto& src : sources) {
        const int r = src.arity;
        for (const auto& js : detail::words(r, power)) {
            std::string name = src.name + "@";
            for (int m = 0; m < r; ++m) name += (m ? "," : "") + std::to_string(js[m] + 1);
            bool any = false;
            for (const auto& guard : detail::words(r, P)) {
                std::vector<int> map(static_cast<std::size_t>(r * e));
                int offset = 0;
                std::vector<std::optional<int>> g;
                for (int m = 0; m < r; ++m) {
                    const auto& entry = patterns[guard[m]].entries[js[m]];
                    for (int c = 0; c < e; ++c) map[m * e + c] = offset + entry[c];
                    offset += patterns[guard[m]].support;
                    g.push_back(guard[m]);
                }
                clauses.push_back({name, r, std::move(g), src.formula.remap(map)});
                any = true;
            }
            if (!any) clauses.push_back({name, r, std::vector<std::optional<int>>(r, 0), Formula::bottom()});
        }
    }
    return DefStructure(d.base(), std::move(sorts), std::move(clauses));
}

} // namespace orbitfin
