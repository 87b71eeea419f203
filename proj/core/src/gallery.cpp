#include "orbitfin/gallery.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orbitfin::gallery {

namespace {

using F = Formula;

std::vector<std::optional<int>> guard(std::initializer_list<int> sorts) {
    std::vector<std::optional<int>> g;
    for (int s : sorts) g.push_back(s);
    return g;
}

std::vector<std::optional<int>> any(int arity) { return std::vector<std::optional<int>>(arity, std::nullopt); }

F iff(F a, F b) { return (a && b) || (!a && !b); }

// Same two stored atoms on both sides of a pair of two-dimensional points.
F same_pair() { return F::eq(0, 2) && F::eq(1, 3); }

F disjoint_pairs() { return !F::eq(0, 2) && !F::eq(0, 3) && !F::eq(1, 2) && !F::eq(1, 3); }

std::size_t rel(const FinStructure& s, const std::string& name) {
    auto r = s.signature().index_of(name);
    if (!r) throw Error(ErrorCode::SignatureMismatch, "structure has no relation " + name);
    return *r;
}

int find_point(const SampledStructure& s, int sort, std::vector<int> support) {
    auto id = s.find(sort, support);
    if (!id) throw Error(ErrorCode::InvalidElement, "point missing from sample");
    return *id;
}

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> out(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) out[x] = g[h[x]];
    return out;
}

// Group generated by `gens`, with its involutions inspected. `fiber_of` and
// `tag_of` describe how a flip of exponent 2 acts.
template <class IsFlip>
InvolutionReport inspect_group(const std::vector<std::vector<int>>& gens, std::size_t points, std::size_t budget,
                               IsFlip&& is_flip) {
    std::vector<int> id(points);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                auto h = compose(g, s);
                if (group.insert(h).second) {
                    if (group.size() > budget)
                        throw Error(ErrorCode::TooLarge, "generated group exceeds " + std::to_string(budget) + " elements");
                    next.push_back(std::move(h));
                }
            }
        frontier = std::move(next);
    }
    InvolutionReport rep;
    rep.group_order = group.size();
    std::vector<std::vector<int>> inv;
    for (const auto& g : group)
        if (g != id && compose(g, g) == id) inv.push_back(g);
    rep.involutions = inv.size();
    for (const auto& g : inv)
        if (!is_flip(g)) rep.all_flips = false;
    for (std::size_t i = 0; i < inv.size() && rep.all_commute; ++i)
        for (std::size_t j = i + 1; j < inv.size(); ++j)
            if (compose(inv[i], inv[j]) != compose(inv[j], inv[i])) {
                rep.all_commute = false;
                rep.non_commuting = std::make_pair(inv[i], inv[j]);
                break;
            }
    return rep;
}

std::vector<std::vector<int>> adjacent_transpositions(int atoms) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i + 1 < atoms; ++i) {
        std::vector<int> a(static_cast<std::size_t>(atoms));
        std::iota(a.begin(), a.end(), 0);
        std::swap(a[i], a[i + 1]);
        out.push_back(std::move(a));
    }
    return out;
}

// Exponent-2 flips keep every fiber and rotate each by 0 or 2, uniformly
// inside a fiber. Tags are read through `tag` and fibers through supports.
template <class Tag>
bool acts_as_flip(const SampledStructure& s, const std::vector<int>& g, Tag&& tag) {
    std::map<std::vector<int>, int> shift;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (s.point_support[x] != s.point_support[g[x]]) return false;
        auto [t0, o0] = tag(static_cast<int>(x));
        auto [t1, o1] = tag(g[x]);
        if (o0 != o1) return false;
        const int d = ((t1 - t0) % 4 + 4) % 4;
        if (d != 0 && d != 2) return false;
        auto [it, fresh] = shift.emplace(s.point_support[x], d);
        if (!fresh && it->second != d) return false;
    }
    return true;
}

} // namespace

DefStructure jord(int d) {
    if (d < 1) throw Error(ErrorCode::InvalidDimension, "dimension must be positive");
    std::vector<RelationClause> rels;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const std::string suffix = std::to_string(i + 1) + std::to_string(j + 1);
            rels.push_back({"<" + suffix, 2, any(2), F::less(i, d + j)});
            rels.push_back({"=" + suffix, 2, any(2), F::eq(i, d + j)});
        }
    return DefStructure(AtomBase::dlo(), {{"p", d, {}, {}}}, std::move(rels));
}

DefStructure dlo() { return DefStructure(AtomBase::dlo(), {{"p", 1, {}, {}}}, {{"<", 2, any(2), F::less(0, 1)}}); }

DefStructure johnson() {
    const F meet = F::eq(0, 2) || F::eq(0, 3) || F::eq(1, 2) || F::eq(1, 3);
    return DefStructure(AtomBase::dlo(), {{"v", 2, {}, {}}},
                        {{"E", 2, any(2), meet && !same_pair()}, {"N", 2, any(2), disjoint_pairs()}});
}

int x_sort(int tag, bool increasing) { return 2 * (((tag % 4) + 4) % 4) + (increasing ? 0 : 1); }

DefStructure build_X() {
    std::vector<Sort> sorts;
    for (int m = 0; m < 4; ++m) {
        const std::string fam = "x" + std::to_string(m);
        sorts.push_back({fam + "+", 2, fam, {0, 1}});
        sorts.push_back({fam + "-", 2, fam, {1, 0}});
    }
    // Stored coordinate holding the presented coordinate m mod 2.
    auto selected = [&](int s) { return sorts[s].orientation[(s / 2) % 2]; };
    std::vector<RelationClause> rels;
    for (int m = 0; m < 4; ++m)
        for (bool inc : {true, false}) rels.push_back({"R", 2, guard({x_sort(m, inc), x_sort(m + 1, inc)}), same_pair()});
    for (int s = 0; s < 8; ++s)
        for (int t = 0; t < 8; ++t)
            rels.push_back({"E", 2, guard({s, t}), F::eq(selected(s), 2 + selected(t)) && !same_pair()});
    rels.push_back({"N", 2, any(2), disjoint_pairs()});
    return DefStructure(AtomBase::dlo(), std::move(sorts), std::move(rels));
}

CoverData build_Y() {
    std::vector<Sort> sorts;
    for (int m = 0; m < 4; ++m) sorts.push_back({"y" + std::to_string(m), 2, {}, {}});
    std::vector<RelationClause> rels;
    for (int m = 0; m < 4; ++m) rels.push_back({"R", 2, guard({m, (m + 1) % 4}), same_pair()});
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) rels.push_back({"E", 2, guard({m, n}), F::eq(m % 2, 2 + n % 2) && !same_pair()});
    rels.push_back({"N", 2, any(2), disjoint_pairs()});
    return {DefStructure(AtomBase::dlo(), std::move(sorts), std::move(rels)), johnson()};
}

std::vector<int> projection(const SampledStructure& total, const SampledStructure& base) {
    std::vector<int> out(total.size());
    for (std::size_t x = 0; x < total.size(); ++x) {
        std::vector<int> support;
        for (int a : total.point_support[x]) {
            auto j = base.atoms.index_of(total.atoms[a].value());
            if (!j) throw Error(ErrorCode::InvalidElement, "base sample misses an atom of the total sample");
            support.push_back(static_cast<int>(*j));
        }
        out[x] = find_point(base, 0, std::move(support));
    }
    return out;
}

Point hom_X_to_Y(const Point& p) {
    if (p.sort < 0 || p.sort >= 8 || p.atoms.size() != 2) throw Error(ErrorCode::InvalidElement, "not a point of X");
    const int m = p.sort / 2;
    const int turned = p.sort % 2;
    return {(m + turned) % 4, p.atoms};
}

std::vector<int> hom_X_to_Y_map(const SampledStructure& x, const SampledStructure& y) {
    std::vector<int> out(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) {
        const Point img = hom_X_to_Y(x.point(static_cast<int>(p)));
        std::vector<int> support;
        for (const auto& a : img.atoms) {
            auto j = y.atoms.index_of(a.value());
            if (!j) throw Error(ErrorCode::InvalidElement, "samples use different atoms");
            support.push_back(static_cast<int>(*j));
        }
        out[p] = find_point(y, img.sort, std::move(support));
    }
    return out;
}

bool kernel_check(const SampledStructure& total) {
    const FinStructure& s = total.structure;
    const std::size_t r = rel(s, "R");
    const int n = s.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool related = x == y || s.holds2(r, x, y) || s.holds2(r, y, x);
            for (int z = 0; z < n && !related; ++z) related = s.holds2(r, x, z) && s.holds2(r, z, y);
            if (related != (total.point_support[x] == total.point_support[y])) return false;
        }
    return true;
}

Hom mu_pi(const SampledStructure& total, const SampledStructure& base, std::span<const int> map) {
    if (map.size() != total.size()) throw Error(ErrorCode::InvalidElement, "map size differs from the sample");
    const auto proj = projection(total, base);
    std::vector<int> out(base.size(), -1);
    for (std::size_t x = 0; x < total.size(); ++x) {
        const int target = proj.at(map[x]);
        int& slot = out[proj[x]];
        if (slot >= 0 && slot != target)
            throw Error(ErrorCode::KernelViolation, "map sends one fiber into two fibers");
        slot = target;
    }
    if (std::find(out.begin(), out.end(), -1) != out.end())
        throw Error(ErrorCode::KernelViolation, "base sample has a vertex without a fiber");
    return Hom::validated(base.structure, base.structure, std::move(out));
}

std::vector<int> flip(const SampledStructure& total, const std::set<std::vector<int>>& vertices, int k) {
    std::vector<int> out(total.size());
    for (std::size_t x = 0; x < total.size(); ++x) {
        const auto& sup = total.point_support[x];
        if (!vertices.count(sup)) out[x] = static_cast<int>(x);
        else out[x] = find_point(total, (((total.point_sort[x] + k) % 4) + 4) % 4, sup);
    }
    return out;
}

std::vector<int> lift_atom_permutation(const SampledStructure& total, std::span<const int> alpha) {
    std::vector<int> out(total.size());
    for (std::size_t x = 0; x < total.size(); ++x) {
        const int m = total.point_sort[x];
        const int a = alpha[total.point_support[x][0]];
        const int b = alpha[total.point_support[x][1]];
        out[x] = a < b ? find_point(total, m, {a, b}) : find_point(total, (m + 1) % 4, {b, a});
    }
    return out;
}

std::vector<int> lift_atom_permutation_X(const SampledStructure& x, std::span<const int> alpha) {
    std::vector<int> out(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) {
        const int s = x.point_sort[p];
        const auto& sup = x.point_support[p];
        const int first = s % 2 == 0 ? sup[0] : sup[1];
        const int second = s % 2 == 0 ? sup[1] : sup[0];
        const int a = alpha[first], b = alpha[second];
        out[p] = a < b ? find_point(x, x_sort(s / 2, true), {a, b}) : find_point(x, x_sort(s / 2, false), {b, a});
    }
    return out;
}

std::vector<int> induced_base_map(const SampledStructure& base, std::span<const int> alpha) {
    std::vector<int> out(base.size());
    for (std::size_t v = 0; v < base.size(); ++v) {
        int a = alpha[base.point_support[v][0]], b = alpha[base.point_support[v][1]];
        if (a > b) std::swap(a, b);
        out[v] = find_point(base, 0, {a, b});
    }
    return out;
}

InvolutionReport involution_commutation_check(int atoms, std::size_t budget) {
    if (atoms < 2 || atoms > 5) throw Error(ErrorCode::TooLarge, "involution check runs on 2 to 5 atoms");
    const SampledStructure y = sample(build_Y().total, make_sample(AtomBase::dlo(), atoms));
    std::vector<std::vector<int>> gens;
    for (const auto& a : adjacent_transpositions(atoms)) gens.push_back(lift_atom_permutation(y, a));
    std::set<std::vector<int>> vertices;
    for (const auto& sup : y.point_support) vertices.insert(sup);
    for (const auto& v : vertices) gens.push_back(flip(y, {v}, 2));
    return inspect_group(gens, y.size(), budget, [&](const std::vector<int>& g) {
        return acts_as_flip(y, g, [&](int p) { return std::pair{y.point_sort[p], 0}; });
    });
}

InvolutionReport involution_commutation_check_X(int atoms, std::size_t budget) {
    if (atoms < 2 || atoms > 5) throw Error(ErrorCode::TooLarge, "involution check runs on 2 to 5 atoms");
    const SampledStructure x = sample(build_X(), make_sample(AtomBase::dlo(), atoms));
    std::vector<std::vector<int>> gens;
    for (const auto& a : adjacent_transpositions(atoms)) gens.push_back(lift_atom_permutation_X(x, a));
    std::set<std::vector<int>> vertices;
    for (const auto& sup : x.point_support) vertices.insert(sup);
    for (const auto& v : vertices) {
        std::vector<int> g(x.size());
        for (std::size_t p = 0; p < x.size(); ++p) {
            const int s = x.point_sort[p];
            g[p] = x.point_support[p] == v ? find_point(x, x_sort(s / 2 + 2, s % 2 == 0), v) : static_cast<int>(p);
        }
        gens.push_back(std::move(g));
    }
    return inspect_group(gens, x.size(), budget, [&](const std::vector<int>& g) {
        return acts_as_flip(x, g, [&](int p) { return std::pair{x.point_sort[p] / 2, x.point_sort[p] % 2}; });
    });
}

FinStructure build_spider(int n) {
    if (n < 2) throw Error(ErrorCode::TooSmall, "spider needs n >= 2");
    Signature sig({{"U0", 1}, {"U1", 1}, {"U2", 1}, {"N", 2}, {"R", 2}});
    std::vector<std::vector<Tuple>> rels(5);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) rels[c].push_back({spider_id(i, c)});
    for (int c = 1; c <= 2; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) rels[3].push_back({spider_id(i, c), spider_id(j, c)});
    for (int i = 0; i < n; ++i)
        for (int c = 1; c <= 2; ++c) {
            rels[4].push_back({spider_id(i, 0), spider_id(i, c)});
            rels[4].push_back({spider_id(0, 0), spider_id(i, c)});
        }
    return FinStructure(std::move(sig), 3 * n, std::move(rels));
}

std::vector<int> spider_collapse(int n) {
    std::vector<int> out(static_cast<std::size_t>(3 * n));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) out[spider_id(i, c)] = c == 0 ? spider_id(0, 0) : spider_id(i, c);
    return out;
}

DefStructure build_QST() {
    return DefStructure(AtomBase::labeled_dlo(2), {{"q", 1, {}, {}}},
                        {{"<", 2, any(2), F::less(0, 1)}, {"S", 1, any(1), F::label(0, 0)}, {"T", 1, any(1), F::label(0, 1)}});
}

DefStructure build_QST_companion() {
    std::vector<RelationClause> rels;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rels.push_back({"<", 2, guard({i, j}), i < j ? (F::less(0, 1) || F::eq(0, 1)) : F::less(0, 1)});
    rels.push_back({"S", 1, guard({0}), F::top()});
    rels.push_back({"T", 1, guard({1}), F::top()});
    return DefStructure(AtomBase::dlo(), {{"a1", 1, {}, {}}, {"a2", 1, {}, {}}}, std::move(rels));
}

namespace {

// a before b in the local order, for unary points at positions i and j.
F local_order(int i, int j) {
    return (F::less(i, j) && iff(F::label(i, 0), F::label(j, 0))) ||
           (F::less(j, i) && iff(F::label(i, 0), F::label(j, 1)));
}

} // namespace

DefStructure build_S2() { return reduct(build_QST(), {{"prec", 2, any(2), local_order(0, 1)}}); }

DefStructure build_betw() {
    const F f = (local_order(0, 1) && local_order(1, 2)) || (local_order(2, 1) && local_order(1, 0));
    return reduct(build_QST(), {{"betw", 3, any(3), f}});
}

AtomSample qst_atoms_for_companion(const AtomSample& atoms) {
    std::vector<Atom> out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const Atom here(atoms[i].value(), 0);
        const Atom next = i + 1 < atoms.size() ? atoms[i + 1] : Atom(atoms[i].value() + 1, 0);
        out.push_back(here);
        out.push_back(insert_between(here, next, 1));
    }
    return AtomSample(AtomBase::labeled_dlo(2), std::move(out));
}

std::vector<int> qst_to_companion(const SampledStructure& qst, const SampledStructure& companion) {
    std::vector<int> out(qst.size());
    for (std::size_t p = 0; p < qst.size(); ++p) {
        const Atom& a = qst.atoms[qst.point_support[p][0]];
        auto j = companion.atoms.index_of(a.value());
        if (!j) throw Error(ErrorCode::InvalidElement, "companion sample misses an atom");
        out[p] = find_point(companion, a.label() == 0 ? 0 : 1, {static_cast<int>(*j)});
    }
    return out;
}

std::vector<int> companion_to_qst(const SampledStructure& companion, const SampledStructure& qst) {
    std::vector<int> out(companion.size());
    for (std::size_t p = 0; p < companion.size(); ++p) {
        const Atom& a = companion.atoms[companion.point_support[p][0]];
        auto j = qst.atoms.index_of(a.value());
        if (!j) throw Error(ErrorCode::InvalidElement, "QST sample misses an atom");
        const int k = static_cast<int>(*j) + companion.point_sort[p];
        if (k >= static_cast<int>(qst.atoms.size()) || qst.atoms[k].label() != companion.point_sort[p])
            throw Error(ErrorCode::InvalidElement, "QST sample does not follow the companion layout");
        out[p] = find_point(qst, 0, {k});
    }
    return out;
}

bool is_strict_total_order(const FinStructure& s, std::size_t r) {
    const int n = s.size();
    for (int a = 0; a < n; ++a) {
        if (s.holds2(r, a, a)) return false;
        for (int b = a + 1; b < n; ++b)
            if (s.holds2(r, a, b) == s.holds2(r, b, a)) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (s.holds2(r, a, b))
                for (int c = 0; c < n; ++c)
                    if (s.holds2(r, b, c) && !s.holds2(r, a, c)) return false;
    return true;
}

bool s2_cut_roundtrip(const FinStructure& s2, int c) {
    if (s2.signature().size() != 1 || s2.signature()[0].arity != 2)
        throw Error(ErrorCode::SignatureMismatch, "expected a single binary relation");
    const int n = s2.size();
    if (c < 0 || c >= n) throw Error(ErrorCode::InvalidElement, "cut point outside the domain");
    auto prec = [&](int a, int b) { return s2.holds2(0, a, b); };
    std::vector<int> rest;
    for (int a = 0; a < n; ++a)
        if (a != c) rest.push_back(a);
    std::vector<char> in_s(static_cast<std::size_t>(n)), in_t(static_cast<std::size_t>(n));
    for (int a : rest) {
        in_s[a] = prec(c, a);
        in_t[a] = prec(a, c);
        if (in_s[a] == in_t[a]) return false;
    }
    auto less = [&](int a, int b) {
        return (in_s[a] == in_s[b] && prec(a, b)) || (in_s[a] == in_t[b] && prec(b, a));
    };
    for (int a : rest) {
        if (less(a, a)) return false;
        for (int b : rest)
            if (a != b && less(a, b) == less(b, a)) return false;
    }
    for (int a : rest)
        for (int b : rest)
            if (less(a, b))
                for (int d : rest)
                    if (less(b, d) && !less(a, d)) return false;
    for (int a : rest)
        for (int b : rest) {
            const bool back = (less(a, b) && in_s[a] == in_s[b]) || (less(b, a) && in_s[a] == in_t[b]);
            if (back != prec(a, b)) return false;
        }
    return true;
}

DefStructure build_generic_perm_companion() {
    std::vector<Sort> sorts{{"lt", 2, "pair", {0, 1}}, {"gt", 2, "pair", {1, 0}}, {"eq", 1, {}, {}}};
    // Stored positions of the presented coordinates a and b.
    auto coords = [](int sort, int offset) {
        if (sort == 0) return std::pair{offset, offset + 1};
        if (sort == 1) return std::pair{offset + 1, offset};
        return std::pair{offset, offset};
    };
    std::vector<RelationClause> rels;
    for (int which = 0; which < 2; ++which)
        for (int s = 0; s < 3; ++s)
            for (int t = 0; t < 3; ++t) {
                auto [a1, b1] = coords(s, 0);
                auto [a2, b2] = coords(t, sorts[s].dim);
                if (which == 1) {
                    std::swap(a1, b1);
                    std::swap(a2, b2);
                }
                rels.push_back({which == 0 ? "prec1" : "prec2", 2, guard({s, t}),
                                F::less(a1, a2) || (F::eq(a1, a2) && F::less(b1, b2))});
            }
    return DefStructure(AtomBase::dlo(), std::move(sorts), std::move(rels));
}

std::pair<Atom, Atom> perm_point(const SampledStructure& s, int id) {
    const auto& sup = s.point_support.at(id);
    switch (s.point_sort.at(id)) {
    case 0: return {s.atoms[sup[0]], s.atoms[sup[1]]};
    case 1: return {s.atoms[sup[1]], s.atoms[sup[0]]};
    default: return {s.atoms[sup[0]], s.atoms[sup[0]]};
    }
}

FinStructure two_orders(std::span<const int> perm) {
    const int m = static_cast<int>(perm.size());
    std::vector<int> pos(static_cast<std::size_t>(m), -1);
    for (int i = 0; i < m; ++i) {
        if (perm[i] < 0 || perm[i] >= m || pos[perm[i]] >= 0)
            throw Error(ErrorCode::InvalidElement, "not a permutation");
        pos[perm[i]] = i;
    }
    std::vector<std::vector<Tuple>> rels(2);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a < b) rels[0].push_back({a, b});
            if (pos[a] < pos[b]) rels[1].push_back({a, b});
        }
    return FinStructure(Signature({{"prec1", 2}, {"prec2", 2}}), m, std::move(rels));
}

PermInterpretation interpret_qst_in_perm(const FinStructure& p) {
    const std::size_t r1 = rel(p, "prec1"), r2 = rel(p, "prec2");
    PermInterpretation out;
    for (const auto& t : p.tuples(r1)) out.elements.emplace_back(t[0], t[1]);
    std::sort(out.elements.begin(), out.elements.end());
    const int n = static_cast<int>(out.elements.size());
    std::vector<std::vector<Tuple>> rels(3);
    for (int x = 0; x < n; ++x) {
        const auto [u, v] = out.elements[x];
        if (p.holds2(r2, u, v)) rels[1].push_back({x});
        if (p.holds2(r2, v, u)) rels[2].push_back({x});
        for (int y = 0; y < n; ++y) {
            const auto [u2, v2] = out.elements[y];
            if (p.holds2(r1, u, u2) || (u == u2 && p.holds2(r1, v, v2))) rels[0].push_back({x, y});
        }
    }
    out.structure = FinStructure(Signature({{"<", 2}, {"S", 1}, {"T", 1}}), n, std::move(rels));
    return out;
}

std::vector<Entry> manifest() {
    return {
        {"DLO", "definable", "the dense linear order (Q;<)", "dense linear order"},
        {"Jord1", "definable", "increasing 1-tuples with coordinate orders and equalities", "Jord(1)"},
        {"Jord2", "definable", "increasing pairs with coordinate orders and equalities", "Jord(2)"},
        {"Jord3", "definable", "increasing triples with coordinate orders and equalities", "Jord(3)"},
        {"Johnson", "definable", "two-element subsets with E (one common atom) and N (disjoint)", "Johnson graph"},
        {"X", "definable", "tagged ordered pairs of distinct atoms with R, E, N", "structure X interpretable over equality"},
        {"Y", "definable", "tagged increasing pairs with R, E, N; the part of X on increasing pairs", "structure Y, the core of X"},
        {"QST", "definable", "(Q;<,S,T) with a dense partition into S and T", "generic two-coloured order"},
        {"QSTcompanion", "definable", "Q x {1,2} ordered lexicographically with S, T the two layers", "companion of the coloured order"},
        {"S2", "definable", "the dense local order as a reduct of QST", "dense local order S(2)"},
        {"Betw", "definable", "betweenness reduct of the dense local order", "betweenness on S(2)"},
        {"GenericPermCompanion", "definable", "Q^2 with both lexicographic orders", "companion of the generic permutation"},
        {"spider<n>", "finite", "finite truncation of the totally categorical spider structure", "spider with hub (0,0)"},
    };
}

std::optional<Object> lookup(std::string_view name) {
    if (name.starts_with("gallery:")) name.remove_prefix(8);
    if (name == "DLO") return dlo();
    if (name == "Johnson") return johnson();
    if (name == "X") return build_X();
    if (name == "Y") return build_Y().total;
    if (name == "QST") return build_QST();
    if (name == "QSTcompanion") return build_QST_companion();
    if (name == "S2") return build_S2();
    if (name == "Betw") return build_betw();
    if (name == "GenericPermCompanion") return build_generic_perm_companion();
    auto number = [&](std::string_view prefix) -> std::optional<int> {
        if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
        int v = 0;
        for (char ch : name.substr(prefix.size())) {
            if (ch < '0' || ch > '9' || v > 1000) return std::nullopt;
            v = v * 10 + (ch - '0');
        }
        return v;
    };
    if (auto d = number("Jord"); d && *d >= 1 && *d <= 4) return jord(*d);
    if (auto n = number("spider"); n && *n >= 2) return build_spider(*n);
    return std::nullopt;
}

} // namespace orbitfin::gallery
