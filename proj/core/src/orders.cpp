#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "orbitfin/definable.hpp"

namespace orbitfin {

namespace {

void check_order_input(const DefStructure& d, const Limits& limits) {
    if (d.sorts().size() != 1) throw Error(ErrorCode::Unsupported, "invariant orders need a single-sort structure");
    if (!d.base().ordered) throw Error(ErrorCode::Unsupported, "invariant orders need an ordered base");
    const int dim = d.sorts().front().dim;
    if (dim > 3) throw Error(ErrorCode::TooLarge, "invariant orders are enumerated for dimension at most 3");
    if (3 * dim > limits.atom_budget) throw Error(ErrorCode::TooLarge, "sufficiency sample exceeds the atom budget");
}

// Orbit of the pair (p, q): supports re-ranked inside their union.
std::string pair_encoding(const SampledStructure& s, int p, int q) {
    std::vector<int> u = s.point_support[p];
    u.insert(u.end(), s.point_support[q].begin(), s.point_support[q].end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    auto rank = [&](const std::vector<int>& v) {
        std::vector<int> r;
        for (int a : v) r.push_back(static_cast<int>(std::lower_bound(u.begin(), u.end(), a) - u.begin()));
        return r;
    };
    std::vector<int> word;
    for (int a : u) word.push_back(s.atoms[a].label());
    return OrbitDescriptor(static_cast<int>(u.size()), std::move(word),
                           {{s.point_sort[p], rank(s.point_support[p])}, {s.point_sort[q], rank(s.point_support[q])}})
        .encoding();
}

std::vector<OrbitDescriptor> off_diagonal_pairs(const DefStructure& d, const Limits& limits) {
    std::vector<OrbitDescriptor> out;
    for (auto& o : point_orbits(d, 2, limits))
        if (o.points()[0] != o.points()[1]) out.push_back(std::move(o));
    return out;
}

OrbitDescriptor reversed(const OrbitDescriptor& o) {
    return OrbitDescriptor(o.support(), o.word(), {o.points()[1], o.points()[0]});
}

} // namespace

std::vector<InvariantOrder> enumerate_invariant_orders(const DefStructure& d, const Limits& limits) {
    check_order_input(d, limits);
    const auto pairs = off_diagonal_pairs(d, limits);

    // One variable per reverse pair {o, o'}; true puts the smaller encoding in the order.
    std::map<std::string, int> literal;
    std::vector<std::string> rep, partner;
    for (const auto& o : pairs) {
        const std::string r = reversed(o).encoding();
        if (r == o.encoding()) return {};
        if (o.encoding() < r) {
            const int v = static_cast<int>(rep.size());
            rep.push_back(o.encoding());
            partner.push_back(r);
            literal[o.encoding()] = 2 * v;
            literal[r] = 2 * v + 1;
        }
    }
    const int vars = static_cast<int>(rep.size());

    // Transitivity on a tournament means no directed 3-cycle. Three points
    // mention at most 3*dim atoms, and invariance reduces the global claim to
    // the 3-point types, all of which occur on a sample of that size under
    // some label word.
    const int atoms = 3 * d.sorts().front().dim;
    std::set<std::array<int, 3>> clauses;
    for (const auto& word : detail::words(atoms, d.base().alphabet)) {
        const SampledStructure s = sample(d, make_sample(d.base(), atoms, word));
        const int n = static_cast<int>(s.size());
        std::vector<int> lit(static_cast<std::size_t>(n) * n, -1);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                if (p != q) lit[p * n + q] = literal.at(pair_encoding(s, p, q));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                if (q == p) continue;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    std::array<int, 3> c{lit[p * n + q], lit[q * n + r], lit[r * n + p]};
                    std::sort(c.begin(), c.end());
                    if ((c[0] ^ 1) == c[1] || (c[1] ^ 1) == c[2] || (c[0] ^ 1) == c[2]) continue;
                    clauses.insert(c);
                }
            }
    }
    std::vector<std::vector<std::array<int, 3>>> by_last(static_cast<std::size_t>(vars));
    for (const auto& c : clauses) by_last[c[2] / 2].push_back(c);

    std::vector<int> value(static_cast<std::size_t>(vars), -1);
    auto holds = [&](int l) { return value[l / 2] == ((l & 1) ? 0 : 1); };
    std::vector<InvariantOrder> out;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == vars) {
            InvariantOrder order;
            for (int i = 0; i < vars; ++i) order.orbits.push_back(value[i] ? rep[i] : partner[i]);
            std::sort(order.orbits.begin(), order.orbits.end());
            out.push_back(std::move(order));
            return;
        }
        for (int b : {1, 0}) {
            value[v] = b;
            bool ok = true;
            for (const auto& c : by_last[v])
                if (holds(c[0]) && holds(c[1]) && holds(c[2])) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
        value[v] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string SignedLex::to_string() const {
    std::string s = "sigma=(";
    for (std::size_t j = 0; j < sigma.size(); ++j) s += (j ? "," : "") + std::to_string(sigma[j] + 1);
    s += ") R=(";
    for (std::size_t j = 0; j < ascending.size(); ++j) s += std::string(j ? "," : "") + (ascending[j] ? "asc" : "desc");
    return s + ")";
}

bool signed_lex_less(const SignedLex& lex, std::span<const int> a, std::span<const int> b) {
    for (std::size_t j = 0; j < lex.sigma.size(); ++j) {
        const int c = lex.sigma[j];
        if (a[c] == b[c]) continue;
        return (a[c] < b[c]) == lex.ascending[j];
    }
    return false;
}

std::vector<SignedLex> all_signed_lex(int dim) {
    std::vector<SignedLex> out;
    std::vector<int> sigma(static_cast<std::size_t>(dim));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        for (const auto& w : detail::words(dim, 2)) {
            SignedLex lex{sigma, {}};
            for (int x : w) lex.ascending.push_back(x == 0);
            out.push_back(std::move(lex));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

InvariantOrder signed_lex_order(const SignedLex& lex, const DefStructure& d, const Limits& limits) {
    check_order_input(d, limits);
    InvariantOrder order;
    for (const auto& o : off_diagonal_pairs(d, limits))
        if (signed_lex_less(lex, o.points()[0].second, o.points()[1].second)) order.orbits.push_back(o.encoding());
    std::sort(order.orbits.begin(), order.orbits.end());
    return order;
}

std::optional<SignedLex> classify_signed_lex(const InvariantOrder& order, const DefStructure& d, const Limits& limits) {
    check_order_input(d, limits);
    const auto pairs = off_diagonal_pairs(d, limits);
    for (const auto& lex : all_signed_lex(d.sorts().front().dim)) {
        bool agrees = true;
        for (const auto& o : pairs) {
            const bool in = std::binary_search(order.orbits.begin(), order.orbits.end(), o.encoding());
            if (signed_lex_less(lex, o.points()[0].second, o.points()[1].second) != in) {
                agrees = false;
                break;
            }
        }
        if (agrees) return lex;
    }
    return std::nullopt;
}

bool order_holds(const InvariantOrder& order, const SampledStructure& s, int p, int q) {
    if (p == q) return false;
    return std::binary_search(order.orbits.begin(), order.orbits.end(), pair_encoding(s, p, q));
}

} // namespace orbitfin
