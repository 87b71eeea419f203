#include "orbitfin/finstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace orbitfin {

Signature::Signature(std::vector<RelationSymbol> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> names;
    for (const auto& s : symbols_) {
        if (s.arity < 1) throw Error(ErrorCode::ArityMismatch, "relation '" + s.name + "' needs positive arity");
        if (!names.insert(s.name).second)
            throw Error(ErrorCode::SignatureMismatch, "duplicate relation name '" + s.name + "'");
    }
}

std::optional<std::size_t> Signature::index_of(const std::string& name) const {
    for (std::size_t r = 0; r < symbols_.size(); ++r)
        if (symbols_[r].name == name) return r;
    return std::nullopt;
}

int Signature::max_arity() const {
    int m = 0;
    for (const auto& s : symbols_) m = std::max(m, s.arity);
    return m;
}

FinStructure::FinStructure(Signature signature, int size, std::vector<std::vector<Tuple>> relations)
    : signature_(std::move(signature)), size_(size), relations_(std::move(relations)) {
    if (size_ < 0) throw Error(ErrorCode::InvalidElement, "negative domain size");
    if (relations_.size() != signature_.size())
        throw Error(ErrorCode::SignatureMismatch, "relation count differs from signature");
    const double n = std::max(size_, 2);
    if (std::pow(n, signature_.max_arity()) > static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2))
        throw Error(ErrorCode::TooLarge, "domain too large for tuple indexing");
    index_.resize(relations_.size());
    adjacency_.resize(relations_.size());
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        auto& tuples = relations_[r];
        for (const auto& t : tuples) {
            if (static_cast<int>(t.size()) != signature_[r].arity)
                throw Error(ErrorCode::ArityMismatch, "tuple of wrong length in '" + signature_[r].name + "'");
            for (int x : t)
                if (x < 0 || x >= size_)
                    throw Error(ErrorCode::InvalidElement,
                                "element " + std::to_string(x) + " in '" + signature_[r].name + "'");
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
        index_[r].reserve(tuples.size() * 2);
        for (const auto& t : tuples) index_[r].insert(key(t));
        if (signature_[r].arity == 2) {
            adjacency_[r].assign(static_cast<std::size_t>(size_) * size_, 0);
            for (const auto& t : tuples) adjacency_[r][static_cast<std::size_t>(t[0]) * size_ + t[1]] = 1;
        }
    }
}

std::uint64_t FinStructure::key(std::span<const int> t) const {
    std::uint64_t k = 0;
    for (int x : t) k = k * static_cast<std::uint64_t>(size_) + static_cast<std::uint64_t>(x);
    return k;
}

const std::vector<Tuple>& FinStructure::tuples(const std::string& name) const {
    auto r = signature_.index_of(name);
    if (!r) throw Error(ErrorCode::SignatureMismatch, "no relation named '" + name + "'");
    return relations_[*r];
}

bool FinStructure::holds(std::size_t r, std::span<const int> t) const {
    if (signature_[r].arity == 2) return holds2(r, t[0], t[1]);
    return index_[r].count(key(t)) != 0;
}

FinStructure FinStructure::with_relation(std::size_t r, std::vector<Tuple> tuples) const {
    auto rels = relations_;
    rels.at(r) = std::move(tuples);
    return FinStructure(signature_, size_, std::move(rels));
}

std::string_view to_string(HomMode mode) {
    switch (mode) {
    case HomMode::Hom: return "hom";
    case HomMode::Embedding: return "embedding";
    case HomMode::Iso: return "iso";
    }
    return "hom";
}

HomMode parse_hom_mode(std::string_view text) {
    if (text == "hom") return HomMode::Hom;
    if (text == "embedding") return HomMode::Embedding;
    if (text == "iso") return HomMode::Iso;
    throw Error(ErrorCode::ParseError, "unknown mode '" + std::string(text) + "'");
}

namespace {

// Calls f on every tuple in [0,n)^k.
template <class F>
void for_each_tuple(int n, int k, F&& f) {
    if (n == 0) return;
    std::vector<int> t(k, 0);
    while (true) {
        f(t);
        int p = k - 1;
        while (p >= 0 && ++t[p] == n) t[p--] = 0;
        if (p < 0) return;
    }
}

} // namespace

bool is_hom(const FinStructure& source, const FinStructure& target, std::span<const int> map, HomMode mode) {
    if (source.signature() != target.signature()) return false;
    if (static_cast<int>(map.size()) != source.size()) return false;
    for (int v : map)
        if (v < 0 || v >= target.size()) return false;
    Tuple image;
    for (std::size_t r = 0; r < source.signature().size(); ++r)
        for (const auto& t : source.tuples(r)) {
            image.resize(t.size());
            for (std::size_t p = 0; p < t.size(); ++p) image[p] = map[t[p]];
            if (!target.holds(r, image)) return false;
        }
    if (mode == HomMode::Hom) return true;
    std::vector<int> sorted(map.begin(), map.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (mode == HomMode::Iso && source.size() != target.size()) return false;
    // Reflection: the image tuple being related forces the source tuple to be.
    bool reflects = true;
    for (std::size_t r = 0; r < source.signature().size() && reflects; ++r) {
        const int k = source.signature()[r].arity;
        if (target.tuples(r).size() == source.tuples(r).size()) continue;  // injective + preserving
        std::vector<int> inverse(target.size(), -1);
        for (int x = 0; x < source.size(); ++x) inverse[map[x]] = x;
        Tuple pre(k);
        for (const auto& t : target.tuples(r)) {
            bool in_range = true;
            for (int p = 0; p < k; ++p) {
                pre[p] = inverse[t[p]];
                if (pre[p] < 0) in_range = false;
            }
            if (in_range && !source.holds(r, pre)) {
                reflects = false;
                break;
            }
        }
    }
    return reflects;
}

Hom Hom::validated(const FinStructure& source, const FinStructure& target, std::vector<int> map, HomMode mode) {
    if (!is_hom(source, target, map, mode))
        throw Error(ErrorCode::ValidationFailed, "map is not a valid " + std::string(to_string(mode)));
    return Hom(std::move(map), target.size());
}

Hom compose(const Hom& first, const Hom& second) {
    std::vector<int> out(first.map_.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = second.map_.at(first.map_[x]);
    return Hom(std::move(out), second.target_size_);
}

InducedSubstructure induced_substructure(const FinStructure& s, std::span<const int> subset) {
    std::vector<int> chosen(subset.begin(), subset.end());
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
    std::vector<int> to_new(s.size(), -1);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i] < 0 || chosen[i] >= s.size())
            throw Error(ErrorCode::InvalidElement, "element " + std::to_string(chosen[i]) + " not in domain");
        to_new[chosen[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<Tuple>> rels(s.signature().size());
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (const auto& t : s.tuples(r)) {
            Tuple nt(t.size());
            bool inside = true;
            for (std::size_t p = 0; p < t.size() && inside; ++p) {
                nt[p] = to_new[t[p]];
                inside = nt[p] >= 0;
            }
            if (inside) rels[r].push_back(std::move(nt));
        }
    return {FinStructure(s.signature(), static_cast<int>(chosen.size()), std::move(rels)), std::move(chosen)};
}

FinStructure disjoint_union(const FinStructure& s, const FinStructure& t) {
    if (s.signature() != t.signature()) throw Error(ErrorCode::SignatureMismatch, "disjoint union of different signatures");
    std::vector<std::vector<Tuple>> rels(s.signature().size());
    for (std::size_t r = 0; r < rels.size(); ++r) {
        rels[r] = s.tuples(r);
        for (auto tup : t.tuples(r)) {
            for (int& x : tup) x += s.size();
            rels[r].push_back(std::move(tup));
        }
    }
    return FinStructure(s.signature(), s.size() + t.size(), std::move(rels));
}

FinStructure full_power(const FinStructure& s, int d) {
    if (d < 1) throw Error(ErrorCode::InvalidDimension, "full power needs d >= 1");
    const int n = s.size();
    const double elements = std::pow(static_cast<double>(n), d);
    if (elements > 1e5) throw Error(ErrorCode::TooLarge, "full power domain too large");
    const int size = static_cast<int>(elements + 0.5);

    // Base relations plus equality, each instantiated at every projection pattern.
    std::vector<RelationSymbol> base = s.signature().symbols();
    std::vector<std::vector<Tuple>> base_tuples;
    for (std::size_t r = 0; r < base.size(); ++r) base_tuples.push_back(s.tuples(r));
    base.push_back({"=", 2});
    std::vector<Tuple> diagonal;
    for (int a = 0; a < n; ++a) diagonal.push_back({a, a});
    base_tuples.push_back(std::move(diagonal));

    std::vector<int> pow_n(d + 1, 1);
    for (int p = 1; p <= d; ++p) pow_n[p] = pow_n[p - 1] * n;

    std::vector<RelationSymbol> symbols;
    std::vector<std::vector<Tuple>> rels;
    for (std::size_t r = 0; r < base.size(); ++r) {
        const int k = base[r].arity;
        auto emit_pattern = [&](const std::vector<int>& coords) {
            std::string name = base[r].name + "@";
            for (int m = 0; m < k; ++m) name += (m ? "," : "") + std::to_string(coords[m] + 1);
            symbols.push_back({name, k});
            std::vector<Tuple> out;
            // Element id of a tuple: sum of entry * n^(d-1-coordinate).
            for (const auto& bt : base_tuples[r]) {
                for_each_tuple(pow_n[d - 1] > 0 ? pow_n[d - 1] : 1, k, [&](const std::vector<int>& rest) {
                    Tuple t(k);
                    for (int m = 0; m < k; ++m) {
                        // Spread `rest[m]` over the d-1 free coordinates.
                        int free = rest[m], id = 0;
                        for (int c = d - 1; c >= 0; --c) {
                            int digit;
                            if (c == coords[m]) {
                                digit = bt[m];
                            } else {
                                digit = free % n;
                                free /= n;
                            }
                            id += digit * pow_n[d - 1 - c];
                        }
                        t[m] = id;
                    }
                    out.push_back(std::move(t));
                });
            }
            if (out.size() > 20'000'000) throw Error(ErrorCode::TooLarge, "full power relation too large");
            rels.push_back(std::move(out));
        };
        for_each_tuple(d, k, emit_pattern);
    }
    return FinStructure(Signature(std::move(symbols)), size, std::move(rels));
}

CoreResult compute_core(const FinStructure& s) {
    FinStructure current = s;
    std::vector<int> elements(s.size());
    std::iota(elements.begin(), elements.end(), 0);
    std::vector<int> retraction = elements;  // s id -> current id
    bool shrunk = false;
    while (true) {
        bool found = false;
        for (int w = current.size() - 1; w >= 0 && !found; --w) {
            std::vector<int> rest;
            for (int x = 0; x < current.size(); ++x)
                if (x != w) rest.push_back(x);
            auto sub = induced_substructure(current, rest);
            auto h = find_hom(current, sub.structure);
            if (!h) continue;
            // Shrink to the image of the non-surjective endomorphism.
            std::vector<int> image;
            for (int x = 0; x < current.size(); ++x) image.push_back(sub.to_original[(*h)(x)]);
            std::vector<int> img_sorted = image;
            std::sort(img_sorted.begin(), img_sorted.end());
            img_sorted.erase(std::unique(img_sorted.begin(), img_sorted.end()), img_sorted.end());
            auto next = induced_substructure(current, img_sorted);
            std::vector<int> to_next(current.size(), -1);
            for (std::size_t i = 0; i < next.to_original.size(); ++i) to_next[next.to_original[i]] = static_cast<int>(i);
            for (int& r : retraction) r = to_next[image[r]];
            std::vector<int> new_elements;
            for (int old : next.to_original) new_elements.push_back(elements[old]);
            elements = std::move(new_elements);
            current = std::move(next.structure);
            found = shrunk = true;
        }
        if (!found) break;
    }
    // The composite restricted to the core is an automorphism of it; undo it
    // so that the retraction fixes the core pointwise.
    std::vector<int> on_core(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) on_core[i] = retraction[elements[i]];
    std::vector<int> inverse(on_core.size());
    for (std::size_t i = 0; i < on_core.size(); ++i) inverse[on_core[i]] = static_cast<int>(i);
    for (int& r : retraction) r = inverse[r];
    Hom ret = Hom::validated(s, current, retraction);
    return {std::move(current), std::move(elements), std::move(ret), !shrunk};
}

bool is_core(const FinStructure& s) {
    for (int w = 0; w < s.size(); ++w) {
        std::vector<int> rest;
        for (int x = 0; x < s.size(); ++x)
            if (x != w) rest.push_back(x);
        if (find_hom(s, induced_substructure(s, rest).structure)) return false;
    }
    return true;
}

} // namespace orbitfin
