#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orbitfin/error.hpp"

namespace orbitfin {

struct RelationSymbol {
    std::string name;
    int arity = 0;

    friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<RelationSymbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const RelationSymbol& operator[](std::size_t r) const { return symbols_[r]; }
    const std::vector<RelationSymbol>& symbols() const { return symbols_; }
    std::optional<std::size_t> index_of(const std::string& name) const;
    int max_arity() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<RelationSymbol> symbols_;
};

using Tuple = std::vector<int>;

/// Finite relational structure on ids 0..size-1. Relation tuple lists are
/// sorted and deduplicated; membership is answered from a hashed index, and
/// binary relations additionally keep a dense adjacency matrix.
class FinStructure {
public:
    FinStructure() = default;
    FinStructure(Signature signature, int size, std::vector<std::vector<Tuple>> relations);

    const Signature& signature() const { return signature_; }
    int size() const { return size_; }

    const std::vector<Tuple>& tuples(std::size_t r) const { return relations_[r]; }
    const std::vector<Tuple>& tuples(const std::string& name) const;
    bool holds(std::size_t r, std::span<const int> t) const;
    bool holds2(std::size_t r, int a, int b) const {
        return adjacency_[r][static_cast<std::size_t>(a) * size_ + b] != 0;
    }

    /// Copy with relation r replaced.
    FinStructure with_relation(std::size_t r, std::vector<Tuple> tuples) const;

    friend bool operator==(const FinStructure& a, const FinStructure& b) {
        return a.size_ == b.size_ && a.signature_ == b.signature_ && a.relations_ == b.relations_;
    }

private:
    std::uint64_t key(std::span<const int> t) const;

    Signature signature_;
    int size_ = 0;
    std::vector<std::vector<Tuple>> relations_;
    std::vector<std::unordered_set<std::uint64_t>> index_;
    std::vector<std::vector<std::uint8_t>> adjacency_;
};

enum class HomMode { Hom, Embedding, Iso };

std::string_view to_string(HomMode mode);
HomMode parse_hom_mode(std::string_view text);

/// Independent re-check of the defining property of `mode`.
bool is_hom(const FinStructure& source, const FinStructure& target, std::span<const int> map,
            HomMode mode = HomMode::Hom);

/// A map that has been checked to be a homomorphism (or embedding or
/// isomorphism) between two structures.
class Hom {
public:
    static Hom validated(const FinStructure& source, const FinStructure& target, std::vector<int> map,
                         HomMode mode = HomMode::Hom);

    const std::vector<int>& map() const { return map_; }
    int operator()(int x) const { return map_[x]; }
    std::size_t size() const { return map_.size(); }
    int target_size() const { return target_size_; }

    /// `second` after `first`.
    friend Hom compose(const Hom& first, const Hom& second);

    friend bool operator==(const Hom& a, const Hom& b) { return a.map_ == b.map_; }

private:
    Hom(std::vector<int> map, int target_size) : map_(std::move(map)), target_size_(target_size) {}
    std::vector<int> map_;
    int target_size_ = 0;
};

struct InducedSubstructure {
    FinStructure structure;
    std::vector<int> to_original;  // new id -> old id
};

InducedSubstructure induced_substructure(const FinStructure& s, std::span<const int> subset);
FinStructure disjoint_union(const FinStructure& s, const FinStructure& t);

/// Domain: d-tuples in lexicographic id order. Relation "R@j1,..,jk" (1-based
/// coordinates) holds on (t1..tk) iff R(t1[j1],..,tk[jk]); equality is
/// included as "=".
FinStructure full_power(const FinStructure& s, int d);

using Assignment = std::vector<std::pair<int, int>>;

std::optional<Hom> find_hom(const FinStructure& source, const FinStructure& target,
                            HomMode mode = HomMode::Hom, const Assignment& forced = {});

/// All endomorphisms in lexicographic order of their maps. Work is split by
/// the image of element 0 when threads > 1; the order does not depend on it.
std::vector<Hom> enumerate_endos(const FinStructure& s, std::optional<std::size_t> limit = std::nullopt,
                                 unsigned threads = 1);

struct CoreResult {
    FinStructure core;
    std::vector<int> elements;  // core id -> id in the input
    Hom retraction;             // input -> core ids; identity on `elements`
    bool was_core = false;
};

CoreResult compute_core(const FinStructure& s);
bool is_core(const FinStructure& s);

/// Lexicographically least encoding over all relabelings of the domain.
std::string canonical_form(const FinStructure& s, int bound = 10);

} // namespace orbitfin
