#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitfin/atoms.hpp"
#include "orbitfin/finstruct.hpp"
#include "orbitfin/formula.hpp"

namespace orbitfin {

/// A sort of points: strictly increasing `dim`-tuples of atoms. Sorts in the
/// same `family` present the same kind of element; `orientation` says which
/// stored coordinate each presented coordinate reads, so a family holding
/// every orientation of a dimension-2 sort presents all injective pairs.
struct Sort {
    std::string name;
    int dim = 0;
    std::string family;            // empty: the sort is its own family
    std::vector<int> orientation;  // empty: identity

    const std::string& family_name() const { return family.empty() ? name : family; }
    std::vector<int> orientation_or_identity() const;
};

/// One clause of a relation: tuples whose sorts match `guard` (nullopt is a
/// wildcard) and whose concatenated coordinates satisfy `formula`. Several
/// clauses with the same name form one relation.
struct RelationClause {
    std::string name;
    int arity = 0;
    std::vector<std::optional<int>> guard;
    Formula formula;
};

struct Limits {
    int atom_budget = 12;
    int growth_bound = 8;
    int canonical_bound = 10;
    unsigned threads = 1;
};

/// Orbit-finite structure over an atom base, given by sorts and
/// quantifier-free clauses over point coordinates.
class DefStructure {
public:
    DefStructure() = default;
    DefStructure(AtomBase base, std::vector<Sort> sorts, std::vector<RelationClause> relations);

    const AtomBase& base() const { return base_; }
    const std::vector<Sort>& sorts() const { return sorts_; }
    const std::vector<RelationClause>& relations() const { return relations_; }
    const Signature& signature() const { return signature_; }
    std::optional<int> sort_index(const std::string& name) const;
    int max_dim() const;

private:
    AtomBase base_;
    std::vector<Sort> sorts_;
    std::vector<RelationClause> relations_;
    Signature signature_;
};

struct Point {
    int sort = 0;
    std::vector<Atom> atoms;
};

/// A finite sample of a DefStructure together with its point table. Ids are
/// ordered by sort, then lexicographically by support.
struct SampledStructure {
    FinStructure structure;
    AtomSample atoms;
    std::vector<int> point_sort;
    std::vector<std::vector<int>> point_support;  // ascending indices into `atoms`

    std::size_t size() const { return point_sort.size(); }
    Point point(int id) const;
    std::optional<int> find(int sort, std::span<const int> support) const;

    std::map<std::pair<int, std::vector<int>>, int> lookup;
};

SampledStructure sample(const DefStructure& d, const AtomSample& atoms);

DefStructure reduct(const DefStructure& d, std::vector<RelationClause> relations);
DefStructure disjoint_union_def(const DefStructure& a, const DefStructure& b);

/// Full power over an ordered base: one sort per orbit of d-tuples of
/// points, stored as the increasing list of the atoms the tuple mentions.
/// Relation names match `full_power` on samples.
DefStructure full_power_def(const DefStructure& d, int power, const Limits& limits = {});

/// For a power sort: stored index (into its support) of coordinate c of
/// tuple entry t. Exposed for cross-checking samples against `full_power`.
struct PowerSortLayout {
    std::vector<std::vector<int>> entry_support;  // per tuple entry: indices into the power point's support
};
std::vector<PowerSortLayout> power_layouts(const DefStructure& d, int power, const Limits& limits = {});

/// An orbit of tuples (or, for growth, sets) of points under Aut(base):
/// support size, label word over the support, and each point's sort and
/// support indices.
class OrbitDescriptor {
public:
    OrbitDescriptor(int support, std::vector<int> word, std::vector<std::pair<int, std::vector<int>>> points);

    int support() const { return support_; }
    const std::vector<int>& word() const { return word_; }
    const std::vector<std::pair<int, std::vector<int>>>& points() const { return points_; }
    const std::string& encoding() const { return encoding_; }

    friend bool operator==(const OrbitDescriptor& a, const OrbitDescriptor& b) { return a.encoding_ == b.encoding_; }
    friend auto operator<=>(const OrbitDescriptor& a, const OrbitDescriptor& b) { return a.encoding_ <=> b.encoding_; }

private:
    int support_;
    std::vector<int> word_;
    std::vector<std::pair<int, std::vector<int>>> points_;
    std::string encoding_;
};

/// Orbits of n-tuples of points, sorted by encoding.
std::vector<OrbitDescriptor> point_orbits(const DefStructure& d, int n, const Limits& limits = {});

/// Orbits of n-element sets of points, sorted by encoding.
std::vector<OrbitDescriptor> subset_orbits(const DefStructure& d, int n, const Limits& limits = {});

enum class GrowthMode { Base, Homogeneous };

std::string_view to_string(GrowthMode mode);
GrowthMode parse_growth_mode(std::string_view text);

/// Unlabelled growth: Base counts orbits of n-sets under Aut(base);
/// Homogeneous counts isomorphism types of induced n-substructures, which is
/// the orbit count when the caller knows the structure is homogeneous.
std::size_t unlabelled_growth(const DefStructure& d, int n, GrowthMode mode, const Limits& limits = {});

/// Isomorphism types of induced n-substructures, identifying each type with
/// the type of its converse. Needs exactly one relation, binary.
std::size_t growth_up_to_reversal(const DefStructure& d, int n, const Limits& limits = {});

/// True when the structure is not visibly definable over equality: some
/// formula compares by order, or some relation is not invariant under
/// arbitrary (label-preserving) permutations of the atoms.
bool requires_order(const DefStructure& d);

/// A union of orbits of pairs of distinct points.
struct InvariantOrder {
    std::vector<std::string> orbits;  // encodings, sorted

    friend bool operator==(const InvariantOrder&, const InvariantOrder&) = default;
    friend auto operator<=>(const InvariantOrder&, const InvariantOrder&) = default;
};

/// All Aut(base)-invariant strict total orders on the points of a
/// single-sort structure over an ordered base.
std::vector<InvariantOrder> enumerate_invariant_orders(const DefStructure& d, const Limits& limits = {});

/// Compare coordinates sigma[0], sigma[1], ... in turn; the first that differs
/// decides, ascending or descending as given.
struct SignedLex {
    std::vector<int> sigma;
    std::vector<bool> ascending;

    std::string to_string() const;
    friend bool operator==(const SignedLex&, const SignedLex&) = default;
};

bool signed_lex_less(const SignedLex& lex, std::span<const int> a, std::span<const int> b);
std::vector<SignedLex> all_signed_lex(int dim);
InvariantOrder signed_lex_order(const SignedLex& lex, const DefStructure& d, const Limits& limits = {});
std::optional<SignedLex> classify_signed_lex(const InvariantOrder& order, const DefStructure& d,
                                             const Limits& limits = {});

/// Membership of a pair orbit in an order, evaluated on concrete points.
bool order_holds(const InvariantOrder& order, const SampledStructure& s, int p, int q);

} // namespace orbitfin
