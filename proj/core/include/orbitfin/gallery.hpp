#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "orbitfin/definable.hpp"
#include "orbitfin/finstruct.hpp"

namespace orbitfin::gallery {

/// Increasing d-tuples over the dense order with the coordinate orders
/// <_ij and equalities =_ij between two points, for i, j < d.
DefStructure jord(int d);

/// (Q;<) as the one-dimensional case of `jord`.
DefStructure dlo();

/// Two-element subsets with E (meet in one atom) and N (disjoint).
DefStructure johnson();

/// Ordered pairs of distinct atoms with a Z4 tag, as eight sorts: tag m and
/// an orientation (increasing or decreasing pair). Relations R, E, N.
DefStructure build_X();

/// Sort index in build_X() for a tag and orientation.
int x_sort(int tag, bool increasing);

struct CoverData {
    DefStructure total;      // increasing pairs with a Z4 tag, one sort per tag
    DefStructure base;       // the Johnson structure
};
CoverData build_Y();

/// Projection of a total-structure sample onto a base sample over the same atoms.
std::vector<int> projection(const SampledStructure& total, const SampledStructure& base);

/// The homomorphism h on points: increasing pairs keep their tag, decreasing
/// pairs are turned around with the tag advanced by one.
Point hom_X_to_Y(const Point& p);

/// h as a map between samples over the same atoms.
std::vector<int> hom_X_to_Y_map(const SampledStructure& x, const SampledStructure& y);

/// Points are fiber-mates iff they are equal, R-adjacent either way, or joined
/// by an R-path of length two. Fiber-mates share all atoms, so the middle
/// point of such a path is always present in the sample.
bool kernel_check(const SampledStructure& total);

/// Map induced on the base sample by a map of the total sample.
Hom mu_pi(const SampledStructure& total, const SampledStructure& base, std::span<const int> map);

/// Rotate the tags of every fiber over a base vertex in `vertices` by k.
std::vector<int> flip(const SampledStructure& total, const std::set<std::vector<int>>& vertices, int k);

/// Lift of an atom permutation (given on sample indices) to the total sample.
std::vector<int> lift_atom_permutation(const SampledStructure& total, std::span<const int> alpha);

/// The same lift over build_X(): the presented pair is moved coordinatewise.
std::vector<int> lift_atom_permutation_X(const SampledStructure& x, std::span<const int> alpha);

/// Action of an atom permutation on the vertices of a Johnson sample.
std::vector<int> induced_base_map(const SampledStructure& base, std::span<const int> alpha);

struct InvolutionReport {
    std::size_t group_order = 0;
    std::size_t involutions = 0;
    bool all_commute = true;
    bool all_flips = true;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> non_commuting;
};

/// Closes lifts of atom permutations and exponent-2 flips under composition
/// and inspects the involutions of the resulting group.
InvolutionReport involution_commutation_check(int atoms, std::size_t budget = 500000);

/// The same procedure over build_X().
InvolutionReport involution_commutation_check_X(int atoms, std::size_t budget = 500000);

/// Domain {0..n-1} x {0,1,2}, element (i, c) has id 3i + c.
FinStructure build_spider(int n);
inline int spider_id(int i, int c) { return 3 * i + c; }

/// Map fixing U1 and U2 and sending U0 to the hub (0,0), into the spider itself.
std::vector<int> spider_collapse(int n);

DefStructure build_QST();
DefStructure build_QST_companion();
DefStructure build_S2();
DefStructure build_betw();

/// QST sample atoms realizing a companion sample over `atoms`: each atom as an
/// S point followed by a nearby T point.
AtomSample qst_atoms_for_companion(const AtomSample& atoms);

/// The embedding r -> (r,1) for r in S, (r,2) for r in T.
std::vector<int> qst_to_companion(const SampledStructure& qst, const SampledStructure& companion);

/// The embedding of a companion sample into the QST sample from `qst_atoms_for_companion`.
std::vector<int> companion_to_qst(const SampledStructure& companion, const SampledStructure& qst);

/// Cut a local-order sample at c, rebuild the order and labels, and check that
/// the linear order is total and that reversing the construction gives back
/// the original relation on the other points.
bool s2_cut_roundtrip(const FinStructure& s2, int c);

/// Pairs over Q^2 with both lexicographic orders: a diagonal sort and two
/// orientation sorts for the off-diagonal pairs.
DefStructure build_generic_perm_companion();

/// The presented pair (a, b) of a point of the companion above.
std::pair<Atom, Atom> perm_point(const SampledStructure& s, int id);

/// Two linear orders on {0..m-1}: the natural one and the one listing perm.
FinStructure two_orders(std::span<const int> perm);

struct PermInterpretation {
    FinStructure structure;                     // signature <, S, T
    std::vector<std::pair<int, int>> elements;  // (u, v) with u before v in the first order
};

/// Pairs u <1 v, ordered lexicographically by the first order; S when u <2 v
/// and T otherwise.
PermInterpretation interpret_qst_in_perm(const FinStructure& two_orders);

/// Strict total order check of a binary relation on all of the domain.
bool is_strict_total_order(const FinStructure& s, std::size_t r);

using Object = std::variant<DefStructure, FinStructure>;

struct Entry {
    std::string name;
    std::string kind;  // "definable" or "finite"
    std::string description;
    std::string reference;
};

std::vector<Entry> manifest();

/// Name lookup; accepts an optional "gallery:" prefix. Spiders are "spider<n>".
std::optional<Object> lookup(std::string_view name);

} // namespace orbitfin::gallery
