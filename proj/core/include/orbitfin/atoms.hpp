#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitfin/error.hpp"

namespace orbitfin {

using Rational = mpq_class;

/// The homogeneous structure atoms are drawn from: (Q;=), (Q;<), or (Q;<)
/// with a generic partition into `alphabet` dense label classes.
struct AtomBase {
    bool ordered = true;
    int alphabet = 1;

    static AtomBase pure_set() { return {false, 1}; }
    static AtomBase dlo() { return {true, 1}; }
    static AtomBase labeled_dlo(int k) { return {true, k}; }

    bool labeled() const { return alphabet > 1; }
    void validate() const;

    friend bool operator==(const AtomBase&, const AtomBase&) = default;
};

std::string to_string(const AtomBase& base);

/// An exact rational with a label. Value and label compare independently:
/// `operator<=>` orders by value only, `same_as` checks both.
class Atom {
public:
    Atom() = default;
    explicit Atom(Rational value, int label = 0);
    Atom(long value, int label) : Atom(Rational(value), label) {}

    const Rational& value() const { return value_; }
    int label() const { return label_; }

    bool same_as(const Atom& other) const { return value_ == other.value_ && label_ == other.label_; }

    friend bool operator==(const Atom& a, const Atom& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    Rational value_{0};
    int label_ = 0;
};

/// "num/den", an integer string, optionally followed by ":label".
std::string format_atom(const Atom& atom, bool with_label);
Atom parse_atom(const std::string& text);

/// A finite stand-in for Q: distinct values, kept sorted ascending by value.
class AtomSample {
public:
    AtomSample() = default;
    AtomSample(AtomBase base, std::vector<Atom> atoms);

    const AtomBase& base() const { return base_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    const Atom& operator[](std::size_t i) const { return atoms_[i]; }

    /// Index of the atom with this value, if present.
    std::optional<std::size_t> index_of(const Rational& value) const;

    /// Sub-sample made of the atoms at the given (ascending or not) indices.
    AtomSample subset(std::span<const std::size_t> indices) const;

private:
    AtomBase base_;
    std::vector<Atom> atoms_;
};

/// Atoms 0..n-1. Without explicit labels, labels cycle 0,1,..,k-1,0,...
AtomSample make_sample(const AtomBase& base, std::size_t n,
                       const std::optional<std::vector<int>>& labels = std::nullopt);

/// Canonical orbit descriptor of a tuple: dense value ranks (or
/// first-occurrence equality classes on an unordered base) plus labels.
class TypeDescriptor {
public:
    TypeDescriptor() = default;
    TypeDescriptor(bool ordered, std::vector<int> ranks, std::vector<int> labels);

    bool ordered() const { return ordered_; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::vector<int>& labels() const { return labels_; }
    std::size_t arity() const { return ranks_.size(); }

    /// Stable machine encoding, e.g. "ord:0,1,1|lab:0,0,0".
    const std::string& encoding() const { return encoding_; }
    /// Readable form listing the relation between every coordinate pair.
    std::string pattern() const;

    static TypeDescriptor decode(const std::string& encoding);

    friend bool operator==(const TypeDescriptor& a, const TypeDescriptor& b) {
        return a.encoding_ == b.encoding_;
    }
    friend auto operator<=>(const TypeDescriptor& a, const TypeDescriptor& b) {
        return a.encoding_ <=> b.encoding_;
    }

private:
    bool ordered_ = true;
    std::vector<int> ranks_;
    std::vector<int> labels_;
    std::string encoding_;
};

TypeDescriptor order_type(std::span<const Atom> tuple, const AtomBase& base);

/// Descriptor for a tuple already given by integer keys (sample indices).
TypeDescriptor order_type_of_keys(std::span<const int> keys, std::span<const int> labels,
                                  bool ordered);

/// Midpoint of (a, b), carrying `label`.
Atom insert_between(const Atom& a, const Atom& b, int label = 0);

} // namespace orbitfin
