#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "orbitfin/atoms.hpp"

namespace orbitfin {

/// Quantifier-free formula over flat coordinate positions. A relation between
/// k points of dimensions d_1..d_k sees positions 0..(d_1+..+d_k)-1, laid out
/// argument after argument.
class Formula {
public:
    enum class Kind { True, False, Less, Eq, Label, Not, And, Or };

    Formula();  // True

    static Formula top();
    static Formula bottom();
    static Formula less(int i, int j);
    static Formula eq(int i, int j);
    static Formula label(int i, int l);
    static Formula negation(Formula f);
    static Formula conj(std::vector<Formula> args);
    static Formula disj(std::vector<Formula> args);

    Kind kind() const;
    int i() const;
    int j() const;
    int l() const;
    const std::vector<Formula>& args() const;

    bool is_atomic() const;
    /// Largest position index used, or -1.
    int max_position() const;
    /// Largest label index used, or -1.
    int max_label() const;

    /// Rename positions: position p becomes map[p].
    Formula remap(std::span<const int> map) const;

    std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&&(Formula a, Formula b) { return Formula::conj({std::move(a), std::move(b)}); }
inline Formula operator||(Formula a, Formula b) { return Formula::disj({std::move(a), std::move(b)}); }

/// Checked evaluation on concrete atoms.
bool eval(const Formula& f, std::span<const Atom> env, const AtomBase& base);

/// Unchecked evaluation where each position carries an integer key whose
/// order and equality mirror the atoms' values.
bool eval_keys(const Formula& f, std::span<const int> keys, std::span<const int> labels);

/// Validation shared by eval and structure construction.
void check_formula(const Formula& f, int positions, const AtomBase& base);

bool uses_order(const Formula& f);

/// Disjunctive normal form over sorted literals; semantically equivalent.
Formula normalize(const Formula& f);

} // namespace orbitfin
