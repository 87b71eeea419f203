#include "orbitfin/formula.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace orbitfin {

struct Formula::Node {
    Kind kind = Kind::True;
    int i = 0, j = 0, l = 0;
    std::vector<Formula> args;
};

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
    static const auto n = std::make_shared<const Node>(Node{Kind::True, 0, 0, 0, {}});
    return Formula(n);
}

Formula Formula::bottom() {
    static const auto n = std::make_shared<const Node>(Node{Kind::False, 0, 0, 0, {}});
    return Formula(n);
}

Formula Formula::less(int i, int j) {
    return Formula(std::make_shared<const Node>(Node{Kind::Less, i, j, 0, {}}));
}

Formula Formula::eq(int i, int j) {
    return Formula(std::make_shared<const Node>(Node{Kind::Eq, i, j, 0, {}}));
}

Formula Formula::label(int i, int l) {
    return Formula(std::make_shared<const Node>(Node{Kind::Label, i, 0, l, {}}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, 0, 0, 0, {std::move(f)}}));
}

Formula Formula::conj(std::vector<Formula> args) {
    return Formula(std::make_shared<const Node>(Node{Kind::And, 0, 0, 0, std::move(args)}));
}

Formula Formula::disj(std::vector<Formula> args) {
    return Formula(std::make_shared<const Node>(Node{Kind::Or, 0, 0, 0, std::move(args)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }
int Formula::i() const { return node_->i; }
int Formula::j() const { return node_->j; }
int Formula::l() const { return node_->l; }
const std::vector<Formula>& Formula::args() const { return node_->args; }

bool Formula::is_atomic() const {
    auto k = kind();
    return k == Kind::Less || k == Kind::Eq || k == Kind::Label;
}

int Formula::max_position() const {
    switch (kind()) {
    case Kind::Less:
    case Kind::Eq: return std::max(i(), j());
    case Kind::Label: return i();
    case Kind::True:
    case Kind::False: return -1;
    default: {
        int m = -1;
        for (const auto& a : args()) m = std::max(m, a.max_position());
        return m;
    }
    }
}

int Formula::max_label() const {
    switch (kind()) {
    case Kind::Label: return l();
    case Kind::Not:
    case Kind::And:
    case Kind::Or: {
        int m = -1;
        for (const auto& a : args()) m = std::max(m, a.max_label());
        return m;
    }
    default: return -1;
    }
}

Formula Formula::remap(std::span<const int> map) const {
    auto at = [&](int p) {
        if (p < 0 || static_cast<std::size_t>(p) >= map.size())
            throw Error(ErrorCode::ArityMismatch, "remap: position " + std::to_string(p) + " unmapped");
        return map[p];
    };
    switch (kind()) {
    case Kind::Less: return less(at(i()), at(j()));
    case Kind::Eq: return eq(at(i()), at(j()));
    case Kind::Label: return label(at(i()), l());
    case Kind::True:
    case Kind::False: return *this;
    default: {
        std::vector<Formula> out;
        out.reserve(args().size());
        for (const auto& a : args()) out.push_back(a.remap(map));
        if (kind() == Kind::Not) return negation(out[0]);
        return kind() == Kind::And ? conj(std::move(out)) : disj(std::move(out));
    }
    }
}

std::string Formula::to_string() const {
    switch (kind()) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Less: return "x" + std::to_string(i()) + "<x" + std::to_string(j());
    case Kind::Eq: return "x" + std::to_string(i()) + "=x" + std::to_string(j());
    case Kind::Label: return "L" + std::to_string(l()) + "(x" + std::to_string(i()) + ")";
    case Kind::Not: return "!" + args()[0].to_string();
    default: {
        if (args().empty()) return kind() == Kind::And ? "true" : "false";
        std::string s = "(";
        for (std::size_t k = 0; k < args().size(); ++k) {
            if (k) s += kind() == Kind::And ? " & " : " | ";
            s += args()[k].to_string();
        }
        return s + ")";
    }
    }
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Less:
    case Formula::Kind::Eq: return a.i() == b.i() && a.j() == b.j();
    case Formula::Kind::Label: return a.i() == b.i() && a.l() == b.l();
    default: return a.args() == b.args();
    }
}

void check_formula(const Formula& f, int positions, const AtomBase& base) {
    if (f.max_position() >= positions)
        throw Error(ErrorCode::ArityMismatch, "formula uses position " + std::to_string(f.max_position()) +
                                                  " but only " + std::to_string(positions) +
                                                  " are available");
    if (!base.ordered && uses_order(f))
        throw Error(ErrorCode::OrderNotAvailable, "order atomic over an unordered base");
    if (f.max_label() >= base.alphabet)
        throw Error(ErrorCode::InvalidLabel, "label " + std::to_string(f.max_label()) +
                                                 " outside alphabet of " + to_string(base));
}

bool eval_keys(const Formula& f, std::span<const int> keys, std::span<const int> labels) {
    switch (f.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::Less: return keys[f.i()] < keys[f.j()];
    case Formula::Kind::Eq: return keys[f.i()] == keys[f.j()];
    case Formula::Kind::Label: return labels[f.i()] == f.l();
    case Formula::Kind::Not: return !eval_keys(f.args()[0], keys, labels);
    case Formula::Kind::And:
        for (const auto& a : f.args())
            if (!eval_keys(a, keys, labels)) return false;
        return true;
    case Formula::Kind::Or:
        for (const auto& a : f.args())
            if (eval_keys(a, keys, labels)) return true;
        return false;
    }
    return false;
}

bool eval(const Formula& f, std::span<const Atom> env, const AtomBase& base) {
    check_formula(f, static_cast<int>(env.size()), base);
    std::vector<Atom> distinct(env.begin(), env.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> keys(env.size()), labels(env.size());
    for (std::size_t p = 0; p < env.size(); ++p) {
        keys[p] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), env[p]) -
                                   distinct.begin());
        labels[p] = env[p].label();
    }
    return eval_keys(f, keys, labels);
}

bool uses_order(const Formula& f) {
    if (f.kind() == Formula::Kind::Less) return true;
    for (const auto& a : f.args())
        if (uses_order(a)) return true;
    return false;
}

namespace {

// Literal ordering: Less before Eq before Label, then positions, then sign.
struct Literal {
    int kind;  // 0 Less, 1 Eq, 2 Label
    int i, j, l;
    bool negated;

    auto key() const { return std::tie(kind, i, j, l, negated); }
    friend bool operator<(const Literal& a, const Literal& b) { return a.key() < b.key(); }
    friend bool operator==(const Literal& a, const Literal& b) { return a.key() == b.key(); }

    Formula to_formula() const {
        Formula atom = kind == 0 ? Formula::less(i, j) : kind == 1 ? Formula::eq(i, j) : Formula::label(i, l);
        return negated ? !atom : atom;
    }
};

using Clause = std::set<Literal>;
using Dnf = std::set<Clause>;

Dnf dnf_true() { return Dnf{Clause{}}; }
Dnf dnf_false() { return Dnf{}; }

// Clause with both L and !L is unsatisfiable.
bool consistent(const Clause& c) {
    for (const auto& lit : c) {
        Literal flipped = lit;
        flipped.negated = !lit.negated;
        if (c.count(flipped)) return false;
    }
    return true;
}

Dnf literal_dnf(const Formula& atom, bool negated) {
    Literal lit{};
    lit.negated = negated;
    switch (atom.kind()) {
    case Formula::Kind::Less:
        if (atom.i() == atom.j()) return negated ? dnf_true() : dnf_false();
        lit.kind = 0;
        lit.i = atom.i();
        lit.j = atom.j();
        break;
    case Formula::Kind::Eq:
        if (atom.i() == atom.j()) return negated ? dnf_false() : dnf_true();
        lit.kind = 1;
        lit.i = std::min(atom.i(), atom.j());
        lit.j = std::max(atom.i(), atom.j());
        break;
    default:
        lit.kind = 2;
        lit.i = atom.i();
        lit.l = atom.l();
        break;
    }
    return Dnf{Clause{lit}};
}

Dnf dnf_or(Dnf a, const Dnf& b) {
    a.insert(b.begin(), b.end());
    return a;
}

Dnf dnf_and(const Dnf& a, const Dnf& b) {
    Dnf out;
    for (const auto& ca : a)
        for (const auto& cb : b) {
            Clause c = ca;
            c.insert(cb.begin(), cb.end());
            if (consistent(c)) out.insert(std::move(c));
        }
    return out;
}

Dnf to_dnf(const Formula& f, bool negated) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: return negated ? dnf_false() : dnf_true();
    case K::False: return negated ? dnf_true() : dnf_false();
    case K::Less:
    case K::Eq:
    case K::Label: return literal_dnf(f, negated);
    case K::Not: return to_dnf(f.args()[0], !negated);
    case K::And:
    case K::Or: {
        // De Morgan: a negated conjunction is a disjunction of negations.
        bool as_and = (f.kind() == K::And) != negated;
        Dnf acc = as_and ? dnf_true() : dnf_false();
        for (const auto& a : f.args()) {
            Dnf d = to_dnf(a, negated);
            acc = as_and ? dnf_and(acc, d) : dnf_or(std::move(acc), d);
        }
        return acc;
    }
    }
    return dnf_false();
}

} // namespace

Formula normalize(const Formula& f) {
    Dnf d = to_dnf(f, false);
    if (d.empty()) return Formula::bottom();
    if (d.count(Clause{})) return Formula::top();
    std::vector<Formula> clauses;
    for (const auto& c : d) {
        std::vector<Formula> lits;
        for (const auto& lit : c) lits.push_back(lit.to_formula());
        clauses.push_back(lits.size() == 1 ? lits[0] : Formula::conj(std::move(lits)));
    }
    return clauses.size() == 1 ? clauses[0] : Formula::disj(std::move(clauses));
}

} // namespace orbitfin
