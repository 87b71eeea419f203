#include "orbitfin/atoms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbitfin {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::NotAnInterval: return "NotAnInterval";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::OrderNotAvailable: return "OrderNotAvailable";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::KernelViolation: return "KernelViolation";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

void AtomBase::validate() const {
    if (alphabet < 1)
        throw Error(ErrorCode::InvalidLabel, "alphabet size must be at least 1");
    if (!ordered && alphabet != 1)
        throw Error(ErrorCode::Unsupported, "labeled atoms require an ordered base");
}

std::string to_string(const AtomBase& base) {
    if (!base.ordered) return "PureSet";
    if (base.alphabet == 1) return "DLO";
    return "LabeledDLO(" + std::to_string(base.alphabet) + ")";
}

Atom::Atom(Rational value, int label) : value_(std::move(value)), label_(label) {
    value_.canonicalize();
    if (label_ < 0) throw Error(ErrorCode::InvalidLabel, "negative label");
}

std::string format_atom(const Atom& atom, bool with_label) {
    std::string s = atom.value().get_str();
    if (with_label) s += ":" + std::to_string(atom.label());
    return s;
}

Atom parse_atom(const std::string& text) {
    std::string value_part = text;
    int label = 0;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        value_part = text.substr(0, colon);
        const std::string lab = text.substr(colon + 1);
        if (lab.empty() || !std::all_of(lab.begin(), lab.end(), ::isdigit))
            throw Error(ErrorCode::ParseError, "bad atom label in '" + text + "'");
        label = std::stoi(lab);
    }
    Rational q;
    if (value_part.empty() || q.set_str(value_part, 10) != 0)
        throw Error(ErrorCode::ParseError, "bad atom value '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Atom(std::move(q), label);
}

AtomSample::AtomSample(AtomBase base, std::vector<Atom> atoms)
    : base_(base), atoms_(std::move(atoms)) {
    base_.validate();
    for (const auto& a : atoms_)
        if (a.label() >= base_.alphabet)
            throw Error(ErrorCode::InvalidLabel,
                        "label " + std::to_string(a.label()) + " outside alphabet of " +
                            to_string(base_));
    std::sort(atoms_.begin(), atoms_.end());
    if (std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end())
        throw Error(ErrorCode::InvalidElement, "duplicate atom values in sample");
}

std::optional<std::size_t> AtomSample::index_of(const Rational& value) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), Atom(value, 0));
    if (it == atoms_.end() || it->value() != value) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
}

AtomSample AtomSample::subset(std::span<const std::size_t> indices) const {
    std::vector<Atom> chosen;
    chosen.reserve(indices.size());
    for (auto i : indices) {
        if (i >= atoms_.size()) throw Error(ErrorCode::InvalidElement, "atom index out of range");
        chosen.push_back(atoms_[i]);
    }
    return AtomSample(base_, std::move(chosen));
}

AtomSample make_sample(const AtomBase& base, std::size_t n,
                       const std::optional<std::vector<int>>& labels) {
    base.validate();
    if (labels && labels->size() != n)
        throw Error(ErrorCode::InvalidLabel, "label sequence length differs from sample size");
    std::vector<Atom> atoms;
    atoms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        int label = labels ? (*labels)[i] : static_cast<int>(i % base.alphabet);
        if (label < 0 || label >= base.alphabet)
            throw Error(ErrorCode::InvalidLabel, "label " + std::to_string(label) + " out of range");
        atoms.emplace_back(Rational(static_cast<long>(i)), label);
    }
    return AtomSample(base, std::move(atoms));
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

} // namespace

TypeDescriptor::TypeDescriptor(bool ordered, std::vector<int> ranks, std::vector<int> labels)
    : ordered_(ordered), ranks_(std::move(ranks)), labels_(std::move(labels)) {
    encoding_ = std::string(ordered_ ? "ord:" : "eq:") + join(ranks_);
    encoding_ += "|lab:" + join(labels_);
}

std::string TypeDescriptor::pattern() const {
    if (ranks_.size() < 2) return ranks_.empty() ? "()" : "x1";
    std::string s;
    for (std::size_t i = 0; i < ranks_.size(); ++i)
        for (std::size_t j = i + 1; j < ranks_.size(); ++j) {
            if (!s.empty()) s += ", ";
            char rel = '=';
            if (ranks_[i] != ranks_[j]) rel = ordered_ ? (ranks_[i] < ranks_[j] ? '<' : '>') : '#';
            s += "x" + std::to_string(i + 1) + (rel == '#' ? std::string("!=") : std::string(1, rel)) +
                 "x" + std::to_string(j + 1);
        }
    return s;
}

TypeDescriptor TypeDescriptor::decode(const std::string& encoding) {
    bool ordered;
    std::size_t start;
    if (encoding.rfind("ord:", 0) == 0) {
        ordered = true;
        start = 4;
    } else if (encoding.rfind("eq:", 0) == 0) {
        ordered = false;
        start = 3;
    } else {
        throw Error(ErrorCode::ParseError, "bad type descriptor '" + encoding + "'");
    }
    auto bar = encoding.find("|lab:", start);
    if (bar == std::string::npos) throw Error(ErrorCode::ParseError, "bad type descriptor '" + encoding + "'");
    TypeDescriptor t(ordered, split_ints(encoding.substr(start, bar - start)),
                     split_ints(encoding.substr(bar + 5)));
    if (t.ranks_.size() != t.labels_.size())
        throw Error(ErrorCode::ParseError, "rank/label length mismatch in '" + encoding + "'");
    return t;
}

TypeDescriptor order_type_of_keys(std::span<const int> keys, std::span<const int> labels,
                                  bool ordered) {
    std::vector<int> ranks(keys.size());
    if (ordered) {
        std::vector<int> sorted(keys.begin(), keys.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < keys.size(); ++i)
            ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                        sorted.begin());
    } else {
        std::map<int, int> first_seen;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            auto [it, inserted] = first_seen.emplace(keys[i], static_cast<int>(first_seen.size()));
            ranks[i] = it->second;
        }
    }
    return TypeDescriptor(ordered, std::move(ranks), std::vector<int>(labels.begin(), labels.end()));
}

TypeDescriptor order_type(std::span<const Atom> tuple, const AtomBase& base) {
    std::vector<Atom> distinct(tuple.begin(), tuple.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> keys(tuple.size()), labels(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        keys[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), tuple[i]) -
                                   distinct.begin());
        labels[i] = base.labeled() ? tuple[i].label() : 0;
    }
    return order_type_of_keys(keys, labels, base.ordered);
}

Atom insert_between(const Atom& a, const Atom& b, int label) {
    if (!(a < b)) throw Error(ErrorCode::NotAnInterval, "insert_between needs a < b");
    Rational mid = (a.value() + b.value()) / 2;
    return Atom(std::move(mid), label);
}

} // namespace orbitfin
