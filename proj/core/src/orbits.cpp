#include <algorithm>
#include <future>
#include <numeric>
#include <set>

#include "detail.hpp"
#include "orbitfin/definable.hpp"

namespace orbitfin {

namespace {

using PointPattern = std::pair<int, std::vector<int>>;

std::string encode(int support, const std::vector<int>& word, const std::vector<PointPattern>& points) {
    std::string s = "k=" + std::to_string(support) + "|w=" + detail::join(word) + "|";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(points[i].first) + ":" + detail::join(points[i].second);
    }
    return s;
}

// How a support permutation moves points, via sort families and orientations.
class PointAction {
public:
    explicit PointAction(const DefStructure& d) : d_(d) {
        for (std::size_t s = 0; s < d.sorts().size(); ++s) {
            orient_.push_back(d.sorts()[s].orientation_or_identity());
            family_[d.sorts()[s].family_name()].push_back(static_cast<int>(s));
        }
    }

    // nullopt when the family has no sort for the permuted orientation.
    std::optional<PointPattern> apply(const PointPattern& p, const std::vector<int>& pi) const {
        const auto& o = orient_[p.first];
        const int dim = static_cast<int>(o.size());
        std::vector<int> presented(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c) presented[c] = pi[p.second[o[c]]];
        std::vector<int> support = presented;
        std::sort(support.begin(), support.end());
        std::vector<int> want(static_cast<std::size_t>(dim));
        for (int c = 0; c < dim; ++c)
            want[c] = static_cast<int>(std::lower_bound(support.begin(), support.end(), presented[c]) - support.begin());
        const auto& members = family_.at(d_.sorts()[p.first].family_name());
        for (int s : members)
            if (orient_[s] == want) return PointPattern{s, std::move(support)};
        if (members.size() == 1) return PointPattern{p.first, std::move(support)};
        return std::nullopt;
    }

private:
    const DefStructure& d_;
    std::vector<std::vector<int>> orient_;
    std::map<std::string, std::vector<int>> family_;
};

struct Job {
    int support;
    std::vector<int> word;
};

int support_bound(const DefStructure& d, int n, const Limits& limits) {
    if (n < 0) throw Error(ErrorCode::InvalidDimension, "negative tuple size");
    const int k = n * d.max_dim();
    if (k > limits.atom_budget)
        throw Error(ErrorCode::TooLarge, "support of " + std::to_string(k) + " atoms exceeds the atom budget of " +
                                             std::to_string(limits.atom_budget));
    return k;
}

std::vector<Job> jobs(const DefStructure& d, int kmax) {
    std::vector<Job> out;
    for (int k = 0; k <= kmax; ++k)
        for (auto& w : detail::words(k, d.base().alphabet)) out.push_back({k, std::move(w)});
    return out;
}

// Every n-tuple (or strictly increasing n-tuple, for sets) of point patterns
// over [k] whose supports cover [k].
template <class F>
void for_each_pattern(const DefStructure& d, int n, int k, bool as_sets, F&& visit) {
    std::vector<PointPattern> options;
    for (std::size_t s = 0; s < d.sorts().size(); ++s)
        for (auto& c : detail::combinations(k, d.sorts()[s].dim)) options.emplace_back(static_cast<int>(s), std::move(c));
    const int dmax = d.max_dim();
    std::vector<int> cover(static_cast<std::size_t>(k), 0);
    int uncovered = k;
    std::vector<PointPattern> chosen;
    auto rec = [&](auto&& self, int slot, std::size_t from) -> void {
        if (uncovered > (n - slot) * dmax) return;
        if (slot == n) {
            visit(chosen);
            return;
        }
        for (std::size_t o = as_sets ? from : 0; o < options.size(); ++o) {
            for (int a : options[o].second)
                if (cover[a]++ == 0) --uncovered;
            chosen.push_back(options[o]);
            self(self, slot + 1, o + 1);
            chosen.pop_back();
            for (int a : options[o].second)
                if (--cover[a] == 0) ++uncovered;
        }
    };
    rec(rec, 0, 0);
}

std::string canonical_encoding(const DefStructure& d, const PointAction& action, int k, const std::vector<int>& word,
                               const std::vector<PointPattern>& points, bool as_sets) {
    if (d.base().ordered) {
        if (!as_sets) return encode(k, word, points);
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        return encode(k, word, sorted);
    }
    std::vector<int> pi(static_cast<std::size_t>(k));
    std::iota(pi.begin(), pi.end(), 0);
    std::string best;
    bool have = false;
    std::vector<PointPattern> moved(points.size());
    do {
        for (std::size_t i = 0; i < points.size(); ++i) {
            auto img = action.apply(points[i], pi);
            if (!img) throw Error(ErrorCode::Unsupported, "a sort family lacks an orientation needed by the pure-set action");
            moved[i] = std::move(*img);
        }
        if (as_sets) std::sort(moved.begin(), moved.end());
        std::string e = encode(k, word, moved);
        if (!have || e < best) {
            best = std::move(e);
            have = true;
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
}

OrbitDescriptor decode_descriptor(int k, const std::vector<int>& word, const std::string& enc) {
    std::vector<PointPattern> pts;
    const auto bar = enc.rfind('|');
    std::string body = enc.substr(bar + 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto end = body.find(';', pos);
        if (end == std::string::npos) end = body.size();
        std::string item = body.substr(pos, end - pos);
        auto colon = item.find(':');
        PointPattern p{std::stoi(item.substr(0, colon)), {}};
        std::string coords = item.substr(colon + 1);
        std::size_t q = 0;
        while (q < coords.size()) {
            auto c = coords.find(',', q);
            if (c == std::string::npos) c = coords.size();
            p.second.push_back(std::stoi(coords.substr(q, c - q)));
            q = c + 1;
        }
        pts.push_back(std::move(p));
        pos = end + 1;
    }
    return OrbitDescriptor(k, word, std::move(pts));
}

std::vector<OrbitDescriptor> orbits_impl(const DefStructure& d, int n, bool as_sets, const Limits& limits) {
    const int kmax = support_bound(d, n, limits);
    const PointAction action(d);
    std::map<std::string, OrbitDescriptor> found;
    for (const auto& job : jobs(d, kmax)) {
        std::set<std::string> local;
        for_each_pattern(d, n, job.support, as_sets, [&](const std::vector<PointPattern>& pts) {
            local.insert(canonical_encoding(d, action, job.support, job.word, pts, as_sets));
        });
        for (const auto& e : local) found.emplace(e, decode_descriptor(job.support, job.word, e));
    }
    std::vector<OrbitDescriptor> out;
    for (auto& [e, desc] : found) out.push_back(std::move(desc));
    return out;
}

template <class PerJob>
std::set<std::string> run_jobs(const std::vector<Job>& all, unsigned threads, PerJob&& per_job) {
    if (threads <= 1 || all.size() < 2) {
        std::set<std::string> acc;
        for (const auto& job : all) acc.merge(per_job(job));
        return acc;
    }
    std::vector<std::future<std::set<std::string>>> parts;
    for (unsigned t = 0; t < threads; ++t) {
        parts.push_back(std::async(std::launch::async, [&, t] {
            std::set<std::string> acc;
            for (std::size_t i = t; i < all.size(); i += threads) acc.merge(per_job(all[i]));
            return acc;
        }));
    }
    std::set<std::string> acc;
    for (auto& f : parts) acc.merge(f.get());
    return acc;
}

void check_growth_bound(int n, const Limits& limits) {
    if (n < 1) throw Error(ErrorCode::InvalidDimension, "growth needs n >= 1");
    if (n > limits.growth_bound)
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the growth bound " +
                                             std::to_string(limits.growth_bound));
}

// Canonical forms of every induced n-substructure, one sample per support pattern.
template <class Key>
std::size_t count_induced(const DefStructure& d, int n, const Limits& limits, Key&& key) {
    check_growth_bound(n, limits);
    const int kmax = support_bound(d, n, limits);
    const int bound = std::max(n, limits.canonical_bound);
    auto per_job = [&](const Job& job) {
        std::set<std::string> acc;
        const SampledStructure s = sample(d, make_sample(d.base(), job.support, job.word));
        std::vector<int> ids(static_cast<std::size_t>(n));
        for_each_pattern(d, n, job.support, true, [&](const std::vector<PointPattern>& pts) {
            for (int i = 0; i < n; ++i) ids[i] = *s.find(pts[i].first, pts[i].second);
            acc.insert(key(induced_substructure(s.structure, ids).structure, bound));
        });
        return acc;
    };
    return run_jobs(jobs(d, kmax), limits.threads, per_job).size();
}

} // namespace

OrbitDescriptor::OrbitDescriptor(int support, std::vector<int> word, std::vector<std::pair<int, std::vector<int>>> points)
    : support_(support), word_(std::move(word)), points_(std::move(points)),
      encoding_(encode(support_, word_, points_)) {}

std::vector<OrbitDescriptor> point_orbits(const DefStructure& d, int n, const Limits& limits) {
    return orbits_impl(d, n, false, limits);
}

std::vector<OrbitDescriptor> subset_orbits(const DefStructure& d, int n, const Limits& limits) {
    return orbits_impl(d, n, true, limits);
}

std::string_view to_string(GrowthMode mode) { return mode == GrowthMode::Base ? "base" : "homogeneous"; }

GrowthMode parse_growth_mode(std::string_view text) {
    if (text == "base") return GrowthMode::Base;
    if (text == "homogeneous") return GrowthMode::Homogeneous;
    throw Error(ErrorCode::ParseError, "unknown growth mode " + std::string(text));
}

std::size_t unlabelled_growth(const DefStructure& d, int n, GrowthMode mode, const Limits& limits) {
    if (mode == GrowthMode::Base) {
        check_growth_bound(n, limits);
        const int kmax = support_bound(d, n, limits);
        const PointAction action(d);
        auto per_job = [&](const Job& job) {
            std::set<std::string> acc;
            for_each_pattern(d, n, job.support, true, [&](const std::vector<PointPattern>& pts) {
                acc.insert(canonical_encoding(d, action, job.support, job.word, pts, true));
            });
            return acc;
        };
        return run_jobs(jobs(d, kmax), limits.threads, per_job).size();
    }
    return count_induced(d, n, limits, [](const FinStructure& s, int bound) { return canonical_form(s, bound); });
}

std::size_t growth_up_to_reversal(const DefStructure& d, int n, const Limits& limits) {
    const Signature& sig = d.signature();
    if (sig.size() != 1 || sig[0].arity != 2)
        throw Error(ErrorCode::SignatureMismatch, "growth up to reversal needs exactly one binary relation");
    return count_induced(d, n, limits, [](const FinStructure& s, int bound) {
        std::vector<Tuple> reversed;
        for (const auto& t : s.tuples(0)) reversed.push_back({t[1], t[0]});
        return std::min(canonical_form(s, bound), canonical_form(s.with_relation(0, std::move(reversed)), bound));
    });
}

bool requires_order(const DefStructure& d) {
    for (const auto& c : d.relations())
        if (uses_order(c.formula)) return true;
    const PointAction action(d);
    for (const auto& sym : d.signature().symbols()) {
        const int k = sym.arity * d.max_dim();
        const std::size_t r = *d.signature().index_of(sym.name);
        for (const auto& word : detail::words(k, d.base().alphabet)) {
            const SampledStructure s = sample(d, make_sample(d.base(), k, word));
            const FinStructure& f = s.structure;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    if (word[i] != word[j]) continue;
                    std::vector<int> pi(static_cast<std::size_t>(k));
                    std::iota(pi.begin(), pi.end(), 0);
                    std::swap(pi[i], pi[j]);
                    std::vector<int> image(f.size());
                    for (int p = 0; p < f.size(); ++p) {
                        auto moved = action.apply({s.point_sort[p], s.point_support[p]}, pi);
                        if (!moved) return true;
                        image[p] = *s.find(moved->first, moved->second);
                    }
                    std::vector<int> t(static_cast<std::size_t>(sym.arity));
                    for (const auto& tup : f.tuples(r)) {
                        for (int m = 0; m < sym.arity; ++m) t[m] = image[tup[m]];
                        if (!f.holds(r, t)) return true;
                    }
                }
        }
    }
    return false;
}

} // namespace orbitfin
