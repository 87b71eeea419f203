#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <future>
#include <map>

#include "orbitfin/finstruct.hpp"

namespace orbitfin {

namespace {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n, bool full = false) : n_(n), words_((n + 63) / 64, full ? ~std::uint64_t{0} : 0) {
        if (full && n % 64) words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    // Returns true if anything was removed.
    bool and_with(const Bitset& o) {
        bool changed = false;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k] & o.words_[k];
            changed |= w != words_[k];
            words_[k] = w;
        }
        return changed;
    }
    Bitset complement() const {
        Bitset c(n_, true);
        for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] &= ~words_[k];
        return c;
    }
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(k * 64 + b));
                w &= w - 1;
            }
        }
    }
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
        return -1;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Support rows for one direction of a binary constraint: rows[v] is the set
// of target values compatible with v.
using Rows = std::vector<Bitset>;

struct Arc {
    int x, y;           // revise D(x) against D(y)
    const Rows* rows;
};

// Tuple of a relation of arity >= 3 touching a variable.
struct WideTuple {
    std::size_t relation;
    const Tuple* tuple;
};

class HomSearch {
public:
    HomSearch(const FinStructure& s, const FinStructure& t, HomMode mode, bool static_order)
        : s_(s), t_(t), mode_(mode), static_order_(static_order), n_(s.size()), m_(t.size()) {
        build();
    }

    // Calls `emit` for each solution until it returns false.
    void run(const Assignment& forced, const std::function<bool(const std::vector<int>&)>& emit) {
        if (impossible_) return;
        std::vector<Bitset> domains = initial_;
        for (auto [x, v] : forced) {
            if (x < 0 || x >= n_ || v < 0 || v >= m_) return;
            Bitset single(m_);
            if (domains[x].test(v)) single.set(v);
            domains[x] = single;
            if (single.count() == 0) return;
        }
        std::vector<int> assignment(n_, -1);
        emit_ = &emit;
        stop_ = false;
        std::vector<int> changed(n_);
        for (int x = 0; x < n_; ++x) changed[x] = x;
        if (!propagate(domains, changed)) return;
        search(domains, assignment, 0);
    }

private:
    void build() {
        if (s_.signature() != t_.signature()) throw Error(ErrorCode::SignatureMismatch, "hom search between different signatures");
        const bool strong = mode_ != HomMode::Hom;
        if (mode_ == HomMode::Iso && n_ != m_) impossible_ = true;
        if (strong && n_ > m_) impossible_ = true;
        initial_.assign(n_, Bitset(m_, true));
        wide_.resize(n_);
        const auto& sig = s_.signature();
        rows_.reserve(sig.size() * 4);
        for (std::size_t r = 0; r < sig.size(); ++r) {
            const int k = sig[r].arity;
            if (k == 1) {
                Bitset in(m_);
                for (const auto& t : t_.tuples(r)) in.set(t[0]);
                Bitset out = in.complement();
                std::vector<char> member(n_, 0);
                for (const auto& t : s_.tuples(r)) member[t[0]] = 1;
                for (int x = 0; x < n_; ++x) {
                    if (member[x]) initial_[x].and_with(in);
                    else if (strong) initial_[x].and_with(out);
                }
            } else if (k == 2) {
                Rows& fwd = rows_.emplace_back(m_, Bitset(m_));
                Rows& bwd = rows_.emplace_back(m_, Bitset(m_));
                Bitset loops(m_);
                for (const auto& t : t_.tuples(r)) {
                    fwd[t[0]].set(t[1]);
                    bwd[t[1]].set(t[0]);
                    if (t[0] == t[1]) loops.set(t[0]);
                }
                const Rows* nfwd = nullptr;
                const Rows* nbwd = nullptr;
                if (strong) {
                    Rows& cf = rows_.emplace_back();
                    Rows& cb = rows_.emplace_back();
                    for (int v = 0; v < m_; ++v) {
                        cf.push_back(fwd[v].complement());
                        cb.push_back(bwd[v].complement());
                    }
                    nfwd = &cf;
                    nbwd = &cb;
                }
                for (int x = 0; x < n_; ++x) {
                    if (s_.holds2(r, x, x)) initial_[x].and_with(loops);
                    else if (strong) initial_[x].and_with(loops.complement());
                }
                for (int x = 0; x < n_; ++x)
                    for (int y = 0; y < n_; ++y) {
                        if (x == y) continue;
                        if (s_.holds2(r, x, y)) {
                            add_arc(x, y, &fwd);
                            add_arc(y, x, &bwd);
                        } else if (strong) {
                            add_arc(x, y, nfwd);
                            add_arc(y, x, nbwd);
                        }
                    }
            } else {
                for (const auto& t : s_.tuples(r)) {
                    std::vector<int> vars(t.begin(), t.end());
                    std::sort(vars.begin(), vars.end());
                    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
                    for (int x : vars) wide_[x].push_back({r, &t});
                }
                if (strong) wide_reflect_.push_back(r);
            }
        }
        incoming_.resize(n_);
        for (std::size_t a = 0; a < arcs_.size(); ++a) incoming_[arcs_[a].y].push_back(a);
        for (const auto& d : initial_)
            if (d.count() == 0) impossible_ = true;
    }

    void add_arc(int x, int y, const Rows* rows) { arcs_.push_back({x, y, rows}); }

    // AC-3 over binary arcs, starting from variables whose domain changed.
    bool propagate(std::vector<Bitset>& d, std::vector<int> queue) {
        std::vector<char> queued(n_, 0);
        for (int x : queue) queued[x] = 1;
        while (!queue.empty()) {
            int y = queue.back();
            queue.pop_back();
            queued[y] = 0;
            for (auto a : incoming_[y]) {
                const Arc& arc = arcs_[a];
                Bitset& dx = d[arc.x];
                bool removed = false;
                Bitset keep(m_);
                dx.for_each([&](int v) {
                    if ((*arc.rows)[v].intersects(d[y])) keep.set(v);
                    else removed = true;
                });
                if (removed) {
                    dx = keep;
                    if (dx.count() == 0) return false;
                    if (!queued[arc.x]) {
                        queued[arc.x] = 1;
                        queue.push_back(arc.x);
                    }
                }
            }
        }
        return true;
    }

    // Checks and forward-prunes relations of arity >= 3 after assigning x.
    bool check_wide(std::vector<Bitset>& d, const std::vector<int>& a, int x, std::vector<int>& changed) {
        Tuple image;
        for (const auto& wt : wide_[x]) {
            const Tuple& t = *wt.tuple;
            int unassigned = -1;
            bool several = false;
            for (int y : t)
                if (a[y] < 0) {
                    if (unassigned >= 0 && unassigned != y) several = true;
                    unassigned = y;
                }
            if (several) continue;
            image.resize(t.size());
            if (unassigned < 0) {
                for (std::size_t p = 0; p < t.size(); ++p) image[p] = a[t[p]];
                if (!t_.holds(wt.relation, image)) return false;
                continue;
            }
            Bitset keep(m_);
            d[unassigned].for_each([&](int w) {
                for (std::size_t p = 0; p < t.size(); ++p) image[p] = t[p] == unassigned ? w : a[t[p]];
                if (t_.holds(wt.relation, image)) keep.set(w);
            });
            if (d[unassigned].and_with(keep)) {
                if (d[unassigned].count() == 0) return false;
                changed.push_back(unassigned);
            }
        }
        if (wide_reflect_.empty()) return true;
        // Reflection for wide relations over the assigned variables that include x.
        std::vector<int> assigned;
        for (int y = 0; y < n_; ++y)
            if (a[y] >= 0) assigned.push_back(y);
        for (auto r : wide_reflect_) {
            const int k = s_.signature()[r].arity;
            Tuple src(k), img(k);
            std::vector<int> idx(k, 0);
            const int na = static_cast<int>(assigned.size());
            while (true) {
                bool has_x = false;
                for (int p = 0; p < k; ++p) {
                    src[p] = assigned[idx[p]];
                    img[p] = a[src[p]];
                    has_x |= src[p] == x;
                }
                if (has_x && t_.holds(r, img) && !s_.holds(r, src)) return false;
                int p = k - 1;
                while (p >= 0 && ++idx[p] == na) idx[p--] = 0;
                if (p < 0) break;
            }
        }
        return true;
    }

    int choose(const std::vector<Bitset>& d, const std::vector<int>& a) const {
        int best = -1, best_size = 0;
        for (int x = 0; x < n_; ++x) {
            if (a[x] >= 0) continue;
            if (static_order_) return x;
            int c = d[x].count();
            if (best < 0 || c < best_size) {
                best = x;
                best_size = c;
            }
        }
        return best;
    }

    void search(const std::vector<Bitset>& d, std::vector<int>& a, int depth) {
        if (stop_) return;
        if (depth == n_) {
            if (!(*emit_)(a)) stop_ = true;
            return;
        }
        int x = choose(d, a);
        const bool injective = mode_ != HomMode::Hom;
        d[x].for_each([&](int v) {
            if (stop_) return;
            std::vector<Bitset> next = d;
            Bitset single(m_);
            single.set(v);
            next[x] = single;
            a[x] = v;
            std::vector<int> changed{x};
            bool ok = true;
            if (injective)
                for (int y = 0; y < n_ && ok; ++y)
                    if (y != x && a[y] < 0 && next[y].test(v)) {
                        next[y].reset(v);
                        if (next[y].count() == 0) ok = false;
                        changed.push_back(y);
                    }
            ok = ok && check_wide(next, a, x, changed) && propagate(next, changed);
            if (ok) search(next, a, depth + 1);
            a[x] = -1;
        });
    }

    const FinStructure& s_;
    const FinStructure& t_;
    HomMode mode_;
    bool static_order_;
    int n_, m_;
    bool impossible_ = false;
    std::vector<Bitset> initial_;
    std::vector<Rows> rows_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> incoming_;
    std::vector<std::vector<WideTuple>> wide_;
    std::vector<std::size_t> wide_reflect_;
    const std::function<bool(const std::vector<int>&)>* emit_ = nullptr;
    bool stop_ = false;
};

} // namespace

std::optional<Hom> find_hom(const FinStructure& source, const FinStructure& target, HomMode mode,
                            const Assignment& forced) {
    HomSearch search(source, target, mode, false);
    std::optional<std::vector<int>> found;
    search.run(forced, [&](const std::vector<int>& a) {
        found = a;
        return false;
    });
    if (!found) return std::nullopt;
    return Hom::validated(source, target, std::move(*found), mode);
}

std::vector<Hom> enumerate_endos(const FinStructure& s, std::optional<std::size_t> limit, unsigned threads) {
    std::vector<Hom> out;
    if (s.size() == 0) {
        out.push_back(Hom::validated(s, s, {}));
        return out;
    }
    const std::size_t cap = limit.value_or(static_cast<std::size_t>(-1));
    auto collect_from = [&](int first_value) {
        std::vector<std::vector<int>> maps;
        HomSearch search(s, s, HomMode::Hom, true);
        search.run({{0, first_value}}, [&](const std::vector<int>& a) {
            maps.push_back(a);
            return maps.size() < cap;
        });
        return maps;
    };
    std::vector<std::vector<std::vector<int>>> per_value(s.size());
    if (threads <= 1) {
        for (int v = 0; v < s.size(); ++v) {
            std::size_t have = 0;
            for (const auto& pv : per_value) have += pv.size();
            if (have >= cap) break;
            per_value[v] = collect_from(v);
        }
    } else {
        for (int start = 0; start < s.size(); start += static_cast<int>(threads)) {
            std::vector<std::future<std::vector<std::vector<int>>>> jobs;
            for (int v = start; v < std::min(s.size(), start + static_cast<int>(threads)); ++v)
                jobs.push_back(std::async(std::launch::async, collect_from, v));
            for (std::size_t k = 0; k < jobs.size(); ++k) per_value[start + k] = jobs[k].get();
        }
    }
    for (auto& maps : per_value)
        for (auto& m : maps) {
            if (out.size() >= cap) return out;
            out.push_back(Hom::validated(s, s, std::move(m)));
        }
    return out;
}

} // namespace orbitfin
