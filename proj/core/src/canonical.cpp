#include <algorithm>
#include <cmath>
#include <string>

#include "orbitfin/finstruct.hpp"

namespace orbitfin {

namespace {

// Labels are assigned one position at a time. Block i of the encoding holds
// one byte per (relation, tuple over new labels 0..i whose maximum is i),
// so it depends only on the first i+1 choices and strict prefix comparison
// against the best encoding so far prunes whole subtrees.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const FinStructure& s) : s_(s), n_(s.size()) {
        for (int i = 0; i < n_; ++i) {
            std::vector<std::vector<Tuple>> per_rel;
            for (std::size_t r = 0; r < s.signature().size(); ++r) {
                const int k = s.signature()[r].arity;
                std::vector<Tuple> tuples;
                Tuple t(k, 0);
                while (true) {
                    if (std::find(t.begin(), t.end(), i) != t.end()) tuples.push_back(t);
                    int p = k - 1;
                    while (p >= 0 && ++t[p] == i + 1) t[p--] = 0;
                    if (p < 0) break;
                }
                per_rel.push_back(std::move(tuples));
            }
            blocks_.push_back(std::move(per_rel));
        }
    }

    std::string run() {
        perm_.assign(n_, -1);
        used_.assign(n_, 0);
        current_.clear();
        best_.clear();
        have_best_ = false;
        dfs(0);
        return best_;
    }

private:
    void block(int i, std::string& out) const {
        Tuple image;
        for (std::size_t r = 0; r < blocks_[i].size(); ++r)
            for (const auto& t : blocks_[i][r]) {
                image.resize(t.size());
                for (std::size_t p = 0; p < t.size(); ++p) image[p] = perm_[t[p]];
                out.push_back(s_.holds(r, image) ? '1' : '0');
            }
    }

    void dfs(int i) {
        if (i == n_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                have_best_ = true;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used_[v]) continue;
            perm_[i] = v;
            used_[v] = 1;
            const std::size_t mark = current_.size();
            block(i, current_);
            if (!have_best_ || current_.compare(0, current_.size(), best_, 0, current_.size()) <= 0) dfs(i + 1);
            current_.resize(mark);
            used_[v] = 0;
            perm_[i] = -1;
        }
    }

    const FinStructure& s_;
    int n_;
    std::vector<std::vector<std::vector<Tuple>>> blocks_;
    std::vector<int> perm_;
    std::vector<char> used_;
    std::string current_, best_;
    bool have_best_ = false;
};

} // namespace

std::string canonical_form(const FinStructure& s, int bound) {
    if (s.size() > bound)
        throw Error(ErrorCode::TooLarge, "canonical_form: " + std::to_string(s.size()) + " elements exceeds bound " +
                                             std::to_string(bound));
    std::string header = std::to_string(s.size()) + ";";
    for (const auto& sym : s.signature().symbols()) header += sym.name + "/" + std::to_string(sym.arity) + ";";
    return header + "|" + CanonicalSearch(s).run();
}

} // namespace orbitfin
