#pragma once

#include <string>
#include <vector>

namespace orbitfin::detail {

/// All k-subsets of {0..n-1} as ascending vectors, in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// All words of length n over {0..k-1}, in lexicographic order.
inline std::vector<std::vector<int>> words(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == k - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

inline std::string join(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace orbitfin::detail
