#include "qgl/matrixtype.hpp"

#include <algorithm>

namespace qgl {

std::vector<Composition> compositions(int d, int n) {
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.emplace_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (n == 0) {
        if (d == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<MatrixType> theta(int n, int d) {
    std::vector<MatrixType> out;
    const int cells = n * n;
    std::vector<int> cur(static_cast<size_t>(cells), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == cells - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.emplace_back(n, cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    if (cells == 0) return out;
    rec(rec, 0, d);
    return out;
}

std::vector<MatrixType> theta(int n, const Composition& row, const Composition& col) {
    if (row.total() != col.total())
        return {};
    std::vector<MatrixType> out;
    for (auto& m : theta(n, row.total()))
        if (m.ro() == row && m.co() == col) out.push_back(m);
    return out;
}

long long inversions(const std::vector<int>& perm) {
    long long inv = 0;
    for (size_t a = 0; a < perm.size(); ++a)
        for (size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

MatrixType permutation_matrix(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    MatrixType m(n);
    for (int i = 1; i <= n; ++i) m.set(i, perm[static_cast<size_t>(i - 1)], 1);
    return m;
}

} // namespace qgl
