#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgl {

// Composition: an n-tuple of non-negative integers with total d.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {}

    int size() const { return static_cast<int>(parts.size()); }
    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int operator[](int i) const { return parts[static_cast<size_t>(i)]; }

    Composition reversed() const {
        return Composition(std::vector<int>(parts.rbegin(), parts.rend()));
    }

    friend Composition operator+(const Composition& a, const Composition& b) {
        if (a.size() != b.size()) throw std::invalid_argument("Composition: size mismatch");
        std::vector<int> r(a.parts);
        for (int i = 0; i < b.size(); ++i) r[static_cast<size_t>(i)] += b[i];
        return Composition(std::move(r));
    }
    friend bool operator==(const Composition& a, const Composition& b) = default;
    friend auto operator<=>(const Composition& a, const Composition& b) = default;

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(parts[static_cast<size_t>(i)]);
        return s + ")";
    }
};

// n x n matrix of non-negative integers; indexes GL(d)-orbits of flag pairs
// and the basis functions 1_M. Indices are 1-based at the API surface.
class MatrixType {
public:
    MatrixType() : n_(0) {}
    explicit MatrixType(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {}
    MatrixType(int n, std::vector<int> entries) : n_(n), m_(std::move(entries)) {
        if (m_.size() != static_cast<size_t>(n) * n)
            throw std::invalid_argument("MatrixType: bad entry count");
        for (int x : m_)
            if (x < 0) throw std::invalid_argument("MatrixType: negative entry");
    }

    static MatrixType unit(int n, int i, int j) {
        MatrixType m(n);
        m.set(i, j, 1);
        return m;
    }

    int size() const { return n_; }
    int entry(int i, int j) const { return m_[idx(i, j)]; }
    void set(int i, int j, int v) {
        if (v < 0) throw std::invalid_argument("MatrixType: negative entry");
        m_[idx(i, j)] = v;
    }
    const std::vector<int>& entries() const { return m_; }

    int degree() const { return std::accumulate(m_.begin(), m_.end(), 0); }

    Composition ro() const {
        std::vector<int> r(static_cast<size_t>(n_), 0);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r[static_cast<size_t>(i - 1)] += entry(i, j);
        return Composition(std::move(r));
    }
    Composition co() const {
        std::vector<int> c(static_cast<size_t>(n_), 0);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) c[static_cast<size_t>(j - 1)] += entry(i, j);
        return Composition(std::move(c));
    }

    bool is_diagonal() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && entry(i, j) != 0) return false;
        return true;
    }

    // Orbit dimension: sum of m_ij * m_kl over index quadruples with i<k or j<l.
    long long orbit_dim() const {
        long long d = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                for (int k = 1; k <= n_; ++k)
                    for (int l = 1; l <= n_; ++l)
                        if (i < k || j < l)
                            d += static_cast<long long>(entry(i, j)) * entry(k, l);
        return d;
    }

    MatrixType transposed() const {
        MatrixType r(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r.set(j, i, entry(i, j));
        return r;
    }
    // J M J with J the antidiagonal flip.
    MatrixType flipped() const {
        MatrixType r(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r.set(n_ + 1 - i, n_ + 1 - j, entry(i, j));
        return r;
    }

    friend MatrixType operator+(const MatrixType& a, const MatrixType& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("MatrixType: size mismatch");
        MatrixType r(a.n_);
        for (size_t t = 0; t < a.m_.size(); ++t) r.m_[t] = a.m_[t] + b.m_[t];
        return r;
    }
    friend MatrixType operator*(int s, const MatrixType& a) {
        if (s < 0) throw std::invalid_argument("MatrixType: negative scale");
        MatrixType r(a.n_);
        for (size_t t = 0; t < a.m_.size(); ++t) r.m_[t] = s * a.m_[t];
        return r;
    }

    friend bool operator==(const MatrixType& a, const MatrixType& b) = default;
    friend bool operator<(const MatrixType& a, const MatrixType& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.m_ < b.m_;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 1; i <= n_; ++i) {
            s += i > 1 ? ";[" : "[";
            for (int j = 1; j <= n_; ++j) s += (j > 1 ? "," : "") + std::to_string(entry(i, j));
            s += "]";
        }
        return s + "]";
    }

private:
    size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("MatrixType: index out of range");
        return static_cast<size_t>(i - 1) * n_ + (j - 1);
    }

    int n_;
    std::vector<int> m_;
};

// All of Theta_d for size n (degree-d matrices), in lexicographic entry order.
std::vector<MatrixType> theta(int n, int d);
// The subset with prescribed row and column sums.
std::vector<MatrixType> theta(int n, const Composition& row, const Composition& col);
// All compositions of d into n parts.
std::vector<Composition> compositions(int d, int n);

// Permutations as one-line vectors (1-based images).
long long inversions(const std::vector<int>& perm);
std::vector<std::vector<int>> all_permutations(int n);
MatrixType permutation_matrix(const std::vector<int>& perm);

} // namespace qgl
