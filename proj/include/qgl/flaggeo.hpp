#pragma once

#include <random>
#include <vector>

#include "qgl/matrixtype.hpp"

namespace qgl {

// Enumeration ceilings; everything downstream is exponential in d.
struct Guards {
    int max_d = 6;
    long long max_q = 7;
    void check(int d, long long q) const;
};

using FqVec = std::vector<long long>; // entries reduced mod q

// Dense matrix over F_q, row-major; rows are vectors of the row space.
class FqMatrix {
public:
    FqMatrix(long long q, int rows, int cols)
        : q_(q), cols_(cols), rows_(static_cast<size_t>(rows), FqVec(static_cast<size_t>(cols), 0)) {}
    FqMatrix(long long q, std::vector<FqVec> rows, int cols)
        : q_(q), cols_(cols), rows_(std::move(rows)) {}

    long long q() const { return q_; }
    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    FqVec& row(int i) { return rows_[static_cast<size_t>(i)]; }
    const FqVec& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    long long at(int i, int j) const { return rows_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    void set(int i, int j, long long v);

    // In-place reduced row echelon form; returns rank. Zero rows are removed.
    int rref();

    friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

private:
    long long q_;
    int cols_;
    std::vector<FqVec> rows_;
};

long long fq_inv(long long a, long long q);
FqVec fq_matvec(const FqVec& x, const FqMatrix& g); // row vector times matrix
bool fq_invertible(const FqMatrix& g);

// Subspace of F_q^ambient in canonical reduced-row-echelon form; equality of
// subspaces is equality of the stored matrices.
class Subspace {
public:
    Subspace() : q_(2), ambient_(0) {}
    static Subspace zero(int ambient, long long q);
    static Subspace full(int ambient, long long q);
    static Subspace span(const std::vector<FqVec>& vectors, int ambient, long long q);

    long long q() const { return q_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FqVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const FqVec& x) const;
    bool contains(const Subspace& other) const;

    // Coordinates of x with respect to the RREF basis; x must lie in the space.
    FqVec coordinates(const FqVec& x) const;

    // Quotient model: coordinates are the non-pivot columns of this subspace.
    FqVec quotient_image(const FqVec& x) const;
    Subspace quotient_image(const Subspace& s) const;
    // Lift a quotient-coordinate vector back to the ambient space.
    FqVec quotient_lift(const FqVec& y) const;

    // Express sub (a subspace of this one) in the coordinates of this basis.
    Subspace restricted(const Subspace& sub) const;

    Subspace apply(const FqMatrix& g) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
        return a.basis_ < b.basis_;
    }

private:
    void recompute_pivots();
    void check_compatible(const Subspace& o) const;

    long long q_;
    int ambient_;
    std::vector<FqVec> basis_;
    std::vector<int> pivots_;
};

std::vector<Subspace> enumerate_subspaces(int d, int k, long long q,
                                          const Guards& guards = Guards{});

// n-step flag 0 = F_0 <= F_1 <= ... <= F_n = F_q^d with dim F_i/F_{i-1} = type_i.
class Flag {
public:
    Flag() = default;
    static Flag from_steps(Composition type, std::vector<Subspace> steps);

    const Composition& type() const { return type_; }
    int nsteps() const { return type_.size(); }
    int ambient() const { return steps_.empty() ? 0 : steps_.back().ambient(); }
    long long q() const { return steps_.empty() ? 2 : steps_.back().q(); }
    // F_i for i = 0..n (F_0 is the zero space).
    const Subspace& step(int i) const;

    Flag intersect_with(const Subspace& e) const; // flag in E-coordinates
    Flag quotient_by(const Subspace& u) const;    // flag in quotient coordinates
    Flag apply(const FqMatrix& g) const;

    friend bool operator==(const Flag&, const Flag&) = default;
    friend bool operator<(const Flag& a, const Flag& b) { return a.steps_ < b.steps_; }

private:
    Composition type_;
    std::vector<Subspace> steps_; // steps_[i-1] = F_i, i = 1..n
    Subspace zero_;
};

std::vector<Flag> enumerate_flags(const Composition& type, int d, long long q,
                                  const Guards& guards = Guards{});
long long flag_count(const Composition& type, long long q);
long long gaussian_binomial_int(int d, int k, long long q);

struct FlagPair {
    Flag V, F;
};

// GL(d)-orbit invariant of a flag pair: the matrix of jump dimensions.
MatrixType orbit_type(const Flag& V, const Flag& F);
MatrixType orbit_type(const FlagPair& p);

// Canonical pair with orbit_type(representative(M)) = M, built on unit vectors
// indexed by cells (i, j, t), t <= m_ij, in lex cell order.
FlagPair representative(const MatrixType& m, long long q);

long long gl_order(int d, long long q);
long long orbit_size(const MatrixType& m, long long q, const Guards& guards = Guards{});
// a_M = |GL(d)| / |O_M|.
long long stabilizer_order(const MatrixType& m, long long q, const Guards& guards = Guards{});
// Independent oracle for d <= 2: enumerate GL(d, q) and count fixing elements.
long long stabilizer_order_direct(const MatrixType& m, long long q);

FqMatrix random_gl(int d, long long q, std::mt19937& rng);
std::vector<FqMatrix> all_gl(int d, long long q);

} // namespace qgl
