#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qgl/matrixtype.hpp"
#include "qgl/scalar.hpp"

namespace qgl {

// One generator symbol E_ij (FRT) or c_ij (Dipper-Donkin), 1-based indices,
// ordered lexicographically by (row, col).
struct Gen {
    int row = 1;
    int col = 1;
    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>; // empty word is the unit

bool word_is_normal(const Word& w);

enum class AlgebraKind { FRT, DD };

// Multidegree of a homogeneous element: (row composition, column composition),
// with signed entries so inverse-determinant powers fit the same grading.
struct MultiDeg {
    std::vector<long long> row, col;
    friend bool operator==(const MultiDeg&, const MultiDeg&) = default;
};

MultiDeg word_degree(const Word& w, int n);

using BicharacterTwist = std::function<long long(const MultiDeg&, const MultiDeg&)>;

// The twist carrying the h-sum product to the plain characteristic-function
// product: chi*(degL, degR) = sum_{a<b} (c'_a c''_b - d'_a d''_b) where
// (c'',d'') is the left degree and (c',d') the right one.
BicharacterTwist chi_star(int n);
// Cocycle used by the transport of the Dipper-Donkin algebra onto the FRT
// side: -chi* plus the diagonal correction 2*sum_a a*(c'_a c''_a - d'_a d''_a),
// which is what makes the antipode comparison come out on the nose.
BicharacterTwist xi_twist(int n);

class NCPoly;
NCPoly normal_form(const NCPoly& x);

// Element of the free algebra on the generators modulo nothing; normal_form
// rewrites into the lexicographic PBW basis of A_v(n) or B_p(n). The DD
// presentation carries its parameter p (v by default, q for the geometric
// comparisons); FRT is always at v.
class NCPoly {
public:
    NCPoly() : kind_(AlgebraKind::FRT), n_(1), param_(Scalar::v()) {}
    NCPoly(AlgebraKind kind, int n, Scalar param = Scalar::v())
        : kind_(kind), n_(n), param_(std::move(param)) {}

    static NCPoly unit(AlgebraKind kind, int n, Scalar param = Scalar::v());
    static NCPoly generator(AlgebraKind kind, int n, int i, int j, Scalar param = Scalar::v());
    static NCPoly of_word(AlgebraKind kind, int n, Word w, Scalar coeff = Scalar::one(),
                          Scalar param = Scalar::v());

    AlgebraKind kind() const { return kind_; }
    int n() const { return n_; }
    const Scalar& param() const { return param_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_normal() const;

    void add_term(Word w, const Scalar& c);

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const Scalar& s, const NCPoly& a);
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

    // Structural equality of term maps (use normal_form first to compare
    // algebra elements).
    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.param_ == b.param_ &&
               a.terms_ == b.terms_;
    }

    // Multidegree if homogeneous, nullopt otherwise (zero counts as any).
    std::optional<MultiDeg> multidegree() const;

    std::string str() const;

private:
    void check_compatible(const NCPoly& o) const;

    AlgebraKind kind_;
    int n_;
    Scalar param_;
    std::map<Word, Scalar> terms_;

    friend NCPoly multiply(const NCPoly&, const NCPoly&);
};

enum class RewriteStrategy { Leftmost, RandomRedex };

struct RewriteStats {
    long long steps = 0;
};

// Rewrites every word into non-decreasing lexicographic order using the
// defining relations, strictly reducing (row-inversions, column-inversions);
// the result is the PBW normal form.
NCPoly normal_form(const NCPoly& x, RewriteStrategy strategy, std::mt19937* rng,
                   RewriteStats* stats, long long max_steps = 2000000);
inline NCPoly normal_form(const NCPoly& x) {
    return normal_form(x, RewriteStrategy::Leftmost, nullptr, nullptr);
}

NCPoly multiply(const NCPoly& x, const NCPoly& y);
NCPoly power(const NCPoly& x, int m);

// v^{chi(deg x, deg y)} * (x*y); both factors must be homogeneous.
NCPoly twisted_multiply(const NCPoly& x, const NCPoly& y, const BicharacterTwist& chi);

// Tensor with both legs in the same algebra; legs kept in normal form.
class NCTensor {
public:
    NCTensor(AlgebraKind kind, int n, Scalar param = Scalar::v())
        : kind_(kind), n_(n), param_(std::move(param)) {}

    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }
    void add_term(Word l, Word r, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const NCTensor& a, const NCTensor& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend NCTensor operator-(const NCTensor& a, const NCTensor& b);

    AlgebraKind kind() const { return kind_; }
    int n() const { return n_; }
    const Scalar& param() const { return param_; }

private:
    AlgebraKind kind_;
    int n_;
    Scalar param_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

// Coproduct Delta(E_ij) = sum_k E_ik (x) E_kj extended multiplicatively.
NCTensor comultiply(const NCPoly& x);
// Componentwise product (a(x)b)(c(x)d) = ac (x) bd.
NCTensor tensor_multiply(const NCTensor& a, const NCTensor& b);
// Counit eps(E_ij) = [i == j] extended multiplicatively.
Scalar counit(const NCPoly& x);

// Signed permutation sum; omit = (i, j) gives the minor presentation on rows
// != i, cols != j with lengths read through the order-preserving relabeling.
NCPoly quantum_determinant(int n, AlgebraKind kind, const Scalar& param = Scalar::v());
NCPoly quantum_minor(int n, AlgebraKind kind, int omit_i, int omit_j,
                     const Scalar& param = Scalar::v());

// PBW monomial: product of E_ij^{m_ij} over lex-ordered cells; divided form
// divides each factor by [m_ij]!.
NCPoly pbw_monomial(AlgebraKind kind, int n, const MatrixType& m, bool divided,
                    const Scalar& param = Scalar::v());

// Defining relations as lhs - rhs, one entry per index instance.
std::vector<NCPoly> frt_relations(int n);
std::vector<NCPoly> dd_relations(int n, const Scalar& param);

enum class Involution { Tau1, Tau2, Tau3 };
// Tau1: E_ij -> E_ji as an algebra map; Tau2: E_ij -> E_{n+1-i,n+1-j} as an
// anti-map; Tau3 is the composite.
NCPoly involution(const NCPoly& x, Involution which);

// Element of the determinant localization of A_v(n); parts[k] multiplies
// det^{-k}. The FRT determinant is central, so multiplication is
// componentwise with power bookkeeping.
class LocalizedElement {
public:
    explicit LocalizedElement(int n) : n_(n) {}
    static LocalizedElement of(NCPoly p, int detinv_power = 0);

    int n() const { return n_; }
    const std::map<int, NCPoly>& parts() const { return parts_; }
    void add_part(int power, const NCPoly& p);

    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
    friend LocalizedElement operator*(const Scalar& s, const LocalizedElement& a);

    // Algebra-level equality: cross-multiplied by determinant powers and
    // compared in normal form.
    bool equals(const LocalizedElement& o) const;
    bool is_zero() const { return equals(LocalizedElement(n_)); }

    std::string str() const;

private:
    int n_;
    std::map<int, NCPoly> parts_;
};

// Antipode on a generator: S(E_ij) = (-v)^{j-i} A(j,i) det^{-1}. Only the FRT
// presentation localizes natively; DD goes through xi_transport.
LocalizedElement antipode_generator(int i, int j, int n, AlgebraKind kind);

// Transport of a DD element (at parameter q) times det^{-detinv_power} onto
// the localized FRT algebra: c_ij -> E_ji with the xi_twist cocycle.
LocalizedElement xi_transport(const NCPoly& dd_elem, int detinv_power);

} // namespace qgl
