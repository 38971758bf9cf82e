#pragma once

#include <map>

#include "qgl/ncpoly.hpp"
#include "qgl/scalar.hpp"
#include "qgl/structconst.hpp"

namespace qgl {

// Element of the convolution algebra at a fixed prime q: a finite combination
// of orbit symbols 1_M with coefficients in Q[u]/(u^4 - q).
class KElement {
public:
    KElement(int n, long long q) : n_(n), q_(q) {}
    static KElement unit(int n, long long q) { return basis(n, q, MatrixType(n)); }
    static KElement basis(int n, long long q, const MatrixType& m);

    int n() const { return n_; }
    long long q() const { return q_; }
    const std::map<MatrixType, Evaluated>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MatrixType& m, const Evaluated& c);

    KElement operator-() const;
    friend KElement operator+(const KElement& a, const KElement& b);
    friend KElement operator-(const KElement& a, const KElement& b);
    friend KElement operator*(const Evaluated& s, const KElement& a);
    KElement& operator+=(const KElement& o) { return *this = *this + o; }
    KElement& operator-=(const KElement& o) { return *this = *this - o; }

    friend bool operator==(const KElement& a, const KElement& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    void check_compatible(const KElement& o) const;

    int n_;
    long long q_;
    std::map<MatrixType, Evaluated> terms_;
};

class KTensor {
public:
    KTensor(int n, long long q) : n_(n), q_(q) {}

    int n() const { return n_; }
    long long q() const { return q_; }
    const std::map<std::pair<MatrixType, MatrixType>, Evaluated>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MatrixType& a, const MatrixType& b, const Evaluated& c);

    friend KTensor operator-(const KTensor& a, const KTensor& b);
    friend bool operator==(const KTensor& a, const KTensor& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    long long q_;
    std::map<std::pair<MatrixType, MatrixType>, Evaluated> terms_;
};

// Product selection: the left factor is always the subobject side.
//   Circ      u^{-2(f1-f2)} sum_L g^L 1_L
//   CircPrime Circ with the total-degree part of the shift removed
//   Dot       u^{-2 shift} sum_L h^L 1_L
//   Bullet    sum_L h^L 1_L
//   TildeDot  Dot twisted by the xi cocycle (transport of the DD product)
enum class ProductKind { Circ, CircPrime, Dot, Bullet, TildeDot };

enum class CoproductKind { Plain, Tilde, Prime };

// Geometric realizations: Phi reads FRT words with Circ, Psi with Dot;
// PsiPrime and Xi read DD words with transposed indices under Bullet and
// TildeDot respectively.
enum class EmbedModel { Phi, Psi, PsiPrime, Xi };

KElement k_multiply(const KElement& x, const KElement& y, ProductKind kind,
                    StructureContext& ctx);
KTensor k_comultiply(const KElement& x, CoproductKind kind, StructureContext& ctx);
Evaluated k_counit(const KElement& x);
KTensor k_tensor_multiply(const KTensor& a, const KTensor& b, ProductKind kind,
                          StructureContext& ctx);

KElement embed_symbolic(const NCPoly& x, long long q, EmbedModel model,
                        StructureContext& ctx);

// Signed sum of permutation-matrix symbols; coefficients are plain integers
// independent of q.
KElement determinant_element(int n, long long q);

} // namespace qgl
