#include "qgl/kelement.hpp"

#include <stdexcept>

namespace qgl {

KElement KElement::basis(int n, long long q, const MatrixType& m) {
    KElement e(n, q);
    e.add_term(m, Evaluated::one(q));
    return e;
}

void KElement::add_term(const MatrixType& m, const Evaluated& c) {
    if (m.size() != n_) throw std::invalid_argument("KElement: matrix size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void KElement::check_compatible(const KElement& o) const {
    if (n_ != o.n_ || q_ != o.q_) throw std::invalid_argument("KElement: mixed algebras");
}

KElement KElement::operator-() const {
    KElement r(n_, q_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

KElement operator+(const KElement& a, const KElement& b) {
    a.check_compatible(b);
    KElement r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

KElement operator-(const KElement& a, const KElement& b) { return a + (-b); }

KElement operator*(const Evaluated& s, const KElement& a) {
    KElement r(a.n(), a.q());
    for (const auto& [m, c] : a.terms()) r.add_term(m, s * c);
    return r;
}

std::string KElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + " * 1_" + m.str();
    }
    return s;
}

void KTensor::add_term(const MatrixType& a, const MatrixType& b, const Evaluated& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KTensor operator-(const KTensor& a, const KTensor& b) {
    if (a.n() != b.n() || a.q() != b.q()) throw std::invalid_argument("KTensor: mixed algebras");
    KTensor r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k.first, k.second, -c);
    return r;
}

namespace {

MultiDeg matrix_degree(const MatrixType& m) {
    MultiDeg d;
    const Composition r = m.ro(), c = m.co();
    d.row.assign(r.parts.begin(), r.parts.end());
    d.col.assign(c.parts.begin(), c.parts.end());
    return d;
}

KElement basis_product(const MatrixType& mpp, const MatrixType& mp, ProductKind kind,
                       long long q, StructureContext& ctx) {
    const int n = mpp.size();
    KElement out(n, q);
    const TwistExponents tw = twist_exponents(mpp, mp);
    Evaluated shift = Evaluated::one(q);
    const bool use_g = kind == ProductKind::Circ || kind == ProductKind::CircPrime;
    switch (kind) {
        case ProductKind::Circ:
            shift = Evaluated::u_pow(q, -2 * tw.circ);
            break;
        case ProductKind::CircPrime:
            shift = Evaluated::u_pow(q, -2 * (tw.circ - static_cast<long long>(mpp.degree()) *
                                                            mp.degree()));
            break;
        case ProductKind::Dot:
            shift = Evaluated::u_pow(q, -2 * tw.dot);
            break;
        case ProductKind::Bullet:
            break;
        case ProductKind::TildeDot: {
            const long long t = xi_twist(n)(matrix_degree(mpp), matrix_degree(mp));
            shift = Evaluated::u_pow(q, 2 * t - 2 * tw.dot);
            break;
        }
    }
    for (const auto& L : theta(n, mpp.ro() + mp.ro(), mpp.co() + mp.co())) {
        const long long count = use_g ? ctx.g(L, mpp, mp, q) : ctx.h(L, mpp, mp, q);
        if (count == 0) continue;
        out.add_term(L, shift * Evaluated::of(q, Rational(count)));
    }
    return out;
}

} // namespace

KElement k_multiply(const KElement& x, const KElement& y, ProductKind kind,
                    StructureContext& ctx) {
    if (x.n() != y.n() || x.q() != y.q()) throw std::invalid_argument("k_multiply: mixed algebras");
    KElement out(x.n(), x.q());
    for (const auto& [mpp, a] : x.terms())
        for (const auto& [mp, b] : y.terms()) {
            const KElement p = basis_product(mpp, mp, kind, x.q(), ctx);
            const Evaluated s = a * b;
            for (const auto& [m, c] : p.terms()) out.add_term(m, s * c);
        }
    return out;
}

KTensor k_comultiply(const KElement& x, CoproductKind kind, StructureContext& ctx) {
    const int n = x.n();
    const long long q = x.q();
    KTensor out(n, q);
    for (const auto& [L, coeff] : x.terms()) {
        const int d = L.degree();
        Evaluated shift = Evaluated::one(q);
        if (kind == CoproductKind::Tilde)
            shift = Evaluated::u_pow(q, -3LL * d * d);
        const auto all = theta(n, d);
        for (const auto& M : all) {
            if (!(M.ro() == L.ro())) continue;
            for (const auto& N : all) {
                if (!(N.co() == L.co() && N.ro() == M.co())) continue;
                const long long c = ctx.c(L, M, N, q);
                if (c == 0) continue;
                Evaluated term = coeff * Evaluated::of(q, Rational(c));
                if (kind != CoproductKind::Plain) {
                    const Rational ratio = Rational(ctx.a(M, q)) * Rational(ctx.a(N, q)) /
                                           Rational(ctx.a(L, q));
                    term = term * shift * Evaluated::of(q, ratio);
                }
                out.add_term(M, N, term);
            }
        }
    }
    return out;
}

Evaluated k_counit(const KElement& x) {
    Evaluated e(x.q());
    for (const auto& [m, c] : x.terms())
        if (m.is_diagonal()) e += c;
    return e;
}

KTensor k_tensor_multiply(const KTensor& a, const KTensor& b, ProductKind kind,
                          StructureContext& ctx) {
    if (a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument("k_tensor_multiply: mixed algebras");
    KTensor out(a.n(), a.q());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const KElement left = k_multiply(KElement::basis(a.n(), a.q(), ka.first),
                                             KElement::basis(a.n(), a.q(), kb.first), kind, ctx);
            const KElement right = k_multiply(KElement::basis(a.n(), a.q(), ka.second),
                                              KElement::basis(a.n(), a.q(), kb.second), kind, ctx);
            const Evaluated s = ca * cb;
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms())
                    out.add_term(lm, rm, s * lc * rc);
        }
    return out;
}

KElement embed_symbolic(const NCPoly& x, long long q, EmbedModel model, StructureContext& ctx) {
    const bool dd_model = model == EmbedModel::PsiPrime || model == EmbedModel::Xi;
    if (dd_model != (x.kind() == AlgebraKind::DD))
        throw std::invalid_argument("embed_symbolic: presentation does not match model");
    ProductKind kind = ProductKind::Circ;
    switch (model) {
        case EmbedModel::Phi: kind = ProductKind::Circ; break;
        case EmbedModel::Psi: kind = ProductKind::Dot; break;
        case EmbedModel::PsiPrime: kind = ProductKind::Bullet; break;
        case EmbedModel::Xi: kind = ProductKind::TildeDot; break;
    }
    const int n = x.n();
    KElement out(n, q);
    for (const auto& [w, c] : x.terms()) {
        KElement acc = KElement::unit(n, q);
        for (const Gen& g : w) {
            const MatrixType cell = dd_model ? MatrixType::unit(n, g.col, g.row)
                                             : MatrixType::unit(n, g.row, g.col);
            acc = k_multiply(acc, KElement::basis(n, q, cell), kind, ctx);
        }
        out += evaluate(c, q) * acc;
    }
    return out;
}

KElement determinant_element(int n, long long q) {
    KElement out(n, q);
    for (const auto& perm : all_permutations(n)) {
        const long long l = inversions(perm);
        out.add_term(permutation_matrix(perm),
                     Evaluated::of(q, Rational(l % 2 == 0 ? 1 : -1)));
    }
    return out;
}

} // namespace qgl
