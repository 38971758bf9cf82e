#include "qgl/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgl {

bool word_is_normal(const Word& w) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) return false;
    return true;
}

MultiDeg word_degree(const Word& w, int n) {
    MultiDeg d;
    d.row.assign(static_cast<size_t>(n), 0);
    d.col.assign(static_cast<size_t>(n), 0);
    for (const Gen& g : w) {
        d.row[static_cast<size_t>(g.row - 1)] += 1;
        d.col[static_cast<size_t>(g.col - 1)] += 1;
    }
    return d;
}

BicharacterTwist chi_star(int n) {
    return [n](const MultiDeg& L, const MultiDeg& R) {
        long long e = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                e += R.row[static_cast<size_t>(a)] * L.row[static_cast<size_t>(b)] -
                     R.col[static_cast<size_t>(a)] * L.col[static_cast<size_t>(b)];
        return e;
    };
}

BicharacterTwist xi_twist(int n) {
    BicharacterTwist chi = chi_star(n);
    return [n, chi](const MultiDeg& L, const MultiDeg& R) {
        long long e = -chi(L, R);
        for (int a = 0; a < n; ++a)
            e += 2 * (a + 1) *
                 (R.row[static_cast<size_t>(a)] * L.row[static_cast<size_t>(a)] -
                  R.col[static_cast<size_t>(a)] * L.col[static_cast<size_t>(a)]);
        return e;
    };
}

NCPoly NCPoly::unit(AlgebraKind kind, int n, Scalar param) {
    NCPoly p(kind, n, std::move(param));
    p.add_term(Word{}, Scalar::one());
    return p;
}

NCPoly NCPoly::generator(AlgebraKind kind, int n, int i, int j, Scalar param) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("NCPoly::generator: index out of range");
    NCPoly p(kind, n, std::move(param));
    p.add_term(Word{Gen{i, j}}, Scalar::one());
    return p;
}

NCPoly NCPoly::of_word(AlgebraKind kind, int n, Word w, Scalar coeff, Scalar param) {
    NCPoly p(kind, n, std::move(param));
    p.add_term(std::move(w), coeff);
    return p;
}

void NCPoly::add_term(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    for (const Gen& g : w)
        if (g.row < 1 || g.row > n_ || g.col < 1 || g.col > n_)
            throw std::out_of_range("NCPoly: generator index out of range");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool NCPoly::is_normal() const {
    for (const auto& [w, c] : terms_)
        if (!word_is_normal(w)) return false;
    return true;
}

NCPoly NCPoly::operator-() const {
    NCPoly r(kind_, n_, param_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

void NCPoly::check_compatible(const NCPoly& o) const {
    if (kind_ != o.kind_ || n_ != o.n_ || !(param_ == o.param_))
        throw std::invalid_argument("NCPoly: mixed algebras");
}

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    a.check_compatible(b);
    NCPoly r = a;
    for (const auto& [w, c] : b.terms()) r.add_term(w, c);
    return r;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

NCPoly operator*(const Scalar& s, const NCPoly& a) {
    NCPoly r(a.kind(), a.n(), a.param());
    for (const auto& [w, c] : a.terms()) r.add_term(w, s * c);
    return r;
}

std::optional<MultiDeg> NCPoly::multidegree() const {
    std::optional<MultiDeg> deg;
    for (const auto& [w, c] : terms_) {
        MultiDeg d = word_degree(w, n_);
        if (!deg) deg = d;
        else if (!(*deg == d)) return std::nullopt;
    }
    if (!deg) deg = word_degree(Word{}, n_);
    return deg;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    const char* gen = kind_ == AlgebraKind::FRT ? "E" : "c";
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        size_t p = 0;
        while (p < w.size()) {
            size_t r = p;
            while (r < w.size() && w[r] == w[p]) ++r;
            s += "*" + std::string(gen) + "[" + std::to_string(w[p].row) + "," +
                 std::to_string(w[p].col) + "]";
            if (r - p > 1) s += "^" + std::to_string(r - p);
            p = r;
        }
    }
    return s;
}

namespace {

struct Rewritten {
    // replacement for a bad adjacent pair (a, b) with a > b in lex order:
    // main term (b', a') with coefficient, plus optional correction pair
    Gen main_left, main_right;
    Scalar main_coeff;
    bool has_correction = false;
    Gen corr_left, corr_right;
    Scalar corr_coeff;
};

Rewritten rewrite_pair(AlgebraKind kind, const Scalar& param, const Gen& a, const Gen& b) {
    Rewritten r;
    r.main_left = b;
    r.main_right = a;
    const Scalar v = Scalar::v();
    if (kind == AlgebraKind::FRT) {
        if (a.row == b.row) {
            r.main_coeff = v; // same row, E_ik E_il = v E_il E_ik for k > l
        } else if (a.col == b.col) {
            r.main_coeff = v; // same column
        } else if (a.col < b.col) {
            r.main_coeff = Scalar::one(); // i>j, k<l: plain swap
        } else {
            // i>j, k>l: swap plus (v - v^-1) E_jk E_il
            r.main_coeff = Scalar::one();
            r.has_correction = true;
            r.corr_left = Gen{b.row, a.col};
            r.corr_right = Gen{a.row, b.col};
            r.corr_coeff = v - Scalar::v_pow(-1);
        }
    } else {
        if (a.row == b.row) {
            r.main_coeff = Scalar::one(); // same row commutes
        } else if (a.col <= b.col) {
            r.main_coeff = param; // i>j, k<=l
        } else {
            // i>j, k>l: swap plus (p - 1) c_jk c_il
            r.main_coeff = Scalar::one();
            r.has_correction = true;
            r.corr_left = Gen{b.row, a.col};
            r.corr_right = Gen{a.row, b.col};
            r.corr_coeff = param - Scalar::one();
        }
    }
    return r;
}

std::vector<size_t> redex_positions(const Word& w) {
    std::vector<size_t> out;
    for (size_t p = 0; p + 1 < w.size(); ++p)
        if (w[p + 1] < w[p]) out.push_back(p);
    return out;
}

} // namespace

NCPoly normal_form(const NCPoly& x, RewriteStrategy strategy, std::mt19937* rng,
                   RewriteStats* stats, long long max_steps) {
    NCPoly result(x.kind(), x.n(), x.param());
    std::vector<std::pair<Word, Scalar>> work(x.terms().begin(), x.terms().end());
    long long steps = 0;
    while (!work.empty()) {
        size_t pick = work.size() - 1;
        if (strategy == RewriteStrategy::RandomRedex && rng && work.size() > 1)
            pick = std::uniform_int_distribution<size_t>(0, work.size() - 1)(*rng);
        auto [w, c] = std::move(work[pick]);
        work.erase(work.begin() + static_cast<long>(pick));

        std::vector<size_t> redexes = redex_positions(w);
        if (redexes.empty()) {
            result.add_term(std::move(w), c);
            continue;
        }
        size_t p = redexes.front();
        if (strategy == RewriteStrategy::RandomRedex && rng && redexes.size() > 1)
            p = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(*rng)];

        if (++steps > max_steps)
            throw std::runtime_error("normal_form: rewrite step limit exceeded");

        const Rewritten rw = rewrite_pair(x.kind(), x.param(), w[p], w[p + 1]);
        Word main = w;
        main[p] = rw.main_left;
        main[p + 1] = rw.main_right;
        work.emplace_back(std::move(main), c * rw.main_coeff);
        if (rw.has_correction) {
            Word corr = w;
            corr[p] = rw.corr_left;
            corr[p + 1] = rw.corr_right;
            work.emplace_back(std::move(corr), c * rw.corr_coeff);
        }
    }
    if (stats) stats->steps = steps;
    return result;
}

NCPoly multiply(const NCPoly& x, const NCPoly& y) {
    x.check_compatible(y);
    NCPoly prod(x.kind(), x.n(), x.param());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            prod.add_term(std::move(w), cx * cy);
        }
    return normal_form(prod);
}

NCPoly power(const NCPoly& x, int m) {
    if (m < 0) throw std::domain_error("power: negative exponent");
    NCPoly r = NCPoly::unit(x.kind(), x.n(), x.param());
    for (int k = 0; k < m; ++k) r = multiply(r, x);
    return r;
}

NCPoly twisted_multiply(const NCPoly& x, const NCPoly& y, const BicharacterTwist& chi) {
    auto dx = x.multidegree(), dy = y.multidegree();
    if (!dx || !dy)
        throw std::invalid_argument("twisted_multiply: factors must be homogeneous");
    const long long e = chi(*dx, *dy);
    return Scalar::v_pow(static_cast<int>(e)) * multiply(x, y);
}

void NCTensor::add_term(Word l, Word r, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(std::move(l), std::move(r));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCTensor operator-(const NCTensor& a, const NCTensor& b) {
    NCTensor r = a;
    for (const auto& [k, c] : b.terms()) r.add_term(k.first, k.second, -c);
    return r;
}

NCTensor comultiply(const NCPoly& x) {
    const int n = x.n();
    NCTensor out(x.kind(), n, x.param());
    for (const auto& [w, c] : x.terms()) {
        const size_t m = w.size();
        // all middle index sequences k in [1..n]^m
        std::vector<int> ks(m, 1);
        while (true) {
            Word left(m), right(m);
            for (size_t t = 0; t < m; ++t) {
                left[t] = Gen{w[t].row, ks[t]};
                right[t] = Gen{ks[t], w[t].col};
            }
            NCPoly l = normal_form(NCPoly::of_word(x.kind(), n, std::move(left), c, x.param()));
            NCPoly r = normal_form(NCPoly::of_word(x.kind(), n, std::move(right),
                                                   Scalar::one(), x.param()));
            for (const auto& [lw, lc] : l.terms())
                for (const auto& [rw, rc] : r.terms()) out.add_term(lw, rw, lc * rc);
            size_t t = 0;
            while (t < m && ks[t] == n) { ks[t] = 1; ++t; }
            if (t == m) break;
            ++ks[t];
        }
    }
    return out;
}

NCTensor tensor_multiply(const NCTensor& a, const NCTensor& b) {
    NCTensor out(a.kind(), a.n(), a.param());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            NCPoly l = multiply(NCPoly::of_word(a.kind(), a.n(), ka.first, ca, a.param()),
                                NCPoly::of_word(a.kind(), a.n(), kb.first, Scalar::one(), a.param()));
            NCPoly r = multiply(NCPoly::of_word(a.kind(), a.n(), ka.second, Scalar::one(), a.param()),
                                NCPoly::of_word(a.kind(), a.n(), kb.second, cb, a.param()));
            for (const auto& [lw, lc] : l.terms())
                for (const auto& [rw, rc] : r.terms()) out.add_term(lw, rw, lc * rc);
        }
    return out;
}

Scalar counit(const NCPoly& x) {
    Scalar e = Scalar::zero();
    for (const auto& [w, c] : x.terms()) {
        bool diag = true;
        for (const Gen& g : w)
            if (g.row != g.col) { diag = false; break; }
        if (diag) e += c;
    }
    return e;
}

namespace {

NCPoly signed_permutation_sum(int n, AlgebraKind kind, const Scalar& param,
                              const std::vector<int>& rows, const std::vector<int>& cols) {
    // Sum over bijections rows -> cols of (-param)^{-l} times the generator
    // word; l counts inversions of the induced permutation of 1..|rows|.
    const int m = static_cast<int>(rows.size());
    NCPoly det(kind, n, param);
    std::vector<int> idx(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) idx[static_cast<size_t>(t)] = t;
    do {
        const long long l = inversions(idx) + 0; // idx is 0-based; inversion count identical
        Word w(static_cast<size_t>(m));
        if (kind == AlgebraKind::FRT) {
            // product over rows ascending: E_{rows[t], cols[idx[t]]}
            for (int t = 0; t < m; ++t)
                w[static_cast<size_t>(t)] =
                    Gen{rows[static_cast<size_t>(t)], cols[static_cast<size_t>(idx[static_cast<size_t>(t)])]};
        } else {
            // product over columns ascending: c_{rows[idx[t]], cols[t]}
            for (int t = 0; t < m; ++t)
                w[static_cast<size_t>(t)] =
                    Gen{rows[static_cast<size_t>(idx[static_cast<size_t>(t)])], cols[static_cast<size_t>(t)]};
        }
        Scalar coeff = Scalar::one();
        for (long long s = 0; s < l; ++s) coeff = coeff * (-Scalar::one()) / param;
        det.add_term(std::move(w), coeff);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return normal_form(det);
}

} // namespace

NCPoly quantum_determinant(int n, AlgebraKind kind, const Scalar& param) {
    const Scalar p = kind == AlgebraKind::FRT ? Scalar::v() : param;
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
    return signed_permutation_sum(n, kind, p, all, all);
}

NCPoly quantum_minor(int n, AlgebraKind kind, int omit_i, int omit_j, const Scalar& param) {
    if (n < 2) throw std::domain_error("quantum_minor: need n >= 2");
    if (omit_i < 1 || omit_i > n || omit_j < 1 || omit_j > n)
        throw std::out_of_range("quantum_minor: omitted index out of range");
    const Scalar p = kind == AlgebraKind::FRT ? Scalar::v() : param;
    std::vector<int> rows, cols;
    for (int i = 1; i <= n; ++i)
        if (i != omit_i) rows.push_back(i);
    for (int j = 1; j <= n; ++j)
        if (j != omit_j) cols.push_back(j);
    return signed_permutation_sum(n, kind, p, rows, cols);
}

NCPoly pbw_monomial(AlgebraKind kind, int n, const MatrixType& m, bool divided,
                    const Scalar& param) {
    if (m.size() != n) throw std::invalid_argument("pbw_monomial: size mismatch");
    Word w;
    Scalar coeff = Scalar::one();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int mult = m.entry(i, j);
            for (int t = 0; t < mult; ++t) w.push_back(Gen{i, j});
            if (divided && mult > 1) coeff /= q_factorial(mult);
        }
    return NCPoly::of_word(kind, n, std::move(w), coeff, param);
}

std::vector<NCPoly> frt_relations(int n) {
    std::vector<NCPoly> rels;
    const Scalar v = Scalar::v();
    auto raw = [&](int a, int b, int c, int d) {
        NCPoly p(AlgebraKind::FRT, n);
        p.add_term(Word{Gen{a, b}, Gen{c, d}}, Scalar::one());
        return p;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i > j && k < l) rels.push_back(raw(i, k, j, l) - raw(j, l, i, k));
                    if (i > j && k > l)
                        rels.push_back(raw(i, k, j, l) - raw(j, l, i, k) -
                                       (v - Scalar::v_pow(-1)) * raw(j, k, i, l));
                    if (i == j && k > l) rels.push_back(raw(i, k, i, l) - v * raw(i, l, i, k));
                    if (i > j && k == l) rels.push_back(raw(i, k, j, k) - v * raw(j, k, i, k));
                }
    return rels;
}

std::vector<NCPoly> dd_relations(int n, const Scalar& param) {
    std::vector<NCPoly> rels;
    auto raw = [&](int a, int b, int c, int d) {
        NCPoly p(AlgebraKind::DD, n, param);
        p.add_term(Word{Gen{a, b}, Gen{c, d}}, Scalar::one());
        return p;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i > j && k <= l) rels.push_back(raw(i, k, j, l) - param * raw(j, l, i, k));
                    if (i > j && k > l)
                        rels.push_back(raw(i, k, j, l) - raw(j, l, i, k) -
                                       (param - Scalar::one()) * raw(j, k, i, l));
                    if (i == j && k > l) rels.push_back(raw(i, k, i, l) - raw(i, l, i, k));
                }
    return rels;
}

NCPoly involution(const NCPoly& x, Involution which) {
    if (x.kind() != AlgebraKind::FRT)
        throw std::invalid_argument("involution: FRT presentation only");
    const int n = x.n();
    NCPoly out(x.kind(), n, x.param());
    for (const auto& [w, c] : x.terms()) {
        Word img = w;
        switch (which) {
            case Involution::Tau1:
                for (Gen& g : img) g = Gen{g.col, g.row};
                break;
            case Involution::Tau2:
                std::reverse(img.begin(), img.end());
                for (Gen& g : img) g = Gen{n + 1 - g.row, n + 1 - g.col};
                break;
            case Involution::Tau3:
                std::reverse(img.begin(), img.end());
                for (Gen& g : img) g = Gen{n + 1 - g.col, n + 1 - g.row};
                break;
        }
        out.add_term(std::move(img), c);
    }
    return normal_form(out);
}

LocalizedElement LocalizedElement::of(NCPoly p, int detinv_power) {
    LocalizedElement e(p.n());
    e.add_part(detinv_power, p);
    return e;
}

void LocalizedElement::add_part(int power, const NCPoly& p) {
    if (power < 0) throw std::invalid_argument("LocalizedElement: negative power");
    if (p.kind() != AlgebraKind::FRT)
        throw std::invalid_argument("LocalizedElement: FRT presentation only");
    if (p.is_zero()) return;
    auto it = parts_.find(power);
    if (it == parts_.end()) parts_.emplace(power, normal_form(p));
    else {
        it->second = normal_form(it->second + p);
        if (it->second.is_zero()) parts_.erase(it);
    }
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
    LocalizedElement r = a;
    for (const auto& [k, p] : b.parts()) r.add_part(k, p);
    return r;
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
    LocalizedElement r = a;
    for (const auto& [k, p] : b.parts()) r.add_part(k, -p);
    return r;
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("LocalizedElement: size mismatch");
    LocalizedElement r(a.n());
    for (const auto& [ka, pa] : a.parts())
        for (const auto& [kb, pb] : b.parts()) r.add_part(ka + kb, multiply(pa, pb));
    return r;
}

LocalizedElement operator*(const Scalar& s, const LocalizedElement& a) {
    LocalizedElement r(a.n());
    for (const auto& [k, p] : a.parts()) r.add_part(k, s * p);
    return r;
}

bool LocalizedElement::equals(const LocalizedElement& o) const {
    if (n_ != o.n_) return false;
    int maxk = 0;
    for (const auto& [k, p] : parts_) maxk = std::max(maxk, k);
    for (const auto& [k, p] : o.parts_) maxk = std::max(maxk, k);
    const NCPoly det = quantum_determinant(n_, AlgebraKind::FRT);
    auto combine = [&](const LocalizedElement& e) {
        NCPoly acc(AlgebraKind::FRT, e.n_);
        for (const auto& [k, p] : e.parts_) {
            NCPoly t = p;
            for (int s = 0; s < maxk - k; ++s) t = multiply(t, det);
            acc += t;
        }
        return normal_form(acc);
    };
    return combine(*this) == combine(o);
}

std::string LocalizedElement::str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (const auto& [k, p] : parts_) {
        if (!s.empty()) s += " + ";
        s += "(" + p.str() + ")";
        if (k > 0) s += " * det^-" + std::to_string(k);
    }
    return s;
}

LocalizedElement antipode_generator(int i, int j, int n, AlgebraKind kind) {
    if (kind != AlgebraKind::FRT)
        throw std::domain_error(
            "antipode_generator: no native DD localization; use xi_transport");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("antipode_generator: index out of range");
    NCPoly minor = n == 1 ? NCPoly::unit(AlgebraKind::FRT, 1)
                          : quantum_minor(n, AlgebraKind::FRT, j, i);
    Scalar sign = (j - i) % 2 == 0 ? Scalar::one() : -Scalar::one();
    return LocalizedElement::of(sign * Scalar::v_pow(j - i) * minor, 1);
}

LocalizedElement xi_transport(const NCPoly& dd_elem, int detinv_power) {
    if (dd_elem.kind() != AlgebraKind::DD)
        throw std::invalid_argument("xi_transport: DD input expected");
    const int n = dd_elem.n();
    const BicharacterTwist t = xi_twist(n);
    MultiDeg detinv_deg;
    detinv_deg.row.assign(static_cast<size_t>(n), -static_cast<long long>(detinv_power));
    detinv_deg.col = detinv_deg.row;
    LocalizedElement out(n);
    for (const auto& [w, c] : dd_elem.terms()) {
        long long e = 0;
        std::vector<MultiDeg> degs;
        degs.reserve(w.size());
        Word img(w.size());
        for (size_t p = 0; p < w.size(); ++p) {
            img[p] = Gen{w[p].col, w[p].row}; // c_ij -> E_ji
            degs.push_back(word_degree(Word{img[p]}, n));
        }
        for (size_t p = 0; p < w.size(); ++p)
            for (size_t r = p + 1; r < w.size(); ++r) e += t(degs[p], degs[r]);
        if (detinv_power > 0) {
            MultiDeg total = word_degree(img, n);
            e += t(total, detinv_deg);
        }
        out.add_part(detinv_power,
                     NCPoly::of_word(AlgebraKind::FRT, n, std::move(img),
                                     c * Scalar::v_pow(static_cast<int>(e))));
    }
    return out;
}

} // namespace qgl
