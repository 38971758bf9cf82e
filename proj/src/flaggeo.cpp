#include "qgl/flaggeo.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgl {

void Guards::check(int d, long long q) const {
    if (d > max_d || q > max_q)
        throw std::runtime_error("size guard exceeded: d=" + std::to_string(d) +
                                 " q=" + std::to_string(q));
}

long long fq_inv(long long a, long long q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) throw std::domain_error("fq_inv: zero");
    long long r = 1, base = a, e = q - 2; // Fermat
    while (e > 0) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return r;
}

void FqMatrix::set(int i, int j, long long v) {
    v %= q_;
    if (v < 0) v += q_;
    rows_[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
}

int FqMatrix::rref() {
    int lead = 0;
    int r = 0;
    const int nr = rows(), nc = cols_;
    for (; r < nr && lead < nc; ++lead) {
        int piv = -1;
        for (int i = r; i < nr; ++i)
            if (rows_[static_cast<size_t>(i)][static_cast<size_t>(lead)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows_[static_cast<size_t>(piv)], rows_[static_cast<size_t>(r)]);
        const long long inv = fq_inv(rows_[static_cast<size_t>(r)][static_cast<size_t>(lead)], q_);
        for (int j = 0; j < nc; ++j)
            rows_[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                rows_[static_cast<size_t>(r)][static_cast<size_t>(j)] * inv % q_;
        for (int i = 0; i < nr; ++i) {
            if (i == r) continue;
            const long long f = rows_[static_cast<size_t>(i)][static_cast<size_t>(lead)];
            if (f == 0) continue;
            for (int j = 0; j < nc; ++j) {
                long long x = rows_[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                              f * rows_[static_cast<size_t>(r)][static_cast<size_t>(j)] % q_;
                x %= q_;
                if (x < 0) x += q_;
                rows_[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
            }
        }
        ++r;
    }
    rows_.resize(static_cast<size_t>(r), FqVec(static_cast<size_t>(nc), 0));
    return r;
}

FqVec fq_matvec(const FqVec& x, const FqMatrix& g) {
    FqVec y(static_cast<size_t>(g.cols()), 0);
    for (int j = 0; j < g.cols(); ++j) {
        long long acc = 0;
        for (int i = 0; i < g.rows(); ++i) acc = (acc + x[static_cast<size_t>(i)] * g.at(i, j)) % g.q();
        y[static_cast<size_t>(j)] = acc;
    }
    return y;
}

bool fq_invertible(const FqMatrix& g) {
    FqMatrix c = g;
    return c.rref() == g.rows() && g.rows() == g.cols();
}

Subspace Subspace::zero(int ambient, long long q) {
    Subspace s;
    s.q_ = q;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(int ambient, long long q) {
    std::vector<FqVec> rows;
    for (int i = 0; i < ambient; ++i) {
        FqVec e(static_cast<size_t>(ambient), 0);
        e[static_cast<size_t>(i)] = 1;
        rows.push_back(std::move(e));
    }
    return span(rows, ambient, q);
}

Subspace Subspace::span(const std::vector<FqVec>& vectors, int ambient, long long q) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != ambient)
            throw std::invalid_argument("Subspace::span: wrong vector length");
    FqMatrix m(q, vectors, ambient);
    m.rref();
    Subspace s;
    s.q_ = q;
    s.ambient_ = ambient;
    for (int i = 0; i < m.rows(); ++i) s.basis_.push_back(m.row(i));
    s.recompute_pivots();
    return s;
}

void Subspace::recompute_pivots() {
    pivots_.clear();
    for (const auto& row : basis_) {
        for (int j = 0; j < ambient_; ++j)
            if (row[static_cast<size_t>(j)] != 0) { pivots_.push_back(j); break; }
    }
}

void Subspace::check_compatible(const Subspace& o) const {
    if (q_ != o.q_ || ambient_ != o.ambient_)
        throw std::invalid_argument("Subspace: ambient mismatch");
}

bool Subspace::contains(const FqVec& x) const {
    FqVec r = x;
    for (size_t t = 0; t < basis_.size(); ++t) {
        const long long c = r[static_cast<size_t>(pivots_[t])];
        if (c == 0) continue;
        for (int j = 0; j < ambient_; ++j) {
            long long v = r[static_cast<size_t>(j)] - c * basis_[t][static_cast<size_t>(j)] % q_;
            v %= q_;
            if (v < 0) v += q_;
            r[static_cast<size_t>(j)] = v;
        }
    }
    for (long long v : r)
        if (v != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

FqVec Subspace::coordinates(const FqVec& x) const {
    // RREF basis: the coordinate of x on basis row t is x at the pivot column.
    FqVec c(basis_.size(), 0);
    for (size_t t = 0; t < basis_.size(); ++t) c[t] = x[static_cast<size_t>(pivots_[t])];
    return c;
}

FqVec Subspace::quotient_image(const FqVec& x) const {
    FqVec r = x;
    for (size_t t = 0; t < basis_.size(); ++t) {
        const long long c = r[static_cast<size_t>(pivots_[t])];
        if (c == 0) continue;
        for (int j = 0; j < ambient_; ++j) {
            long long v = r[static_cast<size_t>(j)] - c * basis_[t][static_cast<size_t>(j)] % q_;
            v %= q_;
            if (v < 0) v += q_;
            r[static_cast<size_t>(j)] = v;
        }
    }
    FqVec y;
    y.reserve(static_cast<size_t>(ambient_ - dim()));
    size_t t = 0;
    for (int j = 0; j < ambient_; ++j) {
        if (t < pivots_.size() && pivots_[t] == j) { ++t; continue; }
        y.push_back(r[static_cast<size_t>(j)]);
    }
    return y;
}

Subspace Subspace::quotient_image(const Subspace& s) const {
    check_compatible(s);
    std::vector<FqVec> rows;
    for (const auto& v : s.basis()) rows.push_back(quotient_image(v));
    return Subspace::span(rows, ambient_ - dim(), q_);
}

FqVec Subspace::quotient_lift(const FqVec& y) const {
    FqVec x(static_cast<size_t>(ambient_), 0);
    size_t t = 0, k = 0;
    for (int j = 0; j < ambient_; ++j) {
        if (t < pivots_.size() && pivots_[t] == j) { ++t; continue; }
        x[static_cast<size_t>(j)] = y[k++];
    }
    return x;
}

Subspace Subspace::restricted(const Subspace& sub) const {
    check_compatible(sub);
    std::vector<FqVec> rows;
    for (const auto& v : sub.basis()) {
        if (!contains(v)) throw std::invalid_argument("Subspace::restricted: not a subspace");
        rows.push_back(coordinates(v));
    }
    return Subspace::span(rows, dim(), q_);
}

Subspace Subspace::apply(const FqMatrix& g) const {
    if (g.rows() != ambient_ || g.cols() != ambient_)
        throw std::invalid_argument("Subspace::apply: size mismatch");
    std::vector<FqVec> rows;
    for (const auto& v : basis_) rows.push_back(fq_matvec(v, g));
    return Subspace::span(rows, ambient_, q_);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    std::vector<FqVec> rows = a.basis_;
    rows.insert(rows.end(), b.basis_.begin(), b.basis_.end());
    return Subspace::span(rows, a.ambient_, a.q_);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    // Zassenhaus: reduce rows [x|x] for x in a and [y|0] for y in b; rows with
    // zero left half carry an intersection basis in the right half.
    const int d = a.ambient_;
    std::vector<FqVec> rows;
    for (const auto& x : a.basis_) {
        FqVec r(static_cast<size_t>(2 * d), 0);
        for (int j = 0; j < d; ++j) r[static_cast<size_t>(j)] = r[static_cast<size_t>(j + d)] = x[static_cast<size_t>(j)];
        rows.push_back(std::move(r));
    }
    for (const auto& y : b.basis_) {
        FqVec r(static_cast<size_t>(2 * d), 0);
        for (int j = 0; j < d; ++j) r[static_cast<size_t>(j)] = y[static_cast<size_t>(j)];
        rows.push_back(std::move(r));
    }
    FqMatrix m(a.q_, std::move(rows), 2 * d);
    m.rref();
    std::vector<FqVec> inter;
    for (int i = 0; i < m.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < d; ++j)
            if (m.at(i, j) != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        FqVec v(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) v[static_cast<size_t>(j)] = m.at(i, j + d);
        inter.push_back(std::move(v));
    }
    return Subspace::span(inter, d, a.q_);
}

std::vector<Subspace> enumerate_subspaces(int d, int k, long long q, const Guards& guards) {
    guards.check(d, q);
    if (k < 0 || k > d) throw std::domain_error("enumerate_subspaces: 0 <= k <= d required");
    std::vector<Subspace> out;
    // iterate pivot column sets, then free entries of the RREF pattern
    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
    auto emit_pattern = [&]() {
        // free positions: (row t, col c) with c > piv[t], c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        for (int t = 0; t < k; ++t)
            for (int c = piv[static_cast<size_t>(t)] + 1; c < d; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end())
                    free_pos.emplace_back(t, c);
        std::vector<long long> vals(free_pos.size(), 0);
        while (true) {
            std::vector<FqVec> rows(static_cast<size_t>(k), FqVec(static_cast<size_t>(d), 0));
            for (int t = 0; t < k; ++t) rows[static_cast<size_t>(t)][static_cast<size_t>(piv[static_cast<size_t>(t)])] = 1;
            for (size_t s = 0; s < free_pos.size(); ++s)
                rows[static_cast<size_t>(free_pos[s].first)][static_cast<size_t>(free_pos[s].second)] = vals[s];
            Subspace sp = Subspace::span(rows, d, q);
            out.push_back(std::move(sp));
            size_t s = 0;
            while (s < vals.size() && vals[s] == q - 1) { vals[s] = 0; ++s; }
            if (s == vals.size()) break;
            ++vals[s];
        }
    };
    if (k == 0) {
        out.push_back(Subspace::zero(d, q));
        return out;
    }
    while (true) {
        emit_pattern();
        // next pivot combination
        int t = k - 1;
        while (t >= 0 && piv[static_cast<size_t>(t)] == d - k + t) --t;
        if (t < 0) break;
        ++piv[static_cast<size_t>(t)];
        for (int s = t + 1; s < k; ++s) piv[static_cast<size_t>(s)] = piv[static_cast<size_t>(s - 1)] + 1;
    }
    return out;
}

Flag Flag::from_steps(Composition type, std::vector<Subspace> steps) {
    if (static_cast<size_t>(type.size()) != steps.size())
        throw std::invalid_argument("Flag: step count mismatch");
    Flag f;
    f.type_ = std::move(type);
    f.steps_ = std::move(steps);
    if (!f.steps_.empty()) {
        f.zero_ = Subspace::zero(f.steps_.back().ambient(), f.steps_.back().q());
        int prev = 0;
        const Subspace* last = &f.zero_;
        for (int i = 0; i < f.type_.size(); ++i) {
            const Subspace& s = f.steps_[static_cast<size_t>(i)];
            if (!s.contains(*last)) throw std::invalid_argument("Flag: steps not nested");
            if (s.dim() - prev != f.type_[i])
                throw std::invalid_argument("Flag: step dimension mismatch");
            prev = s.dim();
            last = &s;
        }
        if (f.steps_.back().dim() != f.steps_.back().ambient())
            throw std::invalid_argument("Flag: last step must be the ambient space");
    }
    return f;
}

const Subspace& Flag::step(int i) const {
    if (i == 0) return zero_;
    return steps_[static_cast<size_t>(i - 1)];
}

Flag Flag::intersect_with(const Subspace& e) const {
    std::vector<Subspace> steps;
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i <= nsteps(); ++i) {
        Subspace s = e.restricted(intersect(step(i), e));
        parts.push_back(s.dim() - prev);
        prev = s.dim();
        steps.push_back(std::move(s));
    }
    return from_steps(Composition(std::move(parts)), std::move(steps));
}

Flag Flag::quotient_by(const Subspace& u) const {
    std::vector<Subspace> steps;
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i <= nsteps(); ++i) {
        Subspace s = u.quotient_image(step(i));
        parts.push_back(s.dim() - prev);
        prev = s.dim();
        steps.push_back(std::move(s));
    }
    return from_steps(Composition(std::move(parts)), std::move(steps));
}

Flag Flag::apply(const FqMatrix& g) const {
    std::vector<Subspace> steps;
    for (int i = 1; i <= nsteps(); ++i) steps.push_back(step(i).apply(g));
    return from_steps(type_, std::move(steps));
}

std::vector<Flag> enumerate_flags(const Composition& type, int d, long long q,
                                  const Guards& guards) {
    guards.check(d, q);
    if (type.total() != d) throw std::invalid_argument("enumerate_flags: type total != d");
    std::vector<std::vector<Subspace>> partial{{}};
    for (int i = 0; i < type.size(); ++i) {
        std::vector<std::vector<Subspace>> next;
        for (const auto& chain : partial) {
            const Subspace base = chain.empty() ? Subspace::zero(d, q) : chain.back();
            const int quot_dim = d - base.dim();
            for (const auto& t : enumerate_subspaces(quot_dim, type[i], q, guards)) {
                // lift t through the quotient by base
                std::vector<FqVec> rows = base.basis();
                for (const auto& y : t.basis()) rows.push_back(base.quotient_lift(y));
                Subspace lifted = Subspace::span(rows, d, q);
                auto c = chain;
                c.push_back(std::move(lifted));
                next.push_back(std::move(c));
            }
        }
        partial = std::move(next);
    }
    std::vector<Flag> out;
    out.reserve(partial.size());
    for (auto& chain : partial) out.push_back(Flag::from_steps(type, std::move(chain)));
    return out;
}

long long gaussian_binomial_int(int d, int k, long long q) {
    if (k < 0 || k > d) return 0;
    __int128 num = 1, den = 1;
    for (int t = 1; t <= k; ++t) {
        __int128 qp = 1;
        for (int s = 0; s < d - k + t; ++s) qp *= q;
        num *= qp - 1;
        __int128 qt = 1;
        for (int s = 0; s < t; ++s) qt *= q;
        den *= qt - 1;
    }
    __int128 r = num / den;
    if (num % den != 0) throw std::logic_error("gaussian_binomial_int: not integral");
    if (r > INT64_MAX) throw std::overflow_error("gaussian_binomial_int: overflow");
    return static_cast<long long>(r);
}

long long flag_count(const Composition& type, long long q) {
    long long count = 1;
    int remaining = type.total();
    for (int i = 0; i < type.size(); ++i) {
        count *= gaussian_binomial_int(remaining, type[i], q);
        remaining -= type[i];
    }
    return count;
}

MatrixType orbit_type(const Flag& V, const Flag& F) {
    if (V.ambient() != F.ambient() || V.q() != F.q())
        throw std::invalid_argument("orbit_type: ambient mismatch");
    const int n = V.nsteps();
    if (F.nsteps() != n) throw std::invalid_argument("orbit_type: step count mismatch");
    MatrixType m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int a = sum(V.step(i - 1), intersect(V.step(i), F.step(j))).dim();
            const int b = sum(V.step(i - 1), intersect(V.step(i), F.step(j - 1))).dim();
            m.set(i, j, a - b);
        }
    return m;
}

MatrixType orbit_type(const FlagPair& p) { return orbit_type(p.V, p.F); }

FlagPair representative(const MatrixType& m, long long q) {
    const int n = m.size();
    const int d = m.degree();
    // cells in lex order; cell (i, j) occupies m_ij consecutive coordinates
    std::vector<std::pair<int, int>> cell_of(static_cast<size_t>(d));
    {
        int pos = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int t = 0; t < m.entry(i, j); ++t) cell_of[static_cast<size_t>(pos++)] = {i, j};
    }
    auto build = [&](bool by_row) {
        std::vector<Subspace> steps;
        std::vector<int> parts;
        int prev = 0;
        for (int lvl = 1; lvl <= n; ++lvl) {
            std::vector<FqVec> rows;
            for (int p = 0; p < d; ++p) {
                const auto [ci, cj] = cell_of[static_cast<size_t>(p)];
                if ((by_row ? ci : cj) <= lvl) {
                    FqVec e(static_cast<size_t>(d), 0);
                    e[static_cast<size_t>(p)] = 1;
                    rows.push_back(std::move(e));
                }
            }
            Subspace s = Subspace::span(rows, d, q);
            parts.push_back(s.dim() - prev);
            prev = s.dim();
            steps.push_back(std::move(s));
        }
        return Flag::from_steps(Composition(std::move(parts)), std::move(steps));
    };
    return FlagPair{build(true), build(false)};
}

long long gl_order(int d, long long q) {
    __int128 o = 1;
    __int128 qd = 1;
    for (int s = 0; s < d; ++s) qd *= q;
    __int128 qk = 1;
    for (int k = 0; k < d; ++k) {
        o *= qd - qk;
        if (o > INT64_MAX) throw std::overflow_error("gl_order: overflow");
        qk *= q;
    }
    return static_cast<long long>(o);
}

long long orbit_size(const MatrixType& m, long long q, const Guards& guards) {
    const int d = m.degree();
    guards.check(d, q);
    // transitivity on the first factor: |O_M| = |F_ro| * #{F : (V0, F) in O_M}
    const FlagPair rep = representative(m, q);
    long long hits = 0;
    for (const auto& f : enumerate_flags(m.co(), d, q, guards))
        if (orbit_type(rep.V, f) == m) ++hits;
    return flag_count(m.ro(), q) * hits;
}

long long stabilizer_order(const MatrixType& m, long long q, const Guards& guards) {
    const long long orbit = orbit_size(m, q, guards);
    const long long gl = gl_order(m.degree(), q);
    if (gl % orbit != 0) throw std::logic_error("stabilizer_order: orbit does not divide group");
    return gl / orbit;
}

long long stabilizer_order_direct(const MatrixType& m, long long q) {
    const int d = m.degree();
    if (d > 2) throw std::domain_error("stabilizer_order_direct: d <= 2 only");
    const FlagPair rep = representative(m, q);
    long long count = 0;
    for (const auto& g : all_gl(d, q))
        if (rep.V.apply(g) == rep.V && rep.F.apply(g) == rep.F) ++count;
    return count;
}

FqMatrix random_gl(int d, long long q, std::mt19937& rng) {
    std::uniform_int_distribution<long long> dist(0, q - 1);
    while (true) {
        FqMatrix g(q, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g.set(i, j, dist(rng));
        if (d == 0 || fq_invertible(g)) return g;
    }
}

std::vector<FqMatrix> all_gl(int d, long long q) {
    std::vector<FqMatrix> out;
    const int cells = d * d;
    std::vector<long long> vals(static_cast<size_t>(cells), 0);
    while (true) {
        FqMatrix g(q, d, d);
        for (int p = 0; p < cells; ++p) g.set(p / d, p % d, vals[static_cast<size_t>(p)]);
        if (d == 0 || fq_invertible(g)) out.push_back(g);
        size_t s = 0;
        while (s < vals.size() && vals[s] == q - 1) { vals[s] = 0; ++s; }
        if (s == vals.size()) break;
        ++vals[s];
    }
    return out;
}

} // namespace qgl
