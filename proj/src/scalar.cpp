#include "qgl/scalar.hpp"

namespace qgl {

namespace {

using Terms = Scalar::Terms;

void add_term(Terms& t, int e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = t.find(e);
    if (it == t.end()) {
        t.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Terms mul_terms(const Terms& a, const Terms& b) {
    Terms r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
    return r;
}

Terms add_terms(const Terms& a, const Terms& b) {
    Terms r = a;
    for (const auto& [e, c] : b) add_term(r, e, c);
    return r;
}

Terms shift(const Terms& a, int k) {
    Terms r;
    for (const auto& [e, c] : a) r.emplace(e + k, c);
    return r;
}

Terms scale(const Terms& a, const Rational& s) {
    Terms r;
    for (const auto& [e, c] : a) add_term(r, e, c * s);
    return r;
}

int degree(const Terms& p) { return p.rbegin()->first; } // p nonempty

// Long division of ordinary polynomials (min exponent >= 0).
std::pair<Terms, Terms> poly_divmod(Terms a, const Terms& b) {
    Terms quot;
    const int db = degree(b);
    const Rational lb = b.rbegin()->second;
    while (!a.empty() && degree(a) >= db) {
        const int k = degree(a) - db;
        const Rational c = a.rbegin()->second / lb;
        add_term(quot, k, c);
        for (const auto& [e, cf] : b) add_term(a, e + k, -(cf * c));
    }
    return {quot, a};
}

Terms poly_gcd(Terms a, Terms b) {
    while (!b.empty()) {
        Terms r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, Rational(1) / a.rbegin()->second); // monic
    return a;
}

} // namespace

Scalar Scalar::of(const Rational& r) {
    Scalar s;
    if (!r.is_zero()) s.num_.emplace(0, r);
    return s;
}

Scalar Scalar::u_pow(int k) {
    Scalar s;
    s.num_.emplace(k, Rational(1));
    return s;
}

Scalar Scalar::from_terms(Terms t) {
    Scalar s;
    for (const auto& [e, c] : t) add_term(s.num_, e, c);
    return s;
}

bool Scalar::is_one() const {
    return num_.size() == 1 && num_.begin()->first == 0 &&
           num_.begin()->second == Rational(1) && den_.size() == 1;
}

bool Scalar::is_laurent() const {
    return den_.size() == 1 && den_.begin()->first == 0 &&
           den_.begin()->second == Rational(1);
}

Rational Scalar::rational_value() const {
    if (is_zero()) return Rational(0);
    if (!is_laurent() || num_.size() != 1 || num_.begin()->first != 0)
        throw std::domain_error("Scalar: not a rational constant");
    return num_.begin()->second;
}

void Scalar::canonicalize() {
    if (num_.empty()) {
        den_ = {{0, Rational(1)}};
        return;
    }
    const int e = num_.begin()->first;
    Terms n0 = shift(num_, -e);
    Terms g = poly_gcd(n0, den_);
    if (g.size() > 1 || degree(g) > 0) {
        n0 = poly_divmod(n0, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    const Rational lead = den_.rbegin()->second;
    if (!(lead == Rational(1))) {
        n0 = scale(n0, Rational(1) / lead);
        den_ = scale(den_, Rational(1) / lead);
    }
    num_ = shift(n0, e);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = scale(r.num_, Rational(-1));
    r.canonicalize();
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    if (a.den_ == b.den_) {
        r.num_ = add_terms(a.num_, b.num_);
        r.den_ = a.den_;
    } else {
        r.num_ = add_terms(mul_terms(a.num_, b.den_), mul_terms(b.num_, a.den_));
        r.den_ = mul_terms(a.den_, b.den_);
    }
    r.canonicalize();
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.num_ = mul_terms(a.num_, b.num_);
    r.den_ = mul_terms(a.den_, b.den_);
    r.canonicalize();
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    Scalar r;
    r.num_ = mul_terms(a.num_, b.den_);
    // b.num_ is Laurent; split off its u-power so the denominator stays a
    // polynomial with nonzero constant term.
    const int e = b.num_.begin()->first;
    r.den_ = mul_terms(a.den_, shift(b.num_, -e));
    r.num_ = shift(r.num_, -e);
    r.canonicalize();
    return r;
}

std::string Scalar::str() const {
    auto terms_str = [](const Terms& t) {
        std::string s;
        bool first = true;
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational cc = c;
            if (first) {
                if (cc.is_negative()) { s += "-"; cc = -cc; }
            } else {
                s += cc.is_negative() ? " - " : " + ";
                if (cc.is_negative()) cc = -cc;
            }
            first = false;
            std::string mono;
            if (e == 0) mono = "";
            else if (e % 2 == 0) mono = "v" + (e == 2 ? "" : "^" + std::to_string(e / 2));
            else mono = "u" + (e == 1 ? "" : "^" + std::to_string(e));
            if (mono.empty()) {
                s += cc.is_integer() ? std::to_string(cc.num()) : cc.str();
            } else {
                if (!(cc == Rational(1)))
                    s += (cc.is_integer() ? std::to_string(cc.num()) : cc.str()) + "*";
                s += mono;
            }
        }
        return s.empty() ? std::string("0") : s;
    };
    if (is_laurent()) return terms_str(num_);
    return "(" + terms_str(num_) + ")/(" + terms_str(den_) + ")";
}

Scalar q_integer(long long n) {
    if (n < 0) throw std::domain_error("q_integer: negative argument");
    Scalar::Terms t;
    for (long long k = 0; k < n; ++k) t.emplace(static_cast<int>(2 * (n - 1 - 2 * k)), Rational(1));
    return Scalar::from_terms(std::move(t));
}

Scalar q_factorial(long long n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    Scalar r = Scalar::one();
    for (long long k = 2; k <= n; ++k) r *= q_integer(k);
    return r;
}

Scalar q_binomial(long long m, long long n) {
    if (n < 0 || m < n) throw std::domain_error("q_binomial: requires m >= n >= 0");
    return q_factorial(m) / (q_factorial(n) * q_factorial(m - n));
}

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

Evaluated Evaluated::u_pow(long long q, long long k) {
    long long residue = ((k % 4) + 4) % 4;
    long long pow4 = (k - residue) / 4;
    Rational c(1);
    for (long long i = 0; i < (pow4 > 0 ? pow4 : -pow4); ++i)
        c = pow4 > 0 ? c * Rational(q) : c / Rational(q);
    std::array<Rational, 4> a{};
    a[static_cast<size_t>(residue)] = c;
    return Evaluated(q, a);
}

bool Evaluated::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Evaluated::is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Rational Evaluated::rational_value() const {
    if (!is_rational()) throw std::domain_error("Evaluated: not rational");
    return c_[0];
}

Evaluated Evaluated::operator-() const {
    Evaluated r(q_);
    for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
    return r;
}

Evaluated operator+(const Evaluated& a, const Evaluated& b) {
    a.check_same(b);
    Evaluated r(a.q_);
    for (int i = 0; i < 4; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Evaluated operator-(const Evaluated& a, const Evaluated& b) { return a + (-b); }

Evaluated operator*(const Evaluated& a, const Evaluated& b) {
    a.check_same(b);
    Evaluated r(a.q_);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rational p = a.c_[i] * b.c_[j];
            if (p.is_zero()) continue;
            int k = i + j;
            if (k >= 4) r.c_[k - 4] += p * Rational(a.q_);
            else r.c_[k] += p;
        }
    return r;
}

Evaluated Evaluated::inverse() const {
    if (is_zero()) throw std::domain_error("Evaluated: inverse of zero");
    // Solve (this * y) = 1 by Gaussian elimination on the 4x4 multiplication
    // matrix; u^4 - q irreducible makes the matrix invertible.
    Rational m[4][5];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(0);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            // column j: coefficients of x * u^j
            int k = i + j;
            if (k >= 4) m[k - 4][j] += c_[i] * Rational(q_);
            else m[k][j] += c_[i];
        }
    for (int i = 0; i < 4; ++i) m[i][4] = Rational(i == 0 ? 1 : 0);
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("Evaluated: singular inversion");
        for (int j = 0; j <= 4; ++j) std::swap(m[col][j], m[piv][j]);
        const Rational d = m[col][col];
        for (int j = col; j <= 4; ++j) m[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (int j = col; j <= 4; ++j) m[r][j] -= f * m[col][j];
        }
    }
    Evaluated y(q_);
    for (int i = 0; i < 4; ++i) y.c_[i] = m[i][4];
    return y;
}

Evaluated operator/(const Evaluated& a, const Evaluated& b) { return a * b.inverse(); }

std::string Evaluated::str() const {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    s += ") mod u^4-" + std::to_string(q_);
    return s;
}

Evaluated evaluate(const Scalar& a, long long q) {
    if (!is_prime(q)) throw std::domain_error("evaluate: q must be prime");
    auto eval_terms = [&](const Scalar::Terms& t) {
        Evaluated acc(q);
        for (const auto& [e, c] : t) acc += Evaluated::u_pow(q, e) * Evaluated::of(q, c);
        return acc;
    };
    const Evaluated num = eval_terms(a.num_terms());
    if (a.is_laurent()) return num;
    return num / eval_terms(a.den_terms());
}

} // namespace qgl
