#include "qgl/structconst.hpp"

#include <fstream>

#include <json.hpp>

namespace qgl {

namespace {

long long cross_sum(const Composition& right, const Composition& left) {
    // sum over a < b of right_a * left_b
    long long s = 0;
    for (int a = 0; a < right.size(); ++a)
        for (int b = a + 1; b < left.size(); ++b)
            s += static_cast<long long>(right[a]) * left[b];
    return s;
}

} // namespace

TwistExponents twist_exponents(const MatrixType& mpp, const MatrixType& mp) {
    const Composition cpp = mpp.ro(), dpp = mpp.co();
    const Composition cp = mp.ro(), dp = mp.co();
    const long long total = static_cast<long long>(mpp.degree()) * mp.degree();
    TwistExponents t{};
    t.circ = cross_sum(cp, cpp) + cross_sum(dp, dpp) + total;
    t.dot = -cross_sum(cp, cpp) + cross_sum(dp, dpp);
    t.multh = t.dot + 3 * total;
    return t;
}

long long chi_star_exponent(const MatrixType& mpp, const MatrixType& mp) {
    return cross_sum(mp.ro(), mpp.ro()) - cross_sum(mp.co(), mpp.co());
}

long long c_count(const MatrixType& M, const MatrixType& N, const FlagPair& vf,
                  const Guards& guards) {
    const long long q = vf.V.q();
    const int d = vf.V.ambient();
    if (M.degree() != d || N.degree() != d) return 0;
    if (!(M.ro() == vf.V.type() && N.co() == vf.F.type() && M.co() == N.ro())) return 0;
    long long count = 0;
    for (const auto& mid : enumerate_flags(M.co(), d, q, guards))
        if (orbit_type(vf.V, mid) == M && orbit_type(mid, vf.F) == N) ++count;
    return count;
}

long long g_count(const MatrixType& Mpp, const MatrixType& Mp, const FlagPair& vf,
                  const Guards& guards) {
    const long long q = vf.V.q();
    const int d = vf.V.ambient();
    if (Mpp.degree() + Mp.degree() != d) return 0;
    long long count = 0;
    for (const auto& e : enumerate_subspaces(d, Mpp.degree(), q, guards)) {
        if (orbit_type(vf.V.intersect_with(e), vf.F.intersect_with(e)) != Mpp) continue;
        if (orbit_type(vf.V.quotient_by(e), vf.F.quotient_by(e)) != Mp) continue;
        ++count;
    }
    return count;
}

Flag lift_flag(const Flag& vsub, const Flag& vquot) {
    const int dpp = vsub.ambient(), dp = vquot.ambient();
    const int d = dpp + dp;
    const long long q = vsub.q();
    const int n = vsub.nsteps();
    std::vector<Subspace> steps;
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        std::vector<FqVec> rows;
        for (const auto& v : vsub.step(i).basis()) {
            FqVec x(static_cast<size_t>(d), 0);
            for (int j = 0; j < dpp; ++j) x[static_cast<size_t>(j)] = v[static_cast<size_t>(j)];
            rows.push_back(std::move(x));
        }
        for (const auto& v : vquot.step(i).basis()) {
            FqVec x(static_cast<size_t>(d), 0);
            for (int j = 0; j < dp; ++j) x[static_cast<size_t>(dpp + j)] = v[static_cast<size_t>(j)];
            rows.push_back(std::move(x));
        }
        Subspace s = Subspace::span(rows, d, q);
        parts.push_back(s.dim() - prev);
        prev = s.dim();
        steps.push_back(std::move(s));
    }
    return Flag::from_steps(Composition(std::move(parts)), std::move(steps));
}

long long h_count(const MatrixType& M, const Flag& V, const Flag& Fsub, const Flag& Fquot,
                  long long q, const Guards& guards) {
    const int d = V.ambient();
    const int dpp = Fsub.ambient();
    std::vector<FqVec> first(static_cast<size_t>(dpp), FqVec(static_cast<size_t>(d), 0));
    for (int i = 0; i < dpp; ++i) first[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    const Subspace dsub = Subspace::span(first, d, q);
    long long count = 0;
    for (const auto& f : enumerate_flags(M.co(), d, q, guards)) {
        if (orbit_type(V, f) != M) continue;
        if (!(f.intersect_with(dsub) == Fsub)) continue;
        if (!(f.quotient_by(dsub) == Fquot)) continue;
        ++count;
    }
    return count;
}

long long StructureContext::memoized(Key key, long long (*compute)(const Key&, const Guards&)) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            ++served_;
            return it->second;
        }
    }
    const long long value = compute(key, guards_);
    insert_checked(key, value);
    return value;
}

void StructureContext::insert_checked(const Key& key, long long value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(key, value);
    if (inserted) {
        ++computed_;
    } else if (it->second != value) {
        throw std::logic_error("StructureContext: conflicting value for cached key");
    }
}

long long StructureContext::c(const MatrixType& L, const MatrixType& M, const MatrixType& N,
                              long long q) {
    if (!(L.ro() == M.ro() && L.co() == N.co() && M.co() == N.ro())) return 0;
    if (L.degree() != M.degree() || L.degree() != N.degree()) return 0;
    return memoized(Key{'c', q, {L, M, N}}, [](const Key& k, const Guards& g) {
        g.check(k.ms[0].degree(), k.q);
        return c_count(k.ms[1], k.ms[2], representative(k.ms[0], k.q), g);
    });
}

long long StructureContext::h(const MatrixType& M, const MatrixType& Mpp, const MatrixType& Mp,
                              long long q) {
    if (!(M.ro() == Mpp.ro() + Mp.ro() && M.co() == Mpp.co() + Mp.co())) return 0;
    return memoized(Key{'h', q, {M, Mpp, Mp}}, [](const Key& k, const Guards& g) {
        g.check(k.ms[0].degree(), k.q);
        const FlagPair sub = representative(k.ms[1], k.q);
        const FlagPair quot = representative(k.ms[2], k.q);
        return h_count(k.ms[0], lift_flag(sub.V, quot.V), sub.F, quot.F, k.q, g);
    });
}

long long StructureContext::g(const MatrixType& M, const MatrixType& Mpp, const MatrixType& Mp,
                              long long q) {
    if (!(M.ro() == Mpp.ro() + Mp.ro() && M.co() == Mpp.co() + Mp.co())) return 0;
    return memoized(Key{'g', q, {M, Mpp, Mp}}, [](const Key& k, const Guards& g) {
        g.check(k.ms[0].degree(), k.q);
        return g_count(k.ms[1], k.ms[2], representative(k.ms[0], k.q), g);
    });
}

long long StructureContext::a(const MatrixType& M, long long q) {
    return memoized(Key{'a', q, {M}}, [](const Key& k, const Guards& g) {
        return stabilizer_order(k.ms[0], k.q, g);
    });
}

namespace {

nlohmann::json matrix_to_json(const MatrixType& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 1; j <= m.size(); ++j) row.push_back(m.entry(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixType matrix_from_json(const nlohmann::json& j) {
    const int n = static_cast<int>(j.size());
    std::vector<int> entries;
    for (const auto& row : j) {
        if (static_cast<int>(row.size()) != n)
            throw std::runtime_error("matrix record is not square");
        for (const auto& x : row) entries.push_back(x.get<int>());
    }
    return MatrixType(n, std::move(entries));
}

} // namespace

void StructureContext::load(const std::string& dir) {
    std::ifstream in(dir + "/structconst.jsonl");
    if (!in.is_open()) return; // nothing cached yet
    std::string line;
    long long lineno = 0;
    std::lock_guard<std::mutex> lock(mu_);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const nlohmann::json j = nlohmann::json::parse(line);
            Key key;
            const std::string kind = j.at("kind").get<std::string>();
            if (kind.size() != 1 || std::string("chga").find(kind) == std::string::npos)
                throw std::runtime_error("unknown kind");
            key.kind = kind[0];
            key.q = j.at("q").get<long long>();
            const int n = j.at("n").get<int>();
            for (const auto& jm : j.at("matrices")) {
                MatrixType m = matrix_from_json(jm);
                if (m.size() != n) throw std::runtime_error("matrix size != n");
                key.ms.push_back(std::move(m));
            }
            const long long value = j.at("value").get<long long>();
            auto [it, inserted] = cache_.emplace(std::move(key), value);
            if (!inserted && it->second != value)
                throw std::runtime_error("conflicting cached value");
        } catch (const std::exception& e) {
            throw std::runtime_error("cache: bad record at line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
}

void StructureContext::save(const std::string& dir) const {
    std::ofstream out(dir + "/structconst.jsonl", std::ios::trunc);
    if (!out.is_open()) throw std::runtime_error("cache: cannot write to " + dir);
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [key, value] : cache_) {
        nlohmann::json j;
        j["kind"] = std::string(1, key.kind);
        j["q"] = key.q;
        j["n"] = key.ms.empty() ? 0 : key.ms[0].size();
        nlohmann::json ms = nlohmann::json::array();
        for (const auto& m : key.ms) ms.push_back(matrix_to_json(m));
        j["matrices"] = std::move(ms);
        j["value"] = value;
        out << j.dump() << "\n";
    }
}

} // namespace qgl
