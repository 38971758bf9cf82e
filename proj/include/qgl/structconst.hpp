#pragma once

#include <map>
#include <mutex>
#include <string>

#include "qgl/flaggeo.hpp"

namespace qgl {

// Product twist exponents in v-units, functions of the factor degrees only;
// the left factor plays the subobject role throughout.
struct TwistExponents {
    long long circ;  // shift of the subspace-counting product
    long long dot;   // shift of the h-sum product
    long long multh; // shift relating the two
};
TwistExponents twist_exponents(const MatrixType& mpp, const MatrixType& mp);
// chi*(deg M'', deg M'): exponent with  1_{M''} . 1_{M'} = v^{chi*} (1_{M''} * 1_{M'}).
long long chi_star_exponent(const MatrixType& mpp, const MatrixType& mp);

// Fixture-level counters; the canonical fixtures are representative-based and
// the counts are representative independent (property-tested, not assumed).
long long c_count(const MatrixType& M, const MatrixType& N, const FlagPair& vf,
                  const Guards& guards);
long long g_count(const MatrixType& Mpp, const MatrixType& Mp, const FlagPair& vf,
                  const Guards& guards);
// V is a flag on F_q^d with V cap D'' and V mod D'' matching the fixtures;
// Fsub lives in F_q^{d''} (the first-coordinates block), Fquot in F_q^{d'}.
long long h_count(const MatrixType& M, const Flag& V, const Flag& Fsub, const Flag& Fquot,
                  long long q, const Guards& guards);
// Direct-sum lift of two representative V-flags into F_q^{d''+d'}.
Flag lift_flag(const Flag& vsub, const Flag& vquot);

// Memoized structure constants with optional line-JSON persistence. Inserts
// are write-once: recomputing a key must reproduce the stored value.
class StructureContext {
public:
    explicit StructureContext(Guards guards = Guards{}) : guards_(guards) {}

    long long c(const MatrixType& L, const MatrixType& M, const MatrixType& N, long long q);
    long long h(const MatrixType& M, const MatrixType& Mpp, const MatrixType& Mp, long long q);
    long long g(const MatrixType& M, const MatrixType& Mpp, const MatrixType& Mp, long long q);
    long long a(const MatrixType& M, long long q);

    const Guards& guards() const { return guards_; }

    long long computed() const { return computed_; }
    long long served() const { return served_; }

    // Line-delimited JSON records under <dir>/structconst.jsonl.
    void load(const std::string& dir);
    void save(const std::string& dir) const;
    size_t size() const { return cache_.size(); }

private:
    struct Key {
        char kind;
        long long q;
        std::vector<MatrixType> ms;
        friend bool operator<(const Key& a, const Key& b) {
            if (a.kind != b.kind) return a.kind < b.kind;
            if (a.q != b.q) return a.q < b.q;
            return a.ms < b.ms;
        }
    };

    long long memoized(Key key, long long (*compute)(const Key&, const Guards&));
    void insert_checked(const Key& key, long long value);

    Guards guards_;
    mutable std::mutex mu_;
    std::map<Key, long long> cache_;
    long long computed_ = 0;
    long long served_ = 0;
};

} // namespace qgl
