#pragma once

#include <string>
#include <vector>

#include "qgl/kelement.hpp"

namespace qgl {

struct Failure {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    int n = 0;
    long long q = 0;
    long long instances = 0;
    std::vector<Failure> failures;
    bool ok() const { return failures.empty(); }
};

// One cell of the degree-2 relation tables at n=2: the structure constant
// at orbit L for the ordered product left*right, together with the product
// twist exponent in v-units.
struct TableCell {
    MatrixType L, left, right;
    long long value;
    long long shift;
};
// circ_model=true: subspace counts (g) with the f1-f2 shift; false: flag
// counts (h) with the h-sum shift.
std::vector<TableCell> relation_table_cells(bool circ_model, long long q);

Report verify_relation_tables(bool circ_model, long long q, StructureContext& ctx);
Report verify_relations(EmbedModel model, int n, long long q, StructureContext& ctx);
Report verify_pbw(int n, int dmax, long long q, StructureContext& ctx);
Report verify_newpbw(int n, int dmax, long long q, StructureContext& ctx);
// sample == 0 checks every compatible instance of total degree d.
Report verify_green(int n, int d, long long q, StructureContext& ctx, int sample = 0,
                    unsigned seed = 1);
Report verify_mult_h(int n, int dmax, long long q, StructureContext& ctx);
Report verify_determinant(int n, long long q, StructureContext& ctx);
Report verify_hopf(int n);
Report verify_coassoc(int n, int dmax, long long q, StructureContext& ctx);
Report verify_tilde_hom(int n, long long q, StructureContext& ctx);
Report verify_twist_iso(int n, long long q, StructureContext& ctx);
Report verify_tau(int n, long long q, StructureContext& ctx);
// Divided-power ladder 1_e o 1_{ne} = [n+1] 1_{(n+1)e} plus the symbolic laws.
Report verify_divided(int nmax, long long q, StructureContext& ctx);

} // namespace qgl
