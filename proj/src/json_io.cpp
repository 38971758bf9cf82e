#include "qgl/json_io.hpp"

namespace qgl {

namespace {

nlohmann::json terms_json(const Scalar::Terms& t) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [e, c] : t) obj[std::to_string(e)] = c.str();
    return obj;
}

} // namespace

nlohmann::json scalar_json(const Scalar& s) {
    if (s.is_laurent()) return terms_json(s.num_terms());
    nlohmann::json j;
    j["num"] = terms_json(s.num_terms());
    j["den"] = terms_json(s.den_terms());
    return j;
}

nlohmann::json evaluated_json(const Evaluated& e) {
    nlohmann::json j;
    j["q"] = e.modulus();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : e.coeffs()) coeffs.push_back(c.str());
    j["coeffs"] = coeffs; // c0 + c1 u + c2 u^2 + c3 u^3
    return j;
}

nlohmann::json matrix_json(const MatrixType& m) {
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
            throw std::invalid_argument("matrix JSON is not square");
        for (const auto& x : row) entries.push_back(x.get<int>());
    }
    return MatrixType(n, std::move(entries));
}

nlohmann::json ncpoly_json(const NCPoly& p) {
    nlohmann::json j;
    j["kind"] = p.kind() == AlgebraKind::FRT ? "frt" : "dd";
    j["n"] = p.n();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : p.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (const Gen& g : w) word.push_back({g.row, g.col});
        terms.push_back({{"word", std::move(word)}, {"coeff", scalar_json(c)}});
    }
    j["terms"] = std::move(terms);
    j["text"] = p.str();
    return j;
}

nlohmann::json localized_json(const LocalizedElement& e) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [k, p] : e.parts())
        parts.push_back({{"detinv_power", k}, {"poly", ncpoly_json(p)}});
    nlohmann::json j;
    j["n"] = e.n();
    j["parts"] = std::move(parts);
    return j;
}

nlohmann::json kelement_json(const KElement& e) {
    nlohmann::json j;
    j["n"] = e.n();
    j["q"] = e.q();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : e.terms())
        terms.push_back({{"matrix", matrix_json(m)}, {"coeff", evaluated_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json ktensor_json(const KTensor& t) {
    nlohmann::json j;
    j["n"] = t.n();
    j["q"] = t.q();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mn, c] : t.terms())
        terms.push_back({{"left", matrix_json(mn.first)},
                         {"right", matrix_json(mn.second)},
                         {"coeff", evaluated_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json report_json(const Report& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["n"] = r.n;
    j["q"] = r.q;
    j["instances"] = r.instances;
    nlohmann::json fails = nlohmann::json::array();
    for (const Failure& f : r.failures)
        fails.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    j["failures"] = std::move(fails);
    return j;
}

std::string table_csv(bool circ_model, long long q, StructureContext& ctx) {
    std::string out = "L,M,N,value\n";
    for (const TableCell& cell : relation_table_cells(circ_model, q)) {
        const long long value = circ_model ? ctx.g(cell.L, cell.left, cell.right, q)
                                           : ctx.h(cell.L, cell.left, cell.right, q);
        out += "\"" + matrix_json(cell.L).dump() + "\",\"" + matrix_json(cell.left).dump() +
               "\",\"" + matrix_json(cell.right).dump() + "\"," + std::to_string(value) + "\n";
    }
    return out;
}

} // namespace qgl
