#include "catrep/json_io.hpp"

namespace catrep {

namespace {

json rational_to_json(const Rational& r) { return json::array({r.num(), r.den()}); }

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("parse", "rational must be [num, den]");
    return Rational(j[0].get<long long>(), j[1].get<long long>());
}

} // namespace

json to_json(const CycNumber& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(rational_to_json(c));
    return json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const json& j) {
    int conductor = j.at("conductor").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return CycNumber::from_coeffs(conductor, std::move(coeffs));
}

json to_json(const CycMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"conductor", m.conductor()}, {"entries", rows}};
}

CycMatrix cyc_matrix_from_json(const json& j) {
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    int conductor = j.value("conductor", 1);
    CycMatrix m(rows, cols, conductor);
    const json& entries = j.at("entries");
    if (int(entries.size()) != rows) throw ValidationError("parse", "matrix row count mismatch");
    for (int i = 0; i < rows; ++i) {
        if (int(entries[size_t(i)].size()) != cols) throw ValidationError("parse", "matrix column count mismatch");
        for (int c = 0; c < cols; ++c) m.set(i, c, cyc_from_json(entries[size_t(i)][size_t(c)]));
    }
    return m;
}

json to_json(const NatMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

NatMatrix nat_matrix_from_json(const json& j) {
    NatMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& entries = j.at("entries");
    if (int(entries.size()) != m.rows) throw ValidationError("parse", "matrix row count mismatch");
    for (int i = 0; i < m.rows; ++i) {
        if (int(entries[size_t(i)].size()) != m.cols) throw ValidationError("parse", "matrix column count mismatch");
        for (int c = 0; c < m.cols; ++c) {
            long long v = entries[size_t(i)][size_t(c)].get<long long>();
            if (v < 0) throw ValidationError("parse", "natural matrix entry is negative");
            m.at(i, c) = v;
        }
    }
    return m;
}

json to_json(const TwoMorphism& t) {
    json blocks = json::array();
    for (int i = 0; i < t.source.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < t.source.cols; ++j) row.push_back(to_json(t.block(i, j)));
        blocks.push_back(std::move(row));
    }
    return json{{"source", to_json(t.source)}, {"target", to_json(t.target)}, {"blocks", blocks}};
}

TwoMorphism two_morphism_from_json(const json& j) {
    NatMatrix source = nat_matrix_from_json(j.at("source"));
    NatMatrix target = nat_matrix_from_json(j.at("target"));
    std::vector<CycMatrix> blocks;
    for (const auto& row : j.at("blocks"))
        for (const auto& cell : row) blocks.push_back(cyc_matrix_from_json(cell));
    return make_two_morphism(std::move(source), std::move(target), std::move(blocks));
}

json to_json(const FiniteGroup& g) {
    json table = json::array();
    for (int a = 0; a < g.order; ++a) {
        json row = json::array();
        for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    json result{{"order", g.order}, {"table", table}};
    if (!g.name.empty()) result["name"] = g.name;
    return result;
}

GroupPtr group_from_json(const json& j) {
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    int declared = j.value("order", int(table.size()));
    if (declared != int(table.size())) throw ValidationError("parse", "declared order differs from table size");
    return validate_group(table, j.value("name", std::string{}));
}

json to_json(const CrossedModule& m) {
    return json{{"E", to_json(*m.principal)},
                {"G", to_json(*m.base)},
                {"boundary", m.boundary.map},
                {"action", m.action}};
}

XModPtr xmod_from_json(const json& j) {
    GroupPtr e = group_from_json(j.at("E"));
    GroupPtr g = group_from_json(j.at("G"));
    std::vector<int> boundary = j.at("boundary").get<std::vector<int>>();
    std::vector<std::vector<int>> action;
    for (const auto& row : j.at("action")) action.push_back(row.get<std::vector<int>>());
    return validate_xmod(std::move(e), std::move(g), std::move(boundary), std::move(action));
}

json to_json(const CatRep& r) {
    json base = json::array();
    for (const auto& p : r.base.perm) base.push_back(p);
    json chars = json::array();
    for (const auto& c : r.chars) chars.push_back(c.expmap);
    return json{{"dim", r.dim}, {"base", base}, {"chars", chars}};
}

CatRep rep_from_json(const XModPtr& xmod, const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<std::vector<int>> perm;
    for (const auto& row : j.at("base")) perm.push_back(row.get<std::vector<int>>());
    int m = xmod->principal->exponent();
    std::vector<AbelianCharacter> chars;
    for (const auto& row : j.at("chars")) {
        AbelianCharacter c;
        c.group = xmod->principal;
        c.modulus = m;
        c.expmap = row.get<std::vector<int>>();
        for (auto& k : c.expmap) k = ((k % m) + m) % m;
        chars.push_back(std::move(c));
    }
    return validate_rep(xmod, dim, PermAction{xmod->base, dim, std::move(perm)}, std::move(chars));
}

json to_json(const OneIntertwiner& h) {
    json action = json::object();
    for (size_t x = 0; x < h.action.size(); ++x) action[std::to_string(x)] = to_json(h.action[x]);
    return json{{"shape", to_json(h.shape)}, {"action", action}};
}

OneIntertwiner intertwiner_from_json(const CatRep& r, const CatRep& t, const json& j) {
    NatMatrix shape = nat_matrix_from_json(j.at("shape"));
    std::vector<TwoMorphism> action;
    const json& act = j.at("action");
    for (int x = 0; x < r.xmod->base->order; ++x) {
        auto it = act.find(std::to_string(x));
        if (it == act.end()) throw ValidationError("parse", "missing intertwiner component " + std::to_string(x));
        action.push_back(two_morphism_from_json(*it));
    }
    return validate_one_intertwiner(r, t, shape, action);
}

} // namespace catrep
