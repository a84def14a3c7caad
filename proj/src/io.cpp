#include "qchoquet/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

namespace qchoquet::io {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    for (const auto& [key, unused] : j.items()) {
        (void)unused;
        if (!allowed.count(key)) throw ParseError(where + ": unknown field \"" + key + "\"");
    }
}

SubsetKey parse_subset(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": subset must be an array of integers");
    std::vector<int> elems;
    for (const json& e : j) {
        if (!e.is_number_integer()) throw ParseError(where + ": subset elements must be integers");
        elems.push_back(e.get<int>());
    }
    try {
        return SubsetKey(std::move(elems));
    } catch (const Error& err) {
        throw ParseError(where + ": " + err.what());
    }
}

}  // namespace

HermitianMatrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix literal: expected a non-empty array of rows");
    const int d = static_cast<int>(j.size());
    CMatrix m(d);
    for (int i = 0; i < d; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d)
            throw ParseError("matrix literal: row " + std::to_string(i) + " must have " +
                             std::to_string(d) + " entries");
        for (int k = 0; k < d; ++k) {
            const json& entry = row[static_cast<size_t>(k)];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
                throw ParseError("matrix literal: entry must be [re, im]");
            m(i, k) = cplx(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    try {
        return HermitianMatrix(m);
    } catch (const NotHermitian& e) {
        throw ParseError(std::string("matrix literal: ") + e.what());
    }
}

json matrix_to_json(const HermitianMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(json::array({m.at(i, j).real(), m.at(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixCapacity parse_lattice(const json& j) {
    reject_unknown_fields(j, {"n", "d", "entries"}, "lattice file");
    if (!j.contains("n") || !j.contains("d") || !j.contains("entries"))
        throw ParseError("lattice file: need fields n, d, entries");
    MatrixCapacity c;
    c.n = j["n"].get<int>();
    c.dim = j["d"].get<int>();
    if (c.n < 1 || c.n > kMaxOmega) throw ParseError("lattice file: n out of range 1..20");
    if (c.dim < 1) throw ParseError("lattice file: d must be >= 1");

    for (const json& entry : j["entries"]) {
        reject_unknown_fields(entry, {"subset", "matrix"}, "lattice entry");
        const SubsetKey key = parse_subset(entry.at("subset"), "lattice entry");
        for (int r : key.elements())
            if (r > c.n) throw ParseError("lattice entry: element exceeds n");
        HermitianMatrix mat = parse_matrix(entry.at("matrix"));
        if (mat.dim() != c.dim) throw ParseError("lattice entry " + key.to_string() + ": wrong dimension");
        if (!c.table.emplace(key, std::move(mat)).second)
            throw ParseError("lattice entry " + key.to_string() + ": duplicate subset");
    }
    // Empty set and Omega may be omitted.
    c.table.emplace(SubsetKey::empty_set(), HermitianMatrix::zero(c.dim));
    c.table.emplace(SubsetKey::full_set(c.n), HermitianMatrix::identity(c.dim));
    if (!c.complete()) throw ParseError("lattice file: table does not cover all 2^n subsets");
    return c;
}

json lattice_to_json(const MatrixCapacity& c) {
    json entries = json::array();
    for (const auto& [key, mat] : c.table) {
        if (key.cardinality() == 0 || key.cardinality() == c.n) continue;
        entries.push_back({{"subset", subset_to_json(key)}, {"matrix", matrix_to_json(mat)}});
    }
    return {{"n", c.n}, {"d", c.dim}, {"entries", std::move(entries)}};
}

BuilderSpec parse_builder_spec(const json& j) {
    reject_unknown_fields(j, {"singletons", "weights"}, "builder spec");
    if (!j.contains("singletons")) throw ParseError("builder spec: need field singletons");
    BuilderSpec spec;
    for (const json& m : j["singletons"]) spec.singletons.push_back(parse_matrix(m));
    if (j.contains("weights")) {
        for (const json& w : j["weights"]) {
            reject_unknown_fields(w, {"subset", "mu"}, "builder weight");
            const SubsetKey key = parse_subset(w.at("subset"), "builder weight");
            std::map<int, double> mus;
            for (const auto& [elem, value] : w.at("mu").items()) {
                size_t pos = 0;
                int r = 0;
                try {
                    r = std::stoi(elem, &pos);
                } catch (const std::exception&) {
                    pos = 0;
                }
                if (pos != elem.size())
                    throw ParseError("builder weight: mu key \"" + elem + "\" is not an element index");
                mus[r] = value.get<double>();
            }
            spec.weights[key] = std::move(mus);
        }
    }
    return spec;
}

ExpectationVector parse_expectation(const json& j) {
    reject_unknown_fields(j, {"values"}, "expectation file");
    if (!j.contains("values") || !j["values"].is_array())
        throw ParseError("expectation file: need array field values");
    ExpectationVector ev;
    for (const json& v : j["values"]) {
        if (!v.is_number()) throw ParseError("expectation file: values must be numbers");
        ev.values.push_back(v.get<double>());
    }
    return ev;
}

json expectation_to_json(const ExpectationVector& ev) { return {{"values", ev.values}}; }

json subset_to_json(const SubsetKey& k) { return json(k.elements()); }

json choquet_result_to_json(const ChoquetResult& r) {
    json chain = json::array();
    for (const SubsetKey& k : r.chain) chain.push_back(subset_to_json(k));
    return {{"matrix", matrix_to_json(r.matrix)},
            {"chain", std::move(chain)},
            {"increments", r.increments},
            {"flags", r.flags}};
}

json mobius_to_json(const MobiusTable& m) {
    json entries = json::array();
    for (const auto& [key, mat] : m.table)
        entries.push_back({{"subset", subset_to_json(key)}, {"matrix", matrix_to_json(mat)}});
    return {{"n", m.n}, {"d", m.dim}, {"entries", std::move(entries)},
            {"identity_residual", identity_residual(m)}};
}

json validation_to_json(const ValidationReport& r) {
    json violations = json::array();
    for (const CapacityViolation& v : r.violations)
        violations.push_back({{"smaller", subset_to_json(v.smaller)},
                              {"larger", subset_to_json(v.larger)}});
    return {{"ok", r.ok()}, {"violations", std::move(violations)}, {"warnings", r.warnings}};
}

json report_to_json(const ReconstructionReport& r) {
    json chain = json::array();
    for (const SubsetKey& k : r.chain) chain.push_back(subset_to_json(k));
    return {{"r1", matrix_to_json(r.r1)},
            {"eigenvalues", r.eigenvalues},
            {"reproduced", r.reproduced},
            {"errors", r.errors},
            {"absolute_errors", r.absolute_errors},
            {"chain", std::move(chain)},
            {"flags", r.flags}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qchoquet::io
