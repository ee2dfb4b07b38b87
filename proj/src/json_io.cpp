#include "tambara/json_io.hpp"

#include <stdexcept>

namespace tambara {

json int_to_json(const Int& z) {
    // Stay a JSON number when the value fits; fall back to a decimal string.
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

json element_to_json(const BurnsideElement& x) {
    json coeffs = json::object();
    for (const auto& [k, a] : x.coeffs()) coeffs[std::to_string(k)] = int_to_json(a);
    return json{{"N", x.level().N}, {"M", x.level().M}, {"coeffs", coeffs}};
}

BurnsideElement element_from_json(const json& j) {
    BurnsideElement x({j.at("N").get<long>(), j.at("M").get<long>()});
    for (const auto& [key, value] : j.at("coeffs").items()) {
        x.set_coeff(std::stol(key), int_from_json(value));
    }
    return x;
}

json lattice_to_json(const IntLattice& L) {
    json basis = json::array();
    for (const auto& row : L.basis()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(int_to_json(x));
        basis.push_back(std::move(r));
    }
    return json{{"d", L.dim()}, {"basis", basis}};
}

IntLattice lattice_from_json(const json& j) {
    std::size_t d = j.at("d").get<std::size_t>();
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j.at("basis")) {
        std::vector<Int> row;
        for (const auto& x : r) row.push_back(int_from_json(x));
        rows.push_back(std::move(row));
    }
    return IntLattice::from_vectors(d, std::move(rows));
}

json gw_to_json(const GwClass& x) {
    return json{{"q", x.q}, {"m", x.m}, {"dim", int_to_json(x.dim)}, {"det", x.det}};
}

GwClass gw_from_json(const json& j) {
    GwClass x{j.at("q").get<long>(), j.at("m").get<long>(), int_from_json(j.at("dim")),
              j.at("det").get<int>()};
    validate_gw(x);
    return x;
}

json ideal_to_json(const TambaraIdeal& I) {
    json levels = json::object();
    for (const auto& [M, L] : I.levels) levels[std::to_string(M)] = lattice_to_json(L);
    return json{{"N", I.modulus}, {"levels", levels}};
}

TambaraIdeal ideal_from_json(const json& j) {
    TambaraIdeal I = TambaraIdeal::zero(j.at("N").get<long>());
    for (const auto& [key, value] : j.at("levels").items()) {
        long M = std::stol(key);
        auto it = I.levels.find(M);
        if (it == I.levels.end()) throw std::invalid_argument("ideal JSON: level does not divide N");
        it->second = lattice_from_json(value);
    }
    return I;
}

json generators_to_json(const GeneratorSet& g) {
    json arr = json::array();
    for (const auto& x : g.elements) arr.push_back(element_to_json(x));
    return arr;
}

GeneratorSet generators_from_json(const json& j) {
    GeneratorSet g;
    for (const auto& e : j) g.elements.push_back(element_from_json(e));
    return g;
}

json report_to_json(const VerifyReport& r) {
    json levels = json::object();
    for (const auto& l : r.levels) {
        json witness;
        if (l.witness) {
            witness = json::array();
            for (const auto& x : *l.witness) witness.push_back(int_to_json(x));
        }
        levels[std::to_string(l.M)] = json{{"expected", lattice_to_json(l.expected)},
                                           {"computed", lattice_to_json(l.computed)},
                                           {"equal", l.equal},
                                           {"witness", l.witness ? witness : json()}};
    }
    json checks = json::array();
    for (const auto& c : r.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return json{{"theorem", r.theorem}, {"pass", r.pass}, {"levels", levels}, {"checks", checks}};
}

}  // namespace tambara
