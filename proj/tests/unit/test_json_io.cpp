#include <doctest.h>

#include <random>

#include "tambara/json_io.hpp"

using namespace tambara;

namespace {

BurnsideElement elem(Level lv, std::initializer_list<std::pair<long, long>> cs) {
    auto x = BurnsideElement(lv);
    for (auto [k, a] : cs) x.set_coeff(k, a);
    return x;
}

}  // namespace

TEST_CASE("integers round-trip, including beyond 64 bits") {
    CHECK(int_from_json(int_to_json(Int(0))) == 0);
    CHECK(int_from_json(int_to_json(Int(-17))) == -17);
    CHECK(int_to_json(Int(42)).is_number_integer());
    Int big = Int("123456789012345678901234567890");
    auto j = int_to_json(big);
    CHECK(j.is_string());  // too wide for a JSON number
    CHECK(int_from_json(j) == big);
    CHECK(int_from_json(int_to_json(-big)) == -big);
    CHECK(int_from_json(json::parse("\"25\"")) == 25);
    CHECK_THROWS_AS(int_from_json(json::parse("\"2x5\"")), std::invalid_argument);
}

TEST_CASE("elements round-trip with divisor keys in ascending order") {
    auto x = elem({24, 12}, {{12, 5}, {2, -1}, {1, 7}});
    auto j = element_to_json(x);
    CHECK(j["N"] == 24);
    CHECK(j["M"] == 12);
    CHECK(element_from_json(j) == x);
    // Keys ascend numerically, not lexicographically.
    std::vector<std::string> keys;
    for (auto& [k, v] : j["coeffs"].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"1", "2", "12"});
    CHECK_THROWS_AS(element_from_json(json::parse(R"({"N":4,"M":4,"coeffs":{"3":1}})")),
                    std::invalid_argument);
}

TEST_CASE("lattices round-trip through canonical bases") {
    std::mt19937 rng(79);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t d = 1 + trial % 4;
        std::vector<std::vector<Int>> rows(2, std::vector<Int>(d));
        for (auto& r : rows) {
            for (auto& x : r) x = coeff(rng);
        }
        auto L = IntLattice::from_vectors(d, rows);
        CHECK(lattice_from_json(lattice_to_json(L)) == L);
    }
    auto Z = IntLattice(3);
    auto j = lattice_to_json(Z);
    CHECK(j["d"] == 3);
    CHECK(j["basis"].empty());
    CHECK(lattice_from_json(j) == Z);
}

TEST_CASE("GW classes round-trip") {
    GwClass x{9, 4, Int(-7), 1};
    auto j = gw_to_json(x);
    CHECK(j["q"] == 9);
    CHECK(j["m"] == 4);
    CHECK(gw_from_json(j) == x);
}

TEST_CASE("ideals and generator sets round-trip") {
    auto I = trace_ideal_finite_field(ExtensionSpec::finite(3, 12));
    auto j = ideal_to_json(I);
    CHECK(j["N"] == 12);
    auto I2 = ideal_from_json(j);
    CHECK(equals(I, I2));

    auto g = generator_catalog("finite-fields", {.N = 12});
    auto jg = generators_to_json(g);
    CHECK(jg.is_array());
    auto g2 = generators_from_json(jg);
    REQUIRE(g2.elements.size() == g.elements.size());
    CHECK(g2.elements[0] == g.elements[0]);
}

TEST_CASE("serialization is deterministic") {
    auto I = trace_ideal_finite_field(ExtensionSpec::finite(5, 18));
    CHECK(ideal_to_json(I).dump() == ideal_to_json(I).dump());
    auto rep = verify_theorem("finite-fields", 5, {.N = 18});
    CHECK(report_to_json(rep).dump() == report_to_json(rep).dump());
}

TEST_CASE("verify reports serialize with verdicts and level maps") {
    auto rep = verify_theorem("finite-fields", 3, {.N = 6});
    auto j = report_to_json(rep);
    CHECK(j["theorem"] == "finite-fields");
    CHECK(j["pass"] == true);
    CHECK(j["levels"].size() == 4);
    for (auto& [M, entry] : j["levels"].items()) {
        CHECK(entry["equal"] == true);
        CHECK(entry.contains("expected"));
        CHECK(entry.contains("computed"));
    }
}
