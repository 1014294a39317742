#include <doctest.h>

#include <sstream>

#include "iondec/matter_db.hpp"

using namespace iondec;

namespace {

SaltRecord parse_one(const std::string& line) {
    std::istringstream in(line + "\n");
    auto db = load_database(in);
    REQUIRE(db.size() == 1);
    return db.front();
}

}  // namespace

TEST_CASE("bundled database holds the sixteen table salts in order") {
    const auto db = load_database_file(IONDEC_TEST_DATA);
    REQUIRE(db.size() == 16);
    for (std::size_t i = 0; i < db.size(); ++i) CHECK(db[i].name == table1_order()[i]);
    for (const auto& r : db) {
        CHECK(r.table1_tau1.has_value());
        CHECK(r.table1_tau2.has_value());
    }
    const auto* nacl = find_salt(db, "NaCl");
    REQUIRE(nacl);
    CHECK(nacl->saturation_water_per_ion == 10.0);
    CHECK(find_salt(db, "KF")->saturation_water_per_ion == 4.0);
    CHECK(find_salt(db, "PbS")->saturation_water_per_ion == 1e15);
    CHECK(find_salt(db, "PbS")->cation.charge_number == 2);
    CHECK(find_salt(db, "ZnS")->anion.charge_number == -2);
    CHECK_FALSE(find_salt(db, "NaI")->saturation_water_per_ion.has_value());
}

TEST_CASE("documented example line") {
    const auto r = parse_one("NaCl,Na+,22.990,Cl-,35.453,2163,5.64,10,4.6,4.4");
    CHECK(r.name == "NaCl");
    CHECK(r.cation.symbol == "Na+");
    CHECK(r.cation.charge_number == 1);
    CHECK(r.anion.charge_number == -1);
    CHECK(to_amu(r.cation.mass) == doctest::Approx(22.990));
    CHECK(r.mass_density_at_crystallization.si() == 2163.0);
    CHECK(r.lattice_edge_a.si() == doctest::Approx(5.64e-10));
    CHECK(r.table1_tau1->si() == doctest::Approx(4.6e-40));
    CHECK(r.table1_tau2->si() == doctest::Approx(4.4e-38));
}

TEST_CASE("empty stream and comment-only stream give no records") {
    std::istringstream empty;
    CHECK(load_database(empty).empty());
    std::istringstream comments("# header\n\n   \n# another\n");
    CHECK(load_database(comments).empty());
}

TEST_CASE("parse errors carry the line number") {
    std::istringstream in("# c\nNaCl,Na+,22.990,Cl-,35.453,2163,5.64,10,4.6,4.4\nKF,K+,abc,F-,18.998,2520,5.35,4,-,-\n");
    try {
        load_database(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream short_line("NaCl,Na+,22.990\n");
    CHECK_THROWS_AS(load_database(short_line), ParseError);
    std::istringstream no_sign("NaCl,Na,22.990,Cl-,35.453,2163,5.64,-,-,-\n");
    CHECK_THROWS_AS(load_database(no_sign), ParseError);
    std::istringstream dup("NaCl,Na+,22.990,Cl-,35.453,2163,5.64,-,-,-\nNaCl,Na+,22.990,Cl-,35.453,2163,5.64,-,-,-\n");
    CHECK_THROWS_AS(load_database(dup), ParseError);
}

TEST_CASE("invariant violations name salt and field") {
    std::istringstream neg("NaCl,Na+,22.990,Cl-,35.453,-2163,5.64,10,4.6,4.4\n");
    try {
        load_database(neg);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.salt() == "NaCl");
        CHECK(e.field() == "density");
    }
    std::istringstream zero_a("NaCl,Na+,22.990,Cl-,35.453,2163,0,10,4.6,4.4\n");
    CHECK_THROWS_AS(load_database(zero_a), ValidationError);
    std::istringstream zero_density("NaCl,Na+,22.990,Cl-,35.453,0,5.64,10,4.6,4.4\n");
    CHECK_THROWS_AS(load_database(zero_density), ValidationError);
    std::istringstream bad_mass("NaCl,Na+,0,Cl-,35.453,2163,5.64,10,4.6,4.4\n");
    CHECK_THROWS_AS(load_database(bad_mass), ValidationError);
    std::istringstream swapped("NaCl,Cl-,35.453,Na+,22.990,2163,5.64,10,4.6,4.4\n");
    CHECK_THROWS_AS(load_database(swapped), ValidationError);
}

TEST_CASE("charge parsing") {
    CHECK(charge_from_symbol("Na+") == 1);
    CHECK(charge_from_symbol("Cl-") == -1);
    CHECK(charge_from_symbol("Zn2+") == 2);
    CHECK(charge_from_symbol("S2-") == -2);
    CHECK_THROWS_AS(charge_from_symbol("Na"), DomainError);
    CHECK_THROWS_AS(charge_from_symbol(""), DomainError);
}

TEST_CASE("number density") {
    const auto r = parse_one("NaCl,Na+,22.990,Cl-,35.453,2163,5.64,10,4.6,4.4");
    const Quantity n = number_density(r);
    CHECK(n.is(Dim::NumberDensity));
    // 2163 / (58.443 * 1.66053906660e-27)
    CHECK(n.si() == doctest::Approx(2.2288196137059134e28).epsilon(1e-9));

    SUBCASE("degree 1 in density, degree -1 in formula mass") {
        SaltRecord doubled = r;
        doubled.mass_density_at_crystallization *= 2.0;
        CHECK(number_density(doubled).si() == doctest::Approx(2.0 * n.si()).epsilon(1e-15));
        SaltRecord heavier = r;
        heavier.cation.mass *= 3.0;
        heavier.anion.mass *= 3.0;
        CHECK(number_density(heavier).si() == doctest::Approx(n.si() / 3.0).epsilon(1e-15));
    }
}
