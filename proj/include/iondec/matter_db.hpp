#pragma once

// Per-salt material data for the decoherence-time formulas.
//
// File format: UTF-8 text, one record per line, comma separated, `#` starts a
// comment line. Columns:
//
//   name, cation_symbol, cation_mass_amu, anion_symbol, anion_mass_amu,
//   density_kg_m3, lattice_a_angstrom, water_per_ion|-, tau1_1e-40s|-, tau2_1e-38s|-
//
// Example: NaCl,Na+,22.990,Cl-,35.453,2163,5.64,10,4.6,4.4

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iondec/units.hpp"

namespace iondec {

struct IonSpecies {
    std::string symbol;
    Quantity mass{0.0, Dim::Mass};
    int charge_number = 0;
};

struct SaltRecord {
    std::string name;
    IonSpecies cation;
    IonSpecies anion;
    Quantity mass_density_at_crystallization{0.0, Dim::MassDensity};
    Quantity lattice_edge_a{0.0, Dim::Length};
    std::optional<double> saturation_water_per_ion;
    std::optional<Quantity> table1_tau1;
    std::optional<Quantity> table1_tau2;

    Quantity formula_mass() const { return cation.mass + anion.mass; }
};

// Charge number from a symbol such as "Na+", "Zn2+", "S2-". Throws DomainError
// if the symbol carries no trailing sign.
int charge_from_symbol(std::string_view symbol);

// Throws ValidationError naming the salt and the offending field.
void validate(const SaltRecord& record);

std::vector<SaltRecord> load_database(std::istream& source);
std::vector<SaltRecord> load_database_file(const std::filesystem::path& path);

// Formula-unit number density: mass density divided by the formula mass.
Quantity number_density(const SaltRecord& record);

// Returns nullptr when absent.
const SaltRecord* find_salt(const std::vector<SaltRecord>& db, std::string_view name);

// Salt names in the row order of the published decoherence-time table.
const std::vector<std::string>& table1_order();

}  // namespace iondec
