#include "iondec/matter_db.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace iondec {

namespace {

constexpr std::size_t kColumns = 10;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line, const char* column) {
    double value = 0.0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        throw ParseError(line, std::string("column ") + column + ": not a number: '" +
                                   std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line, std::string("column ") + column + ": non-finite value");
    }
    return value;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line, const char* column) {
    if (field == "-") return std::nullopt;
    return parse_number(field, line, column);
}

}  // namespace

int charge_from_symbol(std::string_view symbol) {
    if (symbol.empty()) throw DomainError("empty ion symbol");
    const char sign = symbol.back();
    if (sign != '+' && sign != '-') {
        throw DomainError("ion symbol '" + std::string(symbol) + "' has no charge sign");
    }
    std::size_t digits_end = symbol.size() - 1;
    std::size_t digits_begin = digits_end;
    while (digits_begin > 0 && symbol[digits_begin - 1] >= '0' && symbol[digits_begin - 1] <= '9') {
        --digits_begin;
    }
    int magnitude = 1;
    if (digits_begin != digits_end) {
        std::from_chars(symbol.data() + digits_begin, symbol.data() + digits_end, magnitude);
    }
    return sign == '+' ? magnitude : -magnitude;
}

void validate(const SaltRecord& r) {
    const std::string& salt = r.name.empty() ? std::string("<unnamed>") : r.name;
    if (r.name.empty()) throw ValidationError(salt, "name", "must be nonempty");
    for (const auto* ion : {&r.cation, &r.anion}) {
        const char* which = ion == &r.cation ? "cation" : "anion";
        if (ion->symbol.empty()) throw ValidationError(salt, std::string(which) + "_symbol", "must be nonempty");
        if (!(ion->mass.in(Dim::Mass) > 0)) throw ValidationError(salt, std::string(which) + "_mass", "must be positive");
        if (ion->charge_number == 0) throw ValidationError(salt, std::string(which) + "_charge", "must be nonzero");
    }
    if (r.cation.charge_number < 0) throw ValidationError(salt, "cation_charge", "must be positive");
    if (r.anion.charge_number > 0) throw ValidationError(salt, "anion_charge", "must be negative");
    if (!(r.mass_density_at_crystallization.in(Dim::MassDensity) > 0)) {
        throw ValidationError(salt, "density", "must be positive");
    }
    if (!(r.lattice_edge_a.in(Dim::Length) > 0)) {
        throw ValidationError(salt, "lattice_a", "must be positive");
    }
    if (r.saturation_water_per_ion && !(*r.saturation_water_per_ion > 0)) {
        throw ValidationError(salt, "water_per_ion", "must be positive");
    }
    for (const auto* ref : {&r.table1_tau1, &r.table1_tau2}) {
        if (*ref && !((*ref)->in(Dim::Time) > 0)) {
            throw ValidationError(salt, ref == &r.table1_tau1 ? "table1_tau1" : "table1_tau2",
                                  "must be positive");
        }
    }
    const double n = number_density(r).si();
    if (!(n > 0) || !std::isfinite(n)) throw ValidationError(salt, "number_density", "must be positive and finite");
}

std::vector<SaltRecord> load_database(std::istream& source) {
    std::vector<SaltRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(source, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto f = split(line);
        if (f.size() != kColumns) {
            throw ParseError(line_no, "expected " + std::to_string(kColumns) + " fields, got " +
                                          std::to_string(f.size()));
        }
        SaltRecord r;
        r.name = std::string(f[0]);
        try {
            r.cation = {std::string(f[1]), from_amu(parse_number(f[2], line_no, "cation_mass_amu")),
                        charge_from_symbol(f[1])};
            r.anion = {std::string(f[3]), from_amu(parse_number(f[4], line_no, "anion_mass_amu")),
                       charge_from_symbol(f[3])};
        } catch (const DomainError& e) {
            throw ParseError(line_no, e.what());
        }
        r.mass_density_at_crystallization = {parse_number(f[5], line_no, "density_kg_m3"), Dim::MassDensity};
        r.lattice_edge_a = from_angstrom(parse_number(f[6], line_no, "lattice_a_angstrom"));
        r.saturation_water_per_ion = parse_optional(f[7], line_no, "water_per_ion");
        if (auto t = parse_optional(f[8], line_no, "table1_tau1")) r.table1_tau1 = Quantity(*t * 1e-40, Dim::Time);
        if (auto t = parse_optional(f[9], line_no, "table1_tau2")) r.table1_tau2 = Quantity(*t * 1e-38, Dim::Time);

        validate(r);
        if (find_salt(records, r.name)) throw ParseError(line_no, "duplicate salt '" + r.name + "'");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<SaltRecord> load_database_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open data file '" + path.string() + "'");
    return load_database(in);
}

Quantity number_density(const SaltRecord& record) {
    return record.mass_density_at_crystallization / record.formula_mass();
}

const SaltRecord* find_salt(const std::vector<SaltRecord>& db, std::string_view name) {
    auto it = std::find_if(db.begin(), db.end(), [&](const SaltRecord& r) { return r.name == name; });
    return it == db.end() ? nullptr : &*it;
}

const std::vector<std::string>& table1_order() {
    static const std::vector<std::string> order = {
        "NaF", "NaCl", "NaBr", "NaI", "KF",   "KCl",  "KBr", "CsF",
        "CsCl", "CsBr", "CsI", "AgCl", "AgBr", "AgI", "ZnS", "PbS",
    };
    return order;
}

}  // namespace iondec
