#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entring/entring.hpp"

namespace {

using entring::format_double;
using nlohmann::ordered_json;

// nlohmann's dump() prints shortest-round-trip floats; all numeric output
// here must be fixed 17-significant-digit scientific notation, so the tree
// is serialized by hand.
void dump_json(const ordered_json& j, std::ostream& os, int indent) {
    const std::string pad(indent, ' ');
    const std::string pad_in(indent + 2, ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in << '"' << it.key() << "\": ";
                dump_json(it.value(), os, indent + 2);
            }
            os << "\n" << pad << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            const bool flat = std::all_of(j.begin(), j.end(), [](const ordered_json& e) {
                return e.is_primitive();
            });
            if (flat) {
                os << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    dump_json(j[i], os, 0);
                }
                os << "]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << pad_in;
                dump_json(j[i], os, indent + 2);
            }
            os << "\n" << pad << "]";
            return;
        }
        case nlohmann::json::value_t::string: {
            os << '"';
            for (char c : j.get<std::string>()) {
                if (c == '"' || c == '\\') os << '\\';
                os << c;
            }
            os << '"';
            return;
        }
        case nlohmann::json::value_t::boolean:
            os << (j.get<bool>() ? "true" : "false");
            return;
        case nlohmann::json::value_t::number_integer:
            os << j.get<std::int64_t>();
            return;
        case nlohmann::json::value_t::number_unsigned:
            os << j.get<std::uint64_t>();
            return;
        case nlohmann::json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        default:
            os << "null";
            return;
    }
}

void print_json(const ordered_json& j) {
    dump_json(j, std::cout, 0);
    std::cout << "\n";
}

std::string read_input_spec(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return spec;
    if (spec == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream file(spec);
    if (!file) throw std::invalid_argument("cannot read input file: " + spec);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

nlohmann::json parse_input(const std::string& spec) {
    return nlohmann::json::parse(read_input_spec(spec));
}

// `invariants` accepts either representation; everything else is explicit.
entring::FanoForm fano_from_any(const nlohmann::json& j) {
    if (j.is_object() && j.contains("a") && j.contains("b") && j.contains("C")) {
        return entring::fano_from_json(j);
    }
    return entring::fano_decompose(entring::state_from_json(j));
}

const char* positivity_name(entring::PositivityClass c) {
    switch (c) {
        case entring::PositivityClass::positive: return "positive";
        case entring::PositivityClass::boundary: return "boundary";
        default: return "non-positive";
    }
}

const char* region_name(entring::RegionClass c) {
    switch (c) {
        case entring::RegionClass::inside: return "inside";
        case entring::RegionClass::boundary: return "boundary";
        default: return "outside";
    }
}

int run_decompose(const std::string& input, const std::string& format) {
    const entring::FanoForm f =
        entring::fano_decompose(entring::state_from_json(parse_input(input)));
    if (format == "json") {
        print_json(entring::fano_to_json(f));
        return 0;
    }
    for (int i = 0; i < 3; ++i) std::cout << "a" << i + 1 << " " << format_double(f.a(i)) << "\n";
    for (int i = 0; i < 3; ++i) std::cout << "b" << i + 1 << " " << format_double(f.b(i)) << "\n";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            std::cout << "C" << i + 1 << j + 1 << " " << format_double(f.C(i, j)) << "\n";
    return 0;
}

int run_compose(const std::string& input, const std::string& format) {
    const Eigen::MatrixXcd rho =
        entring::fano_compose(entring::fano_from_json(parse_input(input)));
    if (format == "json") {
        print_json(entring::state_to_json(rho));
        return 0;
    }
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::cout << (j ? "  " : "") << format_double(rho(i, j).real()) << "+"
                      << format_double(rho(i, j).imag()) << "i";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_invariants(const std::string& input, const std::string& format) {
    const entring::FanoForm f = fano_from_any(parse_input(input));
    const entring::LocalInvariants inv = entring::evaluate_all(f);
    const entring::CasimirTriple cas = entring::casimirs_from_fano(inv);
    const entring::BasisValues bv = entring::basis_values(inv, cas);

    std::vector<std::pair<std::string, double>> fields;
    for (const auto& row : entring::invariant_table()) {
        fields.emplace_back(row.name, inv.*(row.field));
    }
    for (int i = 0; i < 10; ++i) fields.emplace_back("K" + std::to_string(i + 1), bv.k[i]);
    for (int i = 0; i < 15; ++i) fields.emplace_back("J" + std::to_string(i + 1), bv.j[i]);
    fields.emplace_back("C2", cas.c2);
    fields.emplace_back("C3", cas.c3);
    fields.emplace_back("C4", cas.c4);

    if (format == "json") {
        ordered_json j;
        ordered_json invariants;
        for (const auto& row : entring::invariant_table()) {
            invariants[row.name] = inv.*(row.field);
        }
        j["invariants"] = std::move(invariants);
        ordered_json k = ordered_json::array();
        for (double v : bv.k) k.push_back(v);
        ordered_json jj = ordered_json::array();
        for (double v : bv.j) jj.push_back(v);
        j["K"] = std::move(k);
        j["J"] = std::move(jj);
        j["casimirs"] = {{"C2", cas.c2}, {"C3", cas.c3}, {"C4", cas.c4}};
        print_json(j);
    } else if (format == "csv") {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::cout << (i ? "," : "") << fields[i].first;
        }
        std::cout << "\n";
        for (std::size_t i = 0; i < fields.size(); ++i) {
            std::cout << (i ? "," : "") << format_double(fields[i].second);
        }
        std::cout << "\n";
    } else {
        for (const auto& [name, value] : fields) {
            std::cout << name << " " << format_double(value) << "\n";
        }
    }
    return 0;
}

int run_positivity(const std::string& input, const std::string& format) {
    const Eigen::MatrixXcd rho = entring::state_from_json(parse_input(input));
    const entring::CharPolyCoeffs coeffs = entring::char_poly_coeffs(rho);
    const Eigen::VectorXd bounds = entring::normalized_bounds(coeffs);
    const entring::PositivityReport pos = entring::positivity_check(rho);
    const bool two_qubit = rho.rows() == 4;
    entring::RegionReport region;
    if (two_qubit) region = entring::region_check(entring::casimirs_of_state(rho));

    if (format == "json") {
        ordered_json j;
        j["dim"] = static_cast<int>(rho.rows());
        ordered_json s = ordered_json::array();
        for (int k = 0; k < coeffs.dim; ++k) s.push_back(coeffs.s(k));
        j["S"] = std::move(s);
        ordered_json b = ordered_json::array();
        for (int k = 0; k + 1 < coeffs.dim; ++k) b.push_back(bounds(k));
        j["normalized_bounds"] = std::move(b);
        j["positivity"] = positivity_name(pos.classification);
        if (two_qubit) {
            ordered_json margins = ordered_json::array();
            for (double m : region.margins) margins.push_back(m);
            j["region"] = {{"classification", region_name(region.classification)},
                           {"margins", std::move(margins)}};
        }
        print_json(j);
    } else if (format == "csv") {
        std::cout << "quantity,value\n";
        for (int k = 0; k < coeffs.dim; ++k) {
            std::cout << "S" << k + 1 << "," << format_double(coeffs.s(k)) << "\n";
        }
        for (int k = 0; k + 1 < coeffs.dim; ++k) {
            std::cout << "B" << k + 2 << "," << format_double(bounds(k)) << "\n";
        }
        std::cout << "positivity," << positivity_name(pos.classification) << "\n";
        if (two_qubit) {
            for (int m = 0; m < 6; ++m) {
                std::cout << "margin" << m + 1 << "," << format_double(region.margins[m])
                          << "\n";
            }
            std::cout << "region," << region_name(region.classification) << "\n";
        }
    } else {
        for (int k = 0; k < coeffs.dim; ++k) {
            std::cout << "S" << k + 1 << " " << format_double(coeffs.s(k)) << "\n";
        }
        for (int k = 0; k + 1 < coeffs.dim; ++k) {
            std::cout << "B" << k + 2 << " " << format_double(bounds(k)) << "\n";
        }
        std::cout << "positivity " << positivity_name(pos.classification) << "\n";
        if (two_qubit) {
            static const char* labels[6] = {"C2>=0",          "C2<=1",          "3C2-2C3>=0",
                                            "3C2-2C3<=1",     "(1-3C2)^2+8C3-12C4>=0",
                                            "(1-3C2)^2+8C3-12C4<=1"};
            for (int m = 0; m < 6; ++m) {
                std::cout << "margin[" << labels[m] << "] " << format_double(region.margins[m])
                          << "\n";
            }
            std::cout << "region " << region_name(region.classification) << "\n";
        }
    }
    return 0;
}

int run_classify(const std::string& input, const std::string& format) {
    const Eigen::MatrixXcd rho = entring::state_from_json(parse_input(input));
    if (rho.rows() != 4) {
        throw std::invalid_argument("classify: expected a two-qubit (4x4) state");
    }
    const double purity = (rho * rho).trace().real();
    const bool pure = std::abs(purity - 1.0) <= 1e-10;
    const entring::PositivityReport pos = entring::positivity_check(rho);
    const entring::RegionReport region =
        entring::region_check(entring::casimirs_of_state(rho));
    if (format == "json") {
        ordered_json j;
        j["purity"] = pure ? "pure" : "mixed";
        j["positivity"] = positivity_name(pos.classification);
        j["region"] = region_name(region.classification);
        print_json(j);
    } else {
        std::cout << (pure ? "pure" : "mixed") << ", " << positivity_name(pos.classification)
                  << ", region:" << region_name(region.classification) << "\n";
    }
    return 0;
}

int run_region_sample(std::uint64_t seed, int n, const std::string& kind,
                      const std::string& format) {
    const entring::StateKind state_kind = kind == "pure" ? entring::StateKind::pure
                                          : kind == "hermitian-unit-trace"
                                              ? entring::StateKind::hermitian_unit_trace
                                              : entring::StateKind::hilbert_schmidt;
    const auto rows = entring::region_sample(static_cast<std::size_t>(n), seed, state_kind);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            arr.push_back({{"C2", r.c2},
                           {"C3", r.c3},
                           {"C4", r.c4},
                           {"S2", r.s2},
                           {"S3", r.s3},
                           {"S4", r.s4},
                           {"inside", r.inside}});
        }
        print_json(arr);
        return 0;
    }
    std::cout << "C2,C3,C4,S2,S3,S4,inside\n";
    for (const auto& r : rows) {
        std::cout << format_double(r.c2) << "," << format_double(r.c3) << ","
                  << format_double(r.c4) << "," << format_double(r.s2) << ","
                  << format_double(r.s3) << "," << format_double(r.s4) << "," << r.inside
                  << "\n";
    }
    return 0;
}

int run_molien(int kmax, const std::string& format) {
    const entring::PowerSeries series = entring::molien_expand(kmax);
    if (format == "json") {
        ordered_json j;
        j["kmax"] = kmax;
        ordered_json coeffs = ordered_json::array();
        for (std::int64_t c : series.coeffs) coeffs.push_back(c);
        j["coeffs"] = std::move(coeffs);
        print_json(j);
    } else if (format == "csv") {
        std::cout << "k,d_k\n";
        for (int k = 0; k <= kmax; ++k) std::cout << k << "," << series.coeffs[k] << "\n";
    } else {
        for (int k = 0; k <= kmax; ++k) {
            std::cout << "d_" << k << " = " << series.coeffs[k] << "\n";
        }
    }
    return 0;
}

int run_random_state(std::uint64_t seed, int dim, const std::string& kind,
                     const std::string& format) {
    const entring::StateKind state_kind = kind == "pure" ? entring::StateKind::pure
                                          : kind == "hermitian-unit-trace"
                                              ? entring::StateKind::hermitian_unit_trace
                                              : entring::StateKind::hilbert_schmidt;
    const Eigen::MatrixXcd rho = entring::random_state(dim, seed, state_kind);
    if (format == "table") {
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                std::cout << (j ? "  " : "") << format_double(rho(i, j).real()) << "+"
                          << format_double(rho(i, j).imag()) << "i";
            }
            std::cout << "\n";
        }
        return 0;
    }
    print_json(entring::state_to_json(rho));
    return 0;
}

struct VerifySelection {
    bool positivity = false;
    bool invariance = false;
    bool casimir = false;
    bool hilbert = false;
    bool all = false;
};

int run_verify(std::uint64_t seed, const VerifySelection& sel, int trials,
               const std::string& format) {
    const bool none = !(sel.positivity || sel.invariance || sel.casimir || sel.hilbert);
    const bool everything = sel.all || none;
    std::vector<entring::CheckResult> results;
    if (everything || sel.positivity) {
        results.push_back(entring::check_positivity_equivalence(entring::derive_seed(seed, 101)));
    }
    if (everything) {
        results.push_back(entring::check_region_inequalities(entring::derive_seed(seed, 102)));
    }
    if (everything || sel.casimir) {
        results.push_back(entring::check_casimir_identities(entring::derive_seed(seed, 103)));
    }
    if (everything || sel.invariance) {
        results.push_back(
            entring::check_local_invariance(entring::derive_seed(seed, 104), 20, trials));
    }
    if (everything) {
        results.push_back(
            entring::check_linearization(entring::derive_seed(seed, 105), trials));
    }
    if (everything || sel.hilbert) {
        results.push_back(entring::check_molien_consistency(entring::derive_seed(seed, 106)));
    }
    if (everything) {
        results.push_back(entring::check_homogeneity(entring::derive_seed(seed, 107), trials));
        results.push_back(entring::check_werner_family(entring::derive_seed(seed, 108)));
    }

    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (format == "json") {
        ordered_json j;
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
            checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        j["checks"] = std::move(checks);
        j["all_pass"] = all_pass;
        print_json(j);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
                      << ")\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local-unitary invariant ring toolkit for two-qubit density matrices"};
    app.require_subcommand(1);

    std::string input;
    std::string format;
    std::string kind = "hilbert-schmidt";
    std::uint64_t seed = 0;
    int n = 1000;
    int kmax = 12;
    int dim = 4;
    int trials = 100;
    VerifySelection sel;

    const auto kind_check =
        CLI::IsMember({"pure", "hilbert-schmidt", "hermitian-unit-trace"});

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file, '-' for stdin, or inline JSON")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
    };
    auto fmt = [&](const char* fallback) { return format.empty() ? fallback : format; };

    CLI::App* decompose = app.add_subcommand("decompose", "state JSON to Fano form");
    add_input(decompose);
    CLI::App* compose = app.add_subcommand("compose", "Fano JSON to state JSON");
    add_input(compose);
    CLI::App* invariants =
        app.add_subcommand("invariants", "all 20 invariants, K/J basis, Casimirs");
    add_input(invariants);
    CLI::App* positivity =
        app.add_subcommand("positivity", "char-poly coefficients, bounds, region");
    add_input(positivity);
    CLI::App* classify = app.add_subcommand("classify", "purity/positivity/region summary");
    add_input(classify);

    CLI::App* region = app.add_subcommand("region-sample", "Casimir table of random states");
    region->add_option("--seed", seed, "RNG seed")->required();
    region->add_option("--n", n, "sample count")->check(CLI::PositiveNumber);
    region->add_option("--kind", kind, "sampling measure")->check(kind_check);

    CLI::App* molien = app.add_subcommand("molien", "Molien series coefficients");
    molien->add_option("--kmax", kmax, "highest degree")->check(CLI::Range(0, 64));

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--seed", seed, "RNG seed")->required();
    verify->add_flag("--positivity", sel.positivity, "positivity equivalence oracle");
    verify->add_flag("--invariance", sel.invariance, "local invariance report");
    verify->add_flag("--casimir", sel.casimir, "Casimir decomposition identities");
    verify->add_flag("--hilbert", sel.hilbert, "Molien/rank consistency");
    verify->add_flag("--all", sel.all, "every check including region/linearization/"
                     "homogeneity/Werner");
    verify->add_option("--trials", trials, "trials per sampled check")
        ->check(CLI::PositiveNumber);

    CLI::App* random = app.add_subcommand("random-state", "seeded random state JSON");
    random->add_option("--seed", seed, "RNG seed")->required();
    random->add_option("--dim", dim, "Hilbert-space dimension")->check(CLI::Range(2, 16));
    random->add_option("--kind", kind, "sampling measure")->check(kind_check);

    for (CLI::App* cmd : {decompose, compose, invariants, positivity, classify, region,
                          molien, verify, random}) {
        add_format(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (decompose->parsed()) return run_decompose(input, fmt("json"));
        if (compose->parsed()) return run_compose(input, fmt("json"));
        if (invariants->parsed()) return run_invariants(input, fmt("table"));
        if (positivity->parsed()) return run_positivity(input, fmt("table"));
        if (classify->parsed()) return run_classify(input, fmt("table"));
        if (region->parsed()) return run_region_sample(seed, n, kind, fmt("csv"));
        if (molien->parsed()) return run_molien(kmax, fmt("table"));
        if (verify->parsed()) return run_verify(seed, sel, trials, fmt("table"));
        if (random->parsed()) return run_random_state(seed, dim, kind, fmt("json"));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
