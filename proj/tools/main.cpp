/*
 * hopfinv - exact polynomial invariants of semisimple Hopf algebras.
 *
 * Subcommands: list, describe, validate, invariant, compare, table,
 * repring, selfdual.  Exit codes: 0 success, 1 validation failure,
 * 2 usage error, 3 computation failure.
 */

#include "hopfinv/invariants.hpp"
#include "hopfinv/json_io.hpp"
#include "hopfinv/reprings.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hopfinv;

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot open output file " + out_file);
    out << text;
}

Path parse_path(const std::string& s) {
    if (s == "generic") return Path::Generic;
    if (s == "closed") return Path::Closed;
    if (s == "both") return Path::Both;
    throw CLI::ValidationError("--path must be generic, closed or both");
}

std::string render_invariant(const InvariantResult& r, const std::string& format) {
    std::ostringstream out;
    if (format == "json") {
        out << invariant_to_json(r).dump(2) << "\n";
        return out.str();
    }
    if (r.of_dual)
        out << "note: " << r.algebra
            << " is not self-dual; this is the polynomial invariant of its dual\n";
    if (format == "roots") {
        out << render_roots(r.roots) << "\n";
    } else if (format == "coeffs") {
        out << render_coeffs(expand(r.roots)) << "\n";
    } else {  // phi
        if (const auto* f = std::get_if<CycloFactorization>(&r.factorization))
            out << render_phi(*f) << "\n";
        else
            throw std::runtime_error(std::get<FactorFailure>(r.factorization).describe());
    }
    return out.str();
}

std::string table_line(const std::string& name, const AlgebraBundle& b) {
    std::ostringstream out;
    out << name;
    for (long d : {1L, 2L}) {
        InvariantResult r = invariant_for_degree(b, d, Path::Closed);
        const auto* f = std::get_if<CycloFactorization>(&r.factorization);
        if (!f) throw std::runtime_error("table: factorization failed for " + name);
        out << " | " << render_phi(*f);
    }
    out << "\n";
    return out.str();
}

int run_validate(const std::string& target) {
    if (target.size() > 5 && target.compare(target.size() - 5, 5, ".json") == 0) {
        std::ifstream in(target);
        if (!in) throw std::runtime_error("cannot open " + target);
        nlohmann::json j;
        in >> j;
        HopfAlgebraData H = algebra_from_json(j);
        ValidationReport rep = validate_hopf(H);
        std::cout << "hopf axioms: " << (rep.ok ? "ok" : rep.detail) << "\n";
        return rep.ok ? 0 : 1;
    }
    AlgebraBundle b = build_from_name(target);
    bool all_ok = true;
    ValidationReport rep = validate_hopf(b.algebra);
    std::cout << "hopf axioms: " << (rep.ok ? "ok" : rep.detail) << "\n";
    all_ok &= rep.ok;
    for (const auto& R : b.rmatrices) {
        rep = validate_r_matrix(b.algebra, R);
        std::cout << "R-matrix " << R.label << ": " << (rep.ok ? "ok" : rep.detail) << "\n";
        all_ok &= rep.ok;
    }
    for (const auto& s : b.braidings) {
        rep = validate_braiding(b.algebra, s);
        std::cout << "braiding " << s.label << ": " << (rep.ok ? "ok" : rep.detail) << "\n";
        all_ok &= rep.ok;
    }
    for (const auto& M : b.modules) {
        rep = validate_module(b.algebra, M);
        std::cout << "module " << M.label << ": " << (rep.ok ? "ok" : rep.detail) << "\n";
        all_ok &= rep.ok;
    }
    std::cout << (all_ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial invariants of semisimple Hopf algebras"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "show the catalog naming grammar");

    std::string alg, alg2, out_file, format = "phi", path_s = "generic";
    long degree = 1;
    std::vector<long> degrees;

    auto* describe = app.add_subcommand("describe", "summarize an algebra bundle");
    describe->add_option("algebra", alg)->required();
    describe->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    describe->add_option("--out", out_file);

    auto* validate = app.add_subcommand("validate", "run all axiom checks");
    validate->add_option("algebra", alg, "catalog name or a .json algebra file")->required();

    auto* invariant = app.add_subcommand("invariant", "compute P^(d)");
    invariant->add_option("algebra", alg)->required();
    invariant->add_option("--degree", degree)->check(CLI::PositiveNumber);
    invariant->add_option("--format", format)
        ->check(CLI::IsMember({"phi", "coeffs", "roots", "json"}));
    invariant->add_option("--path", path_s)->check(CLI::IsMember({"generic", "closed", "both"}));
    invariant->add_option("--out", out_file);

    auto* cmp = app.add_subcommand("compare", "compare invariants of two algebras");
    cmp->add_option("left", alg)->required();
    cmp->add_option("right", alg2)->required();
    cmp->add_option("--degree", degrees, "degrees to compare (default 1 2)");
    cmp->add_option("--path", path_s)->check(CLI::IsMember({"generic", "closed", "both"}));
    cmp->add_option("--out", out_file);

    auto* table = app.add_subcommand("table", "the 18-row G/A invariant table");
    table->add_option("--out", out_file);

    auto* repring = app.add_subcommand("repring", "fusion ring and presentation checks");
    repring->add_option("algebra", alg)->required();
    repring->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    repring->add_option("--out", out_file);

    long sd_N = 1, sd_n = 2;
    std::string sd_lambda = "-";
    auto* selfdual = app.add_subcommand("selfdual", "self-duality report for A_N_n_lambda");
    selfdual->add_option("N", sd_N)->required();
    selfdual->add_option("n", sd_n)->required();
    selfdual->add_option("lambda", sd_lambda)->required()->check(CLI::IsMember({"+", "-"}));
    selfdual->add_option("--out", out_file);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list) {
            for (const auto& line : catalog_families_help()) std::cout << line << "\n";
            return 0;
        }
        if (*describe) {
            AlgebraBundle b = build_from_name(alg);
            std::ostringstream out;
            if (format == "json") {
                nlohmann::json j = algebra_to_json(b.algebra);
                j["name"] = b.algebra.name;
                j["family"] = b.family;
                j["braidings"] = b.braid_count();
                j["side"] = b.comodule_side ? "comodule" : "module";
                out << j.dump(2) << "\n";
            } else {
                out << b.algebra.name << ": dim " << b.algebra.dim << ", conductor "
                    << b.algebra.conductor << "\n";
                out << (b.comodule_side ? "braidings: " : "universal R-matrices: ")
                    << b.braid_count() << "\n";
                std::map<long, long> by_dim;
                const auto& chars = b.comodule_side ? b.comodule_chars : b.module_chars;
                for (const auto& c : chars) by_dim[c.dim]++;
                out << (b.comodule_side ? "simple comodules" : "simple modules") << ":";
                for (auto [d, cnt] : by_dim) out << " " << cnt << " of dim " << d;
                out << "\n";
                if (b.family == "A")
                    out << "self-dual: " << (b.self_dual ? "yes" : "no") << "\n";
                if (!b.closed_form.empty())
                    out << "closed-form invariants: available (" << b.closed_form << ")\n";
            }
            emit(out.str(), out_file);
            return 0;
        }
        if (*validate) return run_validate(alg);
        if (*invariant) {
            AlgebraBundle b = build_from_name(alg);
            InvariantResult r = invariant_for_degree(b, degree, parse_path(path_s));
            emit(render_invariant(r, format), out_file);
            return 0;
        }
        if (*cmp) {
            AlgebraBundle a = build_from_name(alg);
            AlgebraBundle b = build_from_name(alg2);
            if (degrees.empty()) degrees = {1, 2};
            CompareResult r = compare(a, b, degrees, parse_path(path_s));
            std::ostringstream out;
            if (degrees.size() > 1)
                for (const auto& v : r.degrees) {
                    out << "degree " << v.degree << ": "
                        << (v.equal ? "equal"
                                    : "distinct (witness root: " + root_to_string(*v.witness) + ")")
                        << "\n";
                }
            if (r.any_distinct) {
                const DegreeVerdict* w = nullptr;
                for (const auto& v : r.degrees)
                    if (!v.equal) { w = &v; break; }
                out << "DISTINCT (witness root: " << root_to_string(*w->witness)
                    << "); not monoidally Morita equivalent\n";
            } else {
                out << "EQUAL at all compared degrees; inconclusive (equal invariants do not "
                       "imply monoidal Morita equivalence)\n";
            }
            emit(out.str(), out_file);
            return 0;
        }
        if (*table) {
            std::ostringstream out;
            for (long n : {2L, 3L, 4L})
                for (long N : {1L, 3L, 5L}) {
                    std::string suffix = "_" + std::to_string(N) + "_" + std::to_string(n);
                    out << table_line("G" + suffix, build_from_name("G" + suffix));
                    out << table_line("A" + suffix, build_from_name("A" + suffix));
                }
            emit(out.str(), out_file);
            return 0;
        }
        if (*repring) {
            AlgebraBundle b = build_from_name(alg);
            FusionRing f = fusion_ring(b);
            std::ostringstream out;
            if (format == "json") {
                out << fusion_to_json(f).dump(2) << "\n";
            } else {
                out << "fusion ring of " << b.algebra.name << ": rank " << f.rank << "\n";
                ValidationReport ax = check_fusion_axioms(f);
                out << "fusion axioms: " << (ax.ok ? "ok" : ax.detail) << "\n";
                ValidationReport fp = check_frobenius_perron(f);
                out << "Frobenius-Perron identity: " << (fp.ok ? "ok" : fp.detail) << "\n";
                if (b.family == "G" || b.family == "A") {
                    ValidationReport pr = check_presentation(b.par_m, b.par_n, f);
                    out << "presented-ring relations: " << (pr.ok ? "ok" : pr.detail) << "\n";
                }
            }
            emit(out.str(), out_file);
            return 0;
        }
        if (*selfdual) {
            SelfDualityReport r = self_duality_report(sd_N, sd_n, sd_lambda == "+" ? 1 : -1);
            std::ostringstream out;
            out << "A_" << sd_N << "_" << sd_n << "_" << sd_lambda << ": " << r.detail << "\n";
            emit(out.str(), out_file);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
