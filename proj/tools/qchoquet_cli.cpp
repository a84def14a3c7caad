// qchoquet: batch front end for lattice validation, Mobius/Choquet
// computation, density-matrix reconstruction and the built-in demos.

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qchoquet/demo.hpp"
#include "qchoquet/io.hpp"
#include "qchoquet/zd.hpp"

namespace {

using nlohmann::json;
using namespace qchoquet;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

struct Options {
    std::string format = "table";
    double tol = 1e-10;
    std::uint64_t seed = 0;
    bool allow_outside_regime = false;
    bool allow_mobius_n_gt_d = false;
    std::string output;  // empty = stdout

    ChoquetPolicy policy() const { return {allow_outside_regime, allow_mobius_n_gt_d}; }
    bool json_output() const { return format == "json"; }
};

void emit(const Options& opt, const json& j) {
    if (opt.output.empty())
        std::cout << j.dump(2) << '\n';
    else
        io::write_json_file(opt.output, j);
}

std::string fmt_complex(const cplx& z) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << z.real();
    if (z.imag() >= 0.0)
        os << "+" << std::setprecision(6) << z.imag() << "i";
    else
        os << "-" << std::setprecision(6) << -z.imag() << "i";
    return os.str();
}

void print_matrix(const HermitianMatrix& m, const std::string& label) {
    std::cout << label << ":\n";
    for (int i = 0; i < m.dim(); ++i) {
        std::cout << "  ";
        for (int j = 0; j < m.dim(); ++j) std::cout << std::setw(20) << fmt_complex(m.at(i, j));
        std::cout << '\n';
    }
}

void print_vector(const std::vector<double>& v, const std::string& label) {
    std::cout << label << ":";
    std::cout << std::fixed << std::setprecision(6);
    for (double x : v) std::cout << "  " << x;
    std::cout << '\n';
    std::cout.unsetf(std::ios::fixed);
}

void print_chain(const std::vector<SubsetKey>& chain) {
    std::cout << "chain:";
    for (const SubsetKey& k : chain) std::cout << "  " << k.to_string();
    std::cout << '\n';
}

void print_flags(const std::vector<std::string>& flags) {
    for (const std::string& f : flags) std::cout << "note: " << f << '\n';
}

MatrixCapacity load_lattice(const std::string& path) { return io::parse_lattice(io::load_json_file(path)); }

ExpectationVector load_ev(const std::string& path) {
    return io::parse_expectation(io::load_json_file(path));
}

int cmd_validate(const Options& opt, const std::string& lattice_path) {
    MatrixCapacity c = load_lattice(lattice_path);
    ValidationReport report = validate_capacity(c);

    std::vector<HermitianMatrix> singletons;
    for (int r = 1; r <= c.n; ++r) singletons.push_back(c.at(SubsetKey({r})));
    IndependenceReport indep = check_linear_independence(singletons, opt.tol);
    if (!indep.independent)
        report.warnings.push_back("singletons are linearly dependent (rank " +
                                  std::to_string(indep.rank) + " of " + std::to_string(c.n) + ")");

    if (opt.json_output()) {
        emit(opt, io::validation_to_json(report));
    } else {
        std::cout << (report.ok() ? "valid capacity" : "INVALID capacity") << "  (n=" << c.n
                  << ", d=" << c.dim << ")\n";
        for (const CapacityViolation& v : report.violations)
            std::cout << "violation: theta" << v.larger.to_string() << " does not dominate theta"
                      << v.smaller.to_string() << '\n';
        print_flags(report.warnings);
    }
    return report.ok() ? kExitOk : kExitDomain;
}

int cmd_reconstruct(const Options& opt, const std::string& lattice_path, const std::string& ev_path) {
    MatrixCapacity c = load_lattice(lattice_path);
    ExpectationVector ev = load_ev(ev_path);
    ReconstructionReport report = reconstruct(c, ev, opt.policy());
    if (opt.json_output()) {
        emit(opt, io::report_to_json(report));
    } else {
        print_matrix(report.r1, "R1");
        print_vector(report.eigenvalues, "eigenvalues");
        print_chain(report.chain);
        print_vector(report.reproduced, "reproduced");
        print_vector(report.errors, "errors");
        print_vector(report.absolute_errors, "absolute errors");
        print_flags(report.flags);
    }
    return kExitOk;
}

int cmd_mobius(const Options& opt, const std::string& lattice_path) {
    MatrixCapacity c = load_lattice(lattice_path);
    MobiusTable m = mobius_transform(c);
    const double residual = identity_residual(m);
    if (opt.json_output()) {
        emit(opt, io::mobius_to_json(m));
    } else {
        for (const auto& [key, mat] : m.table) {
            if (key.cardinality() == 0) continue;
            print_matrix(mat, "M" + key.to_string());
        }
        std::cout << "identity residual: " << std::scientific << std::setprecision(3) << residual
                  << (residual < opt.tol ? "  (ok)" : "  (EXCEEDS tolerance)") << '\n';
        std::cout.unsetf(std::ios::scientific);
    }
    return residual < opt.tol ? kExitOk : kExitDomain;
}

int cmd_choquet(const Options& opt, const std::string& lattice_path, const std::string& ev_path,
                int form) {
    MatrixCapacity c = load_lattice(lattice_path);
    ExpectationVector ev = load_ev(ev_path);
    ChoquetResult result = form == 1   ? quantum_choquet_ev_increments(c, ev, opt.policy())
                           : form == 2 ? quantum_choquet_obs_increments(c, ev, opt.policy())
                                       : quantum_choquet_mobius(c, ev, opt.policy());
    if (opt.json_output()) {
        emit(opt, io::choquet_result_to_json(result));
    } else {
        print_matrix(result.matrix, "C");
        print_chain(result.chain);
        print_vector(result.increments, "increments");
        print_flags(result.flags);
    }
    return kExitOk;
}

int cmd_lattice_gen_spec(const Options& opt, const std::string& spec_path) {
    io::BuilderSpec spec = io::parse_builder_spec(io::load_json_file(spec_path));
    MatrixCapacity c = build_lattice(spec.singletons, spec.weights);
    if (opt.json_output()) {
        emit(opt, io::lattice_to_json(c));
    } else {
        if (!opt.output.empty()) {
            io::write_json_file(opt.output, io::lattice_to_json(c));
            std::cout << "lattice written to " << opt.output << '\n';
        } else {
            for (const auto& [key, mat] : c.table) print_matrix(mat, "theta" + key.to_string());
        }
    }
    return kExitOk;
}

int cmd_lattice_gen_zd(const Options& opt, int d, const std::string& basis) {
    ZdSystem sys(d);
    std::vector<HermitianMatrix> singletons;
    std::vector<std::string> notes;
    if (basis == "position") {
        singletons = position_projectors(sys);
    } else if (basis == "coherent") {
        CoherentFamily fam = coherent_family(sys, default_fiducial(d));
        singletons = fam.projectors;
        notes = fam.warnings;
        if (static_cast<int>(singletons.size()) > kMaxOmega)
            notes.push_back("d^2 = " + std::to_string(singletons.size()) +
                            " singletons exceed the lattice limit of " + std::to_string(kMaxOmega) +
                            "; select a subset before building a lattice");
    } else {
        throw Error("lattice-gen: basis must be position or coherent");
    }
    json out = {{"singletons", json::array()}};
    for (const HermitianMatrix& p : singletons) out["singletons"].push_back(io::matrix_to_json(p));
    if (opt.json_output() || !opt.output.empty()) {
        emit(opt, out);
    } else {
        for (size_t r = 0; r < singletons.size(); ++r)
            print_matrix(singletons[r], "singleton " + std::to_string(r + 1));
    }
    for (const std::string& n : notes) std::cout << "note: " << n << '\n';
    return kExitOk;
}

struct Checker {
    bool all_ok = true;

    void check(const std::string& name, bool ok) {
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << '\n';
    }
};

bool within(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < got.size(); ++i)
        if (std::abs(got[i] - want[i]) > tol) return false;
    return true;
}

bool matrix_within(const HermitianMatrix& got, const std::vector<std::vector<double>>& re,
                   const std::vector<std::vector<double>>& im, double tol) {
    for (int i = 0; i < got.dim(); ++i)
        for (int j = 0; j < got.dim(); ++j) {
            const cplx want(re[static_cast<size_t>(i)][static_cast<size_t>(j)],
                            im[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (std::abs(got.at(i, j).real() - want.real()) > tol) return false;
            if (std::abs(got.at(i, j).imag() - want.imag()) > tol) return false;
        }
    return true;
}

int cmd_demo_noncommuting(int choice) {
    const auto golden = demo::noncommuting_golden(choice);
    MatrixCapacity c = demo::noncommuting_lattice(choice);
    ExpectationVector ev = demo::noncommuting_expectations();

    std::cout << "four non-commuting 3x3 observables, lattice choice " << choice << "\n";
    print_vector(ev.values, "measured expectation values");

    ValidationReport validation = validate_capacity(c);
    ChoquetResult integral = quantum_choquet_ev_increments(c, ev);
    ReconstructionReport report = reconstruct(c, ev);

    print_chain(report.chain);
    print_vector(integral.increments, "increments");
    print_matrix(integral.matrix, "C");
    print_matrix(report.r1, "R1");
    print_vector(report.eigenvalues, "eigenvalues");
    print_vector(report.reproduced, "reproduced");
    print_vector(report.errors, "errors");
    print_flags(report.flags);

    Checker ck;
    ck.check("lattice is a valid matrix capacity", validation.ok());

    RankingPermutation sigma = rank(ev);
    ck.check("ranking permutation", sigma.sigma == golden.sigma);
    ck.check("increments", within(integral.increments, golden.increments, 1e-12));

    const auto singles = demo::noncommuting_singletons();
    HermitianMatrix combo = golden.chain_coefficients[0] * singles[1] +
                            golden.chain_coefficients[1] * singles[2] +
                            golden.chain_coefficients[2] * singles[3];
    ck.check("C is the expected singleton combination", integral.matrix.approx_equal(combo, 1e-12));

    ck.check("R1 matches the stored run",
             matrix_within(report.r1, golden.r1_real, golden.r1_imag, golden.tol_values));
    ck.check("R1 matches the published 3-decimal matrix",
             matrix_within(report.r1, golden.snapshot_r1_real, golden.snapshot_r1_imag,
                           golden.tol_snapshot));
    ck.check("eigenvalues", within(report.eigenvalues, golden.eigenvalues, golden.tol_values));
    ck.check("eigenvalues vs published",
             within(report.eigenvalues, golden.snapshot_eigenvalues, golden.tol_snapshot));
    ck.check("reproduced expectation values",
             within(report.reproduced, golden.reproduced, golden.tol_values));
    ck.check("reproduced vs published",
             within(report.reproduced, golden.snapshot_reproduced, golden.tol_snapshot));
    ck.check("relative errors", within(report.errors, golden.errors, golden.tol_errors));

    return ck.all_ok ? kExitOk : kExitDomain;
}

int cmd_demo_projectors() {
    const demo::ProjectorGolden g;
    std::cout << "commuting demo: diagonal projector observables, e = (" << g.e1 << ", " << g.e2
              << ", " << g.e3 << ")\n";
    Checker ck;
    for (double lambda : g.lambdas) {
        ReconstructionReport report = projector_example(g.e1, g.e2, g.e3, lambda);
        std::cout << "lambda = " << std::fixed << std::setprecision(2) << lambda << "  ";
        std::cout.unsetf(std::ios::fixed);
        print_vector(report.errors, "errors");

        const std::vector<double> want = demo::projector_errors_closed_form(g.e1, g.e2, g.e3, lambda);
        std::ostringstream name;
        name << "errors match the closed form at lambda = " << lambda;
        ck.check(name.str(), within(report.errors, want, 1e-12));
        if (lambda == 0.0) {
            bool zero = true;
            for (double e : report.errors) zero = zero && e < 1e-12;
            ck.check("lambda = 0 reconstructs exactly", zero);
        }
    }
    return ck.all_ok ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Loewner-order matrix capacities, quantum Choquet integrals and "
                 "density-matrix reconstruction"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "tolerance for CLI-level checks (default 1e-10)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized operations");
    app.add_flag("--allow-outside-regime", opt.allow_outside_regime,
                 "permit n outside d <= n < d^2 - 1");
    app.add_flag("--allow-mobius-n-gt-d", opt.allow_mobius_n_gt_d,
                 "compute the Mobius form even when n != d");
    app.add_option("-o,--output", opt.output, "write JSON output to this file");

    std::string lattice_path, ev_path, spec_path, basis = "position", demo_name;
    int form = 1, zd_dim = 0;

    CLI::App* validate = app.add_subcommand("validate", "check a lattice file for capacity violations");
    validate->add_option("lattice", lattice_path, "lattice JSON file")->required();

    CLI::App* reconstruct_cmd =
        app.add_subcommand("reconstruct", "reconstruct a density matrix from expectation values");
    reconstruct_cmd->add_option("lattice", lattice_path, "lattice JSON file")->required();
    reconstruct_cmd->add_option("ev", ev_path, "expectation-value JSON file")->required();

    CLI::App* mobius = app.add_subcommand("mobius", "Mobius transform of a lattice");
    mobius->add_option("lattice", lattice_path, "lattice JSON file")->required();

    CLI::App* choquet = app.add_subcommand("choquet", "quantum Choquet integral");
    choquet->add_option("lattice", lattice_path, "lattice JSON file")->required();
    choquet->add_option("ev", ev_path, "expectation-value JSON file")->required();
    choquet->add_option("--form", form, "1 = ev increments, 2 = observable increments, 3 = Mobius")
        ->check(CLI::IsMember({1, 2, 3}));

    CLI::App* gen = app.add_subcommand("lattice-gen", "build a lattice from a spec or a Z_d basis");
    gen->add_option("spec", spec_path, "builder spec JSON file");
    gen->add_option("--zd", zd_dim, "emit Z_d singletons for this odd dimension");
    gen->add_option("--basis", basis, "position or coherent")
        ->check(CLI::IsMember({"position", "coherent"}));

    CLI::App* demo_cmd = app.add_subcommand("demo", "run a built-in example and self-check it");
    demo_cmd->add_option("name", demo_name, "projectors | noncommuting-1 | noncommuting-2")
        ->required()
        ->check(CLI::IsMember({"projectors", "noncommuting-1", "noncommuting-2"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt, lattice_path);
        if (reconstruct_cmd->parsed()) return cmd_reconstruct(opt, lattice_path, ev_path);
        if (mobius->parsed()) return cmd_mobius(opt, lattice_path);
        if (choquet->parsed()) return cmd_choquet(opt, lattice_path, ev_path, form);
        if (gen->parsed()) {
            if (!spec_path.empty()) return cmd_lattice_gen_spec(opt, spec_path);
            if (zd_dim > 0) return cmd_lattice_gen_zd(opt, zd_dim, basis);
            std::cerr << "lattice-gen: need a spec file or --zd\n";
            return kExitParse;
        }
        if (demo_cmd->parsed()) {
            if (demo_name == "projectors") return cmd_demo_projectors();
            return cmd_demo_noncommuting(demo_name == "noncommuting-1" ? 1 : 2);
        }
    } catch (const io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitParse;
}
