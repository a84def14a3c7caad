#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qchoquet/demo.hpp"
#include "qchoquet/reconstruct.hpp"
#include "qchoquet/zd.hpp"

using namespace qchoquet;

namespace {

void check_report_invariants(const ReconstructionReport& report, const ExpectationVector& ev) {
    CHECK(is_positive_semidefinite(report.r1));
    CHECK(report.r1.trace() == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(report.errors.size() == ev.values.size());
    for (size_t r = 0; r < ev.values.size(); ++r) {
        const double abs_err = std::abs(report.reproduced[r] - ev.values[r]);
        CHECK(report.absolute_errors[r] == abs_err);
        CHECK(report.errors[r] == abs_err / ev.values[r]);
    }
}

}  // namespace

TEST_CASE("reconstruction of the reference data") {
    ExpectationVector ev = demo::noncommuting_expectations();

    SUBCASE("first lattice choice") {
        ReconstructionReport report = reconstruct(demo::noncommuting_lattice(1), ev);
        check_report_invariants(report, ev);
        const auto g = demo::noncommuting_golden(1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CHECK(report.r1.at(i, j).real() ==
                      doctest::Approx(g.r1_real[static_cast<size_t>(i)][static_cast<size_t>(j)])
                          .epsilon(g.tol_values));
                CHECK(report.r1.at(i, j).imag() ==
                      doctest::Approx(g.r1_imag[static_cast<size_t>(i)][static_cast<size_t>(j)])
                          .epsilon(g.tol_values));
            }
        for (size_t r = 0; r < 3; ++r)
            CHECK(std::abs(report.eigenvalues[r] - g.eigenvalues[r]) < g.tol_values);
        for (size_t r = 0; r < 4; ++r) {
            CHECK(std::abs(report.reproduced[r] - g.reproduced[r]) < g.tol_values);
            CHECK(std::abs(report.errors[r] - g.errors[r]) < g.tol_errors);
        }
        // coarse agreement with the published 3-decimal run
        for (size_t r = 0; r < 3; ++r)
            CHECK(std::abs(report.eigenvalues[r] - g.snapshot_eigenvalues[r]) < g.tol_snapshot);
        for (size_t r = 0; r < 4; ++r)
            CHECK(std::abs(report.reproduced[r] - g.snapshot_reproduced[r]) < g.tol_snapshot);
    }

    SUBCASE("second lattice choice") {
        ReconstructionReport report = reconstruct(demo::noncommuting_lattice(2), ev);
        check_report_invariants(report, ev);
        const auto g = demo::noncommuting_golden(2);
        CHECK(std::abs(report.r1.at(0, 0).real() - 0.536) < g.tol_snapshot);
        for (size_t r = 0; r < 3; ++r)
            CHECK(std::abs(report.eigenvalues[r] - g.eigenvalues[r]) < g.tol_values);
        for (size_t r = 0; r < 4; ++r) {
            CHECK(std::abs(report.reproduced[r] - g.reproduced[r]) < g.tol_values);
            CHECK(std::abs(report.errors[r] - g.errors[r]) < g.tol_errors);
        }
    }

    SUBCASE("comonotonic inputs share the chain") {
        ReconstructionReport a = reconstruct(demo::noncommuting_lattice(1), ev);
        ExpectationVector ev2{{0.10, 0.30, 0.20, 0.25}};
        ReconstructionReport b = reconstruct(demo::noncommuting_lattice(1), ev2);
        CHECK(a.chain == b.chain);
    }
}

TEST_CASE("exact recovery in the Kolmogorov case") {
    ZdSystem sys(3);
    MatrixCapacity add = build_lattice(position_projectors(sys));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        HermitianMatrix rho = random_density_matrix(3, seed + 9000);
        ExpectationVector ev;
        for (int r = 0; r < 3; ++r) ev.values.push_back(rho.at(r, r).real());
        ReconstructionReport report = reconstruct(add, ev);
        for (double e : report.errors) CHECK(e < 1e-10);
        // the diagonal is recovered exactly
        for (int r = 0; r < 3; ++r)
            CHECK(report.r1.at(r, r).real() == doctest::Approx(rho.at(r, r).real()).epsilon(1e-10));
    }
}

TEST_CASE("degenerate data") {
    SUBCASE("all-equal expectation values with n > d have zero trace") {
        MatrixCapacity c = demo::noncommuting_lattice(1);
        ExpectationVector flat{{0.3, 0.3, 0.3, 0.3}};
        CHECK_THROWS_AS(reconstruct(c, flat), ZeroTrace);
    }

    SUBCASE("policy violations propagate") {
        auto rl = qchoquet::testing::random_lattice(3, 2, 31);
        ExpectationVector ev{{0.4, 0.6}};
        CHECK_THROWS_AS(reconstruct(rl.capacity, ev), DimensionPolicyViolation);
    }
}

TEST_CASE("projector example closed forms") {
    const double e1 = 0.1, e2 = 0.3, e3 = 0.6;

    SUBCASE("lambda = 0 is the trivial exact solution") {
        ReconstructionReport report = projector_example(e1, e2, e3, 0.0);
        CHECK(report.r1.approx_equal(HermitianMatrix::diagonal({e1, e2, e3}), 1e-12));
        for (double err : report.errors) CHECK(err < 1e-12);
    }

    SUBCASE("lambda = 0.5 matches the hand calculation") {
        ReconstructionReport report = projector_example(e1, e2, e3, 0.5);
        // C = diag(0.5*0.1 + 0.5*0.3, 0.3, 0.6) = diag(0.2, 0.3, 0.6); trace 1.1
        CHECK(report.r1.approx_equal(
            (1.0 / 1.1) * HermitianMatrix::diagonal({0.2, 0.3, 0.6}), 1e-12));
        CHECK(report.errors[1] == doctest::Approx(0.1 / 1.1).epsilon(1e-12));
        CHECK(report.errors[2] == doctest::Approx(0.1 / 1.1).epsilon(1e-12));
    }

    SUBCASE("lambda family tracks the closed form") {
        for (double lambda : {0.0, 0.25, 0.5, 0.75}) {
            ReconstructionReport report = projector_example(e1, e2, e3, lambda);
            const auto want = demo::projector_errors_closed_form(e1, e2, e3, lambda);
            REQUIRE(report.errors.size() == want.size());
            for (size_t r = 0; r < want.size(); ++r)
                CHECK(std::abs(report.errors[r] - want[r]) < 1e-12);

            // C(R) = diag((1-lambda) e1 + lambda e2, e2, e3), trace 1 + lambda (e2-e1)
            MatrixCapacity lattice = projector_example_lattice(lambda);
            ExpectationVector ev{{e1, e2, e3}};
            ChoquetResult integral = quantum_choquet_ev_increments(lattice, ev);
            HermitianMatrix closed =
                HermitianMatrix::diagonal({(1.0 - lambda) * e1 + lambda * e2, e2, e3});
            CHECK(integral.matrix.approx_equal(closed, 1e-12));
            CHECK(std::abs(integral.matrix.trace() - (1.0 + lambda * (e2 - e1))) < 1e-12);
        }
    }

    SUBCASE("generic reconstruct agrees with the wrapper") {
        ReconstructionReport direct =
            reconstruct(projector_example_lattice(0.25), ExpectationVector{{e1, e2, e3}});
        ReconstructionReport wrapped = projector_example(e1, e2, e3, 0.25);
        CHECK(direct.r1.approx_equal(wrapped.r1, 1e-14));
    }

    SUBCASE("invalid spectra rejected") {
        CHECK_THROWS_AS(projector_example(0.3, 0.1, 0.6, 0.5), InvalidSpectrum);   // not ascending
        CHECK_THROWS_AS(projector_example(0.1, 0.3, 0.7, 0.5), InvalidSpectrum);   // sum != 1
        CHECK_THROWS_AS(projector_example(0.0, 0.4, 0.6, 0.5), InvalidSpectrum);   // e1 = 0
        CHECK_THROWS_AS(projector_example(0.1, 0.3, 0.6, 1.0), InvalidSpectrum);   // lambda = 1
    }
}

TEST_CASE("check_linear_independence") {
    CHECK(check_linear_independence(demo::noncommuting_singletons()).independent);

    HermitianMatrix theta = qchoquet::testing::random_hermitian(3, 51);
    IndependenceReport dep = check_linear_independence({theta, 2.0 * theta});
    CHECK_FALSE(dep.independent);
    CHECK(dep.rank == 1);

    CHECK(check_linear_independence(position_projectors(ZdSystem(3))).independent);
}

TEST_CASE("check_trace_inequality") {
    SUBCASE("reference data is consistent") {
        CHECK(check_trace_inequality(demo::noncommuting_lattice(1),
                                     demo::noncommuting_expectations())
                  .empty());
    }

    SUBCASE("violating data for a comparable pair warns") {
        // theta({1}) = 0.2 * theta({2}) gives a comparable singleton pair.
        HermitianMatrix base = 0.3 * random_density_matrix(3, 61);
        std::vector<HermitianMatrix> singles = {0.2 * base, base, 0.2 * HermitianMatrix::identity(3)};
        MatrixCapacity c = build_lattice(singles);
        // Tr difference bound: ev_2 - ev_1 <= Tr(theta2) - Tr(theta1) = 0.8 * 0.3
        ExpectationVector bad{{0.01, 0.9, 0.5}};
        CHECK_FALSE(check_trace_inequality(c, bad).empty());
        ExpectationVector fine{{0.05, 0.2, 0.5}};
        CHECK(check_trace_inequality(c, fine).empty());
    }

    SUBCASE("incomparable singletons never warn") {
        ZdSystem sys(3);
        MatrixCapacity add = build_lattice(position_projectors(sys));
        ExpectationVector wild{{0.99, 0.005, 0.005}};
        CHECK(check_trace_inequality(add, wild).empty());
    }
}

TEST_CASE("reconstruction flags") {
    SUBCASE("dependent singletons are flagged") {
        HermitianMatrix a = 0.2 * random_density_matrix(3, 71);
        std::vector<HermitianMatrix> singles = {a, a, 0.1 * HermitianMatrix::identity(3)};
        MatrixCapacity c = build_lattice(singles);
        ReconstructionReport report = reconstruct(c, ExpectationVector{{0.2, 0.21, 0.3}});
        bool flagged = false;
        for (const std::string& f : report.flags)
            if (f.find("linear") != std::string::npos) flagged = true;
        CHECK(flagged);
    }
}
