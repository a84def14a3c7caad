#include "qchoquet/demo.hpp"

#include <cmath>

namespace qchoquet::demo {

namespace {

HermitianMatrix real3(double a00, double a01, double a02, double a11, double a12, double a22) {
    CMatrix m(3);
    m(0, 0) = a00;
    m(0, 1) = m(1, 0) = a01;
    m(0, 2) = m(2, 0) = a02;
    m(1, 1) = a11;
    m(1, 2) = m(2, 1) = a12;
    m(2, 2) = a22;
    return HermitianMatrix(m);
}

}  // namespace

std::vector<HermitianMatrix> noncommuting_singletons() {
    std::vector<HermitianMatrix> out;
    out.push_back(real3(0.15, 0.05, 0.05, 0.05, 0.0, 0.1));
    out.push_back(real3(0.25, 0.10, 0.05, 0.05, 0.0, 0.15));
    out.push_back(real3(0.30, 0.05, 0.10, 0.05, 0.0, 0.05));
    CMatrix t4(3);
    t4(0, 0) = 0.2;
    t4(0, 1) = cplx(0.0, 0.04);
    t4(1, 0) = cplx(0.0, -0.04);
    t4(0, 2) = cplx(0.0, 0.1);
    t4(2, 0) = cplx(0.0, -0.1);
    t4(1, 1) = 0.2;
    t4(1, 2) = t4(2, 1) = 0.02;
    t4(2, 2) = 0.1;
    out.push_back(HermitianMatrix(t4));
    return out;
}

LatticeWeights noncommuting_weights(int choice) {
    if (choice != 1 && choice != 2) throw Error("noncommuting demo: choice must be 1 or 2");
    LatticeWeights w;
    // Element 2 counts with weight 1.3 in every set containing {1,2}; element 3
    // with weight 1.2 in every set containing {2,3}. The second choice also
    // weights element 4 by 1.2 in every set containing {2,4}.
    w[SubsetKey({1, 2})][2] = 1.3;
    w[SubsetKey({1, 2, 3})][2] = 1.3;
    w[SubsetKey({1, 2, 4})][2] = 1.3;
    w[SubsetKey({2, 3})][3] = 1.2;
    w[SubsetKey({1, 2, 3})][3] = 1.2;
    w[SubsetKey({2, 3, 4})][3] = 1.2;
    if (choice == 2) {
        w[SubsetKey({2, 4})][4] = 1.2;
        w[SubsetKey({1, 2, 4})][4] = 1.2;
        w[SubsetKey({2, 3, 4})][4] = 1.2;
    }
    return w;
}

MatrixCapacity noncommuting_lattice(int choice) {
    return build_lattice(noncommuting_singletons(), noncommuting_weights(choice));
}

HermitianMatrix noncommuting_reference_state() {
    CMatrix m(3);
    m(0, 0) = 0.3;
    m(0, 1) = m(1, 0) = 0.3;
    m(1, 1) = 0.4;
    m(1, 2) = cplx(0.0, 0.1);
    m(2, 1) = cplx(0.0, -0.1);
    m(2, 2) = 0.3;
    return HermitianMatrix(m);
}

ExpectationVector noncommuting_expectations() { return ExpectationVector{{0.125, 0.200, 0.155, 0.170}}; }

NoncommutingGolden noncommuting_golden(int choice) {
    NoncommutingGolden g;
    g.sigma = {1, 3, 4, 2};
    g.increments = {0.030, 0.015, 0.030};
    g.tol_values = 1e-8;
    g.tol_errors = 1e-8;
    g.tol_snapshot = 1e-3;
    if (choice == 1) {
        g.chain_coefficients = {0.075, 0.036, 0.045};
        g.r1_real = {{0.545647558386412, 0.131634819532909, 0.104033970276008},
                     {0.131634819532909, 0.205944798301486, 0.012738853503185},
                     {0.104033970276008, 0.012738853503185, 0.248407643312102}};
        g.r1_imag = {{0.0, 0.025477707006369, 0.063694267515924},
                     {-0.025477707006369, 0.0, 0.0},
                     {-0.063694267515924, 0.0, 0.0}};
        g.eigenvalues = {0.147227592190719, 0.223158732585054, 0.629613675224227};
        g.reproduced = {0.140552016985138, 0.220700636942675, 0.220382165605096, 0.190445859872611};
        g.errors = {0.124416135881104, 0.103503184713375, 0.421820423258681, 0.120269763956538};
        g.snapshot_r1_real = {{0.545, 0.131, 0.104}, {0.131, 0.205, 0.012}, {0.104, 0.012, 0.248}};
        g.snapshot_r1_imag = {{0.0, 0.025, 0.063}, {-0.025, 0.0, 0.0}, {-0.063, 0.0, 0.0}};
        g.snapshot_eigenvalues = {0.147, 0.223, 0.630};
        g.snapshot_reproduced = {0.140, 0.220, 0.220, 0.190};
    } else if (choice == 2) {
        g.chain_coefficients = {0.075, 0.036, 0.054};
        g.r1_real = {{0.536926147704591, 0.123752495009980, 0.097804391217565},
                     {0.123752495009980, 0.217564870259481, 0.014371257485030},
                     {0.097804391217565, 0.014371257485030, 0.245508982035928}};
        g.r1_imag = {{0.0, 0.028742514970060, 0.071856287425150},
                     {-0.028742514970060, 0.0, 0.0},
                     {-0.071856287425150, 0.0, 0.0}};
        g.eigenvalues = {0.158483840030769, 0.222188557836849, 0.619327602132382};
        g.reproduced = {0.138123752495010, 0.216467065868263, 0.216167664670659, 0.192694610778443};
        g.errors = {0.104990019960079, 0.082335329341317, 0.394630094649411, 0.133497710461430};
        g.snapshot_r1_real = {{0.536, 0.123, 0.097}, {0.123, 0.217, 0.014}, {0.097, 0.014, 0.245}};
        g.snapshot_r1_imag = {{0.0, 0.028, 0.071}, {-0.028, 0.0, 0.0}, {-0.071, 0.0, 0.0}};
        g.snapshot_eigenvalues = {0.158, 0.222, 0.619};
        g.snapshot_reproduced = {0.138, 0.216, 0.216, 0.192};
    } else {
        throw Error("noncommuting demo: choice must be 1 or 2");
    }
    return g;
}

std::vector<double> projector_errors_closed_form(double e1, double e2, double e3, double lambda) {
    const double den = 1.0 + lambda * (e2 - e1);
    const double c00 = (1.0 - lambda) * e1 + lambda * e2;
    return {std::abs(c00 / den - e1) / e1, std::abs(e2 / den - e2) / e2,
            std::abs(e3 / den - e3) / e3};
}

}  // namespace qchoquet::demo
