#include "spinboost/gates.hpp"

#include <cmath>
#include <numbers>

#include "spinboost/entanglement.hpp"
#include "spinboost/states.hpp"

namespace spinboost::gates {

using linalg::ComplexMatrix;

ControlledGate lorentz_gate(double omega1, double omega2) {
    ControlledGate g{omega1, omega2, ComplexMatrix(4, 4)};
    const double angles[2] = {omega1, omega2};
    for (std::size_t blk = 0; blk < 2; ++blk) {
        const double c = std::cos(0.5 * angles[blk]);
        const double s = std::sin(0.5 * angles[blk]);
        g.matrix(2 * blk, 2 * blk) = c;
        g.matrix(2 * blk, 2 * blk + 1) = s;
        g.matrix(2 * blk + 1, 2 * blk) = -s;
        g.matrix(2 * blk + 1, 2 * blk + 1) = c;
    }
    return g;
}

ControlledGate cnot_limit_gate() {
    ControlledGate g{0.0, std::numbers::pi, ComplexMatrix(4, 4)};
    g.matrix(0, 0) = 1.0;
    g.matrix(1, 1) = 1.0;
    g.matrix(2, 3) = 1.0;
    g.matrix(3, 2) = -1.0;
    return g;
}

DemoResult run_gate_demo(const ControlledGate& gate, const ComplexMatrix& input) {
    DemoResult r;
    r.input = states::normalized_ket(input);
    r.output = gate.matrix * r.input;
    r.concurrence_before = entanglement::concurrence_numeric(linalg::projector(r.input)).concurrence;
    r.concurrence_after = entanglement::concurrence_numeric(linalg::projector(r.output)).concurrence;
    return r;
}

ComplexMatrix entangle_demo_input() {
    const double r = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::column({r, 0.0, r, 0.0});
}

ComplexMatrix disentangle_demo_input() {
    const double r = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::column({r, 0.0, 0.0, r});
}

DemoResult demo_entangle(const ComplexMatrix& input) {
    return run_gate_demo(cnot_limit_gate(), input);
}

DemoResult demo_entangle() { return demo_entangle(entangle_demo_input()); }

DemoResult demo_disentangle(const ComplexMatrix& input) {
    return run_gate_demo(cnot_limit_gate(), input);
}

DemoResult demo_disentangle() { return demo_disentangle(disentangle_demo_input()); }

}  // namespace spinboost::gates
