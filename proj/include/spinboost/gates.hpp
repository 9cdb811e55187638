#pragma once

#include "spinboost/linalg.hpp"

namespace spinboost::gates {

struct ControlledGate {
    double omega1 = 0.0;
    double omega2 = 0.0;
    linalg::ComplexMatrix matrix;  // 4x4
};

// Momentum-controlled spin rotation: block-diagonal with blocks
// [[cos W/2, sin W/2], [-sin W/2, cos W/2]] for W = omega1, omega2.
ControlledGate lorentz_gate(double omega1, double omega2);

// The (omega1, omega2) -> (0, pi) limit, written out exactly:
//   [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,-1,0]]
// Similar to a CNOT but order 4: the -1 entry makes its square diag(I, -I).
ControlledGate cnot_limit_gate();

struct DemoResult {
    linalg::ComplexMatrix input;   // normalized
    linalg::ComplexMatrix output;
    double concurrence_before = 0.0;
    double concurrence_after = 0.0;
};

DemoResult run_gate_demo(const ControlledGate& gate, const linalg::ComplexMatrix& input);

linalg::ComplexMatrix entangle_demo_input();     // (|p1> + |p2>) |up> / sqrt2
linalg::ComplexMatrix disentangle_demo_input();  // (|p1,up> + |p2,down>) / sqrt2

// cnot_limit_gate on the product input: concurrence 0 -> 1.
DemoResult demo_entangle(const linalg::ComplexMatrix& input);
DemoResult demo_entangle();

// cnot_limit_gate on the Bell input: concurrence 1 -> 0.
DemoResult demo_disentangle(const linalg::ComplexMatrix& input);
DemoResult demo_disentangle();

}  // namespace spinboost::gates
