#ifndef QLOC_GATES_HPP
#define QLOC_GATES_HPP

#include <span>
#include <variant>
#include <vector>

#include "qloc/statevector.hpp"

namespace qloc {

// Lightweight gate description, enough to spell out the fingerprint
// matching circuit as an ordered sequence and replay it on a StateVector.

struct HadamardGate {
  int qubit;
};

struct PauliXGate {
  int qubit;
};

// U(theta) on `target`, fired only where every control matches its
// required value. No controls = plain single-qubit rotation.
struct RotationGate {
  int target;
  double theta;
  std::vector<ControlBit> controls;
};

struct ControlledSwapGate {
  int control;
  std::vector<int> targets_a;
  std::vector<int> targets_b;
};

using Gate =
    std::variant<HadamardGate, PauliXGate, RotationGate, ControlledSwapGate>;
using GateSequence = std::vector<Gate>;

void apply_gate(StateVector& state, const Gate& gate);
void apply_sequence(StateVector& state, std::span<const Gate> gates);

// Same gate acting `offset` qubits higher; used to aim a register-local
// preparation sequence at its slot inside a larger circuit.
Gate shift_qubits(const Gate& gate, int offset);

}  // namespace qloc

#endif  // QLOC_GATES_HPP
