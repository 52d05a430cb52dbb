#include "qloc/gates.hpp"

namespace qloc {

namespace {

struct ApplyVisitor {
  StateVector& state;

  void operator()(const HadamardGate& g) const {
    state.apply_hadamard(g.qubit);
  }
  void operator()(const PauliXGate& g) const { state.apply_x(g.qubit); }
  void operator()(const RotationGate& g) const {
    state.apply_controlled_u(g.target, g.theta, g.controls);
  }
  void operator()(const ControlledSwapGate& g) const {
    state.apply_cswap(g.control, g.targets_a, g.targets_b);
  }
};

struct ShiftVisitor {
  int offset;

  Gate operator()(const HadamardGate& g) const {
    return HadamardGate{g.qubit + offset};
  }
  Gate operator()(const PauliXGate& g) const {
    return PauliXGate{g.qubit + offset};
  }
  Gate operator()(const RotationGate& g) const {
    RotationGate out{g.target + offset, g.theta, g.controls};
    for (auto& c : out.controls) {
      c.qubit += offset;
    }
    return out;
  }
  Gate operator()(const ControlledSwapGate& g) const {
    ControlledSwapGate out = g;
    out.control += offset;
    for (auto& q : out.targets_a) {
      q += offset;
    }
    for (auto& q : out.targets_b) {
      q += offset;
    }
    return out;
  }
};

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
  std::visit(ApplyVisitor{state}, gate);
}

void apply_sequence(StateVector& state, std::span<const Gate> gates) {
  for (const auto& gate : gates) {
    apply_gate(state, gate);
  }
}

Gate shift_qubits(const Gate& gate, int offset) {
  return std::visit(ShiftVisitor{offset}, gate);
}

}  // namespace qloc
