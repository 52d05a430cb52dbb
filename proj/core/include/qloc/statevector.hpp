#ifndef QLOC_STATEVECTOR_HPP
#define QLOC_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qloc/rng.hpp"

namespace qloc {

struct ControlBit {
  int qubit;
  bool value;  // required bit for the rotation to fire
};

// Dense statevector of an n-qubit register: 2^n complex amplitudes.
//
// Qubit ordering: qubit 0 is the LEAST significant bit of the basis index,
// so basis state |i> assigns bit ((i >> q) & 1) to qubit q. A register
// created by the constructor starts in |0...0>.
//
// Gates mutate the state in place and preserve its norm; states built from
// |0...0> by gate application stay unit-norm to within accumulated
// rounding (~1e-15 per gate). from_amplitudes() accepts arbitrary finite
// amplitudes so that linear-algebra identities can be checked on
// non-normalized vectors as well.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;  // desk-scale bound

  // Prepares |0...0>.
  explicit StateVector(int num_qubits);

  static StateVector from_amplitudes(int num_qubits,
                                     std::vector<std::complex<double>> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::complex<double> amplitude(std::size_t basis_index) const;
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  // H = (1/sqrt(2)) [[1, 1], [1, -1]] on one qubit.
  void apply_hadamard(int qubit);

  // Pauli-X: exchanges the amplitudes of the two basis states that differ
  // in this qubit.
  void apply_x(int qubit);

  // Real rotation [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
  void apply_u(int qubit, double theta);

  // Same rotation, applied only on basis states whose control bits all
  // match their required values. An empty control list is a plain U.
  void apply_controlled_u(int qubit, double theta,
                          std::span<const ControlBit> controls);

  // Fredkin on whole registers: for every basis state with the control
  // bit set, bits at targets_a[i] and targets_b[i] are exchanged pairwise.
  // The control-0 subspace is untouched.
  void apply_cswap(int control, std::span<const int> targets_a,
                   std::span<const int> targets_b);

  // Sum of |amplitude|^2 over basis states whose bit at `qubit` is 1.
  double qubit_one_probability(int qubit) const;

  double norm_squared() const;

 private:
  void check_qubit(int qubit) const;

  int num_qubits_;
  std::vector<std::complex<double>> amps_;
};

// Binomial(shots, qubit_one_probability) count of |1> outcomes, one
// Bernoulli draw per shot. Deterministic for a fixed stream.
long sample_qubit(const StateVector& state, int qubit, long shots,
                  RngStream& rng);

// Kronecker product. The `low` factor occupies the low-order qubits of the
// result: amplitude(i_high * dim(low) + i_low) = high(i_high) * low(i_low).
StateVector tensor_product(const StateVector& high, const StateVector& low);

}  // namespace qloc

#endif  // QLOC_STATEVECTOR_HPP
