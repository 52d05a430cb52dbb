#include "qloc/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qloc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_finite(const std::vector<std::complex<double>>& amps) {
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("StateVector: non-finite amplitude");
    }
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("StateVector: qubit count " +
                                std::to_string(num_qubits) +
                                " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  amps_.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::from_amplitudes(
    int num_qubits, std::vector<std::complex<double>> amps) {
  StateVector state(num_qubits);
  if (amps.size() != state.dimension()) {
    throw std::invalid_argument(
        "StateVector: amplitude count does not match 2^num_qubits");
  }
  check_finite(amps);
  state.amps_ = std::move(amps);
  return state;
}

std::complex<double> StateVector::amplitude(std::size_t basis_index) const {
  if (basis_index >= amps_.size()) {
    throw std::out_of_range("StateVector: basis index out of range");
  }
  return amps_[basis_index];
}

void StateVector::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw std::out_of_range("StateVector: qubit index " +
                            std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits_) + " qubits");
  }
}

void StateVector::apply_hadamard(int qubit) {
  check_qubit(qubit);
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const auto a0 = amps_[i0];
      const auto a1 = amps_[i1];
      amps_[i0] = (a0 + a1) * kInvSqrt2;
      amps_[i1] = (a0 - a1) * kInvSqrt2;
    }
  }
}

void StateVector::apply_x(int qubit) {
  check_qubit(qubit);
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      std::swap(amps_[base + off], amps_[base + off + stride]);
    }
  }
}

void StateVector::apply_u(int qubit, double theta) {
  apply_controlled_u(qubit, theta, {});
}

void StateVector::apply_controlled_u(int qubit, double theta,
                                     std::span<const ControlBit> controls) {
  check_qubit(qubit);
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("StateVector: rotation angle must be finite");
  }
  std::size_t control_mask = 0;
  std::size_t required = 0;
  for (const auto& c : controls) {
    check_qubit(c.qubit);
    const std::size_t bit = std::size_t{1} << c.qubit;
    if (c.qubit == qubit || (control_mask & bit) != 0) {
      throw std::invalid_argument(
          "StateVector: duplicate or target-overlapping control qubit");
    }
    control_mask |= bit;
    if (c.value) {
      required |= bit;
    }
  }

  const double cos_half = std::cos(theta / 2.0);
  const double sin_half = std::sin(theta / 2.0);
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      if ((i0 & control_mask) != required) {
        continue;
      }
      const std::size_t i1 = i0 + stride;
      const auto a0 = amps_[i0];
      const auto a1 = amps_[i1];
      amps_[i0] = cos_half * a0 - sin_half * a1;
      amps_[i1] = sin_half * a0 + cos_half * a1;
    }
  }
}

void StateVector::apply_cswap(int control, std::span<const int> targets_a,
                              std::span<const int> targets_b) {
  if (targets_a.size() != targets_b.size()) {
    throw std::invalid_argument(
        "StateVector: cswap target registers differ in length");
  }
  check_qubit(control);
  std::size_t seen = std::size_t{1} << control;
  for (auto list : {targets_a, targets_b}) {
    for (int q : list) {
      check_qubit(q);
      const std::size_t bit = std::size_t{1} << q;
      if ((seen & bit) != 0) {
        throw std::invalid_argument(
            "StateVector: cswap qubits must be pairwise distinct");
      }
      seen |= bit;
    }
  }

  const std::size_t control_bit = std::size_t{1} << control;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & control_bit) == 0) {
      continue;
    }
    // Exchange target bit pairs to find the image index; swap each
    // two-cycle once.
    std::size_t j = i;
    for (std::size_t t = 0; t < targets_a.size(); ++t) {
      const std::size_t bit_a = (i >> targets_a[t]) & 1;
      const std::size_t bit_b = (i >> targets_b[t]) & 1;
      if (bit_a != bit_b) {
        j ^= (std::size_t{1} << targets_a[t]) |
             (std::size_t{1} << targets_b[t]);
      }
    }
    if (j > i) {
      std::swap(amps_[i], amps_[j]);
    }
  }
}

double StateVector::qubit_one_probability(int qubit) const {
  check_qubit(qubit);
  const std::size_t stride = std::size_t{1} << qubit;
  double sum = 0.0;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
    for (std::size_t off = 0; off < stride; ++off) {
      sum += std::norm(amps_[base + off + stride]);
    }
  }
  return sum;
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) {
    sum += std::norm(a);
  }
  return sum;
}

long sample_qubit(const StateVector& state, int qubit, long shots,
                  RngStream& rng) {
  if (shots < 1) {
    throw std::invalid_argument("sample_qubit: shot count must be >= 1");
  }
  const double p = state.qubit_one_probability(qubit);
  return rng.binomial(shots, p);
}

StateVector tensor_product(const StateVector& high, const StateVector& low) {
  const int total = high.num_qubits() + low.num_qubits();
  std::vector<std::complex<double>> amps(std::size_t{1} << total);
  const std::size_t low_dim = low.dimension();
  for (std::size_t h = 0; h < high.dimension(); ++h) {
    for (std::size_t l = 0; l < low_dim; ++l) {
      amps[h * low_dim + l] = high.amplitude(h) * low.amplitude(l);
    }
  }
  return StateVector::from_amplitudes(total, std::move(amps));
}

}  // namespace qloc
