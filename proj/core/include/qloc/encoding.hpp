#ifndef QLOC_ENCODING_HPP
#define QLOC_ENCODING_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qloc/gates.hpp"
#include "qloc/statevector.hpp"

namespace qloc {

// One scan: dBm per access point, nullopt where the AP was not heard.
struct RawRssVector {
  std::vector<std::optional<double>> readings_dbm;
};

// Unit-norm nonnegative real vector, zero-padded to a power of two, ready
// to be loaded into the amplitudes of num_qubits() qubits.
//
// `normalized` rescales arbitrary nonnegative weights to unit norm.
// `from_components` takes values that are already (approximately) unit
// norm and stores them as given; the norm check is deliberately loose
// (1e-2) so that vectors rounded to two decimals, whose squared norm can
// be off by ~1e-2, pass through without being silently rescaled.
class AmplitudeVector {
 public:
  static constexpr double kNormSlack = 1e-2;

  static AmplitudeVector normalized(std::vector<double> weights);
  static AmplitudeVector from_components(std::vector<double> values);

  std::size_t dimension() const { return values_.size(); }  // padded, 2^n
  std::size_t source_dim() const { return source_dim_; }
  int num_qubits() const { return num_qubits_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  double norm_squared() const;

 private:
  AmplitudeVector(std::vector<double> values, std::size_t source_dim);

  std::vector<double> values_;
  std::size_t source_dim_;
  int num_qubits_;
};

// dBm -> amplitude map: present readings shift to (reading - floor),
// clipped below at 0; missing APs contribute 0; the weight vector is then
// L2-normalized and zero-padded. All readings missing or at/below the
// floor leave nothing to normalize and raise std::domain_error.
AmplitudeVector rss_to_amplitudes(const RawRssVector& raw, double floor_dbm);

// Loads the vector directly into the amplitudes of an n-qubit register:
// amplitude(i) = vec[i].
StateVector prepare_state(const AmplitudeVector& vec);

// Angle t with U(t)|0> = (a, b) up to normalization; (a,b) = (0,1) gives
// pi. Both components must be nonnegative and not both zero.
double single_qubit_prep_angle(double a, double b);

// Binary tree of conditional rotations preparing `vec` from |0...0>:
// level l rotates qubit n-1-l, controlled on the l qubits above it; the
// angle at branch prefix p is 2*atan2(sqrt(right-subtree mass),
// sqrt(left-subtree mass)). Zero-mass branches emit nothing.
GateSequence rotation_tree_circuit(const AmplitudeVector& vec);

}  // namespace qloc

#endif  // QLOC_ENCODING_HPP
