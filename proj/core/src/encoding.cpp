#include "qloc/encoding.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qloc {

namespace {

// Padded dimension: next power of two >= n, with a floor of 2 so that a
// single AP still occupies one qubit.
std::size_t padded_dimension(std::size_t n) {
  std::size_t dim = 2;
  while (dim < n) {
    dim *= 2;
  }
  return dim;
}

int log2_exact(std::size_t dim) {
  int n = 0;
  while ((std::size_t{1} << n) < dim) {
    ++n;
  }
  return n;
}

}  // namespace

AmplitudeVector::AmplitudeVector(std::vector<double> values,
                                 std::size_t source_dim)
    : values_(std::move(values)),
      source_dim_(source_dim),
      num_qubits_(log2_exact(values_.size())) {}

AmplitudeVector AmplitudeVector::normalized(std::vector<double> weights) {
  if (weights.empty()) {
    throw std::invalid_argument("AmplitudeVector: empty weight vector");
  }
  double sum_sq = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) {
      throw std::invalid_argument("AmplitudeVector: non-finite weight");
    }
    if (w < 0.0) {
      throw std::invalid_argument("AmplitudeVector: negative weight");
    }
    sum_sq += w * w;
  }
  if (sum_sq == 0.0) {
    throw std::domain_error(
        "AmplitudeVector: degenerate vector, zero vector cannot be "
        "normalized");
  }
  const std::size_t source_dim = weights.size();
  const double inv_norm = 1.0 / std::sqrt(sum_sq);
  std::vector<double> values(padded_dimension(source_dim), 0.0);
  for (std::size_t i = 0; i < source_dim; ++i) {
    values[i] = weights[i] * inv_norm;
  }
  return AmplitudeVector(std::move(values), source_dim);
}

AmplitudeVector AmplitudeVector::from_components(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("AmplitudeVector: empty component vector");
  }
  double sum_sq = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("AmplitudeVector: non-finite component");
    }
    if (v < 0.0) {
      throw std::invalid_argument("AmplitudeVector: negative component");
    }
    sum_sq += v * v;
  }
  if (std::abs(sum_sq - 1.0) > kNormSlack) {
    throw std::invalid_argument(
        "AmplitudeVector: components are not unit norm");
  }
  const std::size_t source_dim = values.size();
  values.resize(padded_dimension(source_dim), 0.0);
  return AmplitudeVector(std::move(values), source_dim);
}

double AmplitudeVector::norm_squared() const {
  double sum = 0.0;
  for (double v : values_) {
    sum += v * v;
  }
  return sum;
}

AmplitudeVector rss_to_amplitudes(const RawRssVector& raw, double floor_dbm) {
  if (raw.readings_dbm.empty()) {
    throw std::invalid_argument("rss_to_amplitudes: no readings");
  }
  std::vector<double> weights(raw.readings_dbm.size(), 0.0);
  for (std::size_t i = 0; i < raw.readings_dbm.size(); ++i) {
    const auto& reading = raw.readings_dbm[i];
    if (reading.has_value()) {
      weights[i] = std::max(*reading - floor_dbm, 0.0);
    }
  }
  try {
    return AmplitudeVector::normalized(std::move(weights));
  } catch (const std::domain_error&) {
    throw std::domain_error(
        "rss_to_amplitudes: all readings missing or at the floor");
  }
}

StateVector prepare_state(const AmplitudeVector& vec) {
  if (std::abs(vec.norm_squared() - 1.0) > AmplitudeVector::kNormSlack) {
    throw std::invalid_argument("prepare_state: vector is not unit norm");
  }
  std::vector<std::complex<double>> amps(vec.dimension());
  for (std::size_t i = 0; i < vec.dimension(); ++i) {
    amps[i] = {vec[i], 0.0};
  }
  return StateVector::from_amplitudes(vec.num_qubits(), std::move(amps));
}

double single_qubit_prep_angle(double a, double b) {
  if (a < 0.0 || b < 0.0) {
    throw std::invalid_argument(
        "single_qubit_prep_angle: amplitudes must be nonnegative");
  }
  if (a == 0.0 && b == 0.0) {
    throw std::invalid_argument(
        "single_qubit_prep_angle: both amplitudes are zero");
  }
  return 2.0 * std::atan2(b, a);
}

GateSequence rotation_tree_circuit(const AmplitudeVector& vec) {
  if (vec.norm_squared() == 0.0) {
    throw std::domain_error("rotation_tree_circuit: degenerate vector");
  }
  const int n = vec.num_qubits();

  // Subtree masses: node (level, prefix) covers indices whose top `level`
  // bits equal `prefix`.
  auto node_mass = [&](int level, std::size_t prefix) {
    const std::size_t width = vec.dimension() >> level;
    double mass = 0.0;
    for (std::size_t i = prefix * width; i < (prefix + 1) * width; ++i) {
      mass += vec[i] * vec[i];
    }
    return mass;
  };

  GateSequence gates;
  for (int level = 0; level < n; ++level) {
    const int target = n - 1 - level;
    for (std::size_t prefix = 0; prefix < (std::size_t{1} << level);
         ++prefix) {
      if (node_mass(level, prefix) == 0.0) {
        continue;  // nothing below this branch
      }
      const double left = node_mass(level + 1, prefix * 2);
      const double right = node_mass(level + 1, prefix * 2 + 1);
      RotationGate gate{target,
                        2.0 * std::atan2(std::sqrt(right), std::sqrt(left)),
                        {}};
      gate.controls.reserve(level);
      for (int c = 0; c < level; ++c) {
        // Control on qubit n-1-c, required to match bit c of the prefix
        // (prefix bit 0 is the most significant branch choice).
        gate.controls.push_back(
            ControlBit{n - 1 - c, ((prefix >> (level - 1 - c)) & 1) != 0});
      }
      gates.push_back(std::move(gate));
    }
  }
  return gates;
}

}  // namespace qloc
