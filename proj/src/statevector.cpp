#include "swapqkd/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace swapqkd {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t dimension_for(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 1.." +
                                std::to_string(StateVector::kMaxQubits) +
                                ", got " + std::to_string(num_qubits));
  }
}

void check_qubit_index(const StateVector& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) +
                            " out of range for " +
                            std::to_string(state.num_qubits()) + " qubits");
  }
}

// Bit position (LSB order) of `qubit` in an index of `num_qubits` bits.
int bit_pos(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }

// Spreads an (n-2)-bit rest index into an n-bit index with zero bits left
// at positions lo < hi (LSB order).
std::size_t spread_rest(std::size_t rest, int lo, int hi) {
  const std::size_t low = rest & ((std::size_t{1} << lo) - 1);
  const std::size_t mid =
      (rest >> lo) & ((std::size_t{1} << (hi - 1 - lo)) - 1);
  const std::size_t high = rest >> (hi - 1);
  return low | (mid << (lo + 1)) | (high << (hi + 1));
}

// The two basis indices spanned by Bell state `label` on qubits (q1, q2)
// for a fixed rest configuration, plus the matching amplitudes c0, c1.
struct PairSupport {
  std::size_t index0;
  std::size_t index1;
};

struct PairGeometry {
  int pos1;  // bit position of q1
  int pos2;  // bit position of q2
  int lo;
  int hi;

  PairGeometry(const StateVector& state, int q1, int q2)
      : pos1(bit_pos(state.num_qubits(), q1)),
        pos2(bit_pos(state.num_qubits(), q2)) {
    lo = pos1 < pos2 ? pos1 : pos2;
    hi = pos1 < pos2 ? pos2 : pos1;
  }

  PairSupport support(std::size_t rest, BellLabel label) const {
    const std::size_t base = spread_rest(rest, lo, hi);
    // Bell support: (bit_q1, bit_q2) in {(0, x), (1, 1^x)}.
    const std::size_t i0 =
        base | (static_cast<std::size_t>(label.x) << pos2);
    const std::size_t i1 = base | (std::size_t{1} << pos1) |
                           (static_cast<std::size_t>(label.x ^ 1) << pos2);
    return {i0, i1};
  }
};

void check_pair(const StateVector& state, int q1, int q2) {
  check_qubit_index(state, q1);
  check_qubit_index(state, q2);
  if (q1 == q2) {
    throw std::invalid_argument("Bell measurement needs two distinct qubits");
  }
  if (state.num_qubits() < 2) {
    throw std::invalid_argument("Bell measurement needs at least two qubits");
  }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amplitudes_.assign(dimension_for(num_qubits), Amplitude{0.0, 0.0});
  amplitudes_[0] = Amplitude{1.0, 0.0};
}

StateVector::StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(num_qubits);
  if (amplitudes_.size() != dimension_for(num_qubits)) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  if (std::abs(squared_norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

double StateVector::squared_norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return total;
}

int StateVector::basis_bit(std::size_t basis_index, int qubit) const {
  return static_cast<int>(basis_index >> bit_pos(num_qubits_, qubit)) & 1;
}

StateVector make_bell_pair(BellLabel label) {
  std::vector<StateVector::Amplitude> amps(4, {0.0, 0.0});
  const double sign = label.z ? -kInvSqrt2 : kInvSqrt2;
  // |0, x> + (-1)^z |1, 1^x>, normalized.
  amps[label.x] = {kInvSqrt2, 0.0};
  amps[2 | (label.x ^ 1)] = {sign, 0.0};
  return StateVector(2, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int total = a.num_qubits() + b.num_qubits();
  if (total > StateVector::kMaxQubits) {
    throw std::invalid_argument("tensor product exceeds the 8-qubit capacity");
  }
  std::vector<StateVector::Amplitude> amps(dimension_for(total));
  const std::size_t dim_b = b.dimension();
  for (std::size_t ia = 0; ia < a.dimension(); ++ia) {
    for (std::size_t ib = 0; ib < dim_b; ++ib) {
      amps[(ia * dim_b) | ib] = a.amplitudes()[ia] * b.amplitudes()[ib];
    }
  }
  return StateVector(total, std::move(amps));
}

StateVector apply_pauli(const StateVector& state, int qubit, PauliOp op) {
  check_qubit_index(state, qubit);
  if (op == PauliOp::I) return state;

  auto amps = state.amplitudes();
  const std::size_t mask = std::size_t{1}
                           << bit_pos(state.num_qubits(), qubit);
  const StateVector::Amplitude imag_unit{0.0, 1.0};
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const std::size_t j = i | mask;
    switch (op) {
      case PauliOp::X:
        std::swap(amps[i], amps[j]);
        break;
      case PauliOp::Y: {
        // Y|0> = i|1>, Y|1> = -i|0>.
        const auto a0 = amps[i];
        const auto a1 = amps[j];
        amps[i] = -imag_unit * a1;
        amps[j] = imag_unit * a0;
        break;
      }
      case PauliOp::Z:
        amps[j] = -amps[j];
        break;
      case PauliOp::I:
        break;
    }
  }
  return StateVector(state.num_qubits(), std::move(amps));
}

std::array<double, 4> bell_probabilities(const StateVector& state, int q1,
                                         int q2) {
  check_pair(state, q1, q2);
  const PairGeometry geom(state, q1, q2);
  const std::size_t rest_dim = state.dimension() >> 2;
  const auto& amps = state.amplitudes();

  std::array<double, 4> probs{};
  for (const BellLabel label : all_bell_labels) {
    const double c1 = label.z ? -kInvSqrt2 : kInvSqrt2;
    double p = 0.0;
    for (std::size_t rest = 0; rest < rest_dim; ++rest) {
      const auto [i0, i1] = geom.support(rest, label);
      p += std::norm(kInvSqrt2 * amps[i0] + c1 * amps[i1]);
    }
    probs[bell_to_code(label).value] = p;
  }
  return probs;
}

MeasureResult project_bell(const StateVector& state, int q1, int q2,
                           BellLabel outcome) {
  check_pair(state, q1, q2);
  const PairGeometry geom(state, q1, q2);
  const std::size_t rest_dim = state.dimension() >> 2;
  const auto& amps = state.amplitudes();
  const double c1 = outcome.z ? -kInvSqrt2 : kInvSqrt2;

  double p = 0.0;
  std::vector<StateVector::Amplitude> overlaps(rest_dim);
  for (std::size_t rest = 0; rest < rest_dim; ++rest) {
    const auto [i0, i1] = geom.support(rest, outcome);
    overlaps[rest] = kInvSqrt2 * amps[i0] + c1 * amps[i1];
    p += std::norm(overlaps[rest]);
  }
  if (p <= 1e-15) {
    throw std::invalid_argument(
        "projection onto a zero-probability Bell outcome");
  }

  const double inv_sqrt_p = 1.0 / std::sqrt(p);
  std::vector<StateVector::Amplitude> post(state.dimension(), {0.0, 0.0});
  for (std::size_t rest = 0; rest < rest_dim; ++rest) {
    const auto [i0, i1] = geom.support(rest, outcome);
    post[i0] = kInvSqrt2 * overlaps[rest] * inv_sqrt_p;
    post[i1] = c1 * overlaps[rest] * inv_sqrt_p;
  }
  return MeasureResult{outcome, p,
                       StateVector(state.num_qubits(), std::move(post))};
}

MeasureResult bell_measure(const StateVector& state, int q1, int q2,
                           RandomStream& rng) {
  const auto probs = bell_probabilities(state, q1, q2);
  const double u = next_uniform(rng);

  double cumulative = 0.0;
  BellLabel chosen = all_bell_labels[0];
  bool found = false;
  for (const BellLabel label : all_bell_labels) {
    const double p = probs[bell_to_code(label).value];
    if (p <= 0.0) continue;  // never sample a zero-probability projection
    cumulative += p;
    chosen = label;
    if (u < cumulative) {
      found = true;
      break;
    }
  }
  // Rounding can leave cumulative a hair under 1; the last nonzero
  // outcome absorbs the remainder.
  (void)found;
  return project_bell(state, q1, q2, chosen);
}

std::optional<BellLabel> identify_bell(const StateVector& state,
                                       double tolerance) {
  if (state.num_qubits() != 2) {
    throw std::invalid_argument("identify_bell expects a two-qubit state");
  }
  const auto& amps = state.amplitudes();
  for (const BellLabel label : all_bell_labels) {
    const double c1 = label.z ? -kInvSqrt2 : kInvSqrt2;
    const auto overlap = kInvSqrt2 * amps[label.x] + c1 * amps[2 | (label.x ^ 1)];
    if (std::norm(overlap) > 1.0 - tolerance) return label;
  }
  return std::nullopt;
}

StateVector make_entangled_source(double ancilla_overlap) {
  if (!(ancilla_overlap >= 0.0 && ancilla_overlap <= 1.0)) {
    throw std::invalid_argument("ancilla overlap must lie in [0, 1]");
  }
  // (|00>|alpha> + |11>|beta>)/sqrt(2) with alpha = |0> and
  // beta = overlap|0> + sqrt(1-overlap^2)|1>.
  const double ortho = std::sqrt(1.0 - ancilla_overlap * ancilla_overlap);
  std::vector<StateVector::Amplitude> amps(8, {0.0, 0.0});
  amps[0b000] = {kInvSqrt2, 0.0};
  amps[0b110] = {kInvSqrt2 * ancilla_overlap, 0.0};
  amps[0b111] = {kInvSqrt2 * ortho, 0.0};
  return StateVector(3, std::move(amps));
}

}  // namespace swapqkd
