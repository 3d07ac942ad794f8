#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace swapqkd {

/// Local operation applied to a single qubit: the identity and the three
/// Pauli matrices, written sigma_0..sigma_3 in the agreed public encoding.
enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<PauliOp, 4> all_paulis = {PauliOp::I, PauliOp::X,
                                                      PauliOp::Y, PauliOp::Z};

/// One of the four Bell states, stored as its bit-flip / phase-flip
/// components. Global phase is intentionally not represented: it never
/// affects measurement statistics or key material.
///
///   (0,0) <-> |phi+>   (1,0) <-> |psi+>   (1,1) <-> |psi->   (0,1) <-> |phi->
struct BellLabel {
  std::uint8_t x = 0;  // bit-flip component
  std::uint8_t z = 0;  // phase-flip component

  friend constexpr bool operator==(BellLabel, BellLabel) = default;

  /// Componentwise XOR: the group law underlying entanglement swapping.
  friend constexpr BellLabel operator^(BellLabel a, BellLabel b) {
    return BellLabel{static_cast<std::uint8_t>(a.x ^ b.x),
                     static_cast<std::uint8_t>(a.z ^ b.z)};
  }
};

inline constexpr BellLabel phi_plus{0, 0};
inline constexpr BellLabel psi_plus{1, 0};
inline constexpr BellLabel psi_minus{1, 1};
inline constexpr BellLabel phi_minus{0, 1};

/// The four labels in public-code order: |phi+>, |psi+>, |psi->, |phi->.
inline constexpr std::array<BellLabel, 4> all_bell_labels = {
    phi_plus, psi_plus, psi_minus, phi_minus};

/// Two ordered bits as they appear on the classical channel ("01" has
/// first bit 0, second bit 1).
struct BitCode {
  std::uint8_t value = 0;  // 0..3, first bit is the high bit

  constexpr bool first() const { return (value >> 1) & 1; }
  constexpr bool second() const { return value & 1; }

  friend constexpr bool operator==(BitCode, BitCode) = default;
};

/// Renders a code as the two characters written on the channel, e.g. "10".
std::string_view code_str(BitCode code);

// Public encoding agreed between the parties:
//   |phi+> -> 00, |psi+> -> 01, |psi-> -> 10, |phi-> -> 11
//   sigma_0 -> 00, sigma_1 -> 01, sigma_2 -> 10, sigma_3 -> 11
BitCode bell_to_code(BellLabel label);
BellLabel code_to_bell(BitCode code);
BitCode pauli_to_code(PauliOp op);
PauliOp code_to_pauli(BitCode code);

/// Display names: "phi+", "psi+", "psi-", "phi-" and "sigma0".."sigma3".
std::string_view bell_name(BellLabel label);
std::string_view pauli_name(PauliOp op);

/// How a Pauli on one qubit of a pair displaces the pair's label:
/// sigma_1 flips x, sigma_3 flips z, sigma_2 flips both, sigma_0 neither.
constexpr BellLabel pauli_shift(PauliOp op) {
  switch (op) {
    case PauliOp::I: return {0, 0};
    case PauliOp::X: return {1, 0};
    case PauliOp::Y: return {1, 1};
    case PauliOp::Z: return {0, 1};
  }
  return {0, 0};
}

/// The unique Pauli whose shift equals the given label displacement.
constexpr PauliOp pauli_from_shift(BellLabel shift) {
  if (shift == BellLabel{1, 0}) return PauliOp::X;
  if (shift == BellLabel{1, 1}) return PauliOp::Y;
  if (shift == BellLabel{0, 1}) return PauliOp::Z;
  return PauliOp::I;
}

/// Label of the Bell state obtained by acting with `op` on the first qubit
/// of a pair in state `pair`, up to global phase.
constexpr BellLabel apply_pauli_first(PauliOp op, BellLabel pair) {
  return pair ^ pauli_shift(op);
}

/// Label of the unmeasured pair after a Bell measurement on one particle
/// from each of two pairs yields `outcome`. The swap rule is the
/// componentwise XOR of the three labels.
constexpr BellLabel swap_residual(BellLabel pair_a, BellLabel pair_b,
                                  BellLabel outcome) {
  return pair_a ^ pair_b ^ outcome;
}

/// Exact probability as a ratio of small integers.
struct Rational {
  int num = 0;
  int den = 1;

  constexpr double value() const { return static_cast<double>(num) / den; }
  friend constexpr bool operator==(Rational, Rational) = default;
};

struct SwapTerm {
  BellLabel outcome;   // Bell measurement result on the measured pair
  BellLabel residual;  // state of the two leftover particles
  Rational probability;
};

/// The full entanglement-swapping decomposition of pair_a (x) pair_b:
/// all four measurement outcomes, each with probability 1/4, paired with
/// the residual the swap rule dictates. Outcomes are listed in public-code
/// order.
std::array<SwapTerm, 4> swap_distribution(BellLabel pair_a, BellLabel pair_b);

/// The Bell label the measured pair would have shown had no local
/// operation been applied, inferred from the observed residual. Both
/// parties can evaluate this from public information.
constexpr BellLabel infer_imaginary(BellLabel initial_a, BellLabel initial_b,
                                    BellLabel residual) {
  return initial_a ^ initial_b ^ residual;
}

/// The unique Pauli p with
///   swap_residual(apply_pauli_first(p, initial_a), initial_b, announced)
///     == residual.
/// The Pauli group acts regularly on labels, so a solution always exists.
constexpr PauliOp infer_pauli(BellLabel announced, BellLabel residual,
                              BellLabel initial_a, BellLabel initial_b) {
  return pauli_from_shift(announced ^ residual ^ initial_a ^ initial_b);
}

}  // namespace swapqkd
