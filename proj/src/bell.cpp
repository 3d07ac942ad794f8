#include "swapqkd/bell.hpp"

namespace swapqkd {

namespace {

constexpr int label_slot(BellLabel label) { return label.x + 2 * label.z; }

// Indexed by label_slot: phi+=0, psi+=1, phi-=2, psi-=3.
constexpr std::array<std::uint8_t, 4> kBellCode = {0, 1, 3, 2};
constexpr std::array<BellLabel, 4> kCodeBell = {phi_plus, psi_plus, psi_minus,
                                                phi_minus};

constexpr std::array<std::string_view, 4> kCodeStr = {"00", "01", "10", "11"};
constexpr std::array<std::string_view, 4> kBellNames = {"phi+", "psi+", "phi-",
                                                        "psi-"};
constexpr std::array<std::string_view, 4> kPauliNames = {"sigma0", "sigma1",
                                                         "sigma2", "sigma3"};

}  // namespace

std::string_view code_str(BitCode code) { return kCodeStr[code.value & 3]; }

BitCode bell_to_code(BellLabel label) {
  return BitCode{kBellCode[label_slot(label)]};
}

BellLabel code_to_bell(BitCode code) { return kCodeBell[code.value & 3]; }

BitCode pauli_to_code(PauliOp op) {
  return BitCode{static_cast<std::uint8_t>(op)};
}

PauliOp code_to_pauli(BitCode code) {
  return static_cast<PauliOp>(code.value & 3);
}

std::string_view bell_name(BellLabel label) {
  return kBellNames[label_slot(label)];
}

std::string_view pauli_name(PauliOp op) {
  return kPauliNames[static_cast<int>(op)];
}

std::array<SwapTerm, 4> swap_distribution(BellLabel pair_a, BellLabel pair_b) {
  std::array<SwapTerm, 4> terms;
  for (int i = 0; i < 4; ++i) {
    const BellLabel outcome = all_bell_labels[i];
    terms[i] = SwapTerm{outcome, swap_residual(pair_a, pair_b, outcome),
                        Rational{1, 4}};
  }
  return terms;
}

}  // namespace swapqkd
