#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "swapqkd/bell.hpp"

using namespace swapqkd;

TEST_CASE("public code order is phi+ psi+ psi- phi-") {
  CHECK(bell_to_code(phi_plus).value == 0);
  CHECK(bell_to_code(psi_plus).value == 1);
  CHECK(bell_to_code(psi_minus).value == 2);
  CHECK(bell_to_code(phi_minus).value == 3);

  for (std::uint8_t v = 0; v < 4; ++v) {
    CHECK(bell_to_code(code_to_bell(BitCode{v})).value == v);
  }
  for (BellLabel label : all_bell_labels) {
    CHECK(code_to_bell(bell_to_code(label)) == label);
  }
}

TEST_CASE("operator codes follow the sigma index") {
  CHECK(pauli_to_code(PauliOp::I).value == 0);
  CHECK(pauli_to_code(PauliOp::X).value == 1);
  CHECK(pauli_to_code(PauliOp::Y).value == 2);
  CHECK(pauli_to_code(PauliOp::Z).value == 3);
  for (std::uint8_t v = 0; v < 4; ++v) {
    CHECK(pauli_to_code(code_to_pauli(BitCode{v})).value == v);
  }
}

TEST_CASE("display names and channel strings") {
  CHECK(bell_name(phi_plus) == "phi+");
  CHECK(bell_name(psi_plus) == "psi+");
  CHECK(bell_name(psi_minus) == "psi-");
  CHECK(bell_name(phi_minus) == "phi-");
  CHECK(pauli_name(PauliOp::I) == "sigma0");
  CHECK(pauli_name(PauliOp::Y) == "sigma2");
  CHECK(code_str(BitCode{0}) == "00");
  CHECK(code_str(BitCode{1}) == "01");
  CHECK(code_str(BitCode{2}) == "10");
  CHECK(code_str(BitCode{3}) == "11");
}

TEST_CASE("bit codes expose channel bits high-first") {
  CHECK_FALSE(BitCode{1}.first());
  CHECK(BitCode{1}.second());
  CHECK(BitCode{2}.first());
  CHECK_FALSE(BitCode{2}.second());
}

TEST_CASE("labels form a group under componentwise xor") {
  for (BellLabel a : all_bell_labels) {
    CHECK((a ^ phi_plus) == a);  // identity
    CHECK((a ^ a) == phi_plus);  // self-inverse
    for (BellLabel b : all_bell_labels) {
      CHECK((a ^ b) == (b ^ a));
      for (BellLabel c : all_bell_labels) {
        CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
      }
    }
  }
}

TEST_CASE("pauli shifts and their inverse") {
  CHECK(pauli_shift(PauliOp::I) == BellLabel{0, 0});
  CHECK(pauli_shift(PauliOp::X) == BellLabel{1, 0});
  CHECK(pauli_shift(PauliOp::Y) == BellLabel{1, 1});
  CHECK(pauli_shift(PauliOp::Z) == BellLabel{0, 1});
  for (PauliOp op : all_paulis) {
    CHECK(pauli_from_shift(pauli_shift(op)) == op);
  }
}

TEST_CASE("a pauli on the first particle permutes the labels") {
  CHECK(apply_pauli_first(PauliOp::I, phi_plus) == phi_plus);
  CHECK(apply_pauli_first(PauliOp::X, phi_plus) == psi_plus);
  CHECK(apply_pauli_first(PauliOp::Y, phi_plus) == psi_minus);
  CHECK(apply_pauli_first(PauliOp::Z, phi_plus) == phi_minus);

  for (PauliOp op : all_paulis) {
    bool seen[4] = {};
    for (BellLabel label : all_bell_labels) {
      const BellLabel moved = apply_pauli_first(op, label);
      CHECK(apply_pauli_first(op, moved) == label);  // involution
      seen[bell_to_code(moved).value] = true;
    }
    CHECK((seen[0] && seen[1] && seen[2] && seen[3]));  // regular action
  }
}

TEST_CASE("swap residual for one worked pairing") {
  // phi+ and psi- pairs: each measurement outcome pins the partner state.
  CHECK(swap_residual(phi_plus, psi_minus, phi_plus) == psi_minus);
  CHECK(swap_residual(phi_plus, psi_minus, psi_plus) == phi_minus);
  CHECK(swap_residual(phi_plus, psi_minus, psi_minus) == phi_plus);
  CHECK(swap_residual(phi_plus, psi_minus, phi_minus) == psi_plus);

  // psi+ and phi+ pairs with outcome psi- leave phi-.
  CHECK(swap_residual(psi_plus, phi_plus, psi_minus) == phi_minus);
}

TEST_CASE("imaginary-outcome inference inverts the swap rule") {
  for (BellLabel a : all_bell_labels) {
    for (BellLabel b : all_bell_labels) {
      for (BellLabel outcome : all_bell_labels) {
        const BellLabel residual = swap_residual(a, b, outcome);
        CHECK(infer_imaginary(a, b, residual) == outcome);
      }
    }
  }
}

TEST_CASE("operator inference inverts the forward round exactly") {
  for (PauliOp op : all_paulis) {
    for (BellLabel a : all_bell_labels) {
      for (BellLabel b : all_bell_labels) {
        for (BellLabel announced : all_bell_labels) {
          const BellLabel residual =
              swap_residual(apply_pauli_first(op, a), b, announced);
          CHECK(infer_pauli(announced, residual, a, b) == op);
        }
      }
    }
  }
}

TEST_CASE("swap distribution lists all four outcomes at 1/4") {
  for (BellLabel a : all_bell_labels) {
    for (BellLabel b : all_bell_labels) {
      const auto terms = swap_distribution(a, b);
      for (int i = 0; i < 4; ++i) {
        CHECK(terms[i].outcome == all_bell_labels[i]);  // public-code order
        CHECK(terms[i].probability == Rational{1, 4});
        CHECK(terms[i].residual == swap_residual(a, b, terms[i].outcome));
      }
      // The four residuals are a permutation of the labels.
      bool seen[4] = {};
      for (const SwapTerm& t : terms) seen[bell_to_code(t.residual).value] = true;
      CHECK((seen[0] && seen[1] && seen[2] && seen[3]));
    }
  }
}

TEST_CASE("rational probabilities compare and evaluate exactly") {
  CHECK(Rational{1, 4}.value() == 0.25);
  CHECK(Rational{1, 4} == Rational{1, 4});
  CHECK_FALSE(Rational{1, 4} == Rational{1, 2});
}
