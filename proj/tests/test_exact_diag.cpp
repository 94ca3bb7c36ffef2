#include "doctest.h"
#include "oracles.hpp"
#include "qap/errors.hpp"
#include "qap/exact_diag.hpp"
#include "qap/pauli.hpp"

using namespace qap;

TEST_CASE("ground energies of small operators") {
  CHECK(exact_diag(make_pauli_sum(1, {{1.0, "Z"}})) == doctest::Approx(-1.0));
  // 0.5 ZZ + 0.5 XX: ground -1 (singlet sector).
  CHECK(exact_diag(make_pauli_sum(2, {{0.5, "ZZ"}, {0.5, "XX"}})) ==
        doctest::Approx(-1.0).epsilon(1e-10));
  // Pure identity: every eigenvalue is the coefficient.
  CHECK(exact_diag(make_pauli_sum(3, {{0.37, "III"}})) == doctest::Approx(0.37));
}

TEST_CASE("matches the Jacobi oracle on random Hermitian sums") {
  const char alphabet[4] = {'I', 'X', 'Y', 'Z'};
  std::uint64_t state = 12345;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(next() % 2);
    std::vector<PauliTerm> terms;
    const int n_terms = 2 + static_cast<int>(next() % 4);
    for (int t = 0; t < n_terms; ++t) {
      std::string s(n, 'I');
      for (int q = 0; q < n; ++q) s[q] = alphabet[next() % 4];
      terms.push_back({static_cast<double>(next() % 2000) / 1000.0 - 1.0, s});
    }
    const PauliSum h = make_pauli_sum(n, std::move(terms));
    const double want = oracle::dense_ground_energy(oracle::pauli_sum_matrix(h));
    CHECK(exact_diag(h) == doctest::Approx(want).epsilon(1e-8));
  }
}

TEST_CASE("qubit cap") {
  std::vector<PauliTerm> terms{{1.0, std::string(13, 'Z')}};
  CHECK_THROWS_AS(exact_diag(make_pauli_sum(13, std::move(terms))), capability_error);
}
