#include "qap/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qap/errors.hpp"
#include "qap/rng.hpp"

namespace qap {

PauliSum make_pauli_sum(int n_qubits, std::vector<PauliTerm> terms) {
  if (n_qubits < 1) throw input_error("PauliSum needs n_qubits >= 1");
  for (const PauliTerm& t : terms) {
    if (static_cast<int>(t.paulis.size()) != n_qubits)
      throw input_error("pauli string '" + t.paulis + "' has length " +
                        std::to_string(t.paulis.size()) + ", expected " +
                        std::to_string(n_qubits));
    if (t.paulis.find_first_not_of("IXYZ") != std::string::npos)
      throw input_error("pauli string '" + t.paulis + "' has characters outside {I,X,Y,Z}");
    if (!std::isfinite(t.coeff))
      throw input_error("non-finite coefficient for term '" + t.paulis + "'");
  }
  PauliSum sum;
  sum.n_qubits = n_qubits;
  sum.terms = std::move(terms);
  return sum;
}

PauliSum z_on(int n_qubits, int q) {
  if (q < 0 || q >= n_qubits) throw input_error("z_on: qubit out of range");
  std::string s(n_qubits, 'I');
  s[q] = 'Z';
  return make_pauli_sum(n_qubits, {{1.0, std::move(s)}});
}

PauliSum parse_pauli_sum(std::istream& in, const std::string& origin) {
  std::vector<PauliTerm> terms;
  int n_qubits = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string coeff_tok, pauli_tok, extra;
    if (!(row >> coeff_tok)) continue;  // blank line
    if (!(row >> pauli_tok) || (row >> extra))
      throw input_error(origin + ":" + std::to_string(line_no) +
                        ": expected `<coefficient> <pauli-string>`");
    double coeff = 0.0;
    try {
      std::size_t used = 0;
      coeff = std::stod(coeff_tok, &used);
      if (used != coeff_tok.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw input_error(origin + ":" + std::to_string(line_no) +
                        ": bad coefficient '" + coeff_tok + "'");
    }
    if (n_qubits < 0) n_qubits = static_cast<int>(pauli_tok.size());
    if (static_cast<int>(pauli_tok.size()) != n_qubits)
      throw input_error(origin + ":" + std::to_string(line_no) +
                        ": pauli string length differs from earlier terms");
    terms.push_back({coeff, std::move(pauli_tok)});
  }
  if (terms.empty()) throw input_error(origin + ": no terms found");
  return make_pauli_sum(n_qubits, std::move(terms));
}

PauliSum load_pauli_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open hamiltonian file: " + path);
  return parse_pauli_sum(in, path);
}

namespace {

struct TermMasks {
  std::size_t flip = 0;     // X and Y positions (index space)
  std::size_t phase = 0;    // Y and Z positions
  std::size_t support = 0;  // all non-identity positions
  int n_y = 0;
};

TermMasks masks_for(const PauliTerm& term, int n_qubits) {
  TermMasks m;
  for (int q = 0; q < n_qubits; ++q) {
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - q);
    switch (term.paulis[q]) {
      case 'I': break;
      case 'X': m.flip |= bit; m.support |= bit; break;
      case 'Y': m.flip |= bit; m.phase |= bit; m.support |= bit; ++m.n_y; break;
      case 'Z': m.phase |= bit; m.support |= bit; break;
    }
  }
  return m;
}

}  // namespace

double expectation(const Statevector& state, const PauliSum& obs) {
  if (obs.n_qubits != state.n_qubits)
    throw input_error("observable acts on " + std::to_string(obs.n_qubits) +
                      " qubits, state has " + std::to_string(state.n_qubits));
  static const cdouble i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::size_t dim = state.dim();
  double total = 0.0;
  for (const PauliTerm& term : obs.terms) {
    const TermMasks m = masks_for(term, obs.n_qubits);
    cdouble acc{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
      acc += sign * std::conj(state.amps[i ^ m.flip]) * state.amps[i];
    }
    total += term.coeff * std::real(i_pow[m.n_y & 3] * acc);
  }
  return total;
}

double sampled_expectation(const Statevector& state, const PauliSum& obs,
                           int shots, std::uint64_t seed) {
  if (obs.n_qubits != state.n_qubits)
    throw input_error("observable acts on " + std::to_string(obs.n_qubits) +
                      " qubits, state has " + std::to_string(state.n_qubits));
  if (shots < 1) throw input_error("shots must be >= 1");
  constexpr double half_pi = std::numbers::pi / 2.0;
  const std::size_t dim = state.dim();
  double total = 0.0;
  std::vector<double> cum(dim);
  for (std::size_t t = 0; t < obs.terms.size(); ++t) {
    const PauliTerm& term = obs.terms[t];
    const TermMasks m = masks_for(term, obs.n_qubits);
    if (m.support == 0) {
      total += term.coeff;  // identity term, zero variance
      continue;
    }
    Statevector rotated = state;
    for (int q = 0; q < obs.n_qubits; ++q) {
      if (term.paulis[q] == 'X') apply_ry(rotated, q, -half_pi);
      else if (term.paulis[q] == 'Y') apply_rx(rotated, q, half_pi);
    }
    double running = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      running += std::norm(rotated.amps[i]);
      cum[i] = running;
    }
    Rng rng(mix_seed({seed, static_cast<std::uint64_t>(t)}));
    long long sum = 0;
    for (int s = 0; s < shots; ++s) {
      const double u = rng.uniform01() * running;
      const std::size_t idx = static_cast<std::size_t>(
          std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
      const std::size_t clamped = std::min(idx, dim - 1);
      sum += (std::popcount(clamped & m.support) & 1) ? -1 : 1;
    }
    total += term.coeff * static_cast<double>(sum) / shots;
  }
  return total;
}

}  // namespace qap
