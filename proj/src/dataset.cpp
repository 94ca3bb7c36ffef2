#include "qap/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "qap/costs.hpp"
#include "qap/errors.hpp"
#include "qap/pauli.hpp"
#include "qap/rng.hpp"

namespace qap {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t\r");
    const auto last = cell.find_last_not_of(" \t\r");
    cells.push_back(first == std::string::npos
                        ? std::string{}
                        : cell.substr(first, last - first + 1));
  }
  return cells;
}

bool parse_double(const std::string& tok, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(tok, &used);
    return used == tok.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

int parse_label(const std::string& tok, LabelAlphabet alphabet, bool& ok) {
  ok = true;
  if (alphabet == LabelAlphabet::PlusMinusOne) {
    if (tok == "+1" || tok == "1") return 1;
    if (tok == "-1") return -1;
  } else {
    if (tok == "0") return 0;
    if (tok == "1") return 1;
  }
  ok = false;
  return 0;
}

}  // namespace

Dataset load_dataset_csv(const std::string& path, LabelAlphabet alphabet) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open dataset file: " + path);
  Dataset data;
  std::string line;
  int line_no = 0;
  std::size_t dim = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() < 2)
      throw input_error(path + ":" + std::to_string(line_no) +
                        ": need at least one feature and a label");
    std::vector<double> row(cells.size() - 1);
    bool numeric = true;
    for (std::size_t c = 0; c + 1 < cells.size(); ++c)
      if (!parse_double(cells[c], row[c])) { numeric = false; break; }
    bool label_ok = false;
    const int label = numeric ? parse_label(cells.back(), alphabet, label_ok) : 0;
    if (first_content_line && (!numeric || !label_ok)) {
      first_content_line = false;  // header row
      continue;
    }
    first_content_line = false;
    if (!numeric)
      throw input_error(path + ":" + std::to_string(line_no) + ": malformed feature value");
    if (!label_ok)
      throw input_error(path + ":" + std::to_string(line_no) + ": unknown label token '" +
                        cells.back() + "'");
    if (dim == 0) dim = row.size();
    if (row.size() != dim)
      throw input_error(path + ":" + std::to_string(line_no) + ": expected " +
                        std::to_string(dim) + " features, got " +
                        std::to_string(row.size()));
    data.features.push_back(std::move(row));
    data.labels.push_back(label);
  }
  if (data.features.empty()) throw input_error(path + ": no data rows");
  return data;
}

std::pair<Dataset, Dataset> split_dataset(const Dataset& data,
                                          double val_fraction,
                                          std::uint64_t seed) {
  if (val_fraction < 0.0 || val_fraction >= 1.0)
    throw input_error("val_fraction must lie in [0, 1)");
  std::vector<std::size_t> order(data.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(mix_seed({seed, 0x5117ull}));
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(order.size() - i));
    std::swap(order[i], order[j]);
  }
  const std::size_t n_val = static_cast<std::size_t>(
      std::floor(val_fraction * static_cast<double>(data.size())));
  const std::size_t n_train = data.size() - n_val;
  Dataset train, val;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Dataset& dst = i < n_train ? train : val;
    dst.features.push_back(data.features[order[i]]);
    dst.labels.push_back(data.labels[order[i]]);
  }
  return {std::move(train), std::move(val)};
}

void scale_features_minmax(Dataset& data, double lo, double hi) {
  if (data.features.empty()) return;
  const std::size_t d = data.dim();
  std::vector<double> mn(d, std::numeric_limits<double>::infinity());
  std::vector<double> mx(d, -std::numeric_limits<double>::infinity());
  for (const auto& row : data.features)
    for (std::size_t c = 0; c < d; ++c) {
      mn[c] = std::min(mn[c], row[c]);
      mx[c] = std::max(mx[c], row[c]);
    }
  for (auto& row : data.features)
    for (std::size_t c = 0; c < d; ++c) {
      const double span = mx[c] - mn[c];
      row[c] = span > 0.0 ? lo + (hi - lo) * (row[c] - mn[c]) / span : lo;
    }
}

double predict_accuracy(const ParamCircuit& circuit,
                        std::span<const double> params, const Dataset& data,
                        PredictTask task) {
  if (data.size() == 0) throw input_error("cannot score an empty dataset");
  const Statevector initial = init_basis_state(
      circuit.n_qubits, std::string(circuit.n_qubits, '0'));
  const PauliSum z_last = z_on(circuit.n_qubits, circuit.n_qubits - 1);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const Statevector state =
        bind_and_run(circuit, params, data.features[i], initial);
    int predicted = 0;
    if (task == PredictTask::SignOfExpectation) {
      predicted = expectation(state, z_last) >= 0.0 ? 1 : -1;
    } else {
      std::array<double, 4> z{};
      for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        const double p = std::norm(state.amps[idx]);
        for (int q = 0; q < 4; ++q)
          z[q] += p * (((idx >> (3 - q)) & 1) ? -1.0 : 1.0);
      }
      const std::array<double, 2> probs = mnist_readout(z);
      predicted = probs[1] > probs[0] ? 1 : 0;
    }
    if (predicted == data.labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(data.size());
}

}  // namespace qap
