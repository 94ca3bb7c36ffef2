#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qap/circuit.hpp"

namespace qap {

enum class LabelAlphabet { PlusMinusOne, ZeroOne };

struct Dataset {
  std::vector<std::vector<double>> features;
  std::vector<int> labels;

  std::size_t size() const { return features.size(); }
  std::size_t dim() const { return features.empty() ? 0 : features[0].size(); }
};

// CSV with an optional header, d feature columns and one trailing label
// column (`+1`/`-1`/`1` or `0`/`1` depending on the alphabet). Malformed rows
// raise an input_error naming the line.
Dataset load_dataset_csv(const std::string& path, LabelAlphabet alphabet);

// Seeded shuffle, then the first (1 - val_fraction) of the rows become the
// training split. Deterministic for a fixed seed.
std::pair<Dataset, Dataset> split_dataset(const Dataset& data,
                                          double val_fraction,
                                          std::uint64_t seed);

// Per-feature min-max rescale into [lo, hi]. Constant features map to lo.
void scale_features_minmax(Dataset& data, double lo, double hi);

enum class PredictTask {
  SignOfExpectation,  // sign of <Z_last>, ties predict +1
  ReadoutArgmax,      // argmax of the two-class readout
};

// Fraction of correctly classified samples, exact expectations.
double predict_accuracy(const ParamCircuit& circuit,
                        std::span<const double> params, const Dataset& data,
                        PredictTask task);

}  // namespace qap
