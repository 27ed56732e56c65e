#pragma once

#include <stdexcept>
#include <string>

namespace qrabi {

// Truncation growth hit its cap before the requested tolerance was met.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(std::string what, int last_n_tr, double last_deviation)
        : std::runtime_error(std::move(what)),
          n_tr(last_n_tr),
          deviation(last_deviation) {}
    int n_tr;
    double deviation;
};

// A back-transformed eigenstate lost more norm than the Fock cutoff allows.
class NormLoss : public std::runtime_error {
public:
    NormLoss(std::string what, int state_index, double loss)
        : std::runtime_error(std::move(what)), index(state_index), loss(loss) {}
    int index;
    double loss;
};

class GridMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidDensity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StepUnderflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qrabi
