#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fastids/graph.hpp"

namespace fastids {

enum class OptimizerKind { Sgd, RmsProp, Adam };

const char* optimizer_name(OptimizerKind kind);
OptimizerKind parse_optimizer(const std::string& name);

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Adam;
    double learning_rate = 3e-4;
    /// RMSProp squared-gradient smoothing.
    double rho = 0.99;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::size_t batch_size = 32;
    std::uint64_t seed = 0;

    void validate() const;

    static OptimizerConfig rmsprop(double lr) { return {OptimizerKind::RmsProp, lr}; }
    static OptimizerConfig adam(double lr) { return {OptimizerKind::Adam, lr}; }
    static OptimizerConfig sgd(double lr) { return {OptimizerKind::Sgd, lr}; }
};

/// Applies one update to every tensor named in `trainable`. Each name must
/// have a gradient; updated values are rounded to the tensor's storage dtype.
/// Optimizer moments are kept in float64 inside the store.
void optimizer_step(ParamStore& params, const std::map<std::string, Tensor>& grads, const OptimizerConfig& config,
                    const std::vector<std::string>& trainable);

/// Same, over every tensor that has a gradient entry.
void optimizer_step(ParamStore& params, const std::map<std::string, Tensor>& grads, const OptimizerConfig& config);

}  // namespace fastids
