#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fastids/autodiff.hpp"
#include "fastids/tensor.hpp"

namespace fastids {

struct Conv1dLayer {
    std::string name;
    std::size_t in_channels = 0;
    std::size_t out_channels = 0;
    std::size_t kernel = 1;
    std::size_t stride = 1;
    std::size_t padding = 0;
};

struct LinearLayer {
    std::string name;
    std::size_t in_features = 0;
    std::size_t out_features = 0;
};

/// Consumes (batch, features, sequence) and emits the final hidden state,
/// (batch, hidden) or (batch, 2 * hidden) when bidirectional.
struct LstmLayer {
    std::string name;
    std::size_t input_size = 0;
    std::size_t hidden_size = 0;
    bool bidirectional = false;
};

struct ReluLayer {};
struct LeakyReluLayer {
    double slope = 0.2;
};
struct SoftmaxLayer {};
/// (batch, c, l) -> (batch, c * l)
struct FlattenLayer {};
/// (batch, c * l) -> (batch, c, l)
struct UnflattenLayer {
    std::size_t channels = 0;
    std::size_t length = 0;
};

using Layer = std::variant<Conv1dLayer, LinearLayer, LstmLayer, ReluLayer, LeakyReluLayer, SoftmaxLayer, FlattenLayer,
                           UnflattenLayer>;

std::string layer_kind(const Layer& layer);
bool has_params(const Layer& layer);
bool is_activation(const Layer& layer);

/// Ordered layer stack with a per-sample input shape ({features} or
/// {channels, length}). The batch dimension is implicit.
struct GraphSpec {
    Shape input_shape;
    std::vector<Layer> layers;

    /// Per-sample output shape of every layer; throws naming the first
    /// incompatible layer.
    std::vector<Shape> layer_output_shapes() const;
    Shape output_shape() const;
    void validate() const;

    /// Parameter tensor names with their shapes, in layer order.
    std::vector<std::pair<std::string, Shape>> param_shapes() const;

    std::string serialize() const;
    static GraphSpec parse(const std::string& text);

    bool operator==(const GraphSpec& other) const { return serialize() == other.serialize(); }
};

/// Joins two stacks; the second one's input must match the first one's output.
GraphSpec concat_graphs(const GraphSpec& first, const GraphSpec& second);

struct MomentState {
    std::vector<double> first;
    std::vector<double> second;
    std::int64_t steps = 0;
};

struct ParamStore {
    std::map<std::string, Tensor> tensors;
    std::map<std::string, MomentState> optimizer_state;

    const Tensor& at(const std::string& name) const;
    Tensor& at(const std::string& name);
    bool contains(const std::string& name) const { return tensors.count(name) > 0; }
    std::size_t parameter_count() const;
};

/// Uniform(-sqrt(1/fan_in), sqrt(1/fan_in)) initialization, seeded.
ParamStore init_params(const GraphSpec& graph, std::uint64_t seed, DType dtype = DType::Float32);
void init_params_into(const GraphSpec& graph, std::uint64_t seed, DType dtype, ParamStore& store);

/// Fails unless `params` holds exactly the tensors `graph` declares (extra
/// names are allowed when `allow_extra` is set, for stores shared by graphs).
void check_params(const GraphSpec& graph, const ParamStore& params, bool allow_extra = false);

using VarMap = std::map<std::string, ad::Var>;

/// Leaf variables for every tensor in the store.
VarMap bind(const ParamStore& params, bool requires_grad);

/// Output of a recorded forward pass; `activations[i]` is layer i's output.
struct ForwardTrace {
    std::vector<ad::Var> activations;
};

/// Runs `graph` on a batch laid out (batch, ...input_shape).
ad::Var forward(const GraphSpec& graph, const VarMap& params, const ad::Var& input, ForwardTrace* trace = nullptr);
Tensor forward(const GraphSpec& graph, const ParamStore& params, const Tensor& input);

/// d loss / d parameter for every tensor the graph declares.
std::map<std::string, Tensor> backward(const GraphSpec& graph, const VarMap& bound, const ad::Var& loss);

/// One LSTM direction over a (batch, features, seq) input; returns the final hidden state.
ad::Var lstm_direction(const ad::Var& input, const ad::Var& w_ih, const ad::Var& w_hh, const ad::Var& bias,
                       std::size_t hidden, bool reverse);

}  // namespace fastids
