#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "fastids/container.hpp"
#include "fastids/graph.hpp"
#include "fastids/quant.hpp"

namespace fastids {

// ---------------------------------------------------------------------------
// Pruning

enum class FilterRanking { L1, Random };

struct PruneConfig {
    double ratio = 0.4;
    std::size_t finetune_epochs = 10;
    FilterRanking ranking = FilterRanking::L1;
    /// Only used by random ranking.
    std::uint64_t seed = 0;

    void validate() const;
};

/// L1 norm of each output-channel filter of a (F, C, K) conv weight.
std::vector<double> filter_importance(const Tensor& weight);
std::vector<double> random_importance(std::size_t filters, std::uint64_t seed);

/// Indices of the filters to drop: the floor(ratio * F) lowest scores, ties
/// going to the lower index. Sorted ascending.
std::vector<std::size_t> filters_to_remove(const std::vector<double>& scores, double ratio);

struct PrunedLayer {
    std::string name;
    std::size_t filters_before = 0;
    std::size_t filters_after = 0;
    std::vector<std::size_t> removed;
};

struct PruneResult {
    GraphSpec graph;
    ParamStore params;
    std::vector<PrunedLayer> layers;
};

/// Removes filters from every conv layer whose output feeds a later
/// parameterized layer, and slices that consumer's input accordingly
/// (conv input channels, LSTM input columns, or flatten->linear columns).
/// Scores come from the unpruned weights. Optimizer state is dropped.
PruneResult prune_filters(const GraphSpec& graph, const ParamStore& params, const PruneConfig& config);

// ---------------------------------------------------------------------------
// Calibration and quantization

struct ObserverState {
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::size_t batches = 0;

    void observe(const Tensor& t);
    void merge(const ObserverState& other);
    bool ready() const { return batches > 0; }
};

/// Name of the activation site fed by the graph input.
inline const std::string kInputSite = "input";
/// Site after parameterized layer `index` (and its activation, if any).
std::string site_name(const GraphSpec& graph, std::size_t param_layer_index);

struct Calibration {
    std::map<std::string, ObserverState> weights;
    std::map<std::string, ObserverState> sites;
};

/// Requires at least one batch.
Calibration calibrate(const GraphSpec& graph, const ParamStore& params, const std::vector<Tensor>& batches);

struct QuantizedModel {
    GraphSpec graph;
    int bits = 8;
    /// Int8 weights and Int32 biases, or the float tensors when passthrough.
    std::map<std::string, Tensor> tensors;
    /// Per tensor name and per activation site.
    std::map<std::string, QuantParams> qparams;

    bool passthrough() const { return bits >= 32; }
};

/// Quantizes weights from their own min/max and activation sites from
/// `site_qparams`. `overrides` replaces the computed parameters of any weight.
QuantizedModel quantize_model(const GraphSpec& graph, const ParamStore& params,
                              const std::map<std::string, QuantParams>& site_qparams, int bits,
                              const std::map<std::string, QuantParams>& overrides = {});
QuantizedModel quantize_model(const GraphSpec& graph, const ParamStore& params, const Calibration& calibration,
                              int bits);

/// Integer conv/linear with int32 accumulators; LSTM gates on dequantized
/// weights. Returns real-valued outputs (softmax applied in real arithmetic).
Tensor quantized_forward(const QuantizedModel& model, const Tensor& input);

/// Float view of the quantized weights, for the dequantized reference path.
ParamStore dequantized_params(const QuantizedModel& model);

WeightContainer to_container(const QuantizedModel& model);
QuantizedModel quantized_from_container(const WeightContainer& container);
/// Float32 model in the same container layout (the "before" size basis).
WeightContainer float_container(const GraphSpec& graph, const ParamStore& params);

// ---------------------------------------------------------------------------
// Profiling

struct LayerCost {
    std::string name;
    std::string kind;
    std::size_t params = 0;
    std::size_t macs = 0;
};

/// MACs: conv = out * L_out * in * k, linear = in * out, LSTM =
/// 4 (in * h + h^2) * T per direction; bias adds excluded. FLOPs = 2 * MACs.
struct ModelCost {
    std::size_t parameter_count = 0;
    std::size_t macs = 0;
    std::size_t flops = 0;
    std::vector<LayerCost> layers;
};

ModelCost profile(const GraphSpec& graph);

struct ProfileSide {
    std::size_t parameter_count = 0;
    std::size_t serialized_bytes = 0;
    std::size_t flops = 0;
    std::size_t macs = 0;
};

struct ProfileReport {
    std::string label;
    ProfileSide before;
    ProfileSide after;

    double size_reduction() const;
    double flops_reduction() const;
    double macs_reduction() const;
    double parameter_reduction() const;

    /// key=value lines, keys prefixed with the label.
    std::string to_key_value() const;
    static std::string csv_header();
    std::string csv_row() const;
};

ProfileReport combine_reports(const std::string& label, const std::vector<ProfileReport>& parts);

// ---------------------------------------------------------------------------
// Pipeline

struct CompressionResult {
    PruneResult pruned;
    ParamStore finetuned;
    Calibration calibration;
    QuantizedModel quantized;
    ProfileReport report;
};

/// Trains the pruned (graph, params) in place for `epochs`.
using Finetuner = std::function<void(const GraphSpec&, ParamStore&, std::size_t epochs)>;

/// prune -> finetune -> calibrate -> quantize with a before/after report.
CompressionResult compress_pipeline(const GraphSpec& graph, const ParamStore& params, const PruneConfig& config,
                                    int bits, const std::vector<Tensor>& calibration_batches,
                                    const Finetuner& finetune, const std::string& label = "model");

}  // namespace fastids
