#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fastids/compression.hpp"
#include "fastids/container.hpp"
#include "fastids/data.hpp"
#include "fastids/stage1.hpp"
#include "fastids/stage2.hpp"

namespace fastids {

// Converters between in-memory models and weight containers. Scalars go into
// metadata as shortest round-trip decimal text, so every value reloads
// bit-exactly.

void put_norm_stats(WeightContainer& c, const NormStats& stats);
NormStats get_norm_stats(const WeightContainer& c);

void put_mahalanobis(WeightContainer& c, const MahalanobisStats& stats);
MahalanobisStats get_mahalanobis(const WeightContainer& c);

void put_thresholds(WeightContainer& c, const ThresholdModel& model);
ThresholdModel get_thresholds(const WeightContainer& c);

/// Windows as x (N, 8, w) float64, label and sender (N) int32/float64.
void put_windows(WeightContainer& c, const std::string& prefix, const std::vector<FeatureWindow>& windows);
std::vector<FeatureWindow> get_windows(const WeightContainer& c, const std::string& prefix);

WeightContainer pack_bigan(const BiGan& gan);
BiGan unpack_bigan(const WeightContainer& c);

WeightContainer pack_stage2(const Stage2Model& model);
Stage2Model unpack_stage2(const WeightContainer& c);

/// Everything Stage-1 detection needs. `quantized` replaces the float E->G
/// path when present.
struct Stage1Artifact {
    BiGan gan;
    NormStats norm;
    bool relative_position = false;
    std::optional<MahalanobisStats> mahalanobis;
    std::optional<ThresholdModel> thresholds;
    std::optional<QuantizedModel> quantized;

    Tensor reconstruct(const Tensor& x) const;
    std::vector<ScoreParts> score(const Tensor& x, double alpha) const;
};

WeightContainer pack_stage1_artifact(const Stage1Artifact& a);
Stage1Artifact unpack_stage1_artifact(const WeightContainer& c);

struct Stage2Artifact {
    Stage2Model model;
    NormStats norm;
    bool relative_position = false;
    std::optional<double> unseen_threshold;
    std::optional<QuantizedModel> quantized;

    std::vector<ClassProbs> classify(const Tensor& x) const;
};

WeightContainer pack_stage2_artifact(const Stage2Artifact& a);
Stage2Artifact unpack_stage2_artifact(const WeightContainer& c);

/// Encoder followed by generator as one stack, with the shared parameters.
GraphSpec autoencoder_graph(const BiGan& gan);

}  // namespace fastids
