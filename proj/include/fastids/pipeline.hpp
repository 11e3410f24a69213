#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fastids/artifacts.hpp"
#include "fastids/compression.hpp"
#include "fastids/data.hpp"
#include "fastids/stage1.hpp"
#include "fastids/stage2.hpp"

namespace fastids {

struct DataConfig {
    std::filesystem::path train;
    std::filesystem::path test;
    /// Optional "sender,class" sidecars.
    std::filesystem::path train_labels;
    std::filesystem::path test_labels;
    std::size_t window = 20;
    std::size_t stride = 20;
    bool relative_position = true;
    /// Share of normal training windows held out to fit the Stage-1 thresholds.
    double calibration_fraction = 0.2;
    /// Share of attack training windows held out for Stage-2 validation.
    double validation_fraction = 0.2;
};

struct SynthConfig {
    ScenarioConfig scenario;
    /// Separate draws for the two splits; 0 derives them from the pipeline seed.
    std::uint64_t train_seed = 0;
    std::uint64_t test_seed = 0;
};

struct UnseenConfig {
    double percentile = 91.0;
    /// Attack label left out of unseen-detector training; 0 keeps every class.
    int holdout_label = 0;
    std::size_t epochs = 0;  ///< 0 reuses the Stage-2 epoch count.
};

struct CompressionConfig {
    PruneConfig prune;
    int bits = 8;
    std::size_t calibration_windows = 512;
};

struct BenchConfig {
    std::size_t repetitions = 5;
    std::size_t warmup = 1;
    std::string environment = "desk";
};

struct PipelineConfig {
    std::uint64_t seed = 0;
    std::filesystem::path out = "runs/default";
    DecisionMode mode = DecisionMode::BandLlUl;
    double alpha = 0.5;
    bool detect_quantized = false;
    DataConfig data;
    SynthConfig synth;
    Stage1Config stage1;
    Stage2Config stage2;
    UnseenConfig unseen;
    CompressionConfig compression;
    BenchConfig bench;

    /// Propagates `seed` into every stage and checks value ranges.
    void finalize();
};

/// Flat INI schema with one section per module; see configs/fastids.ini.
/// Paths are resolved against the config file's directory.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = ".");

/// Windows in the model frame: optional relative positions, then normalized.
Tensor prepare_batch(const std::vector<FeatureWindow>& raw, const NormStats& norm, bool relative_position);

struct Detection {
    double score = 0.0;
    bool anomalous = false;
    /// Attack label 1..19 when Stage 2 ran.
    std::optional<int> label;
    bool unknown = false;
};

struct DetectionRun {
    std::vector<Detection> detections;
    std::size_t stage2_windows = 0;
};

/// Stage-1 score -> threshold decision -> Stage-2 class on anomalous windows
/// only -> unseen flag when an unseen detector is supplied. `stage1_batch` is
/// prepare_batch of `raw` for the Stage-1 artifact; Stage 2 prepares its own
/// inputs from `raw`.
DetectionRun detect_windows(const Stage1Artifact& stage1, const Stage2Artifact* stage2, const Stage2Artifact* unseen,
                            const std::vector<FeatureWindow>& raw, const Tensor& stage1_batch, DecisionMode mode);
DetectionRun detect_windows(const Stage1Artifact& stage1, const Stage2Artifact* stage2, const Stage2Artifact* unseen,
                            const std::vector<FeatureWindow>& raw, DecisionMode mode);

struct BenchReport {
    std::size_t windows = 0;
    std::size_t vehicles = 0;
    std::size_t repetitions = 0;
    double setup_ms = 0.0;
    double prediction_ms = 0.0;
    double total_ms = 0.0;
    double per_vehicle_ms = 0.0;
    std::string environment;

    std::string to_key_value() const;
    static std::string csv_header();
    std::string csv_row() const;
};

/// Median data-setup and prediction times over `repetitions` after `warmup`
/// untimed passes. Model loading is excluded.
/// Data setup is the Stage-1 window preparation; prediction is everything
/// after it, including Stage-2 preparation of the gated windows.
BenchReport bench(const Stage1Artifact& stage1, const Stage2Artifact* stage2, const std::vector<FeatureWindow>& raw,
                  DecisionMode mode, const BenchConfig& config);
BenchReport make_bench_report(std::size_t windows, std::size_t vehicles, double setup_ms, double prediction_ms);

const std::vector<std::string>& command_names();

/// Runs one pipeline command on a finalized copy of `config`; artifacts go to
/// `config.out`. Throws on invalid input.
void run_command(const std::string& command, const PipelineConfig& config, std::ostream& log);

}  // namespace fastids
