#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fastids/data.hpp"
#include "fastids/graph.hpp"
#include "fastids/optim.hpp"

namespace fastids {

enum class LossKind { CrossEntropy, LabelSmoothing, Focal };

const char* loss_kind_name(LossKind kind);
/// "ce", "lsmooth" or "focal".
LossKind parse_loss_kind(const std::string& name);

struct LossConfig {
    LossKind kind = LossKind::CrossEntropy;
    double alpha_s = 0.1;
    double gamma = 2.0;

    void validate() const;
};

constexpr double kProbFloor = 1e-12;

/// Batch-mean losses over probabilities (batch, C) and class indices 0..C-1.
ad::Var classification_loss(const ad::Var& probs, const std::vector<int>& classes, const LossConfig& loss);
double ce_loss(const Tensor& probs, const std::vector<int>& classes);
double label_smoothing_loss(const Tensor& probs, const std::vector<int>& classes, double alpha_s);
double focal_loss(const Tensor& probs, const std::vector<int>& classes, double gamma);

struct Stage2Config {
    std::size_t window = 20;
    std::size_t conv_layers = 2;
    std::size_t conv1_channels = 32;
    std::size_t conv2_channels = 64;
    std::size_t hidden = 64;
    bool bidirectional = false;
    LossConfig loss;
    OptimizerConfig optimizer = OptimizerConfig::adam(3e-4);
    std::size_t epochs = 100;
    std::size_t num_classes = 19;
    /// Adds the reconstructive head trained jointly with weight `beta`.
    bool recon_head = false;
    double beta = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Attack label 1..num_classes maps to class index label - 1.
int class_index(int label, std::size_t num_classes);

struct Stage2Model {
    GraphSpec classifier;
    /// Linear map from the LSTM state back to the flattened window.
    std::optional<GraphSpec> recon;
    ParamStore params;
    std::size_t num_classes = 0;

    std::size_t window() const { return classifier.input_shape.at(1); }
    /// Position of the LSTM layer inside `classifier`.
    std::size_t lstm_index() const;
};

GraphSpec build_classifier_graph(const Stage2Config& config);
Stage2Model build_stage2(const Stage2Config& config);

struct ClassProbs {
    std::vector<double> p;
    /// Class index (label - 1).
    int predicted = 0;
};

std::vector<ClassProbs> classify_forward(const Stage2Model& model, const Tensor& batch);

struct Stage2EpochLog {
    double train_loss = 0.0;
    std::optional<double> validation_accuracy;
};

struct Stage2TrainResult {
    Stage2Model model;
    std::vector<Stage2EpochLog> history;
};

Stage2TrainResult train_stage2(const Stage2Config& config, const std::vector<FeatureWindow>& train,
                               const std::vector<FeatureWindow>& validation = {});
/// Continues training `model` (used for fine-tuning after pruning).
void fit_stage2(Stage2Model& model, const Stage2Config& config, const std::vector<FeatureWindow>& train,
                std::size_t epochs, const std::vector<FeatureWindow>& validation = {},
                std::vector<Stage2EpochLog>* history = nullptr);

class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::size_t classes = 0);

    void add(int truth, int predicted);
    std::size_t classes() const { return classes_; }
    std::size_t count(int truth, int predicted) const;
    std::size_t support(int truth) const;
    std::size_t total() const;

    double accuracy() const;
    /// Averages over classes with support > 0; a class never predicted has precision 0.
    double macro_precision() const;
    double macro_recall() const;
    double macro_f1() const;
    /// Empty for classes without support.
    std::vector<std::optional<double>> per_class_recall() const;

    std::string to_csv() const;

private:
    double precision(std::size_t c) const;
    double recall(std::size_t c) const;

    std::size_t classes_;
    std::vector<std::size_t> counts_;
};

ConfusionMatrix evaluate(const Stage2Model& model, const std::vector<FeatureWindow>& test);
double accuracy_of(const Stage2Model& model, const std::vector<FeatureWindow>& windows);

/// Reconstruction MSE of the recon head per window.
std::vector<double> recon_errors(const Stage2Model& model, const Tensor& batch);

/// Percentile (0, 100] of validation reconstruction errors, linear convention.
double unseen_threshold(const std::vector<double>& errors, double percentile);
double unseen_fit(const Stage2Model& model, const std::vector<FeatureWindow>& validation, double percentile = 91.0);

struct UnseenDecision {
    bool unknown = false;
    double error = 0.0;
    ClassProbs probs;
};

/// Unknown when the reconstruction error is strictly above the threshold.
std::vector<UnseenDecision> unseen_detect(const Stage2Model& model, const Tensor& batch, double threshold);

}  // namespace fastids
