#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fastids/data.hpp"
#include "fastids/graph.hpp"
#include "fastids/optim.hpp"

namespace fastids {

enum class AdversarialLoss { WganGp, Wgan, Bce };

const char* adversarial_loss_name(AdversarialLoss loss);

/// Parameterized layer counts of one BiGAN variant.
struct VariantSpec {
    std::string name;
    std::size_t encoder_layers = 5;
    std::size_t generator_layers = 4;
    std::size_t discriminator_layers = 4;
    AdversarialLoss loss = AdversarialLoss::WganGp;
};

/// M1..M7. M7 shares M1's architecture and objective.
VariantSpec variant_spec(const std::string& name);
const std::vector<std::string>& variant_names();

struct Stage1Config {
    std::string variant = "M1";
    std::size_t window = 20;
    std::size_t latent_dim = 100;
    /// Base channel count; convolution widths are multiples of it.
    std::size_t width = 32;
    double lambda_gp = 10.0;
    /// Penalty at a random interpolate of x and G(E(x)) instead of G(E(x)).
    bool interpolate_penalty = false;
    /// Critic weight clipping bound for the plain Wasserstein variant.
    double clip = 0.01;
    std::size_t critic_steps = 1;
    /// Weight of an extra mean-squared x vs G(E(x)) term in the encoder /
    /// generator loss. 0 keeps the purely adversarial objective.
    double recon_weight = 0.0;
    OptimizerConfig optimizer = OptimizerConfig::rmsprop(2e-4);
    std::size_t epochs = 30;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Encoder, generator and the joint discriminator. The discriminator is split
/// into an x-trunk (convolutions + flatten) whose output is concatenated with
/// the latent code before the joint head. All tensors live in one store with
/// "enc.", "gen." and "dis." prefixes.
struct BiGan {
    GraphSpec encoder;
    GraphSpec generator;
    GraphSpec disc_x;
    GraphSpec disc_joint;
    ParamStore params;
    AdversarialLoss loss = AdversarialLoss::WganGp;

    std::size_t latent_dim() const;
    std::size_t window() const;
    /// Parameterized layers per network (E, G, D).
    std::array<std::size_t, 3> layer_counts() const;
    std::vector<std::string> encoder_generator_names() const;
    std::vector<std::string> discriminator_names() const;

    /// G(E(x)) for a (batch, 8, w) tensor.
    Tensor reconstruct(const Tensor& x) const;
    Tensor encode(const Tensor& x) const;
};

BiGan build_bigan(const Stage1Config& config);
/// Assembles a BiGAN from explicit graphs (checks shape consistency).
BiGan make_bigan(GraphSpec encoder, GraphSpec generator, GraphSpec disc_x, GraphSpec disc_joint, std::uint64_t seed,
                 DType dtype = DType::Float32, AdversarialLoss loss = AdversarialLoss::WganGp);

/// D(x, z) over a bound parameter map; returns (batch, 1).
ad::Var discriminate(const BiGan& gan, const VarMap& params, const ad::Var& x, const ad::Var& z);

struct WganTerms {
    ad::Var real;     ///< E[D(x, E(x))]
    ad::Var fake;     ///< E[D(G(E(x)), E(x))]
    ad::Var penalty;  ///< E[(||grad_xhat D|| - 1)^2]
    ad::Var value;    ///< real - fake + lambda * penalty
};

/// Recorded terms of the value function on one batch. The penalty gradient is
/// taken with respect to the generated sample (or the interpolate) and kept
/// differentiable so it can be trained through.
WganTerms wgan_gp_terms(const BiGan& gan, const VarMap& params, const ad::Var& x, double lambda_gp,
                        bool interpolate = false, std::uint64_t interpolation_seed = 0);

/// Scalar value of the objective on `batch` (batch, 8, w).
double wgan_gp_value(const BiGan& gan, const Tensor& batch, double lambda_gp, bool interpolate = false,
                     std::uint64_t interpolation_seed = 0);

struct Stage1EpochLog {
    double critic_loss = 0.0;
    double generator_loss = 0.0;
};

struct Stage1TrainResult {
    BiGan gan;
    std::vector<Stage1EpochLog> history;
};

/// Alternating critic / encoder-generator updates over normal windows.
Stage1TrainResult train_stage1(const Stage1Config& config, const std::vector<FeatureWindow>& train);
/// Continues training an existing model for `epochs`.
void train_bigan(BiGan& gan, const Stage1Config& config, const std::vector<FeatureWindow>& train, std::size_t epochs,
                 std::vector<Stage1EpochLog>* history = nullptr);

// ---------------------------------------------------------------------------
// Scoring

struct MahalanobisStats {
    std::size_t dim = 0;
    std::vector<double> mu;
    /// Row-major dim x dim.
    std::vector<double> sigma_inv;

    double distance(std::span<const double> x) const;
    /// Identity covariance, zero mean.
    static MahalanobisStats identity(std::size_t dim);
};

/// Fitted on flattened windows with ridge 1e-6 * trace / dim.
MahalanobisStats fit_mahalanobis(const std::vector<FeatureWindow>& windows);
MahalanobisStats fit_mahalanobis(const std::vector<std::vector<double>>& rows);

struct ScoreParts {
    double mse = 0.0;
    double dm = 0.0;
    double combined = 0.0;
};

ScoreParts reconstruction_error(std::span<const double> x, std::span<const double> reconstructed,
                                const MahalanobisStats& stats, double alpha);

/// Combined score of every window of a (batch, 8, w) tensor.
std::vector<ScoreParts> score_batch(const BiGan& gan, const MahalanobisStats& stats, double alpha, const Tensor& batch);

/// Linear interpolation between order statistics at position (n - 1) * q.
double quantile_linear(std::vector<double> values, double q);

enum class DecisionMode { BandLlUl, BandQ1Q3 };

const char* decision_mode_name(DecisionMode mode);
DecisionMode parse_decision_mode(const std::string& name);

struct ThresholdModel {
    double alpha = 0.5;
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double ll = 0.0;
    double ul = 0.0;
    std::string quantile_convention = "linear";
};

ThresholdModel fit_thresholds(const std::vector<double>& scores, double alpha = 0.5);

struct Stage1Decision {
    double score = 0.0;
    bool anomaly_rule = false;
    bool normal_rule = false;
    bool anomalous = false;
};

Stage1Decision classify_stage1(double score, const ThresholdModel& model, DecisionMode mode = DecisionMode::BandLlUl);

struct Stage1Metrics {
    std::optional<double> normal_recall;
    std::optional<double> anomaly_recall;
};

/// Normal recall counts the normal rule on normal instances; anomaly recall
/// counts the anomaly rule on anomalous ones.
Stage1Metrics stage1_metrics(const std::vector<Stage1Decision>& decisions, const std::vector<bool>& is_anomalous);

}  // namespace fastids
