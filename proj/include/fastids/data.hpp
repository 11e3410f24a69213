#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fastids/tensor.hpp"

namespace fastids {

/// pos, spd, acl, hed, each as (x, y).
constexpr std::size_t kFeatureCount = 8;
constexpr int kNormalLabel = 0;
constexpr int kMaxLabel = 19;

struct BsmRecord {
    int type = 3;
    double send_time = 0.0;
    std::int64_t sender_id = 0;
    std::int64_t pseudo_id = 0;
    std::int64_t message_id = 0;
    double pos_x = 0.0;
    double pos_y = 0.0;
    double spd_x = 0.0;
    double spd_y = 0.0;
    double acl_x = 0.0;
    double acl_y = 0.0;
    double hed_x = 0.0;
    double hed_y = 0.0;
    int label = kNormalLabel;

    std::array<double, kFeatureCount> features() const
    {
        return {pos_x, pos_y, spd_x, spd_y, acl_x, acl_y, hed_x, hed_y};
    }
    bool operator==(const BsmRecord&) const = default;
};

struct ParseResult {
    std::vector<BsmRecord> records;
    std::size_t skipped = 0;
};

/// Line-delimited records: JSON objects in the VeReMi Extension layout, or CSV
/// when the first non-empty line is the documented header. Malformed lines are
/// skipped and counted; blank lines are ignored.
ParseResult parse_records(std::istream& in);
ParseResult parse_records_file(const std::filesystem::path& path);

extern const char* const kCsvHeader;

std::string serialize_record(const BsmRecord& record);
void write_records(std::ostream& out, const std::vector<BsmRecord>& records);

/// Sidecar ground truth: "sender_id,class" per line (a header line is allowed).
std::map<std::int64_t, int> parse_label_map(std::istream& in);
void write_label_map(std::ostream& out, const std::map<std::int64_t, int>& labels);
void apply_labels(std::vector<BsmRecord>& records, const std::map<std::int64_t, int>& labels);

/// w consecutive samples from one sender, stored feature-major (8 x w) so a
/// batch stacks directly into the (batch, features, sequence) layout.
struct FeatureWindow {
    std::size_t length = 0;
    std::vector<double> values;
    std::int64_t sender_id = 0;
    int label = kNormalLabel;

    double at(std::size_t feature, std::size_t step) const { return values[feature * length + step]; }
};

/// Groups records by sender (time-sorted, stable) and cuts windows of `length`
/// every `stride` samples. Windows never cross senders; a window whose records
/// carry more than one label is dropped.
std::vector<FeatureWindow> make_windows(const std::vector<BsmRecord>& records, std::size_t length, std::size_t stride);

struct NormStats {
    std::array<double, kFeatureCount> mean{};
    std::array<double, kFeatureCount> stddev{};
};

constexpr double kStdFloor = 1e-8;

/// Population mean/std per feature over all samples of all windows.
NormStats normalize_fit(const std::vector<FeatureWindow>& train);
std::vector<FeatureWindow> normalize_apply(const NormStats& stats, std::vector<FeatureWindow> windows);
void normalize_in_place(const NormStats& stats, FeatureWindow& window);

/// Re-expresses positions relative to the window's first sample, so a window
/// carries its shape of motion rather than its place on the map.
void make_positions_relative(FeatureWindow& window);
void make_positions_relative(std::vector<FeatureWindow>& windows);

/// (batch, 8, w) tensor of the selected windows (all when `indices` is empty).
Tensor stack_windows(const std::vector<FeatureWindow>& windows, const std::vector<std::size_t>& indices = {});

// ---------------------------------------------------------------------------
// Synthetic BSM streams

struct VehicleProfile {
    std::size_t count = 1;
    double speed_min = 8.0;
    double speed_max = 16.0;
    /// Std of the per-step longitudinal acceleration (m/s^2).
    double accel_std = 0.3;
    /// Std of the per-step heading-rate change (rad/s).
    double turn_std = 0.02;
    std::optional<std::array<double, 2>> start_pos;
    std::optional<std::array<double, 2>> start_velocity;
};

/// Names: constant_position, constant_offset, random_position, random_offset,
/// constant_speed, speed_offset, random_speed, eventual_stop, replay.
struct InjectorSpec {
    std::string kind;
    std::size_t count = 1;
    /// 0 selects the injector's default class id.
    int label = 0;
    /// Offset / spread magnitude; 0 selects the injector default.
    double magnitude = 0.0;
    VehicleProfile dynamics;
};

struct ScenarioConfig {
    std::size_t messages_per_vehicle = 100;
    double dt = 1.0;
    double map_extent = 1000.0;
    double pos_noise = 0.0;
    double spd_noise = 0.0;
    double acl_noise = 0.0;
    double hed_noise = 0.0;
    std::vector<VehicleProfile> normal;
    std::vector<InjectorSpec> attackers;
};

const std::vector<std::string>& injector_names();
int injector_default_label(const std::string& kind);

struct SynthResult {
    std::vector<BsmRecord> records;
    /// Noise-free true kinematic state aligned with `records`.
    std::vector<BsmRecord> truth;
    std::map<std::int64_t, int> labels;
};

SynthResult synth_generate_with_truth(const ScenarioConfig& config, std::uint64_t seed);
std::vector<BsmRecord> synth_generate(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace fastids
