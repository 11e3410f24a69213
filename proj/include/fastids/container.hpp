#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fastids/quant.hpp"
#include "fastids/tensor.hpp"

namespace fastids {

/// Byte layout is documented in docs/format.md.
constexpr std::uint8_t kContainerVersion = 1;
constexpr char kContainerMagic[4] = {'F', 'I', 'D', 'S'};
/// Bytes of one serialized QuantParams record.
constexpr std::size_t kQParamsRecordBytes = 30;

class ContainerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WeightContainer {
    std::map<std::string, std::string> metadata;
    std::map<std::string, Tensor> tensors;
    /// Keyed by tensor name; every key must name a tensor.
    std::map<std::string, QuantParams> qparams;

    void set_double(const std::string& key, double value);
    double get_double(const std::string& key) const;
    void set_int(const std::string& key, std::int64_t value);
    std::int64_t get_int(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    bool has(const std::string& key) const { return metadata.count(key) > 0; }
    const Tensor& tensor(const std::string& name) const;

    /// Copies every tensor and metadata entry of `other` under `prefix`.
    void merge(const WeightContainer& other, const std::string& prefix = "");
    /// Entries whose keys start with `prefix`, with the prefix stripped.
    WeightContainer extract(const std::string& prefix) const;
};

std::vector<std::byte> encode_container(const WeightContainer& container);
WeightContainer decode_container(std::span<const std::byte> bytes);

void save_container(const std::filesystem::path& path, const WeightContainer& container);
WeightContainer load_container(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);
double parse_double(const std::string& text);

}  // namespace fastids
