#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fastids {

using Shape = std::vector<std::size_t>;

/// Element type codes. The numeric values are the on-disk dtype codes of the
/// weight container and must not change.
enum class DType : std::uint8_t {
    Float32 = 1,
    Float64 = 2,
    Int8 = 3,
    Int32 = 4,
};

std::size_t dtype_size(DType dtype);
const char* dtype_name(DType dtype);
bool is_floating(DType dtype);

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

/// Dense row-major tensor with a runtime dtype.
///
/// Floating tensors can be read and written as double; writes round to the
/// storage precision. Integer tensors reject values outside their range.
class Tensor {
public:
    Tensor();
    Tensor(Shape shape, DType dtype);

    static Tensor from_values(Shape shape, std::vector<double> values, DType dtype = DType::Float64);
    static Tensor scalar(double value, DType dtype = DType::Float64);

    const Shape& shape() const { return shape_; }
    DType dtype() const { return dtype_; }
    std::size_t numel() const { return numel_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t payload_bytes() const { return numel_ * dtype_size(dtype_); }

    double at(std::size_t i) const;
    void set(std::size_t i, double value);

    std::vector<double> to_doubles() const;
    void assign(std::span<const double> values);

    Tensor cast(DType dtype) const;
    Tensor reshaped(Shape shape) const;

    template <typename T>
    std::span<const T> view() const
    {
        return std::get<std::vector<T>>(data_);
    }
    template <typename T>
    std::span<T> mutable_view()
    {
        return std::get<std::vector<T>>(data_);
    }

    /// Raw little-endian payload bytes (host is little-endian; checked at load).
    const std::byte* raw_data() const;
    std::byte* raw_data();

    bool bit_equal(const Tensor& other) const;

private:
    using Storage = std::variant<std::vector<float>, std::vector<double>, std::vector<std::int8_t>, std::vector<std::int32_t>>;

    Shape shape_;
    DType dtype_ = DType::Float64;
    std::size_t numel_ = 0;
    Storage data_;
};

}  // namespace fastids
