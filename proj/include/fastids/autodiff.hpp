#pragma once

// Dynamic reverse-mode differentiation over dense float64 tensors.
//
// Every backward rule is written in terms of the same differentiable ops, so
// gradients computed with create_graph = true can be differentiated again.
// The WGAN gradient penalty relies on this: it needs parameter gradients of a
// norm of an input gradient.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fastids/tensor.hpp"

namespace fastids::ad {

class Var;

struct Node {
    std::vector<double> value;
    Shape shape;
    bool requires_grad = false;
    const char* op = "leaf";
    std::vector<std::shared_ptr<Node>> parents;
    /// Maps the output gradient to one gradient per parent; parents with
    /// need[i] == false may get an undefined Var.
    std::function<std::vector<Var>(const Var&, const std::vector<bool>& need)> backward;
};

class Var {
public:
    Var() = default;
    explicit Var(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    bool defined() const { return node_ != nullptr; }
    const Shape& shape() const { return node_->shape; }
    std::size_t numel() const { return node_->value.size(); }
    std::span<const double> value() const { return node_->value; }
    double item() const;
    bool requires_grad() const { return node_ && node_->requires_grad; }
    const std::shared_ptr<Node>& node() const { return node_; }

    Tensor to_tensor(DType dtype = DType::Float64) const;

private:
    std::shared_ptr<Node> node_;
};

/// Shared gather/scatter index map. Negative entries read as zero (gather) or
/// are dropped (scatter).
using Index = std::shared_ptr<const std::vector<std::int64_t>>;

/// Disables graph recording for its lifetime (thread-local).
class NoGradGuard {
public:
    NoGradGuard();
    ~NoGradGuard();
    NoGradGuard(const NoGradGuard&) = delete;
    NoGradGuard& operator=(const NoGradGuard&) = delete;

private:
    bool previous_;
};

bool grad_enabled();

Var constant(Shape shape, std::vector<double> values);
Var constant(const Tensor& tensor);
Var full(Shape shape, double value);
Var parameter(Shape shape, std::vector<double> values);
Var parameter(const Tensor& tensor);

Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var neg(const Var& a);
Var scale(const Var& a, double c);
Var add_scalar(const Var& a, double c);

/// op(a) * op(b) for rank-2 operands; accumulation over the inner dimension is
/// strictly sequential so removing exact-zero terms never changes a result.
Var matmul(const Var& a, const Var& b, bool transpose_a = false, bool transpose_b = false);
Var transpose(const Var& a);
Var reshape(const Var& a, Shape shape);
Var gather(const Var& a, Index index, Shape out_shape);
Var scatter_add(const Var& a, Index index, Shape out_shape);

Var sum(const Var& a);
Var mean(const Var& a);
/// [rows, cols] -> [rows, 1]
Var row_sum(const Var& a);
/// [rows, 1] -> [rows, cols]
Var broadcast_rows(const Var& a, std::size_t cols);
/// [rows, n1] ++ [rows, n2] -> [rows, n1 + n2]
Var concat_cols(const Var& a, const Var& b);
/// Columns [begin, begin + count) of a rank-2 tensor.
Var slice_cols(const Var& a, std::size_t begin, std::size_t count);

Var relu(const Var& a);
Var leaky_relu(const Var& a, double slope);
Var sigmoid(const Var& a);
Var tanh(const Var& a);
Var exp(const Var& a);
Var log(const Var& a);
/// sqrt with a zero subgradient at 0.
Var sqrt(const Var& a);
Var square(const Var& a);
Var reciprocal(const Var& a);
Var pow_scalar(const Var& a, double p);
Var clamp_min(const Var& a, double lo);
/// Row-wise softmax of a rank-2 tensor.
Var softmax_rows(const Var& a);

inline Var operator+(const Var& a, const Var& b) { return add(a, b); }
inline Var operator-(const Var& a, const Var& b) { return sub(a, b); }
inline Var operator*(const Var& a, const Var& b) { return mul(a, b); }
inline Var operator-(const Var& a) { return neg(a); }

/// Gradients of a scalar `output` with respect to each of `wrt`.
/// Inputs the output does not depend on get zero gradients. Throws
/// std::logic_error when `output` was not recorded with gradient tracking.
std::vector<Var> grad(const Var& output, const std::vector<Var>& wrt, bool create_graph = false);

}  // namespace fastids::ad
