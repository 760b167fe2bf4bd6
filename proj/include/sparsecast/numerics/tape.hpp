#pragma once

#include <memory>
#include <vector>

#include "sparsecast/numerics/dense_matrix.hpp"
#include "sparsecast/numerics/sparse_sym.hpp"

namespace sparsecast {

/// Define-by-run reverse-mode tape over dense matrices. Each call records a
/// node, computes its value eagerly, and backward() walks the node list in
/// reverse (construction order is topological by construction, so the
/// reverse walk visits every node exactly once).
///
/// The tape is rebuilt per forward pass: graph structures are resampled each
/// pass, so nothing is worth caching across passes. Single-owner, not thread
/// safe.
class GradTape {
 public:
  using NodeId = int;

  /// Differentiable input (parameters).
  NodeId leaf(DenseMatrix value);
  /// Non-differentiable input (data, targets). Gradients stop here.
  NodeId constant(DenseMatrix value);

  NodeId matmul(NodeId a, NodeId b);
  /// y = S x for a fixed sparse symmetric operator; no gradient flows into S.
  NodeId spmm(std::shared_ptr<const SparseSymMatrix> op, NodeId x);
  NodeId add(NodeId a, NodeId b);
  NodeId sub(NodeId a, NodeId b);
  /// Broadcast a 1 x d row (bias) over every row of a.
  NodeId add_rowvec(NodeId a, NodeId bias);
  NodeId sigmoid(NodeId a);
  NodeId tanh(NodeId a);
  NodeId hadamard(NodeId a, NodeId b);
  NodeId one_minus(NodeId a);
  NodeId scale(NodeId a, double s);
  NodeId concat_cols(NodeId a, NodeId b);
  /// Sum of absolute values, as a 1x1 node. Subgradient at 0 is taken as 0.
  NodeId abs_sum(NodeId a);
  /// Arithmetic mean of same-shaped nodes (graph aggregation).
  NodeId average(const std::vector<NodeId>& xs);

  /// Reverse pass from a 1x1 root. May be called once per tape.
  void backward(NodeId root);

  const DenseMatrix& value(NodeId id) const { return nodes_[id].value; }
  const DenseMatrix& grad(NodeId id) const { return nodes_[id].grad; }

  std::size_t node_count() const { return nodes_.size(); }

 private:
  enum class Op {
    kLeaf,
    kConst,
    kMatMul,
    kSpMM,
    kAdd,
    kSub,
    kAddRowVec,
    kSigmoid,
    kTanh,
    kHadamard,
    kOneMinus,
    kScale,
    kConcatCols,
    kAbsSum,
  };

  struct Node {
    Op op;
    NodeId a = -1;
    NodeId b = -1;
    double s = 0.0;  // kScale factor
    std::shared_ptr<const SparseSymMatrix> sp;
    DenseMatrix value;
    DenseMatrix grad;
    bool needs_grad = false;
  };

  NodeId push(Node n);
  bool wants(NodeId id) const { return id >= 0 && nodes_[id].needs_grad; }

  std::vector<Node> nodes_;
  bool ran_backward_ = false;
};

}  // namespace sparsecast
