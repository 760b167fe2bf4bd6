#include "sparsecast/numerics/tape.hpp"

#include <cmath>

#include "sparsecast/error.hpp"

namespace sparsecast {

GradTape::NodeId GradTape::push(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<NodeId>(nodes_.size() - 1);
}

GradTape::NodeId GradTape::leaf(DenseMatrix value) {
  Node n;
  n.op = Op::kLeaf;
  n.value = std::move(value);
  n.needs_grad = true;
  return push(std::move(n));
}

GradTape::NodeId GradTape::constant(DenseMatrix value) {
  Node n;
  n.op = Op::kConst;
  n.value = std::move(value);
  n.needs_grad = false;
  return push(std::move(n));
}

GradTape::NodeId GradTape::matmul(NodeId a, NodeId b) {
  Node n;
  n.op = Op::kMatMul;
  n.a = a;
  n.b = b;
  n.value = sparsecast::matmul(nodes_[a].value, nodes_[b].value);
  n.needs_grad = wants(a) || wants(b);
  return push(std::move(n));
}

GradTape::NodeId GradTape::spmm(std::shared_ptr<const SparseSymMatrix> op, NodeId x) {
  if (!op) throw ArgumentError("spmm: null operator");
  Node n;
  n.op = Op::kSpMM;
  n.a = x;
  n.sp = std::move(op);
  n.value = n.sp->apply(nodes_[x].value);
  n.needs_grad = wants(x);
  return push(std::move(n));
}

GradTape::NodeId GradTape::add(NodeId a, NodeId b) {
  Node n;
  n.op = Op::kAdd;
  n.a = a;
  n.b = b;
  n.value = nodes_[a].value + nodes_[b].value;
  n.needs_grad = wants(a) || wants(b);
  return push(std::move(n));
}

GradTape::NodeId GradTape::sub(NodeId a, NodeId b) {
  Node n;
  n.op = Op::kSub;
  n.a = a;
  n.b = b;
  n.value = nodes_[a].value - nodes_[b].value;
  n.needs_grad = wants(a) || wants(b);
  return push(std::move(n));
}

GradTape::NodeId GradTape::add_rowvec(NodeId a, NodeId bias) {
  const DenseMatrix& av = nodes_[a].value;
  const DenseMatrix& bv = nodes_[bias].value;
  if (bv.rows() != 1 || bv.cols() != av.cols())
    throw DimensionError("add_rowvec: bias must be 1 x cols(a)");
  Node n;
  n.op = Op::kAddRowVec;
  n.a = a;
  n.b = bias;
  n.value = av;
  for (std::size_t i = 0; i < av.rows(); ++i)
    for (std::size_t j = 0; j < av.cols(); ++j) n.value(i, j) += bv(0, j);
  n.needs_grad = wants(a) || wants(bias);
  return push(std::move(n));
}

GradTape::NodeId GradTape::sigmoid(NodeId a) {
  Node n;
  n.op = Op::kSigmoid;
  n.a = a;
  n.value = nodes_[a].value;
  for (double& x : n.value.data()) x = 1.0 / (1.0 + std::exp(-x));
  n.needs_grad = wants(a);
  return push(std::move(n));
}

GradTape::NodeId GradTape::tanh(NodeId a) {
  Node n;
  n.op = Op::kTanh;
  n.a = a;
  n.value = nodes_[a].value;
  for (double& x : n.value.data()) x = std::tanh(x);
  n.needs_grad = wants(a);
  return push(std::move(n));
}

GradTape::NodeId GradTape::hadamard(NodeId a, NodeId b) {
  if (!nodes_[a].value.same_shape(nodes_[b].value))
    throw DimensionError("hadamard: shape mismatch");
  Node n;
  n.op = Op::kHadamard;
  n.a = a;
  n.b = b;
  n.value = nodes_[a].value;
  const auto bd = nodes_[b].value.data();
  auto vd = n.value.data();
  for (std::size_t i = 0; i < vd.size(); ++i) vd[i] *= bd[i];
  n.needs_grad = wants(a) || wants(b);
  return push(std::move(n));
}

GradTape::NodeId GradTape::one_minus(NodeId a) {
  Node n;
  n.op = Op::kOneMinus;
  n.a = a;
  n.value = nodes_[a].value;
  for (double& x : n.value.data()) x = 1.0 - x;
  n.needs_grad = wants(a);
  return push(std::move(n));
}

GradTape::NodeId GradTape::scale(NodeId a, double s) {
  Node n;
  n.op = Op::kScale;
  n.a = a;
  n.s = s;
  n.value = nodes_[a].value * s;
  n.needs_grad = wants(a);
  return push(std::move(n));
}

GradTape::NodeId GradTape::concat_cols(NodeId a, NodeId b) {
  const DenseMatrix& av = nodes_[a].value;
  const DenseMatrix& bv = nodes_[b].value;
  if (av.rows() != bv.rows()) throw DimensionError("concat_cols: row mismatch");
  Node n;
  n.op = Op::kConcatCols;
  n.a = a;
  n.b = b;
  n.value = DenseMatrix(av.rows(), av.cols() + bv.cols());
  for (std::size_t i = 0; i < av.rows(); ++i) {
    for (std::size_t j = 0; j < av.cols(); ++j) n.value(i, j) = av(i, j);
    for (std::size_t j = 0; j < bv.cols(); ++j) n.value(i, av.cols() + j) = bv(i, j);
  }
  n.needs_grad = wants(a) || wants(b);
  return push(std::move(n));
}

GradTape::NodeId GradTape::abs_sum(NodeId a) {
  Node n;
  n.op = Op::kAbsSum;
  n.a = a;
  double acc = 0.0;
  for (double x : nodes_[a].value.data()) acc += std::fabs(x);
  n.value = DenseMatrix(1, 1, acc);
  n.needs_grad = wants(a);
  return push(std::move(n));
}

GradTape::NodeId GradTape::average(const std::vector<NodeId>& xs) {
  if (xs.empty()) throw ArgumentError("average: empty node list");
  NodeId acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = add(acc, xs[i]);
  if (xs.size() == 1) return acc;
  return scale(acc, 1.0 / static_cast<double>(xs.size()));
}

void GradTape::backward(NodeId root) {
  if (ran_backward_) throw ArgumentError("backward: tape already consumed");
  ran_backward_ = true;
  if (nodes_[root].value.rows() != 1 || nodes_[root].value.cols() != 1)
    throw ArgumentError("backward: root must be a 1x1 scalar node");

  for (Node& n : nodes_)
    if (n.needs_grad) n.grad = DenseMatrix(n.value.rows(), n.value.cols(), 0.0);
  if (!nodes_[root].needs_grad)
    nodes_[root].grad = DenseMatrix(1, 1, 0.0);
  nodes_[root].grad(0, 0) = 1.0;

  for (NodeId id = root; id >= 0; --id) {
    Node& n = nodes_[id];
    if (!n.needs_grad && id != root) continue;
    const DenseMatrix& g = n.grad;
    if (g.empty()) continue;
    switch (n.op) {
      case Op::kLeaf:
      case Op::kConst:
        break;
      case Op::kMatMul:
        if (wants(n.a)) add_matmul_nt(nodes_[n.a].grad, g, nodes_[n.b].value);
        if (wants(n.b)) add_matmul_tn(nodes_[n.b].grad, nodes_[n.a].value, g);
        break;
      case Op::kSpMM:
        // operator is symmetric, adjoint product reuses it
        if (wants(n.a)) n.sp->add_apply(nodes_[n.a].grad, g);
        break;
      case Op::kAdd:
        if (wants(n.a)) nodes_[n.a].grad += g;
        if (wants(n.b)) nodes_[n.b].grad += g;
        break;
      case Op::kSub:
        if (wants(n.a)) nodes_[n.a].grad += g;
        if (wants(n.b)) nodes_[n.b].grad -= g;
        break;
      case Op::kAddRowVec:
        if (wants(n.a)) nodes_[n.a].grad += g;
        if (wants(n.b)) {
          DenseMatrix& bg = nodes_[n.b].grad;
          for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j) bg(0, j) += g(i, j);
        }
        break;
      case Op::kSigmoid:
        if (wants(n.a)) {
          DenseMatrix& ag = nodes_[n.a].grad;
          const auto vd = n.value.data();
          const auto gd = g.data();
          auto ad = ag.data();
          for (std::size_t i = 0; i < vd.size(); ++i)
            ad[i] += gd[i] * vd[i] * (1.0 - vd[i]);
        }
        break;
      case Op::kTanh:
        if (wants(n.a)) {
          DenseMatrix& ag = nodes_[n.a].grad;
          const auto vd = n.value.data();
          const auto gd = g.data();
          auto ad = ag.data();
          for (std::size_t i = 0; i < vd.size(); ++i)
            ad[i] += gd[i] * (1.0 - vd[i] * vd[i]);
        }
        break;
      case Op::kHadamard:
        if (wants(n.a)) {
          auto ad = nodes_[n.a].grad.data();
          const auto bd = nodes_[n.b].value.data();
          const auto gd = g.data();
          for (std::size_t i = 0; i < gd.size(); ++i) ad[i] += gd[i] * bd[i];
        }
        if (wants(n.b)) {
          auto bd = nodes_[n.b].grad.data();
          const auto avd = nodes_[n.a].value.data();
          const auto gd = g.data();
          for (std::size_t i = 0; i < gd.size(); ++i) bd[i] += gd[i] * avd[i];
        }
        break;
      case Op::kOneMinus:
        if (wants(n.a)) nodes_[n.a].grad -= g;
        break;
      case Op::kScale:
        if (wants(n.a)) {
          auto ad = nodes_[n.a].grad.data();
          const auto gd = g.data();
          for (std::size_t i = 0; i < gd.size(); ++i) ad[i] += n.s * gd[i];
        }
        break;
      case Op::kConcatCols:
        if (wants(n.a)) {
          DenseMatrix& ag = nodes_[n.a].grad;
          for (std::size_t i = 0; i < ag.rows(); ++i)
            for (std::size_t j = 0; j < ag.cols(); ++j) ag(i, j) += g(i, j);
        }
        if (wants(n.b)) {
          DenseMatrix& bg = nodes_[n.b].grad;
          const std::size_t off = nodes_[n.a].value.cols();
          for (std::size_t i = 0; i < bg.rows(); ++i)
            for (std::size_t j = 0; j < bg.cols(); ++j) bg(i, j) += g(i, off + j);
        }
        break;
      case Op::kAbsSum:
        if (wants(n.a)) {
          auto ad = nodes_[n.a].grad.data();
          const auto avd = nodes_[n.a].value.data();
          const double g00 = g(0, 0);
          for (std::size_t i = 0; i < avd.size(); ++i) {
            if (avd[i] > 0.0)
              ad[i] += g00;
            else if (avd[i] < 0.0)
              ad[i] -= g00;
          }
        }
        break;
    }
  }
}

}  // namespace sparsecast
