#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "iomdin/resgraph.hpp"
#include "iomdin/types.hpp"

namespace iomdin {

namespace detail {

template <typename Scalar, typename Derived>
std::vector<Scalar> to_row_major(const Eigen::MatrixBase<Derived>& m) {
  std::vector<Scalar> out(static_cast<size_t>(m.rows() * m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<size_t>(i * m.cols() + j)] = Scalar(m(i, j));
    }
  }
  return out;
}

}  // namespace detail

/// Leading principal minors of a square integer matrix via Bareiss
/// fraction-free elimination without pivoting. Elimination stops at the first
/// vanishing minor; the returned vector is then shorter than the dimension.
template <typename Scalar = BigInt, typename Derived>
std::vector<Scalar> leading_principal_minors(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  auto a = detail::to_row_major<Scalar>(m);
  auto at = [&](Eigen::Index i, Eigen::Index j) -> Scalar& {
    return a[static_cast<size_t>(i * n + j)];
  };
  std::vector<Scalar> minors;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar pivot = at(k, k);
    minors.push_back(pivot);
    if (pivot == 0) break;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * pivot - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = pivot;
  }
  return minors;
}

/// Negative definiteness by Sylvester's criterion on exact minors: the k-th
/// leading minor must have sign (-1)^k.
template <typename Scalar = BigInt, typename Derived>
bool is_negative_definite(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  const auto minors = leading_principal_minors<Scalar>(m);
  if (static_cast<Eigen::Index>(minors.size()) != m.rows()) return false;
  for (size_t k = 0; k < minors.size(); ++k) {
    const bool odd = (k % 2) == 0;  // minor of order k + 1
    if (odd ? !(minors[k] < 0) : !(minors[k] > 0)) return false;
  }
  return true;
}

/// |det| by Bareiss elimination with row pivoting. The empty matrix has det 1.
template <typename Scalar = BigInt, typename Derived>
Scalar det_abs(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  auto a = detail::to_row_major<Scalar>(m);
  auto at = [&](Eigen::Index i, Eigen::Index j) -> Scalar& {
    return a[static_cast<size_t>(i * n + j)];
  };
  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  if (n == 0) return Scalar(1);
  Scalar d = at(n - 1, n - 1);
  return d < 0 ? Scalar(-d) : d;
}

/// Sparse symmetric elimination of the intersection form of a graph, in exact
/// rational arithmetic, eliminating minimum-degree vertices first. Trees
/// eliminate without fill, so long strings stay linear.
struct FormSignature {
  bool negative_definite = false;
  bool nondegenerate = false;
  BigInt det_abs = 1;
};

FormSignature intersection_form_signature(const ResGraph& g);

}  // namespace iomdin
