#include "relaxmatch/graph.hpp"

#include <algorithm>
#include <cmath>

namespace relaxmatch {

Graph::Graph(Matrix w) : w_(std::move(w)) {
  if (w_.rows() == 0 || w_.rows() != w_.cols())
    throw ValidationError("graph weight matrix must be square and non-empty");
  if (!w_.allFinite()) throw ValidationError("graph weights must be finite");
  const double skew = (w_ - w_.transpose()).cwiseAbs().maxCoeff();
  if (skew > kSymmetryTol)
    throw ValidationError("weight matrix is not symmetric (max |W - W^T| = " +
                          std::to_string(skew) + "); refusing to symmetrize");
}

Permutation::Permutation(std::vector<int> m) : map(std::move(m)) {
  const int n = size();
  std::vector<char> seen(n, 0);
  for (int x : map) {
    if (x < 0 || x >= n || seen[x]) throw ValidationError("permutation map is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(n);
  for (int i = 0; i < n; ++i) p.map[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (map[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.map.resize(size());
  for (int i = 0; i < size(); ++i) q.map[map[i]] = i;
  return q;
}

Matrix Permutation::to_matrix() const {
  const int n = size();
  Matrix pi = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) pi(i, map[i]) = 1.0;
  return pi;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ValidationError("permutation size mismatch in composition");
  Permutation c;
  c.map.resize(a.size());
  // (Pi_a Pi_b)(i, j) = 1 iff j = b[a[i]]
  for (int i = 0; i < a.size(); ++i) c.map[i] = b.map[a.map[i]];
  return c;
}

bool PermutationSet::contains(const Permutation& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

bool PermutationSet::is_group() const {
  if (elements.empty()) return false;
  const int n = elements.front().size();
  if (!contains(Permutation::identity(n))) return false;
  for (const auto& a : elements) {
    if (!contains(a.inverse())) return false;
    for (const auto& b : elements)
      if (!contains(a * b)) return false;
  }
  return true;
}

namespace {
void require_same_order(int na, int nb, int np) {
  if (na != nb || na != np)
    throw ValidationError("dimension mismatch: graphs of order " + std::to_string(na) + " and " +
                          std::to_string(nb) + ", permutation of length " + std::to_string(np));
}
}  // namespace

double distortion(const Graph& a, const Graph& b, const Permutation& p) {
  const int n = a.order();
  require_same_order(n, b.order(), p.size());
  const Matrix& wa = a.weights();
  const Matrix& wb = b.weights();
  // (Pi A)(i, :) = A(p_i, :);  (B Pi)(:, p_k) = B(:, k)
  double acc = 0.0;
  const Permutation pinv = p.inverse();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d = wa(p.map[i], j) - wb(i, pinv.map[j]);
      acc += d * d;
    }
  return std::sqrt(acc);
}

double qap_objective(const Graph& a, const Graph& b, const Permutation& p) {
  const int n = a.order();
  require_same_order(n, b.order(), p.size());
  const Matrix& wa = a.weights();
  const Matrix& wb = b.weights();
  // tr(B Pi A Pi^T) = sum_{ij} B(i,j) A(p_j, p_i)
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += wb(i, j) * wa(p.map[j], p.map[i]);
  return acc;
}

Graph apply_isomorphism(const Graph& a, const Permutation& p) {
  const int n = a.order();
  require_same_order(n, n, p.size());
  const Matrix& wa = a.weights();
  Matrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = wa(p.map[i], p.map[j]);
  return Graph(std::move(w));
}

}  // namespace relaxmatch
