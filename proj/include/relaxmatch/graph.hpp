#pragma once

#include <Eigen/Dense>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace relaxmatch {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Input failed a structural check (shape, symmetry, finiteness, bad file).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative routine failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive enumeration refused: order exceeds the configured limit.
class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected weighted graph, stored as its dense symmetric weight matrix.
// Construction rejects asymmetric or non-finite input rather than repairing it.
class Graph {
 public:
  explicit Graph(Matrix w);

  int order() const { return static_cast<int>(w_.rows()); }
  const Matrix& weights() const { return w_; }
  double frobenius_norm() const { return w_.norm(); }

  static constexpr double kSymmetryTol = 1e-12;

 private:
  Matrix w_;
};

// Vertex bijection pi on {0..n-1}; matrix view has Pi(i, map[i]) = 1.
struct Permutation {
  std::vector<int> map;

  Permutation() = default;
  explicit Permutation(std::vector<int> m);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(map.size()); }
  bool is_identity() const;
  Permutation inverse() const;
  Matrix to_matrix() const;

  int operator[](int i) const { return map[i]; }
  bool operator==(const Permutation& o) const { return map == o.map; }
  auto operator<=>(const Permutation& o) const { return map <=> o.map; }
};

// Matrix-product composition: (a * b).to_matrix() == a.to_matrix() * b.to_matrix().
Permutation operator*(const Permutation& a, const Permutation& b);

enum class PermutationSetKind { symmetries, isomorphisms, rho_symmetries };

struct PermutationSet {
  std::vector<Permutation> elements;
  PermutationSetKind kind = PermutationSetKind::symmetries;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(const Permutation& p) const;
  // Group axioms by exhaustive check; meaningful for kind == symmetries.
  bool is_group() const;
};

// dis(Pi) = ||Pi A - B Pi||_F. Convention: B ~ Pi A Pi^T.
double distortion(const Graph& a, const Graph& b, const Permutation& p);

// tr(B Pi A Pi^T); satisfies dis^2 = ||A||_F^2 + ||B||_F^2 - 2 qap.
double qap_objective(const Graph& a, const Graph& b, const Permutation& p);

// Forward image Pi A Pi^T; distortion(a, result, p) == 0.
Graph apply_isomorphism(const Graph& a, const Permutation& p);

}  // namespace relaxmatch
