#pragma once

#include <string>
#include <vector>

namespace dcfold {

enum class LieType { A, B, C, D, E, F, G };

std::string lie_type_name(LieType t);

// Integral weights in fundamental-weight coordinates: mu[i-1] = mu(h_i).
using Weight = std::vector<int>;

// A finite-type Cartan matrix with the Dynkin nodes numbered as follows:
//   A_n  path 1 - 2 - ... - n
//   B_n  path with a(n, n-1) = -2
//   C_n  path with a(n-1, n) = -2
//   D_n  path 1 - ... - (n-2) plus n-1 and n attached to n-2
//   E_n  path 1 - ... - (n-1) plus n attached to 3
//   F_4  path with a(3, 2) = -2
//   G_2  a(2, 1) = -3
// The entry a(i, j) is alpha_j(h_i), so column j holds the fundamental
// coordinates of alpha_j.
class RootSystem {
public:
  RootSystem(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  int a(int i, int j) const { return a_[i - 1][j - 1]; } // 1-based

  Weight zero() const { return Weight(rank_, 0); }
  Weight fundamental_weight(int i) const;
  Weight simple_root(int i) const; // in fundamental coordinates

  // s_i(mu) = mu - mu(h_i) alpha_i
  Weight simple_reflection(int i, const Weight& mu) const;

  // A positive root, kept both as coefficients on the simple roots and as
  // its coroot's coefficients on the simple coroots, so that
  // mu(beta^vee) = sum coroot[j] * mu[j].
  struct Root {
    std::vector<int> simple;
    std::vector<int> coroot;
  };
  // All positive roots, sorted by (height, coefficients).
  std::vector<Root> positive_roots() const;

  int pairing(const Weight& mu, const Root& beta) const;
  Weight reflect(const Weight& mu, const Root& beta) const; // s_beta(mu)

  long long weyl_order() const;
  // Order of the stabilizer of a dominant weight: the parabolic subgroup
  // generated by the s_i with mu(h_i) = 0, counted by orbiting a weight
  // that those nodes see as regular.
  long long stabilizer_order(const Weight& dominant) const;

private:
  LieType type_;
  int rank_;
  std::vector<std::vector<int>> a_;
};

} // namespace dcfold
