#include "dcfold/cartan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace dcfold {

std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E: return "E";
    case LieType::F: return "F";
    case LieType::G: return "G";
  }
  throw std::logic_error("bad LieType");
}

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  auto need = [&](bool ok) {
    if (!ok)
      throw std::invalid_argument("rank out of range for " + lie_type_name(type));
  };
  switch (type) {
    case LieType::A: need(rank >= 1); break;
    case LieType::B:
    case LieType::C: need(rank >= 1); break;
    case LieType::D: need(rank >= 3); break;
    case LieType::E: need(rank >= 6 && rank <= 8); break;
    case LieType::F: need(rank == 4); break;
    case LieType::G: need(rank == 2); break;
  }
  a_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a_[i][i] = 2;
  auto edge = [this](int i, int j, int aij = -1, int aji = -1) {
    a_[i - 1][j - 1] = aij;
    a_[j - 1][i - 1] = aji;
  };
  switch (type) {
    case LieType::A:
      for (int i = 1; i < rank; ++i) edge(i, i + 1);
      break;
    case LieType::B:
      for (int i = 1; i < rank; ++i) edge(i, i + 1);
      if (rank >= 2) edge(rank, rank - 1, -2, -1);
      break;
    case LieType::C:
      for (int i = 1; i < rank; ++i) edge(i, i + 1);
      if (rank >= 2) edge(rank - 1, rank, -2, -1);
      break;
    case LieType::D:
      for (int i = 1; i < rank - 2; ++i) edge(i, i + 1);
      edge(rank - 2, rank - 1);
      edge(rank - 2, rank);
      break;
    case LieType::E:
      for (int i = 1; i < rank - 1; ++i) edge(i, i + 1);
      edge(3, rank);
      break;
    case LieType::F:
      edge(1, 2);
      edge(3, 2, -2, -1);
      edge(3, 4);
      break;
    case LieType::G:
      edge(2, 1, -3, -1);
      break;
  }
}

std::string RootSystem::name() const {
  return lie_type_name(type_) + std::to_string(rank_);
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w(rank_, 0);
  w[i - 1] = 1;
  return w;
}

Weight RootSystem::simple_root(int i) const {
  Weight w(rank_);
  for (int r = 0; r < rank_; ++r) w[r] = a_[r][i - 1];
  return w;
}

Weight RootSystem::simple_reflection(int i, const Weight& mu) const {
  Weight out = mu;
  int pair = mu[i - 1];
  for (int r = 0; r < rank_; ++r) out[r] -= pair * a_[r][i - 1];
  return out;
}

std::vector<RootSystem::Root> RootSystem::positive_roots() const {
  // Closure of the simple roots under the simple reflections, tracking the
  // coroot alongside:
  //   root:   r -> r - (sum_j a[i][j] r[j]) e_i
  //   coroot: c -> c - (sum_j a[j][i] c[j]) e_i
  std::set<std::vector<int>> seen;
  std::map<std::vector<int>, std::vector<int>> coroot;
  std::queue<std::vector<int>> q;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    coroot[e] = e;
    q.push(e);
  }
  while (!q.empty()) {
    auto r = q.front();
    q.pop();
    auto c = coroot.at(r);
    for (int i = 0; i < rank_; ++i) {
      int pr = 0, pc = 0;
      for (int j = 0; j < rank_; ++j) {
        pr += a_[i][j] * r[j];
        pc += a_[j][i] * c[j];
      }
      auto r2 = r;
      r2[i] -= pr;
      if (*std::min_element(r2.begin(), r2.end()) < 0) continue;
      auto c2 = c;
      c2[i] -= pc;
      if (seen.insert(r2).second) {
        coroot[r2] = c2;
        q.push(r2);
      }
    }
  }
  std::vector<Root> out;
  for (const auto& r : seen) out.push_back({r, coroot.at(r)});
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    int hx = 0, hy = 0;
    for (int v : x.simple) hx += v;
    for (int v : y.simple) hy += v;
    return hx != hy ? hx < hy : x.simple < y.simple;
  });
  return out;
}

int RootSystem::pairing(const Weight& mu, const Root& beta) const {
  int p = 0;
  for (int j = 0; j < rank_; ++j) p += beta.coroot[j] * mu[j];
  return p;
}

Weight RootSystem::reflect(const Weight& mu, const Root& beta) const {
  int p = pairing(mu, beta);
  Weight out = mu;
  for (int r = 0; r < rank_; ++r) {
    int fund = 0; // coordinate r of beta in the fundamental basis
    for (int j = 0; j < rank_; ++j) fund += a_[r][j] * beta.simple[j];
    out[r] -= p * fund;
  }
  return out;
}

long long RootSystem::weyl_order() const {
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (type_) {
    case LieType::A: return fact(rank_ + 1);
    case LieType::B:
    case LieType::C: return fact(rank_) << rank_;
    case LieType::D: return fact(rank_) << (rank_ - 1);
    case LieType::E:
      return rank_ == 6 ? 51840LL : rank_ == 7 ? 2903040LL : 696729600LL;
    case LieType::F: return 1152;
    case LieType::G: return 12;
  }
  throw std::logic_error("bad LieType");
}

long long RootSystem::stabilizer_order(const Weight& dominant) const {
  for (int v : dominant)
    if (v < 0) throw std::invalid_argument("weight is not dominant");
  // The stabilizer is generated by the s_i with pairing zero; its order is
  // the orbit size of a weight those generators move freely.
  std::vector<int> gens;
  Weight seed(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    if (dominant[i] == 0) {
      gens.push_back(i + 1);
      seed[i] = 1;
    }
  std::set<Weight> orbit{seed};
  std::queue<Weight> q;
  q.push(seed);
  while (!q.empty()) {
    Weight mu = q.front();
    q.pop();
    for (int i : gens) {
      Weight nu = simple_reflection(i, mu);
      if (orbit.insert(nu).second) q.push(nu);
    }
  }
  return static_cast<long long>(orbit.size());
}

} // namespace dcfold
