#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <type_traits>
#include <vector>

#include "hsum/qsym.hpp"
#include "hsum/rational.hpp"

namespace hsum {

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Values u(1, 1/2, ..., 1/n) for n = 0, 1, 2, ... with O(total depth) work
// per step. T is Rational (exact) or double (compensated accumulators).
//
// Each node of a prefix trie over the support holds
// V(i_1..i_t)(n) = sum over n_1 < ... < n_t <= n of prod n_s^{-i_s}.
template <class T>
class SpecializationStream {
  static_assert(std::is_same_v<T, Rational> || std::is_same_v<T, double>);
  using Acc = std::conditional_t<std::is_same_v<T, double>, CompensatedSum, Rational>;

 public:
  explicit SpecializationStream(const QSym& u) {
    nodes_.push_back({-1, 0, 0});
    std::map<std::pair<int, int>, int> child;  // (parent, part) -> node
    for (const auto& [I, c] : u.terms()) {
      int cur = 0;
      for (std::size_t t = 0; t < I.depth(); ++t) {
        auto key = std::make_pair(cur, I[t]);
        auto it = child.find(key);
        if (it == child.end()) {
          nodes_.push_back({cur, I[t], static_cast<int>(t + 1)});
          it = child.emplace(key, static_cast<int>(nodes_.size() - 1)).first;
        }
        cur = it->second;
      }
      max_part_ = std::max(max_part_, I.empty() ? 0 : *std::max_element(I.parts().begin(), I.parts().end()));
      if constexpr (std::is_same_v<T, double>)
        outputs_.push_back({cur, to_double(c)});
      else
        outputs_.push_back({cur, c});
    }
    order_.resize(nodes_.size() - 1);
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i + 1);
    std::stable_sort(order_.begin(), order_.end(),
                     [this](int a, int b) { return nodes_[a].depth > nodes_[b].depth; });
    acc_.assign(nodes_.size(), Acc{});
    if constexpr (std::is_same_v<T, double>)
      acc_[0].sum = 1.0;
    else
      acc_[0] = 1;
    powers_.resize(static_cast<std::size_t>(max_part_) + 1);
  }

  std::size_t n() const { return n_; }

  T value() const {
    if constexpr (std::is_same_v<T, double>) {
      CompensatedSum s;
      for (const auto& [node, c] : outputs_) s.add(c * acc_[node].value());
      return s.value();
    } else {
      Rational s = 0;
      for (const auto& [node, c] : outputs_) s += c * acc_[node];
      return s;
    }
  }

  void advance() {
    ++n_;
    if constexpr (std::is_same_v<T, double>) {
      const double x = 1.0 / static_cast<double>(n_);
      powers_[0] = 1.0;
      for (std::size_t i = 1; i < powers_.size(); ++i) powers_[i] = powers_[i - 1] * x;
      for (int id : order_) acc_[id].add(powers_[nodes_[id].part] * acc_[nodes_[id].parent].value());
    } else {
      const Rational x(1, static_cast<unsigned long>(n_));
      powers_[0] = 1;
      for (std::size_t i = 1; i < powers_.size(); ++i) powers_[i] = powers_[i - 1] * x;
      for (int id : order_) acc_[id] += powers_[nodes_[id].part] * acc_[nodes_[id].parent];
    }
  }

 private:
  struct Node {
    int parent;
    int part;
    int depth;
  };
  std::vector<Node> nodes_;
  std::vector<int> order_;  // non-root nodes, deepest first
  std::vector<std::pair<int, T>> outputs_;
  std::vector<Acc> acc_;
  std::vector<T> powers_;
  int max_part_ = 0;
  std::size_t n_ = 0;
};

// u(1, 1/2, ..., 1/n) exactly.
inline Rational specialize_at(const QSym& u, std::size_t n) {
  SpecializationStream<Rational> s(u);
  while (s.n() < n) s.advance();
  return s.value();
}

}  // namespace hsum
