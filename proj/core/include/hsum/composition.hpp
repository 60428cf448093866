#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hsum {

// Finite sequence of positive integers. Indexes both the monomial
// quasi-symmetric basis and multiple zeta values. The empty composition
// is a valid value (weight 0, depth 0).
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t depth() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }

  Composition reversed() const;
  Composition without_last() const;
  Composition with_last(int part) const;
  Composition concat(const Composition& tail) const;

  // Canonical text form "3,1"; the empty composition prints as "".
  std::string str() const;
  static Composition parse(std::string_view text);

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const;
  std::size_t length() const { return parts_.size(); }

  // Multiplicity vector m with m[r-1] = number of parts equal to r.
  std::vector<int> multiplicities() const;

  // All distinct compositions that rearrange this partition, in
  // lexicographically descending order.
  std::vector<Composition> rearrangements() const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

Partition sorted_partition(const Composition& c);

// All compositions of n, optionally restricted to exactly `parts` parts,
// in lexicographically descending order.
std::vector<Composition> enumerate_compositions(int n, std::optional<int> parts = std::nullopt);

// Partitions of n in lexicographically descending order.
std::vector<Partition> enumerate_partitions(int n);

bool is_admissible(const Composition& c);

// Partial sums (i1, i1+i2, ..., i1+...+ik). Rejects the empty composition.
std::vector<int> sigma(const Composition& c);

// Consecutive differences of a strictly increasing positive sequence.
Composition sigma_inverse(std::span<const int> partial_sums);

// Duality involution on admissible compositions: sigma^-1 R_n C_n sigma.
Composition tau(const Composition& c);

}  // namespace hsum
