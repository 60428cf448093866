#include "hsum/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hsum/error.hpp"

namespace hsum {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw InvalidArgument("composition parts must be positive, got " + std::to_string(p));
    }
    weight_ += p;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

Composition Composition::without_last() const {
  if (parts_.empty()) throw EmptyComposition("without_last on empty composition");
  return Composition(std::vector<int>(parts_.begin(), parts_.end() - 1));
}

Composition Composition::with_last(int part) const {
  if (parts_.empty()) throw EmptyComposition("with_last on empty composition");
  auto p = parts_;
  p.back() = part;
  return Composition(std::move(p));
}

Composition Composition::concat(const Composition& tail) const {
  auto p = parts_;
  p.insert(p.end(), tail.parts_.begin(), tail.parts_.end());
  return Composition(std::move(p));
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition Composition::parse(std::string_view text) {
  std::vector<int> parts;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Composition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto piece = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < 1) {
      throw ParseError("bad composition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) ++m[p - 1];
  return m;
}

std::vector<Composition> Partition::rearrangements() const {
  std::vector<Composition> out;
  auto p = parts_;  // already descending, the largest permutation
  do {
    out.emplace_back(p);
  } while (std::prev_permutation(p.begin(), p.end()));
  return out;
}

std::string Partition::str() const { return Composition(parts_).str(); }

Partition sorted_partition(const Composition& c) {
  std::vector<int> p(c.parts().begin(), c.parts().end());
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

namespace {

void compositions_rec(int remaining, int parts_left, std::vector<int>& prefix,
                      std::vector<Composition>& out) {
  if (remaining == 0) {
    if (parts_left <= 0) out.emplace_back(prefix);
    return;
  }
  if (parts_left == 0) return;
  // parts_left < 0 means unrestricted
  int hi = parts_left > 0 ? remaining - (parts_left - 1) : remaining;
  for (int first = hi; first >= 1; --first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, parts_left > 0 ? parts_left - 1 : -1, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    prefix.push_back(first);
    partitions_rec(remaining - first, first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, std::optional<int> parts) {
  if (n < 0) throw InvalidArgument("enumerate_compositions: n must be nonnegative");
  if (parts && *parts < 0) throw InvalidArgument("enumerate_compositions: negative part count");
  std::vector<Composition> out;
  if (n == 0) {
    if (!parts || *parts == 0) out.emplace_back();
    return out;
  }
  if (parts && (*parts == 0 || *parts > n)) return out;
  std::vector<int> prefix;
  compositions_rec(n, parts ? *parts : -1, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidArgument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

bool is_admissible(const Composition& c) { return !c.empty() && c.front() >= 2; }

std::vector<int> sigma(const Composition& c) {
  if (c.empty()) throw EmptyComposition("sigma is undefined on the empty composition");
  std::vector<int> out;
  out.reserve(c.depth());
  int running = 0;
  for (int p : c.parts()) out.push_back(running += p);
  return out;
}

Composition sigma_inverse(std::span<const int> partial_sums) {
  std::vector<int> parts;
  parts.reserve(partial_sums.size());
  int prev = 0;
  for (int s : partial_sums) {
    if (s <= prev) throw InvalidArgument("sigma_inverse: sequence must be strictly increasing and positive");
    parts.push_back(s - prev);
    prev = s;
  }
  return Composition(std::move(parts));
}

Composition tau(const Composition& c) {
  if (c.empty()) throw EmptyComposition("tau is undefined on the empty composition");
  if (!is_admissible(c)) throw NotAdmissible("tau requires an admissible composition, got (" + c.str() + ")");
  const int n = c.weight();
  // membership bitset over {1..n}
  std::vector<char> in_sigma(static_cast<std::size_t>(n) + 1, 0);
  for (int s : sigma(c)) in_sigma[s] = 1;
  std::vector<int> complement;
  for (int s = 1; s <= n; ++s)
    if (!in_sigma[s]) complement.push_back(s);
  // R_n reverses the order and reflects s -> n+1-s
  std::vector<int> reflected;
  reflected.reserve(complement.size());
  for (auto it = complement.rbegin(); it != complement.rend(); ++it) reflected.push_back(n + 1 - *it);
  return sigma_inverse(reflected);
}

}  // namespace hsum
