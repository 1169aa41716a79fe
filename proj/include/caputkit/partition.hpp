#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace caputkit {

// Weakly decreasing positive parts. The empty part list is the unique
// partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }  // n
  int part_count() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool empty() const { return parts_.empty(); }

  // Lexicographic on part lists; enumeration emits partitions in strictly
  // decreasing order under this comparison.
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Multiplicity vector (m_1, m_2, ..., m_L): m_j cycles of length j.
// Trailing zeros are trimmed on construction so equality is structural.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> multiplicities);

  const std::vector<int>& multiplicities() const { return mult_; }
  int weight() const { return weight_; }             // sum of j * m_j
  int max_cycle_length() const { return static_cast<int>(mult_.size()); }
  int multiplicity(int length) const;                // 0 beyond the last entry
  bool empty() const { return mult_.empty(); }

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> mult_;
  int weight_ = 0;
};

// All partitions of n, each exactly once, in descending lexicographic order
// on part lists: n = 5 gives (5), (4,1), (3,2), (3,1,1), (2,2,1),
// (2,1,1,1), (1,1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

CycleType partition_to_cycle_type(const Partition& p);
Partition cycle_type_to_partition(const CycleType& c);

// Textual partition syntax shared by the CLI and JSON: comma-separated parts
// in weakly decreasing order, with `k^e` expanding to e copies of k
// (e.g. "3,2", "2^2,1", "1^5"). No whitespace. Throws std::invalid_argument
// naming the offending token.
Partition parse_partition(std::string_view text);

// Decreasing exponent form: (2,1,1,1) -> "2,1^3". Empty partition -> "-".
std::string render_partition(const Partition& p);

// Ascending cycle-length form used for class labels: one 2-cycle and three
// fixed points -> "1^3,2". Empty type -> "-".
std::string render_cycle_type(const CycleType& c);

}  // namespace caputkit
