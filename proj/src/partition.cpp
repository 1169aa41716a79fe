#include "caputkit/partition.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>
#include <utility>

namespace caputkit {

namespace {

// Parts and weights stay comfortably inside int; anything larger is a typo.
constexpr long long kWeightLimit = std::numeric_limits<int>::max();

[[noreturn]] void parse_fail(std::string_view text, std::string_view token,
                             const std::string& why) {
  throw std::invalid_argument("cannot parse partition \"" + std::string(text) +
                              "\": " + why + " in token \"" +
                              std::string(token) + "\"");
}

// Strictly positive decimal with no sign, no leading zero, no stray bytes.
long long parse_positive(std::string_view text, std::string_view token,
                         std::string_view digits, const char* what) {
  if (digits.empty()) parse_fail(text, token, std::string("missing ") + what);
  if (digits.front() == '0')
    parse_fail(text, token, std::string(what) + " has a leading zero");
  long long value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    parse_fail(text, token, std::string("bad ") + what);
  if (value > kWeightLimit) parse_fail(text, token, std::string(what) + " too large");
  return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  long long sum = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    sum += parts_[i];
  }
  if (sum > kWeightLimit) throw std::invalid_argument("Partition: weight overflow");
  weight_ = static_cast<int>(sum);
}

CycleType::CycleType(std::vector<int> multiplicities)
    : mult_(std::move(multiplicities)) {
  while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
  long long sum = 0;
  for (std::size_t j = 0; j < mult_.size(); ++j) {
    if (mult_[j] < 0)
      throw std::invalid_argument("CycleType: multiplicities must be >= 0");
    sum += static_cast<long long>(j + 1) * mult_[j];
    if (sum > kWeightLimit) throw std::invalid_argument("CycleType: weight overflow");
  }
  weight_ = static_cast<int>(sum);
}

int CycleType::multiplicity(int length) const {
  if (length < 1)
    throw std::invalid_argument("CycleType: cycle length must be >= 1");
  if (length > max_cycle_length()) return 0;
  return mult_[static_cast<std::size_t>(length - 1)];
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0)
    throw std::invalid_argument("enumerate_partitions: n must be >= 0, got " +
                                std::to_string(n));
  std::vector<Partition> out;
  std::vector<int> stack;
  // Trying the largest admissible part first yields descending
  // lexicographic order directly.
  auto descend = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(stack);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      stack.push_back(part);
      self(self, remaining - part, part);
      stack.pop_back();
    }
  };
  descend(descend, n, n);
  return out;
}

CycleType partition_to_cycle_type(const Partition& p) {
  std::vector<int> mult(p.empty() ? 0u
                                  : static_cast<std::size_t>(p.parts().front()));
  for (int part : p.parts()) ++mult[static_cast<std::size_t>(part - 1)];
  return CycleType(std::move(mult));
}

Partition cycle_type_to_partition(const CycleType& c) {
  std::vector<int> parts;
  for (int length = c.max_cycle_length(); length >= 1; --length) {
    parts.insert(parts.end(), static_cast<std::size_t>(c.multiplicity(length)),
                 length);
  }
  return Partition(std::move(parts));
}

Partition parse_partition(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("cannot parse partition: empty input");
  std::vector<int> parts;
  long long previous = kWeightLimit;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    if (token.empty()) parse_fail(text, token, "empty token");

    const std::size_t caret = token.find('^');
    const std::string_view base_digits = token.substr(0, caret);
    long long part = parse_positive(text, token, base_digits, "part");
    long long count = 1;
    if (caret != std::string_view::npos) {
      count = parse_positive(text, token, token.substr(caret + 1), "exponent");
    }
    if (part > previous)
      parse_fail(text, token, "parts must be weakly decreasing");
    previous = part;
    if (static_cast<long long>(parts.size()) + count > 1 << 20)
      parse_fail(text, token, "too many parts");
    parts.insert(parts.end(), static_cast<std::size_t>(count),
                 static_cast<int>(part));

    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) parse_fail(text, "", "trailing comma");
  }
  return Partition(std::move(parts));
}

std::string render_partition(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  const std::vector<int>& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t run = i;
    while (run < parts.size() && parts[run] == parts[i]) ++run;
    if (!out.empty()) out += ',';
    out += std::to_string(parts[i]);
    if (run - i > 1) {
      out += '^';
      out += std::to_string(run - i);
    }
    i = run;
  }
  return out;
}

std::string render_cycle_type(const CycleType& c) {
  if (c.empty()) return "-";
  std::string out;
  for (int length = 1; length <= c.max_cycle_length(); ++length) {
    const int m = c.multiplicity(length);
    if (m == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(length);
    if (m > 1) {
      out += '^';
      out += std::to_string(m);
    }
  }
  return out;
}

}  // namespace caputkit
