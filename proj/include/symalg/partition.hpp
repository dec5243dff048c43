#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace symalg {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (of 0) is allowed; it shows up as the recursion base of character
/// evaluation.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

  /// "[2,1,1]"
  std::string to_string() const;

private:
  std::vector<int> parts_;
  int n_ = 0;
};

Partition conjugate(const Partition& p);

std::ostream& operator<<(std::ostream& os, const Partition& p);

}  // namespace symalg
