#include "symalg/partition.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace symalg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  if (!p.empty()) {
    cols.assign(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts()) {
      for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(cols));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace symalg
