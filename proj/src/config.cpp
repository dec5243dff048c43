#include "symalg/config.hpp"

#include <cstdlib>
#include <string>

namespace symalg {

namespace {

int read_max_degree() {
  const char* env = std::getenv("SYMALG_MAX_DEGREE");
  if (env == nullptr) return 8;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1) return 8;
  return static_cast<int>(value);
}

}  // namespace

int max_degree() {
  static const int limit = read_max_degree();
  return limit;
}

void require_degree(int n, const char* operation) {
  if (n < 1) {
    throw std::invalid_argument(std::string(operation) + ": degree must be positive, got " +
                                std::to_string(n));
  }
  if (n > max_degree()) {
    throw LimitError(std::string(operation) + ": degree " + std::to_string(n) +
                     " exceeds the configured limit " + std::to_string(max_degree()) +
                     " (set SYMALG_MAX_DEGREE to raise it)");
  }
}

long long factorial(int n) {
  long long result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

}  // namespace symalg
