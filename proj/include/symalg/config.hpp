#pragma once

#include <stdexcept>

namespace symalg {

/// Thrown when an operation would enumerate a symmetric group beyond the
/// configured degree limit.
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Largest degree n accepted by the enumeration, rank and Fourier routines.
/// Defaults to 8 (|S_8| = 40320). The SYMALG_MAX_DEGREE environment variable
/// overrides the default at the user's risk; it is read once per process.
int max_degree();

/// Checks 1 <= n <= max_degree(). Throws std::invalid_argument for n < 1 and
/// LimitError (naming the limit and the override variable) above the limit.
void require_degree(int n, const char* operation);

long long factorial(int n);

}  // namespace symalg
