#pragma once

#include <iosfwd>
#include <vector>

#include "symalg/group_algebra.hpp"
#include "symalg/partition.hpp"
#include "symalg/young.hpp"

namespace symalg {

enum class VerdictStatus { reproduces, annihilates, neither };

const char* to_string(VerdictStatus status);

/// Outcome of testing one tableau idempotent e_t against a fixed idempotent
/// h: reproduces iff h*e_t = h, annihilates iff h*e_t = 0, neither otherwise.
struct TableauVerdict {
  Tableau tableau;
  VerdictStatus status;
  bool standard;
};

/// One verdict per element of all_tableaux(lambda), in that order.
/// Requires h idempotent of degree lambda.n().
std::vector<TableauVerdict> classify_frame(const GroupAlgebraElement& h, const Partition& lambda);

/// True iff among the standard tableaux of (2,1^{r-1}) exactly the
/// lexicographically greatest one reproduces h_a and every other standard
/// tableau annihilates it.
bool standard_tableau_theorem_check(int r);

struct HsScanReport {
  bool no_reproducer = false;
  bool no_annihilator = false;
};

/// Scans all fillings of (r,1) against h_s and reports whether any tableau
/// idempotent reproduces or annihilates it.
HsScanReport hs_negative_check(int r);

/// The degree-3 idempotent f = (1/2)(id - (1 3)) - (1/6) sum_p sign(p) p
/// whose right ideal is the one excluded from the order-3 generator classes.
GroupAlgebraElement excluded_ideal_idempotent();

/// True iff f*h != h, i.e. h does not generate the excluded right ideal and
/// is admissible as the order-3 symmetry in the curvature generator formulas.
bool admissibility_check(const GroupAlgebraElement& h);

std::ostream& operator<<(std::ostream& os, const TableauVerdict& v);

}  // namespace symalg
