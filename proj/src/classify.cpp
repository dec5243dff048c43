#include "symalg/classify.hpp"

#include <ostream>
#include <stdexcept>

#include "symalg/branching.hpp"
#include "symalg/config.hpp"

namespace symalg {

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::reproduces: return "reproduces";
    case VerdictStatus::annihilates: return "annihilates";
    case VerdictStatus::neither: return "neither";
  }
  throw std::logic_error("unknown verdict status");
}

std::vector<TableauVerdict> classify_frame(const GroupAlgebraElement& h, const Partition& lambda) {
  if (h.degree() != lambda.n()) {
    throw std::invalid_argument("classify_frame: frame size must equal the element degree");
  }
  require_degree(lambda.n(), "classify_frame");
  if (!is_idempotent(h)) throw std::invalid_argument("classify_frame: element is not idempotent");

  std::vector<TableauVerdict> verdicts;
  for (Tableau& t : all_tableaux(lambda)) {
    const GroupAlgebraElement product = h * normalized_idempotent(t);
    VerdictStatus status = VerdictStatus::neither;
    if (product == h) {
      status = VerdictStatus::reproduces;
    } else if (product.is_zero()) {
      status = VerdictStatus::annihilates;
    }
    const bool standard = t.is_standard();
    verdicts.push_back({std::move(t), status, standard});
  }
  return verdicts;
}

bool standard_tableau_theorem_check(int r) {
  if (r < 2) throw std::invalid_argument("standard_tableau_theorem_check: r must be at least 2");
  const GroupAlgebraElement h_a = h_component(r, Kind::alternating);

  std::vector<int> parts{2};
  parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
  const std::vector<Tableau> standard = standard_tableaux(Partition(std::move(parts)));

  for (std::size_t i = 0; i < standard.size(); ++i) {
    const GroupAlgebraElement product = h_a * normalized_idempotent(standard[i]);
    const bool greatest = (i + 1 == standard.size());
    if (greatest && product != h_a) return false;
    if (!greatest && !product.is_zero()) return false;
  }
  return true;
}

HsScanReport hs_negative_check(int r) {
  if (r < 2) throw std::invalid_argument("hs_negative_check: r must be at least 2");
  const GroupAlgebraElement h_s = h_component(r, Kind::symmetric);

  HsScanReport report{true, true};
  for (const Tableau& t : all_tableaux(Partition({r, 1}))) {
    const GroupAlgebraElement product = h_s * normalized_idempotent(t);
    if (product == h_s) report.no_reproducer = false;
    if (product.is_zero()) report.no_annihilator = false;
  }
  return report;
}

GroupAlgebraElement excluded_ideal_idempotent() {
  GroupAlgebraElement signed_sum = GroupAlgebraElement::zero(3);
  for (const Permutation& p : all_permutations(3)) signed_sum.add_term(p, sign(p));

  GroupAlgebraElement f = GroupAlgebraElement::identity(3);
  f -= GroupAlgebraElement::from_permutation(Permutation::transposition(3, 1, 3));
  f *= Rational(1) / Rational(2);
  f -= (Rational(1) / Rational(6)) * signed_sum;
  return f;
}

bool admissibility_check(const GroupAlgebraElement& h) {
  if (h.degree() != 3) throw std::invalid_argument("admissibility_check: degree must be 3");
  return excluded_ideal_idempotent() * h != h;
}

std::ostream& operator<<(std::ostream& os, const TableauVerdict& v) {
  return os << v.tableau.to_string() << " " << to_string(v.status)
            << (v.standard ? " (standard)" : "");
}

}  // namespace symalg
