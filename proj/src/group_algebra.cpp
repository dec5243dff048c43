#include "symalg/group_algebra.hpp"

#include <ostream>
#include <stdexcept>

#include "symalg/config.hpp"
#include "symalg/linalg.hpp"

namespace symalg {

namespace {

void check_same_degree(int a, int b, const char* operation) {
  if (a != b) {
    throw std::invalid_argument(std::string(operation) + ": degree mismatch " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("group algebra degree must be positive");
}

GroupAlgebraElement GroupAlgebraElement::zero(int degree) { return GroupAlgebraElement(degree); }

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
  return from_permutation(Permutation::identity(degree));
}

GroupAlgebraElement GroupAlgebraElement::from_permutation(Permutation p, Rational coefficient) {
  GroupAlgebraElement a(p.degree());
  a.add_term(std::move(p), coefficient);
  return a;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (p.degree() != degree_) {
    throw std::invalid_argument("add_term: permutation degree mismatch");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  check_same_degree(degree_, other.degree_, "add");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  check_same_degree(degree_, other.degree_, "subtract");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")" + p.to_string();
  }
  return out;
}

GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
  a += b;
  return a;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
  a -= b;
  return a;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_degree(a.degree(), b.degree(), "multiply");
  GroupAlgebraElement result = GroupAlgebraElement::zero(a.degree());
  for (const auto& [p, ac] : a.terms()) {
    for (const auto& [q, bc] : b.terms()) {
      result.add_term(p * q, ac * bc);
    }
  }
  return result;
}

GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) {
  a *= c;
  return a;
}

GroupAlgebraElement operator-(GroupAlgebraElement a) {
  a *= Rational(-1);
  return a;
}

GroupAlgebraElement star(const GroupAlgebraElement& a) {
  GroupAlgebraElement result = GroupAlgebraElement::zero(a.degree());
  for (const auto& [p, c] : a.terms()) result.add_term(p.inverse(), c);
  return result;
}

GroupAlgebraElement embed(const GroupAlgebraElement& a) {
  GroupAlgebraElement result = GroupAlgebraElement::zero(a.degree() + 1);
  for (const auto& [p, c] : a.terms()) {
    std::vector<int> images = p.images();
    images.push_back(a.degree() + 1);
    result.add_term(Permutation(std::move(images)), c);
  }
  return result;
}

bool is_idempotent(const GroupAlgebraElement& a) { return a * a == a; }

RationalVector coefficient_vector(const GroupAlgebraElement& a) {
  RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(factorial(a.degree())));
  for (const auto& [p, c] : a.terms()) v(static_cast<Eigen::Index>(lex_rank(p))) = c;
  return v;
}

int left_ideal_dimension(const GroupAlgebraElement& a) {
  require_degree(a.degree(), "left_ideal_dimension");
  RowSpace space(static_cast<Eigen::Index>(factorial(a.degree())));
  for (const Permutation& p : all_permutations(a.degree())) {
    space.insert(coefficient_vector(GroupAlgebraElement::from_permutation(p) * a));
  }
  return space.rank();
}

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& a) {
  return os << a.to_string();
}

}  // namespace symalg
