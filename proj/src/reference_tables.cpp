#include "symalg/reference_tables.hpp"

#include <array>
#include <stdexcept>

namespace symalg {

namespace {

// Flat entries of a (2,1^{r-1}) tableau: first row pair, then the
// remaining first-column boxes top to bottom.
constexpr std::array<std::array<int, 3>, 2> k_reproducing_r2 = {{
    {{1, 3, 2}}, {{2, 3, 1}}
}};

constexpr std::array<std::array<int, 3>, 2> k_annihilating_r2 = {{
    {{1, 2, 3}}, {{2, 1, 3}}
}};

constexpr std::array<std::array<int, 4>, 6> k_reproducing_r3 = {{
    {{1, 4, 2, 3}}, {{1, 4, 3, 2}}, {{2, 4, 1, 3}}, {{2, 4, 3, 1}}, {{3, 4, 1, 2}},
    {{3, 4, 2, 1}}
}};

constexpr std::array<std::array<int, 4>, 12> k_annihilating_r3 = {{
    {{1, 2, 3, 4}}, {{1, 2, 4, 3}}, {{1, 3, 2, 4}}, {{1, 3, 4, 2}}, {{2, 1, 3, 4}},
    {{2, 1, 4, 3}}, {{2, 3, 1, 4}}, {{2, 3, 4, 1}}, {{3, 1, 2, 4}}, {{3, 1, 4, 2}},
    {{3, 2, 1, 4}}, {{3, 2, 4, 1}}
}};

constexpr std::array<std::array<int, 5>, 24> k_reproducing_r4 = {{
    {{1, 5, 2, 3, 4}}, {{1, 5, 2, 4, 3}}, {{1, 5, 3, 2, 4}}, {{1, 5, 3, 4, 2}},
    {{1, 5, 4, 2, 3}}, {{1, 5, 4, 3, 2}}, {{2, 5, 1, 3, 4}}, {{2, 5, 1, 4, 3}},
    {{2, 5, 3, 1, 4}}, {{2, 5, 3, 4, 1}}, {{2, 5, 4, 1, 3}}, {{2, 5, 4, 3, 1}},
    {{3, 5, 1, 2, 4}}, {{3, 5, 1, 4, 2}}, {{3, 5, 2, 1, 4}}, {{3, 5, 2, 4, 1}},
    {{3, 5, 4, 1, 2}}, {{3, 5, 4, 2, 1}}, {{4, 5, 1, 2, 3}}, {{4, 5, 1, 3, 2}},
    {{4, 5, 2, 1, 3}}, {{4, 5, 2, 3, 1}}, {{4, 5, 3, 1, 2}}, {{4, 5, 3, 2, 1}}
}};

constexpr std::array<std::array<int, 5>, 72> k_annihilating_r4 = {{
    {{1, 2, 3, 4, 5}}, {{1, 2, 3, 5, 4}}, {{1, 2, 4, 3, 5}}, {{1, 2, 4, 5, 3}},
    {{1, 2, 5, 3, 4}}, {{1, 2, 5, 4, 3}}, {{1, 3, 2, 4, 5}}, {{1, 3, 2, 5, 4}},
    {{1, 3, 4, 2, 5}}, {{1, 3, 4, 5, 2}}, {{1, 3, 5, 2, 4}}, {{1, 3, 5, 4, 2}},
    {{1, 4, 2, 3, 5}}, {{1, 4, 2, 5, 3}}, {{1, 4, 3, 2, 5}}, {{1, 4, 3, 5, 2}},
    {{1, 4, 5, 2, 3}}, {{1, 4, 5, 3, 2}}, {{2, 1, 3, 4, 5}}, {{2, 1, 3, 5, 4}},
    {{2, 1, 4, 3, 5}}, {{2, 1, 4, 5, 3}}, {{2, 1, 5, 3, 4}}, {{2, 1, 5, 4, 3}},
    {{2, 3, 1, 4, 5}}, {{2, 3, 1, 5, 4}}, {{2, 3, 4, 1, 5}}, {{2, 3, 4, 5, 1}},
    {{2, 3, 5, 1, 4}}, {{2, 3, 5, 4, 1}}, {{2, 4, 1, 3, 5}}, {{2, 4, 1, 5, 3}},
    {{2, 4, 3, 1, 5}}, {{2, 4, 3, 5, 1}}, {{2, 4, 5, 1, 3}}, {{2, 4, 5, 3, 1}},
    {{3, 1, 2, 4, 5}}, {{3, 1, 2, 5, 4}}, {{3, 1, 4, 2, 5}}, {{3, 1, 4, 5, 2}},
    {{3, 1, 5, 2, 4}}, {{3, 1, 5, 4, 2}}, {{3, 2, 1, 4, 5}}, {{3, 2, 1, 5, 4}},
    {{3, 2, 4, 1, 5}}, {{3, 2, 4, 5, 1}}, {{3, 2, 5, 1, 4}}, {{3, 2, 5, 4, 1}},
    {{3, 4, 1, 2, 5}}, {{3, 4, 1, 5, 2}}, {{3, 4, 2, 1, 5}}, {{3, 4, 2, 5, 1}},
    {{3, 4, 5, 1, 2}}, {{3, 4, 5, 2, 1}}, {{4, 1, 2, 3, 5}}, {{4, 1, 2, 5, 3}},
    {{4, 1, 3, 2, 5}}, {{4, 1, 3, 5, 2}}, {{4, 1, 5, 2, 3}}, {{4, 1, 5, 3, 2}},
    {{4, 2, 1, 3, 5}}, {{4, 2, 1, 5, 3}}, {{4, 2, 3, 1, 5}}, {{4, 2, 3, 5, 1}},
    {{4, 2, 5, 1, 3}}, {{4, 2, 5, 3, 1}}, {{4, 3, 1, 2, 5}}, {{4, 3, 1, 5, 2}},
    {{4, 3, 2, 1, 5}}, {{4, 3, 2, 5, 1}}, {{4, 3, 5, 1, 2}}, {{4, 3, 5, 2, 1}}
}};

template <std::size_t N, std::size_t Cols>
std::vector<Tableau> build(const std::array<std::array<int, Cols>, N>& data) {
  const int r = static_cast<int>(Cols) - 1;
  std::vector<int> parts{2};
  parts.insert(parts.end(), static_cast<std::size_t>(r - 1), 1);
  const Partition frame(parts);

  std::vector<Tableau> out;
  out.reserve(N);
  for (const auto& flat : data) {
    std::vector<std::vector<int>> rows{{flat[0], flat[1]}};
    for (std::size_t k = 2; k < Cols; ++k) rows.push_back({flat[k]});
    out.push_back(Tableau(frame, std::move(rows)));
  }
  return out;
}

}  // namespace

const ReferenceTables& reference_tables(int r) {
  static const ReferenceTables r2{build(k_reproducing_r2), build(k_annihilating_r2)};
  static const ReferenceTables r3{build(k_reproducing_r3), build(k_annihilating_r3)};
  static const ReferenceTables r4{build(k_reproducing_r4), build(k_annihilating_r4)};
  switch (r) {
    case 2: return r2;
    case 3: return r3;
    case 4: return r4;
    default: throw std::invalid_argument("reference_tables: available for r = 2, 3, 4 only");
  }
}

}  // namespace symalg
