#pragma once

#include <json.hpp>

#include "symalg/branching.hpp"
#include "symalg/characters.hpp"
#include "symalg/classify.hpp"
#include "symalg/dft.hpp"
#include "symalg/group_algebra.hpp"
#include "symalg/partition.hpp"
#include "symalg/permutation.hpp"
#include "symalg/tensor.hpp"
#include "symalg/young.hpp"

// JSON wire forms:
//   Permutation        [2,3,1]
//   Partition          [2,1,1]
//   Tableau            [[1,5],[2],[3],[4]]
//   GroupAlgebraElement {"degree": n, "terms": [{"perm": [...], "coeff": "num/den"}, ...]}
//                      terms sorted lexicographically by perm; "/den" omitted when 1
//   FourierImage       {"n": n, "blocks": {"[2,1]": [["1","0"],["0","1"]], ...}}
//   DenseTensor        {"order": r, "dim": d, "entries": ["...", ...]} row-major
// Parsing validates invariants and throws std::invalid_argument on bad input.

namespace symalg {

void to_json(nlohmann::json& j, const Permutation& p);
void to_json(nlohmann::json& j, const Partition& p);
void to_json(nlohmann::json& j, const Tableau& t);
void to_json(nlohmann::json& j, const GroupAlgebraElement& a);
void to_json(nlohmann::json& j, const FourierImage& f);
void to_json(nlohmann::json& j, const DenseTensor& t);
void to_json(nlohmann::json& j, const BranchingDecomposition& d);
void to_json(nlohmann::json& j, const TableauVerdict& v);

Permutation permutation_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);
Tableau tableau_from_json(const nlohmann::json& j);
GroupAlgebraElement element_from_json(const nlohmann::json& j);
FourierImage fourier_image_from_json(const nlohmann::json& j);
DenseTensor tensor_from_json(const nlohmann::json& j);

nlohmann::json character_table_json(const CharacterTable& table);

}  // namespace symalg
