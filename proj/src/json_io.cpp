#include "symalg/json_io.hpp"

#include <stdexcept>

#include "symalg/config.hpp"

namespace symalg {

namespace {

using nlohmann::json;

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + ": expected integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

std::string partition_key(const Partition& p) { return p.to_string(); }

Partition partition_from_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']') {
    throw std::invalid_argument("bad partition key: " + key);
  }
  std::vector<int> parts;
  std::size_t pos = 1;
  while (pos < key.size() - 1) {
    std::size_t next = key.find(',', pos);
    if (next == std::string::npos || next > key.size() - 1) next = key.size() - 1;
    parts.push_back(std::stoi(key.substr(pos, next - pos)));
    pos = next + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace

void to_json(json& j, const Permutation& p) { j = p.images(); }

void to_json(json& j, const Partition& p) { j = p.parts(); }

void to_json(json& j, const Tableau& t) { j = t.rows(); }

void to_json(json& j, const GroupAlgebraElement& a) {
  json terms = json::array();
  for (const auto& [p, c] : a.terms()) {
    terms.push_back({{"perm", p.images()}, {"coeff", to_string(c)}});
  }
  j = {{"degree", a.degree()}, {"terms", std::move(terms)}};
}

void to_json(json& j, const FourierImage& f) {
  json blocks = json::object();
  for (const auto& [lambda, block] : f.blocks()) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < block.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < block.cols(); ++c) row.push_back(to_string(block(i, c)));
      rows.push_back(std::move(row));
    }
    blocks[partition_key(lambda)] = std::move(rows);
  }
  j = {{"n", f.n()}, {"blocks", std::move(blocks)}};
}

void to_json(json& j, const DenseTensor& t) {
  json entries = json::array();
  for (const Rational& e : t.entries()) entries.push_back(to_string(e));
  j = {{"order", t.order()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

void to_json(json& j, const BranchingDecomposition& d) {
  json components = json::object();
  for (const auto& [mu, element] : d.components) {
    components[partition_key(mu)] = element;
  }
  j = {{"source", d.source}, {"frames", d.frames}, {"components", std::move(components)}};
}

void to_json(json& j, const TableauVerdict& v) {
  j = {{"tableau", v.tableau}, {"status", to_string(v.status)}, {"standard", v.standard}};
}

Permutation permutation_from_json(const json& j) {
  return Permutation(int_vector(j, "permutation"));
}

Partition partition_from_json(const json& j) { return Partition(int_vector(j, "partition")); }

Tableau tableau_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau: expected an array of rows");
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  for (const auto& row : j) {
    rows.push_back(int_vector(row, "tableau row"));
    parts.push_back(static_cast<int>(rows.back().size()));
  }
  return Tableau(Partition(std::move(parts)), std::move(rows));
}

GroupAlgebraElement element_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("terms")) {
    throw std::invalid_argument("element: expected {degree, terms}");
  }
  GroupAlgebraElement a = GroupAlgebraElement::zero(j.at("degree").get<int>());
  for (const auto& term : j.at("terms")) {
    const Permutation p = permutation_from_json(term.at("perm"));
    a.add_term(p, parse_rational(term.at("coeff").get<std::string>()));
  }
  return a;
}

FourierImage fourier_image_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("blocks")) {
    throw std::invalid_argument("fourier image: expected {n, blocks}");
  }
  const int n = j.at("n").get<int>();
  std::map<Partition, RationalMatrix> blocks;
  for (const auto& [key, rows] : j.at("blocks").items()) {
    const Partition lambda = partition_from_key(key);
    const Eigen::Index nrows = static_cast<Eigen::Index>(rows.size());
    RationalMatrix block(nrows, nrows);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Eigen::Index>(row.size()) != nrows) {
        throw std::invalid_argument("fourier image: block " + key + " is not square");
      }
      Eigen::Index c = 0;
      for (const auto& value : row) block(i, c++) = parse_rational(value.get<std::string>());
      ++i;
    }
    blocks.emplace(lambda, std::move(block));
  }
  return FourierImage(n, std::move(blocks));
}

DenseTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("dim") || !j.contains("entries")) {
    throw std::invalid_argument("tensor: expected {order, dim, entries}");
  }
  DenseTensor t(j.at("order").get<int>(), j.at("dim").get<int>());
  const auto& entries = j.at("entries");
  if (entries.size() != t.entries().size()) {
    throw std::invalid_argument("tensor: entry count must be dim^order");
  }
  std::size_t i = 0;
  for (const auto& value : entries) {
    t.entries()[i++] = parse_rational(value.get<std::string>());
  }
  return t;
}

json character_table_json(const CharacterTable& table) {
  json cycle_types = json::array();
  for (const Partition& ct : table.partitions()) cycle_types.push_back(ct.parts());
  json rows = json::array();
  for (const Partition& lambda : table.partitions()) {
    json values = json::array();
    for (const Partition& ct : table.partitions()) values.push_back(table.value(lambda, ct));
    rows.push_back({{"lambda", lambda.parts()}, {"values", std::move(values)}});
  }
  return {{"n", table.n()}, {"cycle_types", std::move(cycle_types)}, {"rows", std::move(rows)}};
}

}  // namespace symalg
