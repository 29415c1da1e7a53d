#pragma once

// JSON encodings shared by the serializers. Scalars are written as strings
// so arbitrary-precision values survive the round trip.

#include <json.hpp>

#include "cychom/sparse_matrix.hpp"

namespace cychom::detail {

inline nlohmann::ordered_json matrix_to_json(const SparseMatrix& m) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) entries.push_back({e.row, j, e.value.to_string()});
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline SparseMatrix matrix_from_json(const RingSpec& ring, const nlohmann::json& j) {
  std::vector<SparseMatrix::Triplet> trips;
  for (const auto& e : j.at("entries")) {
    trips.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), Scalar::parse(e.at(2).get<std::string>())});
  }
  return SparseMatrix::from_triplets(ring, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                                     std::move(trips));
}

}  // namespace cychom::detail
