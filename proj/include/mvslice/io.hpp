#ifndef MVSLICE_IO_HPP
#define MVSLICE_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvslice/errors.hpp"
#include "mvslice/lusztig_geometric.hpp"
#include "mvslice/mv_map.hpp"
#include "mvslice/partition.hpp"
#include "mvslice/poly.hpp"
#include "mvslice/rational.hpp"
#include "mvslice/slice.hpp"
#include "mvslice/tableau.hpp"

namespace mvslice::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

inline std::vector<int> ints_from(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace detail

// --- RatMatrix: array of rows of "p/q" strings -------------------------------

inline Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(detail::rational_from(x));
    rows.push_back(std::move(r));
  }
  try {
    return RatMatrix::from_rows(rows);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

// --- PolyMatrix: rows of coefficient arrays, lowest degree first ------------

inline Json to_json(const Poly<Rational>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

inline Json to_json(const PolyMatrix& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(to_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline PolyMatrix poly_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial matrix must be an array of rows");
  std::vector<std::vector<Poly<Rational>>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("polynomial matrix row must be an array");
    std::vector<Poly<Rational>> r;
    for (const auto& entry : row) {
      if (!entry.is_array()) throw ParseError("polynomial entry must be an array of coefficients");
      std::vector<Rational> coeffs;
      for (const auto& c : entry) coeffs.push_back(detail::rational_from(c));
      r.emplace_back(std::move(coeffs));
    }
    rows.push_back(std::move(r));
  }
  try {
    auto g = PolyMatrix::from_rows(rows);
    if (!g.is_square()) throw ParseError("polynomial matrix must be square");
    return g;
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

// --- SlicePoint: {"mu": [...], "free": [[row, col, "p/q"], ...], "seed": s} --

inline Json to_json(const SlicePoint& point, std::optional<std::uint64_t> seed) {
  Json j;
  j["mu"] = point.shape().mu().parts();
  Json free = Json::array();
  const auto& pos = point.shape().free_positions();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    free.push_back(Json::array({pos[k].row, pos[k].col, to_string(point.values()[k])}));
  }
  j["free"] = std::move(free);
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

struct SlicePointFile {
  SlicePoint point;
  std::optional<std::uint64_t> seed;
};

/// Free positions omitted from "free" are zero; listing a position outside
/// the slice is an error.
inline SlicePointFile slice_point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("free")) {
    throw ParseError("slice point needs \"mu\" and \"free\"");
  }
  Partition mu;
  try {
    mu = Partition(detail::ints_from(j.at("mu"), "mu"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("mu: ") + e.what());
  }
  if (mu.empty()) throw ParseError("mu must be nonempty");
  SliceShape shape(mu);
  std::vector<Rational> values(shape.free_positions().size());
  if (!j.at("free").is_array()) throw ParseError("\"free\" must be an array");
  for (const auto& entry : j.at("free")) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
      throw ParseError("free entries must be [row, col, \"p/q\"]");
    }
    const Position pos{entry[0].get<int>(), entry[1].get<int>()};
    const auto idx = shape.free_index(pos);
    if (!idx) {
      throw NotInSlice("(" + std::to_string(pos.row) + "," + std::to_string(pos.col) + ") is not a free position");
    }
    values[*idx] = detail::rational_from(entry[2]);
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && !j.at("seed").is_null()) {
    if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) throw ParseError("bad seed");
    seed = j.at("seed").get<std::uint64_t>();
  }
  return {SlicePoint(std::move(shape), std::move(values)), seed};
}

// --- Combinatorial summaries -----------------------------------------------

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const GTChain& chain) {
  Json blocks = Json::array();
  for (const auto& b : chain.blocks) blocks.push_back(to_json(b));
  return blocks;
}

inline Json ladder_json(const GTChain& chain) {
  Json steps = Json::array();
  for (const auto& s : chain.steps) steps.push_back(Json::array({s.letter, s.occurrence, s.row, s.col}));
  return steps;
}

inline Json to_json(const GeometricDatum& gd) {
  Json table = Json::array();
  for (int a = 1; a <= gd.rank; ++a) {
    for (int b = a; b <= gd.rank; ++b) {
      const auto v = gd.at(a, b);
      table.push_back(Json::array({a, b, v.is_finite() ? Json(v.value()) : Json("inf")}));
    }
  }
  Json j;
  j["d_table"] = std::move(table);
  j["lusztig_datum"] = gd.datum.entries();
  return j;
}

}  // namespace mvslice::io

#endif  // MVSLICE_IO_HPP
