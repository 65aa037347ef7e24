#pragma once

// Matrix (.qmat) and system (.qsys) documents.
//
//   .qmat  {"algebra": {"a": "-1", "b": "-1"}, "scalar": "rational",
//           "matrix": [["0,1,0,0", "0,0,1,0"], ...]}
//   .qsys  {"A": <qmat>, "y": <qmat or bare nested array>, "side": "right"|"left"}
//
// Entries are "x0,x1,x2,x3". Writers emit lowest-terms rationals and sorted
// keys with two-space indentation, so canonical files round-trip byte for byte.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ncdet/matrix.hpp"

namespace ncdet::io {

using json = nlohmann::json;

/// 0-based library index to the 1-based index used in documents and messages.
inline Index to_display(Index k) { return k + 1; }

/// 1-based index from the command line to a 0-based library index.
inline Index from_display(long k) {
  if (k < 1)
    throw parse_error("indices are 1-based, got " + std::to_string(k));
  return static_cast<Index>(k - 1);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline const std::string& get_string(const json& j, const char* what) {
  if (!j.is_string())
    throw parse_error(std::string(what) + " must be a string");
  return j.get_ref<const std::string&>();
}

inline const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw parse_error(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

} // namespace detail

/// Scalar backend named by a matrix document ("rational" when absent).
inline std::string scalar_of(const json& doc) {
  if (doc.is_object() && doc.contains("scalar")) {
    const std::string& s = detail::get_string(doc.at("scalar"), "scalar");
    if (s != "rational" && s != "float64")
      throw parse_error("unknown scalar backend '" + s + "'");
    return s;
  }
  return "rational";
}

template <class F>
Algebra<F> parse_algebra(const json& j) {
  using traits = scalar_traits<F>;
  F a = traits::parse(detail::get_string(detail::member(j, "a"), "algebra.a"));
  F b = traits::parse(detail::get_string(detail::member(j, "b"), "algebra.b"));
  try {
    return Algebra<F>(std::move(a), std::move(b));
  } catch (const invalid_algebra& e) {
    throw parse_error(e.what());
  }
}

template <class F>
json algebra_to_json(const Algebra<F>& alg) {
  return json{{"a", scalar_traits<F>::format(alg.a())}, {"b", scalar_traits<F>::format(alg.b())}};
}

/// Nested array of quaternion strings.
template <class F>
QMatrix<F> parse_entries(const Algebra<F>& alg, const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw parse_error("matrix must be a nonempty array of rows");
  std::vector<std::vector<Quaternion<F>>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty())
      throw parse_error("matrix rows must be nonempty arrays");
    std::vector<Quaternion<F>> r;
    for (const auto& e : row)
      r.push_back(Quaternion<F>::parse(alg, detail::get_string(e, "matrix entry")));
    if (!out.empty() && r.size() != out.front().size())
      throw parse_error("ragged matrix rows");
    out.push_back(std::move(r));
  }
  return QMatrix<F>::from_rows(alg, out);
}

template <class F>
json entries_to_json(const QMatrix<F>& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
QMatrix<F> parse_matrix(const json& doc) {
  if (scalar_of(doc) != scalar_traits<F>::name)
    throw parse_error("document scalar backend is '" + scalar_of(doc) + "', expected '" +
                      std::string(scalar_traits<F>::name) + "'");
  Algebra<F> alg = parse_algebra<F>(detail::member(doc, "algebra"));
  return parse_entries(alg, detail::member(doc, "matrix"));
}

template <class F>
json matrix_to_json(const QMatrix<F>& m) {
  return json{{"algebra", algebra_to_json(m.algebra())},
              {"scalar", std::string(scalar_traits<F>::name)},
              {"matrix", entries_to_json(m)}};
}

enum class Side { right, left };

inline Side parse_side(const std::string& s) {
  if (s == "right")
    return Side::right;
  if (s == "left")
    return Side::left;
  throw parse_error("side must be \"right\" or \"left\", got '" + s + "'");
}

inline const char* to_string(Side s) { return s == Side::right ? "right" : "left"; }

template <class F>
struct System {
  QMatrix<F> a;
  QMatrix<F> y;  // n x 1 for right systems, 1 x n for left systems
  Side side;
};

/// A right system takes y as a column, a left system as a row; a flat array
/// or a single row/column of the other orientation is reshaped accordingly.
template <class F>
System<F> parse_system(const json& doc) {
  QMatrix<F> a = parse_matrix<F>(detail::member(doc, "A"));
  Side side = parse_side(detail::get_string(detail::member(doc, "side"), "side"));
  const json& yj = detail::member(doc, "y");
  QMatrix<F> y = [&] {
    if (yj.is_object()) {
      QMatrix<F> m = parse_matrix<F>(yj);
      if (!(m.algebra() == a.algebra()))
        throw parse_error("system mixes algebras: A and y differ");
      return m;
    }
    if (yj.is_array() && !yj.empty() && yj.front().is_string())
      return parse_entries(a.algebra(), json::array({yj}));
    return parse_entries(a.algebra(), yj);
  }();
  if (!a.is_square())
    throw parse_error("system matrix A must be square, got " + a.shape());
  const Index n = a.rows();
  bool column_shape = y.cols() == 1 && y.rows() == n;
  bool row_shape = y.rows() == 1 && y.cols() == n;
  if (!column_shape && !row_shape)
    throw parse_error("y of shape " + y.shape() + " does not fit A of shape " + a.shape());
  if (side == Side::right && !column_shape)
    y = QMatrix<F>(a.algebra(), n, 1, y.entries());
  if (side == Side::left && !row_shape)
    y = QMatrix<F>(a.algebra(), 1, n, y.entries());
  return System<F>{std::move(a), std::move(y), side};
}

template <class F>
json system_to_json(const System<F>& s) {
  return json{{"A", matrix_to_json(s.a)}, {"y", entries_to_json(s.y)}, {"side", to_string(s.side)}};
}

} // namespace ncdet::io
