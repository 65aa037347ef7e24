#pragma once

#include <initializer_list>
#include <string>

#include "ncdet/quasidet.hpp"
#include "ncdet/random.hpp"
#include "ncdet/rank.hpp"

namespace testing_helpers {

using namespace ncdet;
using QQ = Quaternion<Rational>;
using QM = QMatrix<Rational>;
using AlgQ = Algebra<Rational>;

inline QM mat(const AlgQ& h, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<QQ>> out;
  for (auto row : rows) {
    std::vector<QQ> r;
    for (const char* e : row)
      r.push_back(QQ::parse(h, e));
    out.push_back(std::move(r));
  }
  return QM::from_rows(h, out);
}

inline QQ q(const AlgQ& h, const char* s) { return QQ::parse(h, s); }

/// The worked 2x2 example [[i, j], [j, -i]] over H(-1,-1).
inline QM example_matrix() { return mat(AlgQ::hamilton(), {{"0,1,0,0", "0,0,1,0"}, {"0,0,1,0", "0,-1,0,0"}}); }

inline std::string samples_dir() { return NCDET_SAMPLES_DIR; }

} // namespace testing_helpers
