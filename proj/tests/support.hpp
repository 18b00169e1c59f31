#ifndef GCX_TESTS_SUPPORT_HPP
#define GCX_TESTS_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "gcx/model.hpp"
#include "oracle.hpp"

namespace support {

inline std::string corpus_path(const std::string& name) { return std::string(GCX_CORPUS_DIR) + "/" + name + ".gcx"; }

inline gcx::ParsedModel load(const std::string& name) {
  std::ifstream in(corpus_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return gcx::parse_model(buf.str());
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Copies an engine matrix into the oracle's independent representation.
inline oracle::Mat to_oracle(const gcx::Matrix& m) {
  oracle::Mat out = oracle::zeros(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          oracle::C(oracle::Q(m(i, j).real().get_str()), oracle::Q(m(i, j).imag().get_str()));
  return out;
}

inline int oracle_rank(const gcx::Matrix& m) {
  return m.rows() == 0 || m.cols() == 0 ? 0 : oracle::rank(to_oracle(m));
}

/// Structure constants of the corpus nilpotent algebras, written out by hand.
inline oracle::Brackets kt_brackets() { return oracle::brackets(4, {{0, 1, 3, -1}}); }
inline oracle::Brackets iwasawa_brackets() {
  return oracle::brackets(6, {{0, 2, 4, -1}, {3, 1, 4, -1}, {0, 3, 5, -1}, {1, 2, 5, -1}});
}

}  // namespace support

#endif  // GCX_TESTS_SUPPORT_HPP
