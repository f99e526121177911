#include "eislat/matrix.hpp"

#include <sstream>

namespace eislat {

EMat conj(const EMat& m) {
  EMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
  return r;
}

EMat adjoint(const EMat& m) { return conj(m).transpose(); }

EVec conj(const EVec& v) {
  EVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.conj());
  return r;
}

EMat power(const EMat& m, unsigned k) {
  EMat result = EMat::identity(m.rows());
  EMat base = m;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::string to_string(const EVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

std::string to_string(const EMat& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) os << to_string(m.row(i)) << "\n";
  return os.str();
}

}  // namespace eislat
