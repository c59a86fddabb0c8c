#include "jordanaff/composition.hpp"

namespace jordanaff {

CDSignature::CDSignature(std::vector<int> g) : gammas(std::move(g)) {
  if (gammas.size() > 3)
    throw AlgebraError(ErrorKind::kInvalidArgument, "CDSignature: at most 3 doublings are supported");
  for (int s : gammas)
    if (s != 1 && s != -1) throw AlgebraError(ErrorKind::kInvalidArgument, "CDSignature: gammas must be +1 or -1");
}

std::string CDSignature::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (i) s += ",";
    s += gammas[i] > 0 ? "+1" : "-1";
  }
  return s + ")";
}

}  // namespace jordanaff
