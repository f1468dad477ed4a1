#include "alexmod/artinian.hpp"

#include "alexmod/errors.hpp"

#include <cstdlib>
#include <string>

namespace alexmod {

ArtinianModule ArtinianModule::zero(std::size_t nvars) {
  ArtinianModule m;
  m.nvars = nvars;
  m.dim = 0;
  m.ops.assign(nvars, QMatrix(0, 0));
  return m;
}

void ArtinianModule::validate() const {
  if (ops.size() != nvars)
    throw InputError("Artinian module needs " + std::to_string(nvars) + " operators, got " +
                     std::to_string(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].rows() != dim || ops[i].cols() != dim)
      throw InputError("operator t" + std::to_string(i + 1) + " has wrong shape");
    if (dim > 0 && !inverse(ops[i])) throw InputError("operator t" + std::to_string(i + 1) + " is not invertible");
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!commute(ops[i], ops[j]))
        throw InputError("operators t" + std::to_string(i + 1) + " and t" + std::to_string(j + 1) + " do not commute");
}

QMatrix ArtinianModule::word_operator(const std::vector<int>& word) const {
  QMatrix r = QMatrix::identity(dim);
  for (int w : word) {
    const auto idx = static_cast<std::size_t>(std::abs(w));
    if (w == 0 || idx > nvars) throw InputError("word letter " + std::to_string(w) + " out of range");
    r = r * (w > 0 ? ops[idx - 1] : inverse_or_throw(ops[idx - 1], "operator"));
  }
  return r;
}

ArtinianModule ArtinianModule::inverted() const {
  ArtinianModule m = *this;
  for (auto& op : m.ops) op = dim == 0 ? op : inverse_or_throw(op, "operator");
  return m;
}

} // namespace alexmod
