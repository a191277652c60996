#include "blochsep/su_basis.hpp"

#include <cmath>

namespace blochsep {

GeneratorSet gell_mann_generators(int d) {
  require(d >= 2, "gell_mann_generators: dimension must be at least 2");
  GeneratorSet set;
  set.dim = d;
  set.generators.reserve(static_cast<std::size_t>(d) * d - 1);

  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = 1.0;
      g(k, j) = 1.0;
      set.generators.push_back(std::move(g));
    }
  }
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix g = ComplexMatrix::Zero(d, d);
      g(j, k) = Complex(0.0, -1.0);
      g(k, j) = Complex(0.0, 1.0);
      set.generators.push_back(std::move(g));
    }
  }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) g(j, j) = scale;
    g(l, l) = -scale * l;
    set.generators.push_back(std::move(g));
  }
  return set;
}

}  // namespace blochsep
