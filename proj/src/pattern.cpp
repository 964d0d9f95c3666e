#include "homsim/pattern.hpp"

namespace homsim {

std::vector<double> InterferencePattern::normalized() const {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / baseline;
  return out;
}

}  // namespace homsim
