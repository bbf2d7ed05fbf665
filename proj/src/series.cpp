#include "interp/series.hpp"

namespace interp {

std::string param_of(const SeriesP& a) {
  for (const auto& c : a.coeffs())
    if (!c.is_constant() && !c.param().empty()) return c.param();
  return "";
}

namespace presets {

SeriesQ one(int order) { return SeriesQ::constant(Rat(1), order); }

SeriesQ id(int order) { return SeriesQ::monomial(Rat(1), 1, order); }

SeriesQ geom(int order) { return SeriesQ(0, std::vector<Rat>(static_cast<std::size_t>(order + 1), Rat(1))); }

SeriesQ expx(int order) {
  std::vector<Rat> c;
  Rat f = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f /= k;
    c.push_back(f);
  }
  return SeriesQ(0, std::move(c));
}

SeriesQ xe(int order) {
  std::vector<Rat> c(static_cast<std::size_t>(order + 1), Rat(1));
  c[0] = 0;
  return SeriesQ(0, std::move(c));
}

SeriesQ xsq(int order) {
  std::vector<Rat> c{0, 1, 1};
  c.resize(static_cast<std::size_t>(std::max(order + 1, 0)));
  return SeriesQ(0, std::move(c), order);
}

}  // namespace presets
}  // namespace interp
