#include "morsepoly/interval.hpp"

namespace morsepoly {

Interval eval(const Polynomial& p, const Interval& x) {
  auto c = p.coefficients();
  Interval acc(Rational(0));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

Interval eval_centered(const Polynomial& p, const Polynomial& dp, const Interval& x) {
  const Rational m = x.mid();
  if (x.lo == x.hi) return Interval(eval(p, m));
  const Interval dx(x.lo - m, x.hi - m);
  Interval centered = Interval(eval(p, m)) + eval(dp, x) * dx;
  Interval direct = eval(p, x);
  return {std::max(centered.lo, direct.lo), std::min(centered.hi, direct.hi)};
}

}  // namespace morsepoly
