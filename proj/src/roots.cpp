#include "morsepoly/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsepoly {

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of zero polynomial");
  chain_.push_back(p);
  Polynomial d = derivative(p);
  if (d.is_zero()) return;
  chain_.push_back(d);
  // Positive rescaling keeps the signs and the numbers small.
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    Polynomial r = divide(a, b).second;
    if (r.is_zero()) break;
    r = r * Rational(-1 / abs_value(r.leading()));
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& f : chain_) s.push_back(sign(eval(f, x)));
  return count_changes(s);
}

int SturmSequence::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& f : chain_) s.push_back(f.degree() % 2 == 0 ? sign(f.leading()) : -sign(f.leading()));
  return count_changes(s);
}

int SturmSequence::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& f : chain_) s.push_back(sign(f.leading()));
  return count_changes(s);
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  auto c = p.coefficients();
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs_value(c[i] / p.leading()));
  return 1 + m;
}

namespace {

// Roots of square-free f inside (lo, hi], appended to out.
void isolate_in(const Polynomial& f, const SturmSequence& st, Rational lo, Rational hi, int n,
                int multiplicity, std::vector<IsolatedRoot>& out) {
  if (n <= 0) return;
  if (n == 1) {
    if (eval(f, hi) == 0) {
      out.push_back({hi, hi, multiplicity});
      return;
    }
    IsolatedRoot r{lo, hi, multiplicity};
    while (eval(f, r.lower) == 0) {
      Rational m = r.midpoint();
      if (eval(f, m) == 0) {
        out.push_back({m, m, multiplicity});
        return;
      }
      if (st.count(r.lower, m) == 1)
        r.upper = m;
      else
        r.lower = m;
    }
    out.push_back(r);
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = st.count(lo, mid);
  isolate_in(f, st, lo, mid, left, multiplicity, out);
  isolate_in(f, st, mid, hi, n - left, multiplicity, out);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots of zero polynomial");
  std::vector<IsolatedRoot> out;
  auto factors = squarefree_decomposition(p);
  std::vector<std::pair<Polynomial, std::size_t>> owner;  // square-free factor per root
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Polynomial& f = factors[i];
    if (f.degree() <= 0) continue;
    SturmSequence st(f);
    const Rational bound = cauchy_bound(f);
    const std::size_t before = out.size();
    isolate_in(f, st, -bound, bound, st.count(-bound, bound), static_cast<int>(i + 1), out);
    for (std::size_t k = before; k < out.size(); ++k) owner.emplace_back(f, k);
  }
  // Roots of different factors are distinct; shrink until the intervals separate.
  auto overlapping = [](const IsolatedRoot& a, const IsolatedRoot& b) {
    if (a.exact() && b.exact()) return a.lower == b.lower;
    if (a.exact()) return b.lower < a.lower && a.lower < b.upper;
    if (b.exact()) return a.lower < b.lower && b.lower < a.upper;
    return std::max(a.lower, b.lower) < std::min(a.upper, b.upper);
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (out[i].multiplicity != out[j].multiplicity && overlapping(out[i], out[j])) {
          if (!out[i].exact()) bisect_once(owner[i].first, out[i]);
          if (!out[j].exact()) bisect_once(owner[j].first, out[j]);
          changed = true;
        }
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  });
  return out;
}

int count_distinct_real_roots(const Polynomial& p) {
  Polynomial f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  return SturmSequence(f).count_all();
}

int count_distinct_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  Polynomial f = squarefree_part(p);
  if (f.degree() <= 0) return 0;
  return SturmSequence(f).count(a, b);
}

void bisect_once(const Polynomial& f, IsolatedRoot& r) {
  if (r.exact()) return;
  Rational m = r.midpoint();
  int sm = sign(eval(f, m));
  if (sm == 0) {
    r.lower = r.upper = m;
    return;
  }
  if (sm == sign(eval(f, r.lower)))
    r.lower = m;
  else
    r.upper = m;
}

IsolatedRoot refine_root_squarefree(const Polynomial& f, const IsolatedRoot& r, const Rational& width) {
  if (width <= 0) throw std::domain_error("refinement width must be positive");
  IsolatedRoot out = r;
  if (out.exact()) return out;
  int sl = sign(eval(f, out.lower)), su = sign(eval(f, out.upper));
  if (sl == 0 || su == 0 || sl == su) throw std::logic_error("interval does not isolate a root");
  while (!out.exact() && out.width() > width) {
    Rational m = out.midpoint();
    int sm = sign(eval(f, m));
    if (sm == 0) {
      out.lower = out.upper = m;
    } else if (sm == sl) {
      out.lower = m;
    } else {
      out.upper = m;
    }
  }
  return out;
}

IsolatedRoot refine_root(const Polynomial& p, const IsolatedRoot& r, const Rational& width) {
  return refine_root_squarefree(squarefree_part(p), r, width);
}

}  // namespace morsepoly
