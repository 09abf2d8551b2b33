#include "morsepoly/snakes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace morsepoly {

bool is_permutation_of_1n(const std::vector<int>& seq) {
  std::vector<char> seen(seq.size() + 1, 0);
  for (int v : seq) {
    if (v < 1 || v > static_cast<int>(seq.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_alternating(const std::vector<int>& seq) {
  for (std::size_t i = 0; i + 2 < seq.size(); ++i)
    if ((seq[i] < seq[i + 1]) == (seq[i + 1] < seq[i + 2])) return false;
  return true;
}

// With a monic leading term, the rightmost extremum is a minimum; walking left,
// the first one is a maximum for even n and a minimum for odd n.
std::optional<std::string> pap_violation(const std::vector<int>& seq) {
  if (seq.empty()) return "empty sequence";
  if (!is_permutation_of_1n(seq)) return "not a permutation of 1..n";
  if (!is_alternating(seq)) return "not alternating";
  const std::size_t n = seq.size();
  if (n >= 2) {
    const bool starts_high = seq[0] > seq[1];
    if (n % 2 == 0 && !starts_high) return "not proper: even order must start with a maximum";
    if (n % 2 == 1 && starts_high) return "not proper: odd order must start with a minimum";
  }
  return std::nullopt;
}

bool is_pap(const std::vector<int>& seq) { return !pap_violation(seq); }

std::pair<int, int> extension_range(const Passport& p) {
  const int n = static_cast<int>(p.size());
  if (n % 2 == 0) return {1, level(p)};
  return {level(p) + 1, n + 1};
}

Passport extend(const Passport& p, int k) {
  if (!is_pap(p)) throw std::domain_error("extend: argument is not a PAP");
  auto [lo, hi] = extension_range(p);
  if (k < lo || k > hi)
    throw std::domain_error("extend: k=" + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  Passport out;
  out.reserve(p.size() + 1);
  out.push_back(k);
  for (int v : p) out.push_back(v >= k ? v + 1 : v);
  return out;
}

Passport delete_first(const Passport& p) {
  if (p.size() < 2) throw std::domain_error("delete_first: order must be at least 2");
  const int m = p.front();
  Passport out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] > m ? p[i] - 1 : p[i]);
  return out;
}

std::vector<Passport> enumerate(int n) {
  if (n < 1) throw std::domain_error("enumerate: order must be positive");
  std::vector<Passport> cur{{1}};
  for (int order = 1; order < n; ++order) {
    std::vector<Passport> next;
    for (const auto& p : cur) {
      auto [lo, hi] = extension_range(p);
      for (int k = lo; k <= hi; ++k) next.push_back(extend(p, k));
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

std::vector<std::vector<std::uint64_t>> euler_bernoulli_triangle(int rows) {
  if (rows < 1) throw std::domain_error("triangle needs at least one row");
  std::vector<std::vector<std::uint64_t>> t{{1}};
  for (int n = 1; n < rows; ++n) {
    const auto& prev = t.back();
    std::vector<std::uint64_t> row(n + 1, 0);
    for (int m = 1; m <= n + 1; ++m) {
      std::uint64_t s = 0;
      if (n % 2 == 0) {
        for (int j = m; j <= n; ++j) s += prev[j - 1];
      } else {
        for (int j = 1; j < m; ++j) s += prev[j - 1];
      }
      row[m - 1] = s;
    }
    t.push_back(std::move(row));
  }
  return t;
}

std::uint64_t count(int n, int m) {
  if (n < 1 || m < 1 || m > n) throw std::domain_error("count: need 1 <= m <= n");
  return euler_bernoulli_triangle(n).back()[m - 1];
}

int order5_number(const Passport& p) {
  static const std::vector<Passport> list = enumerate(5);
  auto it = std::find(list.begin(), list.end(), p);
  return it == list.end() ? 0 : static_cast<int>(it - list.begin()) + 1;
}

std::string format_passport(const Passport& p, char sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(p[i]);
  }
  return s;
}

Passport parse_passport(const std::string& text) {
  Passport out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse passport entry '" + item + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw std::invalid_argument("cannot parse passport entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty passport");
  return out;
}

}  // namespace morsepoly
