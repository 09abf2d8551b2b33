#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace morsepoly {

// A permutation a_1..a_n of 1..n; a_i is the rank of the i-th critical value.
using Passport = std::vector<int>;

// Reason a sequence is not a PAP, or nullopt if it is one.
std::optional<std::string> pap_violation(const std::vector<int>& seq);
bool is_pap(const std::vector<int>& seq);

bool is_permutation_of_1n(const std::vector<int>& seq);
bool is_alternating(const std::vector<int>& seq);

inline int level(const Passport& p) { return p.front(); }

// Admissible first elements k for extend(p, k).
std::pair<int, int> extension_range(const Passport& p);
Passport extend(const Passport& p, int k);
Passport delete_first(const Passport& p);

// All PAPs of order n, lexicographic.
std::vector<Passport> enumerate(int n);

// s(n, m): PAPs of order n and level m.
std::uint64_t count(int n, int m);
std::vector<std::vector<std::uint64_t>> euler_bernoulli_triangle(int rows);

// 1-based index in the lexicographic list of order-5 PAPs, or 0.
int order5_number(const Passport& p);

std::string format_passport(const Passport& p, char sep = ',');
Passport parse_passport(const std::string& text);

}  // namespace morsepoly
