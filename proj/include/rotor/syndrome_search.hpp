#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rotor/int_matrix.hpp"

namespace rotor {

using SmallVec = std::vector<std::int64_t>;

enum class SearchMode {
  Integer,  // any integer entries, weight = sum |v_j|
  Ternary,  // entries in {-1, 0, 1}, weight = support size
  ModL,     // entries in Z_l, weight = Hamming weight, syndrome taken mod l
};

// Depth-first enumeration of vectors v with checks * v^T = 0 (mod l in
// ModL mode) and an exact weight. Columns are visited in an order that
// closes check rows early so partial syndromes can be pruned.
struct SearchProblem {
  IntMatrix checks;  // r x n
  SearchMode mode = SearchMode::Integer;
  long modulus = 0;  // ModL only
  // Accept predicate on a zero-syndrome vector, in original coordinates.
  // Must be safe to call from several threads.
  std::function<bool(const SmallVec&)> accept;
  // When true, accept(v) == accept(-v) and only one sign is tested.
  bool symmetric_accept = true;
  std::vector<bool> allowed;  // optional support mask
  unsigned jobs = 1;
  std::uint64_t max_nodes = 0;  // 0 means unlimited
};

struct ShellResult {
  bool found = false;
  bool exhausted = true;  // false if the node limit stopped the shell early
  SmallVec witness;       // lexicographically smallest accepted vector
  std::uint64_t hits = 0; // accepted vectors counted (both signs)
  std::uint64_t nodes = 0;
};

ShellResult search_shell(const SearchProblem& p, long weight);

struct MinimumResult {
  std::optional<long> weight;
  SmallVec witness;
  bool exhausted = true;
  std::uint64_t nodes = 0;
};

// Smallest weight in [1, max_weight] with an accepted vector.
MinimumResult search_minimum(const SearchProblem& p, long max_weight);

// Calls `visit` on every accepted vector of exactly `weight` (single
// threaded; both signs are reported). Stops early if visit returns false.
void enumerate_shell(const SearchProblem& p, long weight, const std::function<bool(const SmallVec&)>& visit);

bool lex_less(const SmallVec& a, const SmallVec& b);

}  // namespace rotor
