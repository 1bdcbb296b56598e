// Dominant weights of Spin(m), the Spin(n+1) -> Spin(n) branching predicate,
// and the K-type identifiers used throughout the spectral machinery.

#pragma once

#include "spinspec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinspec {

enum class ParityClass { integral, half_odd };

// A highest weight: entries all integers or all half-odd integers. Mixed
// parity cannot be constructed; the class stores its parity class.
class DominantWeight {
 public:
  // Throws std::invalid_argument on an empty or mixed-parity entry list.
  explicit DominantWeight(std::vector<HalfInt> entries);

  const std::vector<HalfInt>& entries() const { return entries_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  ParityClass parity() const { return parity_; }

  std::string str() const;                      // "(3/2, 3/2, -1/2)"
  std::vector<std::string> serialize() const;   // ["3/2", "3/2", "-1/2"]

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<HalfInt> entries_;
  ParityClass parity_;
};

// Dominance condition for the stated parity of the group dimension:
//   odd  Spin(m):  w1 >= ... >= wl >= 0
//   even Spin(m):  w1 >= ... >= w(l-1) >= |wl|
bool is_dominant(const DominantWeight& w, bool group_is_odd_spin);

// Classical branching Spin(n+1) -> Spin(n): alpha restricted to Spin(n)
// contains lambda iff alpha_1 - lambda_1 is an integer and the interlacing
// chain for the parity of n holds. Ranks must match n (alpha has the rank of
// Spin(n+1), lambda that of Spin(n)); both weights must be dominant.
// Violations throw std::invalid_argument.
bool branches(const DominantWeight& alpha, const DominantWeight& lambda,
              int n);

// Identifier of an isotypic K-type summand on the sphere S^n: V_eps(j) when
// k = 0, V_eps(j, q) when k >= 1.
struct KTypeId {
  int n = 3;
  int k = 0;
  int j = 0;
  std::optional<int> q;  // engaged exactly when k >= 1
  int eps = +1;

  std::string str() const;
};

bool operator==(const KTypeId& a, const KTypeId& b);
inline bool operator!=(const KTypeId& a, const KTypeId& b) {
  return !(a == b);
}
// Orders by (n, k, j, q, eps) with eps = +1 first; matches enumeration order.
bool operator<(const KTypeId& a, const KTypeId& b);

// Throws std::invalid_argument unless n is odd and >= 3, 0 <= k <= (n-1)/2,
// j >= 0, eps is +-1, and q is 0/1 exactly when k >= 1.
void validate_ktype(const KTypeId& id);

// The Spin(n+1) highest weight of the K-type. Dominant by construction and
// branching onto the bundle weight below.
DominantWeight make_ktype_weight(const KTypeId& id);

// Spin(n) weight of the bundle carrying the section space: k leading 3/2
// entries, then 1/2 entries (the spinor weight when k = 0).
DominantWeight bundle_weight(int n, int k);

}  // namespace spinspec
