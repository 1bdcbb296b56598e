#include "spinspec/weights.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace spinspec {

DominantWeight::DominantWeight(std::vector<HalfInt> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw std::invalid_argument("weight must have at least one entry");
  }
  bool integral = entries_.front().is_integer();
  for (const HalfInt& e : entries_) {
    if (e.is_integer() != integral) {
      throw std::invalid_argument("mixed-parity weight entries: " + str());
    }
  }
  parity_ = integral ? ParityClass::integral : ParityClass::half_odd;
}

std::string DominantWeight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].str();
  }
  os << ")";
  return os.str();
}

std::vector<std::string> DominantWeight::serialize() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const HalfInt& e : entries_) out.push_back(e.str());
  return out;
}

bool is_dominant(const DominantWeight& w, bool group_is_odd_spin) {
  const auto& e = w.entries();
  int l = w.rank();
  for (int i = 0; i + 1 < l; ++i) {
    // For the even rule, the last link is checked against |wl| below.
    const HalfInt& next = (i + 2 == l && !group_is_odd_spin)
                              ? e[i + 1].abs()
                              : e[i + 1];
    if (e[i] < next) return false;
  }
  if (group_is_odd_spin) {
    if (e[l - 1] < HalfInt(0)) return false;
  } else if (l == 1) {
    return true;  // a single entry of any sign is dominant for even Spin
  }
  return true;
}

bool branches(const DominantWeight& alpha, const DominantWeight& lambda,
              int n) {
  if (n < 2) throw std::invalid_argument("branching needs n >= 2");
  const bool n_odd = (n % 2 != 0);
  const int lambda_rank = n / 2;
  const int alpha_rank = (n + 1) / 2;
  if (alpha.rank() != alpha_rank || lambda.rank() != lambda_rank) {
    throw std::invalid_argument(
        "rank mismatch: alpha " + alpha.str() + " must have rank " +
        std::to_string(alpha_rank) + " and lambda " + lambda.str() +
        " rank " + std::to_string(lambda_rank) + " for n = " +
        std::to_string(n));
  }
  if (!is_dominant(alpha, n_odd ? false : true) ||
      !is_dominant(lambda, n_odd)) {
    throw std::invalid_argument("branching requires dominant weights");
  }
  if (alpha.parity() != lambda.parity()) return false;  // alpha1 - lambda1 not in Z

  const auto& a = alpha.entries();
  const auto& m = lambda.entries();
  if (n_odd) {
    // a1 >= m1 >= a2 >= ... >= ml >= |a(l+1)|
    const int l = lambda_rank;
    for (int i = 0; i < l; ++i) {
      if (a[i] < m[i]) return false;
      const HalfInt next = (i + 1 == l) ? a[i + 1].abs() : a[i + 1];
      if (m[i] < next) return false;
    }
    return true;
  }
  // n even: a1 >= m1 >= a2 >= ... >= m(l-1) >= al >= |ml|
  const int l = lambda_rank;
  for (int i = 0; i + 1 < l; ++i) {
    if (a[i] < m[i]) return false;
    if (m[i] < a[i + 1]) return false;
  }
  return a[l - 1] >= m[l - 1].abs();
}

std::string KTypeId::str() const {
  std::ostringstream os;
  os << "V" << (eps > 0 ? "+" : "-") << "(" << j;
  if (q) os << "," << *q;
  os << ")";
  return os.str();
}

bool operator==(const KTypeId& a, const KTypeId& b) {
  return a.n == b.n && a.k == b.k && a.j == b.j && a.q == b.q &&
         a.eps == b.eps;
}

bool operator<(const KTypeId& a, const KTypeId& b) {
  auto key = [](const KTypeId& id) {
    return std::tuple(id.n, id.k, id.j, id.q.value_or(0), id.eps > 0 ? 0 : 1);
  };
  return key(a) < key(b);
}

void validate_ktype(const KTypeId& id) {
  if (id.n < 3 || id.n % 2 == 0) {
    throw std::invalid_argument("n must be odd and >= 3, got " +
                                std::to_string(id.n));
  }
  if (id.k < 0 || id.k > (id.n - 1) / 2) {
    throw std::invalid_argument("k must satisfy 0 <= k <= (n-1)/2, got k = " +
                                std::to_string(id.k) + " for n = " +
                                std::to_string(id.n));
  }
  if (id.j < 0) throw std::invalid_argument("j must be >= 0");
  if (id.eps != 1 && id.eps != -1) {
    throw std::invalid_argument("eps must be +1 or -1");
  }
  if (id.k == 0) {
    if (id.q) throw std::invalid_argument("q is not defined for k = 0");
  } else {
    if (!id.q || (*id.q != 0 && *id.q != 1)) {
      throw std::invalid_argument("q must be 0 or 1 for k >= 1");
    }
  }
}

DominantWeight make_ktype_weight(const KTypeId& id) {
  validate_ktype(id);
  const int rank = (id.n + 1) / 2;
  std::vector<HalfInt> e;
  e.reserve(rank);
  const HalfInt half = HalfInt::from_twice(1);
  const HalfInt three_half = HalfInt::from_twice(3);
  if (id.k == 0) {
    // (1/2 + j, 1/2, ..., 1/2, eps/2)
    e.push_back(half + HalfInt(id.j));
    for (int i = 1; i + 1 < rank; ++i) e.push_back(half);
    e.push_back(HalfInt::from_twice(id.eps));
  } else if (id.k < (id.n - 1) / 2) {
    // (3/2 + j, 3/2 x(k-1), 1/2 + q, 1/2 ..., eps/2)
    e.push_back(three_half + HalfInt(id.j));
    for (int i = 0; i < id.k - 1; ++i) e.push_back(three_half);
    e.push_back(half + HalfInt(*id.q));
    const int fill = rank - id.k - 2;
    for (int i = 0; i < fill; ++i) e.push_back(half);
    e.push_back(HalfInt::from_twice(id.eps));
  } else {
    // k = (n-1)/2: (3/2 + j, 3/2 x(k-1), eps * (1/2 + q))
    e.push_back(three_half + HalfInt(id.j));
    for (int i = 0; i < id.k - 1; ++i) e.push_back(three_half);
    HalfInt last = half + HalfInt(*id.q);
    e.push_back(id.eps > 0 ? last : -last);
  }
  return DominantWeight(std::move(e));
}

DominantWeight bundle_weight(int n, int k) {
  if (n < 3 || n % 2 == 0 || k < 0 || k > (n - 1) / 2) {
    throw std::invalid_argument("bundle_weight needs odd n >= 3 and 0 <= k <= (n-1)/2");
  }
  const int rank = (n - 1) / 2;
  std::vector<HalfInt> e;
  e.reserve(rank);
  for (int i = 0; i < k; ++i) e.push_back(HalfInt::from_twice(3));
  for (int i = k; i < rank; ++i) e.push_back(HalfInt::from_twice(1));
  return DominantWeight(std::move(e));
}

}  // namespace spinspec
