#include "weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace ramlat {

namespace {

// pack a signed permutation with m <= 8 into 4 bits per position:
// 3 bits for |w(i)| - 1 and one sign bit
std::uint64_t pack(const SignedPermutation& w) {
  std::uint64_t code = 0;
  for (int i = 1; i <= w.m(); ++i) {
    int v = w(i);
    std::uint64_t nib = static_cast<std::uint64_t>(std::abs(v) - 1);
    if (v < 0) nib |= 8;
    code |= nib << (4 * (i - 1));
  }
  return code;
}

SignedPermutation unpack(std::uint64_t code, int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::uint64_t nib = (code >> (4 * i)) & 15;
    int v = static_cast<int>(nib & 7) + 1;
    images[static_cast<std::size_t>(i)] = (nib & 8) ? -v : v;
  }
  return SignedPermutation(images);
}

} // namespace

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  int n = m();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)])
      fail(ErrorKind::InvalidArgument, "not a signed permutation");
    seen[static_cast<std::size_t>(a - 1)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int m) {
  if (m < 0) fail(ErrorKind::InvalidArgument, "negative rank");
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) images[static_cast<std::size_t>(i - 1)] = i;
  return SignedPermutation(images);
}

SignedPermutation SignedPermutation::simple_reflection(int m, int i) {
  if (i < 1 || i > m) fail(ErrorKind::InvalidArgument, "reflection index out of range");
  SignedPermutation w = identity(m);
  if (i < m) {
    std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
  } else {
    w.images_[static_cast<std::size_t>(m - 1)] = -m;
  }
  return w;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& other) const {
  if (m() != other.m()) fail(ErrorKind::InvalidArgument, "rank mismatch in product");
  std::vector<int> images(static_cast<std::size_t>(m()));
  for (int i = 1; i <= m(); ++i) {
    int t = other(i);
    int u = (*this)(std::abs(t));
    images[static_cast<std::size_t>(i - 1)] = t < 0 ? -u : u;
  }
  return SignedPermutation(images);
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> images(static_cast<std::size_t>(m()));
  for (int i = 1; i <= m(); ++i) {
    int t = (*this)(i);
    images[static_cast<std::size_t>(std::abs(t) - 1)] = t < 0 ? -i : i;
  }
  return SignedPermutation(images);
}

int SignedPermutation::length() const {
  // image of e_i - e_j, e_i + e_j, 2e_i under w; a root is negative exactly
  // when its lowest-index coordinate is negative
  int n = m();
  int count = 0;
  auto first_coord_negative = [&](int a, int b) {
    // the vector sign(a) e_{|a|} + sign(b) e_{|b|} with |a| != |b|, or, for
    // b == 0, the vector sign(a) e_{|a|}
    if (b == 0) return a < 0;
    if (std::abs(a) > std::abs(b)) std::swap(a, b);
    return a < 0;
  };
  for (int i = 1; i <= n; ++i) {
    int wi = (*this)(i);
    if (first_coord_negative(wi, 0)) ++count; // image of 2e_i
    for (int j = i + 1; j <= n; ++j) {
      int wj = (*this)(j);
      if (first_coord_negative(wi, -wj)) ++count; // image of e_i - e_j
      if (first_coord_negative(wi, wj)) ++count;  // image of e_i + e_j
    }
  }
  return count;
}

SignedPermutation coxeter_element(int m) {
  SignedPermutation w = SignedPermutation::identity(m);
  for (int i = 1; i <= m; ++i) w = w * SignedPermutation::simple_reflection(m, i);
  return w;
}

SignedPermutation stratum_word(int m, int i) {
  if (i < 0 || i > m) fail(ErrorKind::InvalidArgument, "stratum index out of range");
  SignedPermutation w = SignedPermutation::identity(m);
  for (int t = m + 1 - i; t <= m; ++t) w = w * SignedPermutation::simple_reflection(m, t);
  return w;
}

std::vector<int> stratum_parabolic(int m, int i) {
  if (i < 0 || i > m) fail(ErrorKind::InvalidArgument, "stratum index out of range");
  std::vector<int> I;
  for (int t = 1; t <= m - 1 - i; ++t) I.push_back(t);
  return I;
}

std::uint64_t hyperoctahedral_order(int m) {
  std::uint64_t out = 1;
  for (int i = 1; i <= m; ++i) out *= 2 * static_cast<std::uint64_t>(i);
  return out;
}

int max_length_in_double_coset(const std::vector<int>& I, const SignedPermutation& w) {
  int m = w.m();
  if (m > 8) fail(ErrorKind::GroupTooLarge, "double coset search limited to rank 8");
  for (int i : I)
    if (i < 1 || i > m) fail(ErrorKind::InvalidArgument, "reflection index out of range");

  std::vector<SignedPermutation> gens;
  for (int i : I) gens.push_back(SignedPermutation::simple_reflection(m, i));

  std::unordered_set<std::uint64_t> seen{pack(w)};
  std::vector<std::uint64_t> frontier{pack(w)};
  int best = w.length();
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : frontier) {
      SignedPermutation x = unpack(code, m);
      for (const auto& s : gens) {
        for (const SignedPermutation& y : {s * x, x * s}) {
          std::uint64_t c = pack(y);
          if (seen.insert(c).second) {
            best = std::max(best, y.length());
            next.push_back(c);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return best;
}

int dim_DL(const std::vector<int>& I, const SignedPermutation& w) {
  int coset_max = max_length_in_double_coset(I, w);
  int parabolic_max = max_length_in_double_coset(I, SignedPermutation::identity(w.m()));
  return coset_max - parabolic_max;
}

} // namespace ramlat
