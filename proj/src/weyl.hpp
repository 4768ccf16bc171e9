#pragma once

#include <cstdint>
#include <vector>

#include "error.hpp"

namespace ramlat {

// An element of the hyperoctahedral group of rank m: a permutation of
// {1..m} together with a sign per position, acting on basis vectors by
// e_i -> sign(w(i)) e_{|w(i)|}.  Generators: s_i = (i, i+1) for i < m and
// s_m = sign flip of the last coordinate.
class SignedPermutation {
public:
  // images[i-1] = w(i) as a signed value with |w(i)| in 1..m
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int m);
  // s_i for 1 <= i <= m
  static SignedPermutation simple_reflection(int m, int i);

  int m() const { return static_cast<int>(images_.size()); }
  // signed image of i, 1-based
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  // group product: (w * v) acts as w after v
  SignedPermutation operator*(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  bool operator==(const SignedPermutation& other) const { return images_ == other.images_; }
  bool operator!=(const SignedPermutation& other) const { return images_ != other.images_; }
  bool operator<(const SignedPermutation& other) const { return images_ < other.images_; }

  // number of positive roots (e_i - e_j, e_i + e_j for i < j, and 2e_i)
  // that w sends to negative roots
  int length() const;

private:
  std::vector<int> images_;
};

// s_1 s_2 ... s_m
SignedPermutation coxeter_element(int m);
// w_i = s_{m+1-i} ... s_m for 0 <= i <= m (w_0 = identity)
SignedPermutation stratum_word(int m, int i);
// I_i = {1, ..., m-1-i}, the simple reflections spanning the parabolic
// attached to stratum i
std::vector<int> stratum_parabolic(int m, int i);

// 2^m * m!
std::uint64_t hyperoctahedral_order(int m);

// All lengths realized on the double coset W_I w W_I, computed by breadth
// first closure under left and right multiplication by the generators in I.
// Requires m <= 8.
int max_length_in_double_coset(const std::vector<int>& I, const SignedPermutation& w);

// max length over W_I w W_I minus the length of the longest element of W_I
int dim_DL(const std::vector<int>& I, const SignedPermutation& w);

} // namespace ramlat
