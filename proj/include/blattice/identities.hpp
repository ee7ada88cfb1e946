#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blattice/numbers.hpp"
#include "blattice/rational_series.hpp"

namespace blattice {

struct IdentityReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;  // one line per mismatch
};

/// Both sides of M_r(e^x - 1) = sum_n B_n^r x^n / n! to the given order,
/// where M_r is the EGF of the r-tuple counts over ordinary partitions.
std::pair<RationalSeries, RationalSeries> canfield_a_sides(int r, int order);
IdentityReport check_canfield_a(int r, int order);

/// Both sides of M_r^D((e^{2x} - 1)/2) = sum_n N_n^r x^n / n!, where M_r^D is
/// the EGF of the zero-block-free r-tuple counts.
std::pair<RationalSeries, RationalSeries> canfield_d_sides(int r, int order);
IdentityReport check_canfield_d(int r, int order);

/// Recovered series integers must equal the Stirling-form exact values for
/// n <= max_n and r in {2, 3}, in both the ordinary and zero-block-free cases.
IdentityReport check_wilf_consistency(int max_n);

/// sum_k C(k, l) (-1)^(k-l) / (2k)!!  =  e^(-1/2) / (2l)!!  within eps.
IdentityReport check_half_e_identity(int l, const BigRat& eps);

/// sum_k S(n, k) x^k  =  e^(-x) sum_k k^n x^k / k!  within eps; x > 0.
IdentityReport check_bell_polynomial_identity(int n, const BigRat& x, const BigRat& eps);

}  // namespace blattice
