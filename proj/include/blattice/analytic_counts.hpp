#pragma once

#include <optional>

#include "blattice/interval.hpp"
#include "blattice/numbers.hpp"
#include "blattice/signed_partition.hpp"

namespace blattice {

struct SeriesOptions {
  long max_terms = 2'000'000;       // term-evaluation budget (boxes included)
  BigRat target_width = BigRat(1, 4);  // final enclosure width to aim for
};

/// A rigorous series evaluation: exact-rational enclosure, the number of terms
/// evaluated, and the recovered integer when the enclosure pins exactly one.
/// The integer is never guessed; a starved budget just leaves it empty.
struct SeriesResult {
  IntervalValue value;
  long terms_used = 0;
  std::optional<BigInt> recovered_integer;
};

/// (1/e) sum_k k^n / k!  — the Bell number B_n.
SeriesResult dobinski(int n, const SeriesOptions& opt = {});

/// (1/sqrt(e)) sum_k (2k+1)^n / (2k)!!  — the Dowling number |Pi_n^B|.
SeriesResult benoumhani_dowling(int n, const SeriesOptions& opt = {});

/// (1/sqrt(e)) sum_j prod_a (2 i0 + 2j + 1)_(i_a) / (2j)!!  — partners of a
/// partition of the given shape.
SeriesResult nb_pi_series(const PartitionShape& shape, const SeriesOptions& opt = {});

/// ((2n)!! / ((2 i0)!! (2k)!! sqrt(e))) [x^(n-i0)] sum_j ((1+x)^(2i0+2j+1) - 1)^k / (2j)!!
SeriesResult n2b_series_by(int i0, int k, int n, const SeriesOptions& opt = {});

/// (2^n / e) sum_{k,l} (2kl + k + l)_n / ((2k)!! (2l)!!)
SeriesResult n2b_series(int n, const SeriesOptions& opt = {});

/// (2^n / e^{r/2}) sum over l_1..l_r of (f_r)_n / prod (2 l_t)!!,
/// f_r = (prod (2 l_t + 1) - 1) / 2.
SeriesResult nbr_series(int n, int r, const SeriesOptions& opt = {});

/// (1/sqrt(e)) sum_k (2k)^n / (2k)!!  — zero-block-free count N_n.
SeriesResult nn_series(int n, const SeriesOptions& opt = {});

/// ((2n)!! / ((2k)!! sqrt(e))) [x^n] sum_j ((1+x)^(2j) - 1)^k / (2j)!!
SeriesResult n2d_series_by(int k, int n, const SeriesOptions& opt = {});

/// (2^n / e) sum_{k,l} (2kl)_n / ((2k)!! (2l)!!)
SeriesResult n2d_series(int n, const SeriesOptions& opt = {});

/// (2^n / e^{r/2}) sum over k_1..k_r of (2^{r-1} k_1...k_r)_n / prod (2 k_t)!!
SeriesResult ndr_series(int n, int r, const SeriesOptions& opt = {});

/// (1/e^r) sum over k_1..k_r of (k_1...k_r)_n / prod k_t!
SeriesResult pittel_nar_series(int n, int r, const SeriesOptions& opt = {});

}  // namespace blattice
