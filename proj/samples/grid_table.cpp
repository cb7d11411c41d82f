// Prints N(P_m x P_n) for the 3- and 4-row grids next to the K_m x P_n totals
// and the general upper bound for m = 5.

#include <iostream>

#include "gridsets/excess_recurrence.hpp"
#include "gridsets/general_bound.hpp"

int main() {
  using namespace gridsets;
  constexpr int kColumns = 10;
  for (int m : {3, 4}) {
    const ExcessRecurrence rec(m, kColumns);
    std::cout << "m = " << m << '\n';
    for (int n = 1; n <= kColumns; ++n)
      std::cout << "  n = " << n << "  N(K_m x P_n) = " << rec.spanning_counts().total(n)
                << "  N(P_m x P_n) = " << rec.grid_total(n) << '\n';
  }
  std::cout << "m = 5 upper bounds\n";
  for (int n = 1; n <= 6; ++n) {
    const BoundResult b = grid_upper_bound(5, n);
    std::cout << "  n = " << n << "  bound = " << b.value << (b.exact_scheme ? "" : "  (excluded cases hit)") << '\n';
  }
}
