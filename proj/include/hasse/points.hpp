#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hasse/numeric.hpp"

namespace hasse {

// canonical representative of a point of P^n(Q): coprime integer coordinates,
// first nonzero one positive
struct ProjPointQ {
  std::vector<long> x;
  long height() const;
  std::string str() const;
};

// Visit every canonical point of height <= B exactly once, in a fixed order
// (leading-zero count descending, then odometer order on the tail). nparts/
// part filter by the residue class of the literal first coordinate, so the
// partitions are disjoint and cover everything.
void visit_points(int n, long B, const std::function<void(const std::vector<long>&)>& fn);
void visit_points_partition(int n, long B, int nparts, int part,
                            const std::function<void(const std::vector<long>&)>& fn);

std::vector<ProjPointQ> enumerate_points(int n, long B);

// #P^n(Q) of height <= B by Mobius inversion over common divisors:
// (1/2) * sum_k mu(k) ((2 floor(B/k) + 1)^{n+1} - 1)
long long count_points(int n, long B);

}  // namespace hasse
