#pragma once

#include <map>
#include <string>
#include <vector>

#include "crit/intmat.hpp"

namespace crit {

/// Finite abelian group in invariant-factor canonical form: a divisibility
/// chain d1 | d2 | ... with every d >= 2.  The empty chain is the trivial
/// group.  Canonicalization uses gcd/lcm smoothing, so building a group and
/// comparing groups never requires factoring.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  // Canonicalizes an arbitrary list of cyclic factors; 1s are dropped.
  static AbelianGroup from_factors(std::vector<Int> factors);

  const std::vector<Int>& invariant_factors() const { return inv_; }
  bool trivial() const { return inv_.empty(); }
  Int order() const;

  // Multiset of prime powers p^e whose direct sum is this group.
  std::vector<Int> elementary_divisors() const;

  bool operator==(const AbelianGroup& o) const { return inv_ == o.inv_; }

  std::string str() const;  // e.g. "Z/4 x Z/4 x Z/16", "trivial"

 private:
  std::vector<Int> inv_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);
AbelianGroup cyclic(const Int& n);
AbelianGroup cyclic_power(const Int& n, int e);  // (Z/n)^e

bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b);

/// p-Sylow subgroup: keeps exactly the p-power elementary divisors.
AbelianGroup p_sylow(const AbelianGroup& a, const Int& p);

/// Part of the group at primes not dividing m.
AbelianGroup prime_to_part(const AbelianGroup& a, const Int& m);

/// |A_p| = |B_p| for all primes p, and A_p ~ B_p for all p not dividing m.
bool m_equivalent(const AbelianGroup& a, const AbelianGroup& b, const Int& m);

/// Solves C + B ~ A (direct sum) by elementary-divisor multiset difference.
/// Throws std::domain_error when B is not a direct summand of A; callers
/// treat that as a theorem violation upstream.
AbelianGroup subtract_summand(const AbelianGroup& a, const AbelianGroup& b);

/// Prime factorization, trial division then Pollard rho for large cofactors.
std::map<Int, int> factorize(Int n);

bool is_prime(const Int& n);

/// Group with the given invariant factors of a matrix' Smith form, 1s dropped.
AbelianGroup group_from_snf(const std::vector<Int>& diag);

}  // namespace crit
