#include "crit/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crit {

AbelianGroup AbelianGroup::from_factors(std::vector<Int> f) {
  for (const Int& d : f)
    if (d <= 0) throw std::invalid_argument("AbelianGroup: factor must be positive");
  f.erase(std::remove(f.begin(), f.end(), Int(1)), f.end());
  // gcd/lcm smoothing until the list is a divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j) {
        Int g = gcd(f[i], f[j]);
        if (g == f[i] || g == f[j]) continue;
        Int l = f[i] / g * f[j];
        f[i] = g;
        f[j] = l;
        changed = true;
      }
  }
  f.erase(std::remove(f.begin(), f.end(), Int(1)), f.end());
  std::sort(f.begin(), f.end());
  AbelianGroup a;
  a.inv_ = std::move(f);
  return a;
}

Int AbelianGroup::order() const {
  Int o = 1;
  for (const Int& d : inv_) o *= d;
  return o;
}

std::vector<Int> AbelianGroup::elementary_divisors() const {
  std::vector<Int> out;
  for (const Int& d : inv_)
    for (const auto& [p, e] : factorize(d)) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      out.push_back(pe);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string AbelianGroup::str() const {
  if (inv_.empty()) return "trivial";
  std::ostringstream os;
  for (size_t i = 0; i < inv_.size(); ++i) os << (i ? " x " : "") << "Z/" << inv_[i].get_str();
  return os.str();
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> f = a.invariant_factors();
  const auto& g = b.invariant_factors();
  f.insert(f.end(), g.begin(), g.end());
  return AbelianGroup::from_factors(std::move(f));
}

AbelianGroup cyclic(const Int& n) { return AbelianGroup::from_factors({n}); }

AbelianGroup cyclic_power(const Int& n, int e) {
  std::vector<Int> f(size_t(std::max(e, 0)), n);
  return AbelianGroup::from_factors(std::move(f));
}

bool is_isomorphic(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

AbelianGroup p_sylow(const AbelianGroup& a, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("p_sylow: p is not prime");
  std::vector<Int> f;
  for (const Int& d : a.invariant_factors()) {
    Int pe = 1, rem = d;
    while (rem % p == 0) {
      rem /= p;
      pe *= p;
    }
    if (pe > 1) f.push_back(pe);
  }
  return AbelianGroup::from_factors(std::move(f));
}

AbelianGroup prime_to_part(const AbelianGroup& a, const Int& m) {
  std::vector<Int> f;
  for (const Int& d : a.invariant_factors()) {
    Int rem = d;
    Int g = gcd(rem, m);
    while (g > 1) {
      while (rem % g == 0) rem /= g;
      g = gcd(rem, m);
    }
    if (rem > 1) f.push_back(rem);
  }
  return AbelianGroup::from_factors(std::move(f));
}

bool m_equivalent(const AbelianGroup& a, const AbelianGroup& b, const Int& m) {
  if (m < 1) throw std::invalid_argument("m_equivalent: m must be positive");
  if (a.order() != b.order()) return false;
  std::map<Int, int> fa = factorize(a.order());
  for (const auto& [p, e] : fa) {
    AbelianGroup ap = p_sylow(a, p), bp = p_sylow(b, p);
    if (ap.order() != bp.order()) return false;
    if (m % p != 0 && !(ap == bp)) return false;
  }
  return true;
}

AbelianGroup subtract_summand(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> ea = a.elementary_divisors();
  for (const Int& d : b.elementary_divisors()) {
    auto it = std::find(ea.begin(), ea.end(), d);
    if (it == ea.end())
      throw std::domain_error("subtract_summand: " + b.str() + " is not a summand of " + a.str());
    ea.erase(it);
  }
  return AbelianGroup::from_factors(std::move(ea));
}

AbelianGroup group_from_snf(const std::vector<Int>& diag) {
  std::vector<Int> f;
  for (const Int& d : diag)
    if (d > 1) f.push_back(d);
  // a Smith diagonal is already a divisibility chain
  AbelianGroup g = AbelianGroup::from_factors(std::move(f));
  return g;
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b97f4a7c15ULL);
  for (;;) {
    Int c = rng.get_z_range(n - 3) + 1;
    Int x = rng.get_z_range(n - 2) + 2, y = x, d = 1;
    auto step = [&](const Int& v) { return Int((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Int, int> factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize: need a positive integer");
  std::map<Int, int> out;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  Int p = 41;
  while (p * p <= n && p < 100000) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
    p += 2;
  }
  factor_into(n, out);
  return out;
}

}  // namespace crit
