#include "prehom/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace prehom::univariate {

UPoly trim(UPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const UPoly& p) { return static_cast<int>(trim(p).size()) - 1; }

Rational evaluate(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return trim(d);
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly r = trim(a);
  UPoly d = trim(b);
  if (d.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (r.size() < d.size()) return {UPoly{}, r};
  UPoly q(r.size() - d.size() + 1);
  while (!r.empty() && r.size() >= d.size()) {
    std::size_t shift = r.size() - d.size();
    Rational c = r.back() / d.back();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r = trim(r);
  }
  return {trim(q), r};
}

UPoly gcd(UPoly a, UPoly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

UPoly squarefree_part(const UPoly& p) {
  UPoly t = trim(p);
  if (t.size() <= 1) return t;
  UPoly g = gcd(t, derivative(t));
  UPoly q = divmod(t, g).first;
  Rational lead = q.back();
  for (auto& c : q) c /= lead;
  return q;
}

namespace {

int sign(const Rational& x) { return sgn(x); }

std::size_t variations(const std::vector<UPoly>& sturm, const Rational& x) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& s : sturm) {
    int v = sign(evaluate(s, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

Integer round_nearest(const Rational& x) {
  Rational shifted = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

}  // namespace

RationalRoots rational_roots(const UPoly& squarefree) {
  UPoly p = trim(squarefree);
  int d = degree(p);
  if (d < 1) throw std::invalid_argument("rational_roots needs positive degree");

  // Primitive integer multiple: scale by the lcm of denominators, divide by content.
  Integer den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : p) {
    Rational scaled = c * den_lcm;
    ints.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Integer lead = abs(ints.back() / content);

  std::vector<UPoly> sturm{p, derivative(p)};
  while (degree(sturm.back()) > 0) {
    UPoly r = divmod(sturm[sturm.size() - 2], sturm.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    sturm.push_back(std::move(r));
  }

  Rational bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, Rational(abs(p[static_cast<std::size_t>(i)] / p.back())));
  bound += 1;

  const Rational target_width = Rational(1) / (2 * Rational(lead));
  RationalRoots out{{}, true};
  std::size_t real_roots = 0;

  struct Interval {
    Rational lo, hi;
    std::size_t count;
  };
  std::vector<Interval> work;
  std::size_t total = variations(sturm, -bound) - variations(sturm, bound);
  if (total > 0) work.push_back({-bound, bound, total});
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1 && iv.hi - iv.lo < target_width) {
      ++real_roots;
      Rational mid = (iv.lo + iv.hi) / 2;
      Rational candidate(round_nearest(mid * lead), lead);
      candidate.canonicalize();
      if (candidate > iv.lo && candidate <= iv.hi && evaluate(p, candidate) == 0)
        out.roots.push_back(candidate);
      else
        out.splits = false;
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    std::size_t vlo = variations(sturm, iv.lo), vmid = variations(sturm, mid),
                vhi = variations(sturm, iv.hi);
    work.push_back({mid, iv.hi, vmid - vhi});
    work.push_back({iv.lo, mid, vlo - vmid});
  }
  if (real_roots < static_cast<std::size_t>(d)) out.splits = false;
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace prehom::univariate
