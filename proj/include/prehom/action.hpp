#pragma once

#include "prehom/hassett.hpp"
#include "prehom/prehomogeneous.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prehom {

/// Action of G_m^r x G_a^s on n-space, x -> components(l, a, x), with the group law
/// (l, a)(m, b) = (l*m, a + b). Variables are l1..lr, a1..as, x1..xn in that order.
struct PolynomialAction {
  std::size_t r = 0, s = 0, n = 0;
  Variables variables;
  std::vector<Polynomial> components;
  std::string name;

  std::size_t param_count() const { return r + s; }
};

/// Variable list l1..lr, a1..as, x1..xn.
Variables action_variables(std::size_t r, std::size_t s, std::size_t n);
/// Parses component strings over action_variables(r, s, n).
PolynomialAction make_action(std::size_t r, std::size_t s, std::size_t n,
                             const std::vector<std::string>& components, std::string name = "custom");

/// Identity and composition laws, checked symbolically.
bool verify_action(const PolynomialAction& act);
/// Every component homogeneous of degree one in x.
bool is_linear(const PolynomialAction& act);

enum class FixedPoint { yes, no, unknown };
std::string to_string(FixedPoint f);

/// Decided only when the coefficient system of act(g, x) - x is linear in x.
FixedPoint has_fixed_point(const PolynomialAction& act);

/// Rank of the parameter Jacobian at the identity and point v.
std::size_t orbit_rank(const PolynomialAction& act, const Vector& v);

/// act(g, v) at numeric parameters (torus values first).
Vector apply_action(const PolynomialAction& act, const Vector& params, const Vector& v);

PolynomialAction translations(std::size_t n);
PolynomialAction hirzebruch(unsigned d);
/// (v, w) -> (l v + l A w, l w) on 2n-space, A an n x n matrix of additive parameters.
PolynomialAction polex(std::size_t n);
PolynomialAction scalar(std::size_t n);
PolynomialAction from_rep(const ParamMatrixRep& rep, std::string name = "rep");
PolynomialAction table_rep(int k);

/// Dispatch by name; params are "n", "d" or "k". Throws std::invalid_argument.
PolynomialAction builtin(const std::string& name, const std::map<std::string, long>& params);

/// Lie algebra of a linear action: Jacobian matrices at the identity, one per parameter.
MatrixGroupInput linear_lie_algebra(const PolynomialAction& act);

struct ActionReport {
  bool axioms_ok = false;
  bool linear = false;
  FixedPoint fixed_point = FixedPoint::unknown;
  std::size_t orbit_rank_at_witness = 0;
  Vector witness;
};

/// Witness: up to five seeded points, stopping at full rank min(n, r + s).
ActionReport analyze(const PolynomialAction& act, std::uint64_t seed = 0);

}  // namespace prehom
