#pragma once

#include <string>
#include <vector>

#include "opaque/measures.hpp"
#include "opaque/weak_barrier.hpp"

namespace opaque {

// Bounded-Lipschitz distance between finite discrete measures on the sphere,
// exact via a linear program over the union of supports: the point values of
// an admissible f extend to the sphere with the same sup and Lipschitz
// constants.
double bounded_lipschitz_distance(const DirectionalMeasure& mu,
                                  const DirectionalMeasure& nu);

struct DlpBound {
  double value = 0.0;
  bool applicable = false;
  std::string reason;
};

// Levy-Prokhorov upper bound (1 + sqrt(3 + mass(mu))) * d_bL^(1/2); flagged
// non-applicable when d_bL > 1 or mass(mu) = 0.
DlpBound levy_prokhorov_upper_bound(const DirectionalMeasure& mu,
                                    const DirectionalMeasure& nu);

// Total weight of atoms whose angle to every v in V exceeds beta.
// Requires 0 < beta < pi/4 and V closed under antipodes.
double jbeta_mass(const DirectionalMeasure& m, const std::vector<Vec3>& V, double beta);

// f(u) = 1 - max_i ((<u_i, u> - cos beta)^+ / (1 - cos beta)): vanishes on V,
// equals 1 on J_beta, and has bL-norm at most 2 / (1 - cos beta).
double corollary_witness_function(const std::vector<Vec3>& V, double beta, const Vec3& u);

// 2(n+1) / (n^2 (n+4)) - eps.
double stability_exponent(int n, double eps);

struct BetaRow {
  double beta;
  double jbeta;          // S*(B, J_beta)
  double steinerb_rhs;   // 2 delta / (1 - cos beta)
  double chain_rhs;      // 2 d_bL / (1 - cos beta)
};

struct StabilityReport {
  int dim = 2;
  double eps = 0.0;
  double deficit = 0.0;      // S(B) - S(boundary K)/2
  double dbl = 0.0;          // d_bL(S(nabla K, .), S*(B, .))
  double exponent = 0.0;
  double ratio = 0.0;        // dbl / deficit^exponent; inf or NaN in edge cases
  bool equality_case = false;
  double inradius_K = 0.0;
  double barrier_area = 0.0;
  double blaschke_inradius = 0.0;
  double blaschke_surface_area = 0.0;
  std::vector<BetaRow> beta_table;
};

// Requires is_weak_barrier(B, K) == True (throws InvalidDataError otherwise).
StabilityReport stability_report(const Barrier& B, const Polytope& K, double eps);

struct LemmaCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = false;
};

// sup-distance of support functions of nested origin-symmetric bodies against
// c_n w(K)^(1-1/n) (w(K)-w(K'))^(1/n) with the explicit proof constants
// c_2 = pi/sqrt(2), c_3 = 24^(1/3).
LemmaCheck lemma1_check(const Polytope& Kprime, const Polytope& K);

// L2-distance against (omega_n c_n / 2) w(K)^(1-1/n) (w(K)-w(K'))^(1+1/n).
LemmaCheck lemma3_check(const Polytope& Kprime, const Polytope& K);

}  // namespace opaque
