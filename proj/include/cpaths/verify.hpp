#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "cpaths/kostka.hpp"
#include "cpaths/poly.hpp"

namespace cpaths {

struct VerificationReport {
  std::string name;
  std::string params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool has_constant = false;
  long long constant = 0;  // fitted power shift, when applicable
  std::string note;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

// Sum over words of content alpha of q^{maj_mu} vs sum over eta of
// K_{eta,alpha} K_{eta,mu}(q,1).
VerificationReport check_theorem_main(const Composition& alpha,
                                      const Partition& mu);

// Same comparison in both variables: q^{inv_mu} t^{maj_mu} vs
// K_{eta,alpha} Ktilde_{eta,mu}(q,t).
VerificationReport check_qt_expansion(const Composition& alpha,
                                      const Partition& mu);

// q^{-sum_{i>=2} alpha_i} sum q^{tau_mu} vs K_{eta,alpha}
// Ktilde_{eta,mu}(q,1). Report-only conjecture.
VerificationReport check_conjecture_main(const Composition& alpha,
                                         const Partition& mu);

// Ktilde_{lambda,mu}(q,t) vs the highest-path filling sum; the note
// records the conjectured validity condition (mu_1<=3 and mu_2<=2) or
// hook(lambda).
VerificationReport check_hhl_kostka(const Partition& lambda,
                                    const Partition& mu);

// Sum over paths of weight lambda of q^{tau^{r,s}} vs
// q^{phi} sum_eta K_{eta,R}(1/q) K_{eta,lambda}, phi fitted from the
// lowest terms.
VerificationReport check_conj_tau(const RectangleSequence& R,
                                  const Partition& lambda, int r, int s,
                                  int jobs = 0);

// Sum over paths of weight lambda of q^{Ebar} vs
// sum_eta K_{eta,R}(q) K_{eta,lambda}.
VerificationReport check_conj_ebar(const RectangleSequence& R,
                                   const Partition& lambda, int jobs = 0);

// Ebar(p) = C - tau^{r,s}(p) with C = sum_{i<j} min min, on every given
// path; requires r >= the largest letter and s >= the widest factor.
VerificationReport check_e_tau(const std::vector<TensorPath>& paths, int r,
                               int s);

// tau(reg(p)) - tau(p) constant over all B^{1,1} paths of weight lambda.
VerificationReport check_regularization(const Partition& lambda);

// sum_eta K_{eta,R1}(1) K_{eta,R2}(q) vs q^C K_{Lambda,(kappa,R2)}(1/q)
// with Lambda, kappa built from R1 and C fitted. Report-only conjecture.
VerificationReport check_conj_genmain(const RectangleSequence& R1,
                                      const RectangleSequence& R2,
                                      int jobs = 0);

// K_{lambda,R}(q) = q^{n(R)} K_{lambda',R'}(1/q) with R' the dominant
// rearrangement of the transposed rectangles.
VerificationReport check_duality(const RectangleSequence& R,
                                 const Partition& lambda, int jobs = 0);

}  // namespace cpaths
