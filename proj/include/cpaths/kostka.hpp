#pragma once

#include <map>

#include "cpaths/crystal.hpp"
#include "cpaths/poly.hpp"

namespace cpaths {

// Number of semistandard tableaux of the given shape and content.
long long kostka_number(const Partition& lambda, const Composition& alpha);

// Sum of q^{charge} over SSYT of shape lambda and content mu, charge taken
// on the row reading word (right to left within rows, top to bottom).
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

// Sum of q^{Ebar} over classically highest paths of weight lambda in the
// tensor product of the B^{r_i,s_i}.
QPoly parabolic_kostka(const Partition& lambda, const RectangleSequence& R,
                       int jobs = 0);

// Sum of q^{inv_mu} t^{maj_mu} over words of content alpha.
QTPoly hhl_monomial_gf(const Composition& mu, const Composition& alpha);
// Same sum restricted to Yamanouchi words of content lambda.
QTPoly hhl_highest_gf(const Partition& lambda, const Composition& mu);

// Modified Macdonald polynomials Ktilde_{lambda,mu}(q,t) for all lambda,
// extracted from the monomial generating functions by back-substitution
// through the unitriangular Kostka matrix.
std::map<Partition, QTPoly> kostka_macdonald_all(const Partition& mu);
QTPoly kostka_macdonald(const Partition& lambda, const Partition& mu);
// K_{lambda,mu}(q,t) = t^{n(mu)} Ktilde_{lambda,mu}(q, 1/t).
QTPoly macdonald_kostka(const Partition& lambda, const Partition& mu);

// Sum over pairs a < b of min(r_a,r_b) min(s_a,s_b).
long long n_of_R(const RectangleSequence& R);
// Sort rectangles by width descending, then height descending.
RectangleSequence dominant_rearrangement(const RectangleSequence& R);
// Transpose every rectangle.
RectangleSequence conjugate_rects(const RectangleSequence& R);

}  // namespace cpaths
