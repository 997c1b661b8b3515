#ifndef PADLIFT_WEIGHTS_HPP_
#define PADLIFT_WEIGHTS_HPP_

#include <optional>
#include <vector>

#include "padlift/bigint.hpp"

namespace padlift {

/// Nonnegative integer weights a_0..a_{d-1} indexed by Z/dZ, encoding the
/// map f = sum a_h * h over the Galois group of the unramified degree-d
/// extension.
struct WeightVector {
  long long d = 0;
  std::vector<Int> a;
};

/// Validates d = a.size() >= 2 and a_i >= 0.
WeightVector make_weights(std::vector<Int> a);

/// Determinant of the d x d circulant with first row (a_0 .. a_{d-1}) and
/// row i the right-rotation by i, computed by fraction-free elimination and
/// cross-checked internally against the eigenvalue product
/// prod_j sum_i zeta_d^{ij} a_i.
Int circulant_det(const WeightVector& w);

/// The same determinant through the eigenvalue product, evaluated exactly
/// in Z[x]/(Phi_d(x)); no floating-point roots of unity.
Int eigenvalue_product(const WeightVector& w);

/// Coefficients of the d-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_poly(long long d);

/// Image classification of f for prime d: {0}, the Q_p-line spanned by the
/// trace, or all of K.
enum class WeightClass { ZeroMap, TraceLine, Bijective };

const char* weight_class_name(WeightClass c);

/// For prime d the image of f is {0} iff all weights vanish, the trace
/// line iff they are all equal and nonzero, and everything else is
/// bijective (nonzero circulant determinant). Throws DNotPrime otherwise.
WeightClass classify_weights(const WeightVector& w);

/// Smallest vector in lexicographic order (a_0 most significant) with
/// entries in [0, bound], not all equal, whose weight polynomial
/// A(x) = sum a_i x^i is divisible by Phi_d — i.e. the primitive-root
/// eigenvalue block vanishes even though the weights are nonconstant.
/// For prime d this never happens (hence None); composite d admits
/// examples such as (0,1,0,1) for d = 4.
std::optional<WeightVector> search_singular_nonconstant(long long d,
                                                        long long bound);

}  // namespace padlift

#endif  // PADLIFT_WEIGHTS_HPP_
