#pragma once
// Integral lattices (L,β) with their shadows and eutactic stars, and the
// product identity that turns a G-extremal star into a theta block:
//
//   η^(n−N) ∏_j ϑ(τ, β(s_j,z))  =  γ Σ_{x ∈ w₀+L_ev} q^β(x) Σ_g sn(g) e(β(gx,z))
//
// verified here as an identity of truncated multivariable series.
//
// Conventions. Lattice vectors are rational row vectors in the coordinates of
// a fixed basis of L, so β(x,y) = x·gram·yᵗ and β(x) = β(x,x)/2 (β(x) need
// not be integral: L is even iff it always is). Isometries act on the right,
// v ↦ v·g; an integer matrix g is an isometry iff g·gram·gᵗ = gram.

#include "tb/matrix.hpp"
#include "tb/rational.hpp"
#include "tb/series.hpp"

#include <map>
#include <optional>

namespace tb {

struct IntegralLattice {
  ZMat gram;

  // Validates: square, symmetric, det ≠ 0.
  explicit IntegralLattice(ZMat g);

  size_t rank() const { return gram.size(); }
  Z det() const;
  // β(x) ∈ ℤ for all x ∈ L, equivalently every diagonal entry is even.
  bool is_even() const;

  Q form(const QVec& x, const QVec& y) const;  // β(x,y)
  Q norm(const QVec& x) const;                 // β(x)
};

// Basis (rows) of L_ev = {x ∈ L : β(x) ∈ ℤ}: the identity when L is even,
// otherwise an index-2 sublattice (the kernel of x ↦ β(x) mod ℤ, which on
// L/2L is x ↦ Σ_{gram_ii odd} x_i).
ZMat even_sublattice_basis(const IntegralLattice& L);

// β(x) ≡ β(r,x) mod ℤ for all x ∈ L; checked on the basis.
bool is_shadow_vector(const IntegralLattice& L, const QVec& r);

// The even sublattice with its dual, and the discriminant module
// dual(L_ev)/L_ev enumerated by classes, shadow classes marked. The shadow
// itself is r + dual(L) for any single shadow vector r; for even L it equals
// dual(L) and every class is a shadow class.
struct ShadowData {
  bool even;             // L itself even (then L_ev = L)
  ZMat even_basis;       // rows: basis of L_ev in L-coordinates
  QMat dual_basis;       // rows: basis of dual(L), i.e. gram⁻¹
  QMat even_dual_basis;  // rows: basis of dual(L_ev)
  QVec shadow_rep;       // the shadow vector (diag gram)/2 · gram⁻¹
  // Class representatives of dual(L_ev)/L_ev in L-coordinates, in the
  // mixed-radix order of their coordinates on even_dual_basis; every
  // denominator divides 2·|det L|.
  std::vector<QVec> classes;
  std::vector<bool> in_shadow;
  ZVec cyclic_factors;  // invariant factors > 1 of dual(L_ev)/L_ev

  // class lookup internals
  ZMat hnf;  // Hermite form of the coefficient matrix of L_ev in dual(L_ev)
  QMat even_dual_inverse;
  std::map<ZVec, size_t> class_index;
};

ShadowData shadow(const IntegralLattice& L);

// Index into sd.classes of r + L_ev; throws when r is not in dual(L_ev).
size_t shadow_class_of(const ShadowData& sd, const QVec& r);

// A family of nonzero vectors s_j in dual(L) with Σ_j β(s_j,x)s_j = x, so
// that x ↦ (β(s_j,x))_j embeds L isometrically into ℤ^N.
struct EutacticStar {
  std::vector<QVec> vectors;
  size_t size() const { return vectors.size(); }
};

// The defining identity, checked exactly on the basis of L.
bool is_eutactic(const IntegralLattice& L, const EutacticStar& star);

// An isometry g together with the signed permutation it induces on the star:
// s_j·g = eps[j]·s_{perm[j]}, and sn = ∏ eps (independent of the choice of
// perm when vectors repeat).
struct StarSymmetry {
  ZMat g;
  std::vector<size_t> perm;
  std::vector<int> eps;
  int sn;
};

// Throws when g is not an isometry of L or does not map the star to itself
// up to signs.
StarSymmetry star_symmetry(const IntegralLattice& L, const EutacticStar& star, const ZMat& g);

struct OrbitReport {
  std::vector<size_t> classes;  // indices into ShadowData::classes, ascending
  bool in_shadow;
  bool qualifies;  // every stabilizer lies in ker(sn)
  // Shortest vectors of the orbit's cosets (positive definite L only); the
  // minimum need not be attained by a single vector, so all are reported.
  std::optional<Q> min_norm;
  std::vector<QVec> minimal_reps;
};

// Orbits of G on dual(L_ev)/L_ev with their stabilizer/sn bookkeeping. The
// star is extremal iff exactly one orbit inside the shadow qualifies; that
// orbit carries the support of the right-hand side of the product identity.
struct ExtremalityReport {
  bool extremal;
  std::vector<StarSymmetry> symmetries;    // parallel to the input G
  std::vector<OrbitReport> orbits;         // by ascending smallest class index
  std::optional<size_t> qualifying_orbit;  // set when extremal
  ShadowData sd;
};

// Tuning knobs for large groups. When `generators` is nonempty the orbit
// walk uses only those elements (they must generate the subgroup of O(L)
// spanned by G; this is cross-checked via orbit-stabilizer counting), and
// stabilizer tests touch one representative per orbit instead of every
// class. `with_minima` turns off the shortest-vector search per orbit.
struct ExtremalityOptions {
  std::vector<ZMat> generators;
  bool with_minima = true;
};

ExtremalityReport extremality(const IntegralLattice& L, const EutacticStar& star,
                              const std::vector<ZMat>& G);
ExtremalityReport extremality(const IntegralLattice& L, const EutacticStar& star,
                              const std::vector<ZMat>& G, const ExtremalityOptions& opts);

// All x = w + (integer combination of the basis rows) with β(x) < bound, by
// bounded descent on the exact LDLᵗ decomposition of the basis Gram matrix.
// Requires basis square and invertible and the form positive definite on it.
// Deterministic order.
std::vector<QVec> coset_short_vectors(const IntegralLattice& L, const QVec& w,
                                      const QMat& basis, const Q& bound);

// One group element of the right-hand side sum, with its character value.
struct SignedMap {
  ZMat g;
  int sn;
};

// Σ_{x ∈ w+L_ev, β(x)<prec} q^β(x) Σ_g sn_g ζ^{(x·g)·gram}, a series in
// rank-many zeta variables. An empty G means the identity alone.
Series coset_theta(const IntegralLattice& L, const QVec& w,
                   const std::vector<SignedMap>& G, const Q& prec);

struct PictureResult {
  bool ok;  // β(w₀) = (n+2N)/24 and the two sides agree in the window
  Q gamma;
  QVec w0;          // ½ Σ_j eps_j s_j, signs from a generic direction
  Series lhs, rhs;  // rhs without the gamma factor
};

// Verifies the product identity at the head of this file to precision prec.
// Throws when the star is not G-extremal (the identity presupposes it).
PictureResult verify_picture(const IntegralLattice& L, const EutacticStar& star,
                             const std::vector<ZMat>& G, const Q& prec);
PictureResult verify_picture(const IntegralLattice& L, const EutacticStar& star,
                             const std::vector<ZMat>& G, const Q& prec,
                             const ExtremalityOptions& opts);

}  // namespace tb
