#pragma once
// Root systems and the theta products attached to them.
//
// For an irreducible root system R of rank n with positive roots R⁺ (N of
// them) and simple roots F, put h = (1/n) Σ_{r∈R⁺} (r,r).  The weight-type
// lattice W = {x : (x,r)/h ∈ ℤ for all roots r} carries the rescaled form
// (·,·)/h; in the coordinates x ↦ ((f,x)/h)_{f∈F} it becomes ℤ^F with Gram
// matrix ΓᵀΓ, where Γ is the matrix of the expansions r = Σ_f γ_{r,f} f
// over the positive roots.  The rows of Γ·(ΓᵀΓ)⁻¹ form a eutactic star on
// that lattice (the positive roots themselves), the Weyl group acts by the
// integer matrices recorded here, and
//
//   ϑ_R(τ,z) = η^{n-N} ∏_{r∈R⁺} ϑ(τ, Σ_f γ_{r,f} z_f)
//
// is a Jacobi form of weight n/2 and character ε^{n+2N} for that lattice.
// Macdonald's identities express ϑ_R as a signed Weyl-group average of a
// coset theta series; verification runs through the product identity of
// the lattice module.  Direct sums multiply: ϑ_{R⊕R'} = ϑ_R ϑ_{R'}.

#include "tb/blocks.hpp"
#include "tb/lattice.hpp"

#include <string>
#include <vector>

namespace tb {

// One irreducible summand, built in its conventional ambient coordinates
// (A_n inside ℤ^{n+1}, B/C/D in ℤ^n, G₂ in the sum-zero plane of ℤ³, F₄ and
// the E series in their standard rational coordinates).
struct RootComponent {
  char family;  // 'A'..'G'
  int rank;

  std::vector<QVec> simple;    // simple roots, ambient coordinates
  std::vector<QVec> positive;  // all positive roots, sorted by height then Γ-row
  Q form_scale;                // ambient form = form_scale · dot: short roots get length² 2
  ZMat gamma;                  // positive[i] = Σ_f gamma[i][f] · simple[f]
  Q h;                         // (1/rank) Σ_{R⁺} (r,r)
  QVec weyl_ambient;           // half the sum of the positive roots

  ZMat gram;                   // ΓᵀΓ = h·M⁻¹ with M the simple-root Gram matrix
  std::vector<ZMat> reflections;  // simple reflections on row vectors of ℤ^F
  QVec weyl_coords;            // the Weyl vector in lattice coordinates, ((f,w)/h)_f

  std::string name() const;    // "A4", "G2", ...
};

// A root system in the strict sense: an orthogonal direct sum of irreducible
// components. Lattice-coordinate data (gamma, gram, star, reflections) is
// assembled block-diagonally in component order.
struct RootSystemData {
  std::vector<RootComponent> components;

  int rank() const;
  long positive_count() const;
  std::string name() const;  // components joined with '+'

  ZMat gamma() const;
  ZMat gram() const;
  IntegralLattice lattice() const;
  std::vector<QVec> star() const;  // rows of Γ·gram⁻¹; always eutactic
  std::vector<ZMat> reflections() const;  // block-embedded simple reflections
  QVec weyl_coords() const;

  Q weight() const;        // rank/2
  long character() const;  // (rank + 2·positive_count) mod 24
};

// Parses "A4", "G2+B2", "A1+C3", ... and constructs the system. Positive
// roots come from the closure of the simple roots under simple reflections;
// gamma from exact linear solves. Throws std::invalid_argument for labels
// outside A_n (n≥1), B_n (n≥2), C_n (n≥2), D_n (n≥3), E6/E7/E8, F4, G2.
RootSystemData build_root_system(const std::string& label);

// The normalized inner product of the component's ambient space.
Q ambient_form(const RootComponent& c, const QVec& x, const QVec& y);

// Independent route to h: ((α+w,α+w) − (w,w))/2 with α the highest root and
// w the Weyl vector, in the component's ambient coordinates.
Q h_from_highest_root(const RootComponent& c);

// The Weyl group as integer matrices on lattice coordinates, closed from the
// simple reflections, with the sign character (= determinant). Throws
// std::length_error when the closure exceeds cap.
struct WeylGroup {
  std::vector<ZMat> elements;
  std::vector<int> sn;
  size_t size() const { return elements.size(); }
};
WeylGroup weyl_group(const RootSystemData& R, size_t cap = 60000);

// The theta block ϑ_R(τ, a·z): one ϑ per positive root with index Σ_f
// γ_{r,f} a_f, over η^{N−rank}. Requires every a_f ≥ 1.
ThetaQuotient theta_block(const RootSystemData& R, const std::vector<long>& a);

// Spot data for the family catalogue: counts and modular invariants of ϑ_R,
// plus the symbolic ϑ-indices (linear forms in a,b,c,... per gamma row).
struct RootFamilyRow {
  std::string name;
  long positive;    // |R⁺|
  long eta_nu;      // ν = |R⁺| − rank, the eta power in the denominator
  Q weight;         // rank/2
  long character;   // (rank + 2|R⁺|) mod 24
  std::vector<std::string> index_forms;  // "a", "3a+b", ... (rank ≤ 8)
};
RootFamilyRow family_row(const RootSystemData& R);

// How a Macdonald check ran: the verified constant in front of the coset
// sum (reciprocal of the stabilizer of the Weyl vector's shadow class), the
// group size, and the verification mode.
struct MacdonaldResult {
  bool ok;
  Q gamma;
  size_t group_size;
  std::string mode;  // "full_weyl" or "specialized"
  size_t trials;     // pullback count in specialized mode
};

// Verifies Macdonald's identity for every component to q-precision
// (character/24) + prec beyond the leading term. full_weyl compares the
// multivariable series through the product identity; the specialized mode
// instead compares one-variable pullbacks along `trials` random positive
// integer vectors (deterministic in seed). Throws std::length_error when a
// component's Weyl group exceeds cap.
MacdonaldResult macdonald_verify(const RootSystemData& R, const Q& prec, bool full_weyl,
                                 size_t cap = 60000, size_t trials = 20, unsigned long seed = 1);

}  // namespace tb
