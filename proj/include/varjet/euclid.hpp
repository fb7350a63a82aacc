#pragma once

#include "varjet/hamiltonian.hpp"

namespace varjet {

/// Element (alpha~, alpha) of g^p(V,eta) = Lambda^{p+1}V (+) Lambda^{p+2}V.
/// Exterior elements are differential polynomials in the order-0 odd
/// variables th[.,0] of an Omega-X context of the metric's dimension, so
/// tau0 is the identity embedding.
struct EuclidElement {
	DiffPoly alpha_tilde; // Lambda^{p+1}
	DiffPoly alpha;       // Lambda^{p+2}

	EuclidElement() = default;
	EuclidElement(DiffPoly at, DiffPoly a);
	explicit EuclidElement(JetContext ctx) : alpha_tilde(ctx), alpha(ctx) {}

	const JetContext& ctx() const { return alpha_tilde.ctx(); }
	bool is_zero() const { return alpha_tilde.is_zero() && alpha.is_zero(); }
	bool operator==(const EuclidElement& o) const
	{
		return alpha_tilde == o.alpha_tilde && alpha == o.alpha;
	}

	EuclidElement operator+(const EuclidElement& o) const
	{
		return {alpha_tilde + o.alpha_tilde, alpha + o.alpha};
	}
	EuclidElement operator-(const EuclidElement& o) const
	{
		return {alpha_tilde - o.alpha_tilde, alpha - o.alpha};
	}
	EuclidElement operator-() const { return {-alpha_tilde, -alpha}; }
	EuclidElement operator*(const Rat& c) const { return {alpha_tilde * c, alpha * c}; }

	/// Degree p; throws GradingError when the two parts disagree.
	int degree() const;
};

/// Exterior-algebra context of dimension n (even block present so that
/// tau lands in the same context).
inline JetContext exterior_ctx(int n) { return JetContext(n, n); }

/// {alpha,beta} = (-1)^{p+1} eta_{ab} d^a alpha d^b beta, p = deg(alpha)-2.
DiffPoly h_bracket(const Metric& eta, const DiffPoly& alpha, const DiffPoly& beta);

/// Module action alpha * beta~ = -eta_{ab} d^a alpha d^b beta~.
DiffPoly h_action(const Metric& eta, const DiffPoly& alpha, const DiffPoly& beta_tilde);

/// Semidirect bracket on g(V,eta) = O[1] x| h(V,eta).
EuclidElement g_bracket(const Metric& eta, const EuclidElement& x, const EuclidElement& y);

struct McLieReport {
	std::vector<RatMatrix> structure; // structure[c-1](a,b): [th_a, th_b]_alpha coefficient of th_c
	RatMatrix cocycle;                // omega(th_a, th_b)
	bool mc = false;
	bool jacobi = false;
	bool cocycle_ok = false;
};

/// Theorem-"Hydrodynamic" dictionary for a degree-1 element: extracts the
/// bracket on V* and the 2-cocycle, checks Jacobi and the cocycle
/// condition, and asserts MC <=> (Jacobi && cocycle).
McLieReport mc_to_lie(const Metric& eta, const EuclidElement& x);

/// Translation action v * (a~, a) = (a~ + v(a), a) where
/// v(a)(x,y) = v([x,y]_a); v is given by its pairing values with th_c.
EuclidElement translation_act(const Metric& eta, const std::vector<Rat>& v,
                              const EuclidElement& x);

/// d = sum_k eta^{ab} th[a,k+1] d_{k,b} (odd operator).
DiffPoly d_op(const Metric& eta, const DiffPoly& u);
/// d0 = sum_k eta^{ab} th[a,k] d_{k,b} (odd operator).
DiffPoly d0_op(const Metric& eta, const DiffPoly& u);
/// d_eta = -d + 1/2 (d/dx) d0, the displayed operator form of [[H_eta,-]].
DiffPoly d_eta_op(const Metric& eta, const DiffPoly& u);

/// Odd operators extend to the cone with a sign on the tilde slot.
ConeElement d_eta_cone(const Metric& eta, const ConeElement& z);
/// Full differential (D + d_eta) of the eta-twisted cone.
ConeElement cone_total_diff(const Metric& eta, const ConeElement& z);
/// (D - d) of the straightened cone.
ConeElement cone_minus_d(const Metric& eta, const ConeElement& z);

/// tau0: rename th^a -> th[a,0]; the identity in this representation.
DiffPoly tau0(const DiffPoly& alpha);

/// tau(a~, a) = tau0(a~) + ( eta_{ab} t[a,0] d^b_0 - 1/2 eps p ) tau0(a).
ConeElement tau(const Metric& eta, const EuclidElement& x);

/// T = 1 + 1/2 eps d0.
ConeElement T_map(const Metric& eta, const ConeElement& z);

/// sigma(a~, a) = int tau0(a~) dx + int eta_{ab} t[a,0] d^b_0 tau0(a) dx.
LocalFunctional sigma(const Metric& eta, const EuclidElement& x);

} // namespace varjet
