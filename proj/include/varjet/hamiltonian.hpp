#pragma once

#include "varjet/brackets.hpp"
#include "varjet/ratmatrix.hpp"

namespace varjet {

/// Flat contravariant metric in flat coordinates: a constant symmetric
/// invertible matrix together with its exact inverse.
class Metric {
public:
	explicit Metric(RatMatrix upper);

	int dim() const { return upper_.rows(); }
	const RatMatrix& upper() const { return upper_; }
	const RatMatrix& lower() const { return lower_; }

private:
	RatMatrix upper_, lower_;
};

/// Matrix of ordinary differential operators D^{ab} = sum_k D^{ab}_k d^k
/// with coefficients in the jet algebra of the even base.
class DiffOperatorMatrix {
public:
	DiffOperatorMatrix(JetContext ctx, int size);

	const JetContext& ctx() const { return ctx_; }
	int size() const { return size_; }

	/// Adds coeff * d^k to D^{ab} (1-based a, b).
	void add(int a, int b, int k, const DiffPoly& coeff);
	const std::vector<std::pair<int, DiffPoly>>& entry(int a, int b) const
	{
		return entries_[a - 1][b - 1];
	}

private:
	JetContext ctx_;
	int size_;
	std::vector<std::vector<std::vector<std::pair<int, DiffPoly>>>> entries_;
};

struct SkewAdjointCheck {
	bool ok = true;
	int a = 0, b = 0;   // first violating pair
	DiffPoly residual;  // in a context extended by one even coordinate

	explicit operator bool() const { return ok; }
};

/// Formal skew-adjointness, checked symbolically: for a fresh even jet
/// variable u, sum_k ( D^{ab}_k d^k u + (-d)^k (D^{ba}_k u) ) = 0.
SkewAdjointCheck check_skew_adjoint(const DiffOperatorMatrix& D);

/// Canonical bivector of a skew-adjoint operator:
/// class of sum th[a,0] D^{ab}_k th[b,k]. Rejects non-skew input.
LocalFunctional operator_to_bivector(const DiffOperatorMatrix& D);

struct HamiltonianCheck {
	bool ok = true;
	ExactnessWitness witness; // nonvanishing variational derivative of [[Q,Q]]

	explicit operator bool() const { return ok; }
};

/// [[Q,Q]] = 0 for a schouten-degree-1 class.
HamiltonianCheck is_hamiltonian(const LocalFunctional& q);

/// delta_Q = [[Q,-]]; rejects non-Hamiltonian Q.
LocalFunctional delta_Q(const LocalFunctional& q, const LocalFunctional& u);

/// H_eta = 1/2 int eta^{ab} th_a d(th_b) dx on the Omega-X context of the
/// metric's dimension.
LocalFunctional hydrodynamic_operator(const Metric& eta);

/// d_eta int u dx = -sum_k eta^{ab} int th[a,k+1] d_{k,b} u dx ; the
/// displayed closed form of [[H_eta, -]].
LocalFunctional d_eta_formula(const Metric& eta, const LocalFunctional& u);

struct LiftCheck {
	bool ok = true;
	bool projects = true;    // int L = Q
	bool mc_body = true;     // d(tilde) + 1/2 [u,u] = 0 identically
	bool mc_tilde = true;    // [u, tilde] = 0 identically
	DiffPoly body_residual, tilde_residual;

	explicit operator bool() const { return ok; }
};

/// Lift test: int L = Q and D L + 1/2 [L,L] = 0 as an identity in the cone.
LiftCheck check_lift(const LocalFunctional& q, const ConeElement& lift);

struct LiftResult {
	ConeElement lift;
	bool residual_zero = true; // [u, tilde] = 0, reported
};

/// Solves d(tilde) = -1/2 [u,u] for the tilde part; requires the class of
/// u to be Hamiltonian (asserted, not assumed).
LiftResult compute_lift(const DiffPoly& u);

/// Dubrovin-Novikov family data: constant metric eta^{ab}, structure
/// tensor A^{ab}_c skew in (a,b), skew matrix B^{ab}.
struct DNSpec {
	Metric eta;
	std::vector<RatMatrix> A; // A[c-1](a,b) = A^{ab}_c
	RatMatrix B;

	DNSpec(Metric eta_, std::vector<RatMatrix> A_, RatMatrix B_);
	int dim() const { return eta.dim(); }
};

struct DNReport {
	bool jacobi = true;     // [e^a,e^b] = A^{ab}_c e^c is a Lie bracket
	bool killing = true;    // eta is ad-invariant for it
	bool cocycle = true;    // B is a 2-cocycle
	bool direct = true;     // assembled operator is Hamiltonian
	bool equivalent() const { return (jacobi && killing && cocycle) == direct; }
	bool ok() const { return jacobi && killing && cocycle && direct; }
};

/// The assembled first-order operator eta^{ab} d + A^{ab}_c t[c,0] + B^{ab}.
DiffOperatorMatrix dn_operator(const DNSpec& spec);

/// Four independent checks plus the Dubrovin-Novikov equivalence
/// (i && ii && iii) <=> (iv), asserted.
DNReport dn_check(const DNSpec& spec);

/// The second KdV structure 1/8 d^3 + t d + 1/2 d(t) as a skew-adjoint
/// scalar operator (m = n = 1).
DiffOperatorMatrix kdv_operator();
/// Its bivector class, 1/8 th1_0 th1_3 + t1_0 th1_0 th1_1.
LocalFunctional kdv_bivector();
/// Lift family body at parameter a: 1/8 th th3 + t th th1 + a d(th th2).
DiffPoly kdv_lift_body(const Rat& a);
/// The tilde part c * th th1 th2.
DiffPoly kdv_lift_tilde(const Rat& c);

} // namespace varjet
