#pragma once

#include "varjet/diffpoly.hpp"

#include <optional>

namespace varjet {

/// nu-Poisson tensor on the order-0 slice of a jet superspace: a
/// (m+n)x(m+n) matrix of jet-order-0 entries with the graded symmetry
/// P[b][a] + (-1)^{|a||b|+nu} P[a][b] = 0. Entries must be
/// parity-homogeneous of parity |a|+|b|+nu.
class PoissonTensor {
public:
	PoissonTensor(JetContext ctx, int nu, std::vector<std::vector<DiffPoly>> entries);

	/// All-zero tensor (handy as a builder seed).
	static PoissonTensor zero(JetContext ctx, int nu);
	/// Standard symplectic tensor on m = 2*l even coordinates (nu = 0):
	/// P[a][a+l] = 1 = -P[a+l][a].
	static PoissonTensor symplectic(int l);
	/// The odd-cotangent tensor P = d^a (x) d_a + d_a (x) d^a (nu = 1) on a
	/// context with n = m.
	static PoissonTensor omega_tensor(int m);

	const JetContext& ctx() const { return ctx_; }
	int nu() const { return nu_; }
	const DiffPoly& entry(int a, int b) const { return entries_[a][b]; }
	bool is_constant() const;

	/// Replaces one entry and its graded partner so the symmetry invariant
	/// is kept: sets P[a][b] = u, P[b][a] = -(-1)^{|a||b|+nu} u.
	void set_pair(int a, int b, const DiffPoly& u);

private:
	JetContext ctx_;
	int nu_;
	std::vector<std::vector<DiffPoly>> entries_;

	void validate() const;
};

/// {u,v} = -(-1)^{(|b|+nu)|u|} P^{ab} d_a u d_b v on jet-order-0 inputs,
/// u parity-homogeneous.
DiffPoly poisson_bracket_finite(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v);

struct PoissonCheck {
	bool ok = true;
	// first violating free triple of Eq-(Poisson)-style cyclic sum
	int b = -1, c = -1, d = -1;
	DiffPoly residual;

	explicit operator bool() const { return ok; }
};

/// Cyclic-sum Jacobi condition for P; on failure reports one violating
/// triple with its residual.
PoissonCheck check_poisson(const PoissonTensor& P);

/// Finite-dimensional Schouten bracket on the order-0 slice of an
/// Omega-X context (n = m), in the shifted grading |u| = theta_degree - 1:
/// [u,v] = (-1)^{|u|} d^a u d_a v - d_a u d^a v.
/// (This is the jet-order-0 restriction of the Lambda_infinity bracket;
/// see the bracket module for the order-of-derivatives convention.)
DiffPoly schouten_finite(const DiffPoly& u, const DiffPoly& v);

/// Extracts the bivector components Q^{ab} = d^b d^a Q of a jet-order-0
/// theta-degree-2 element as a nu=0 tensor on the even base.
PoissonTensor bivector_to_tensor(const DiffPoly& q);

} // namespace varjet
