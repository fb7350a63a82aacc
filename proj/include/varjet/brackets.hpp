#pragma once

#include "varjet/poisson.hpp"
#include "varjet/varcalc.hpp"

namespace varjet {

/// Soloviev's bracket for a nu-Poisson tensor with jet-order-0 entries:
/// {u,v} = -sum_{k,l} (-1)^{(|b|+nu)|u|} d^{k+l}( P^{ab} delta_{k,a}u delta_{l,b}v ).
/// Extends poisson_bracket_finite; sums truncate at the orders present.
DiffPoly soloviev(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v);

/// The constant-coefficient form
/// {u,v} = -sum (-1)^{(|b|+nu)|u|} P^{ab} (d^l d_{k,a}u)(d^k d_{l,b}v),
/// equal to soloviev whenever P is constant. Rejects non-constant P.
DiffPoly soloviev_constant(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v);

/// The Lambda_infinity bracket on an Omega-X context (n = m), in the
/// shifted grading |u| = theta_degree - 1:
/// [u,v] = sum_{k,l} ( (-1)^{|u|} d^l(d^a_k u) d^k(d_{l,a} v)
///                     - d^l(d_{k,a} u) d^k(d^a_l v) ).
/// Coincides with soloviev_constant on the odd-cotangent tensor (nu = 1)
/// and restricts to schouten_finite at jet order 0.
DiffPoly lambda_bracket(const DiffPoly& u, const DiffPoly& v);

/// A differential polynomial considered modulo the image of the total
/// derivative. Equality is decided by the exactness test.
class LocalFunctional {
public:
	LocalFunctional() = default;
	explicit LocalFunctional(DiffPoly rep) : rep_(std::move(rep)) {}

	const DiffPoly& rep() const { return rep_; }
	const JetContext& ctx() const { return rep_.ctx(); }

	bool is_zero() const { return is_exact(rep_); }
	bool is_zero(ExactnessWitness& w) const { return is_exact(rep_, w); }
	bool operator==(const LocalFunctional& o) const { return is_exact(rep_ - o.rep_); }

	LocalFunctional operator+(const LocalFunctional& o) const { return LocalFunctional(rep_ + o.rep_); }
	LocalFunctional operator-(const LocalFunctional& o) const { return LocalFunctional(rep_ - o.rep_); }
	LocalFunctional operator-() const { return LocalFunctional(-rep_); }
	LocalFunctional operator*(const Rat& c) const { return LocalFunctional(rep_ * c); }

	/// schouten degree of the (homogeneous) representative
	int degree() const { return rep_.gradings().schouten_degree; }

	/// Display representative with integrable top-order terms stripped.
	DiffPoly display_rep() const { return reduce_representative(rep_); }

private:
	DiffPoly rep_;
};

/// Variational Schouten bracket on classes, by the Euler-operator formula
/// [[u,v]] = int( (-1)^{|u|} delta^a u delta_a v - delta_a u delta^a v )dx.
/// An independent route from integrate(lambda_bracket(..)); the two agree
/// as classes.
LocalFunctional schouten_local(const LocalFunctional& u, const LocalFunctional& v);

/// The trilinear form of the constant-P Jacobi decomposition
/// {{u,v},w} = alpha(u|v,w) - (-1)^{(|u|+nu)(|v|+nu)} alpha(v|u,w).
DiffPoly alpha_form(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v,
                    const DiffPoly& w);

/// Element u + eps*utilde of the cone L = Lambda_inf (+) Lambda~_inf[1].
/// The tilde part is stored with zero jet-constant term (the quotient by
/// the centre); construction projects it.
class ConeElement {
public:
	ConeElement() = default;
	explicit ConeElement(JetContext ctx) : body_(ctx), tilde_(ctx) {}
	ConeElement(DiffPoly body, DiffPoly tilde);

	const DiffPoly& body() const { return body_; }
	const DiffPoly& tilde() const { return tilde_; }
	const JetContext& ctx() const { return body_.ctx(); }

	bool is_zero() const { return body_.is_zero() && tilde_.is_zero(); }
	bool operator==(const ConeElement& o) const { return body_ == o.body_ && tilde_ == o.tilde_; }

	ConeElement operator+(const ConeElement& o) const;
	ConeElement operator-(const ConeElement& o) const;
	ConeElement operator-() const { return {-body_, -tilde_}; }
	ConeElement operator*(const Rat& c) const { return {body_ * c, tilde_ * c}; }

	/// schouten degree p: body has theta degree p+1, tilde p+2. Throws
	/// GradingError when the parts disagree.
	int degree() const;

private:
	DiffPoly body_, tilde_;
};

/// [u+eps u~, v+eps v~] = [u,v] + eps( [u~,v] + (-1)^{|u|} [u,v~] ).
ConeElement cone_bracket(const ConeElement& x, const ConeElement& y);

/// D(u + eps u~) = d/dx u~ ; square-zero derivation of the cone bracket.
ConeElement cone_diff(const ConeElement& x);

/// int(u + eps u~) = class of u.
LocalFunctional integrate(const ConeElement& x);

} // namespace varjet
