#pragma once

#include "varjet/euclid.hpp"

#include <functional>

namespace varjet {

/// Carrier concept: a graded Lie algebra with an optional differential,
/// presented as an object with
///   Element zero, bool is_zero(e), Element add(a,b), Element scale(c,a),
///   Element bracket(a,b), Element diff(a), bool equal(a,b),
///   optional<int> degree(e)  (nullopt only for zero).
/// Three instantiations below: g(V,eta), Lambda_infinity and L.

/// Polynomial in hbar of degrees 1..N with coefficients in the carrier;
/// models g (x) m_N for m_N = hbar C[hbar]/(hbar^{N+1}).
template <class Carrier>
struct Truncated {
	using Element = typename Carrier::Element;

	int order = 1;                 // N
	int degree = 0;                // common carrier degree of the coefficients
	std::vector<Element> coeff;    // coeff[i] multiplies hbar^{i+1}

	Truncated() = default;
	Truncated(const Carrier& car, int N, int deg)
	    : order(N), degree(deg), coeff(N, car.zero())
	{
		if (N < 1)
			throw std::invalid_argument("Truncated: order must be >= 1");
	}

	bool is_zero(const Carrier& car) const
	{
		for (auto& c : coeff)
			if (!car.is_zero(c))
				return false;
		return true;
	}

	void validate(const Carrier& car) const
	{
		for (auto& c : coeff) {
			auto d = car.degree(c);
			if (d && *d != degree)
				throw GradingError("Truncated: coefficient of wrong degree");
		}
	}
};

template <class Carrier>
bool tr_equal(const Carrier& car, const Truncated<Carrier>& a, const Truncated<Carrier>& b)
{
	if (a.order != b.order)
		return false;
	for (int i = 0; i < a.order; ++i)
		if (!car.equal(a.coeff[i], b.coeff[i]))
			return false;
	return true;
}

template <class Carrier>
Truncated<Carrier> tr_add(const Carrier& car, const Truncated<Carrier>& a,
                          const Truncated<Carrier>& b)
{
	if (a.order != b.order)
		throw std::invalid_argument("truncation orders differ");
	Truncated<Carrier> r = a;
	for (int i = 0; i < a.order; ++i)
		r.coeff[i] = car.add(a.coeff[i], b.coeff[i]);
	return r;
}

template <class Carrier>
Truncated<Carrier> tr_scale(const Carrier& car, const Rat& c, const Truncated<Carrier>& a)
{
	Truncated<Carrier> r = a;
	for (auto& x : r.coeff)
		x = car.scale(c, x);
	return r;
}

/// hbar-graded bracket with truncation at hbar^{N+1}.
template <class Carrier>
Truncated<Carrier> tr_bracket(const Carrier& car, const Truncated<Carrier>& a,
                              const Truncated<Carrier>& b)
{
	if (a.order != b.order)
		throw std::invalid_argument("truncation orders differ");
	Truncated<Carrier> r(car, a.order, a.degree + b.degree);
	for (int i = 1; i <= a.order; ++i)
		for (int j = 1; i + j <= a.order; ++j)
			r.coeff[i + j - 1] =
			    car.add(r.coeff[i + j - 1], car.bracket(a.coeff[i - 1], b.coeff[j - 1]));
	return r;
}

/// Coefficientwise differential.
template <class Carrier>
Truncated<Carrier> tr_diff(const Carrier& car, const Truncated<Carrier>& a)
{
	Truncated<Carrier> r = a;
	r.degree = a.degree + 1;
	for (auto& x : r.coeff)
		x = car.diff(x);
	return r;
}

/// d_A x = dx + [A, x].
template <class Carrier>
Truncated<Carrier> d_A(const Carrier& car, const Truncated<Carrier>& A,
                       const Truncated<Carrier>& x)
{
	return tr_add(car, tr_diff(car, x), tr_bracket(car, A, x));
}

/// Q(A) = dA + 1/2 [A,A]; zero iff A is Maurer-Cartan.
template <class Carrier>
Truncated<Carrier> curvature(const Carrier& car, const Truncated<Carrier>& A)
{
	if (A.degree != 1)
		throw GradingError("curvature: degree-1 element required");
	return tr_add(car, tr_diff(car, A),
	              tr_scale(car, Rat(1, 2), tr_bracket(car, A, A)));
}

/// Dynkin-type BCH product over an arbitrary bracket on truncated
/// elements. Every generator carries hbar-degree >= 1, so words longer
/// than N die in the truncation.
template <class Carrier, class Bracket>
Truncated<Carrier> bch_generic(const Carrier& car, const Bracket& br,
                               const Truncated<Carrier>& X, const Truncated<Carrier>& Y)
{
	if (X.order != Y.order)
		throw std::invalid_argument("bch: truncation orders differ");
	const int N = X.order;
	Truncated<Carrier> result(car, N, X.degree);

	// enumerate all words over {X,Y} of length 1..N; for each, the Dynkin
	// weight (sum over block decompositions) times the right-nested bracket
	std::vector<int> word;
	std::function<void()> rec = [&]() {
		if (!word.empty()) {
			Rat weight = bch_word_weight(word);
			if (weight != 0) {
				Truncated<Carrier> nested = word.back() ? Y : X;
				for (int i = int(word.size()) - 2; i >= 0; --i)
					nested = br(word[i] ? Y : X, nested);
				result = tr_add(car, result, tr_scale(car, weight, nested));
			}
		}
		if (int(word.size()) < N) {
			for (int letter = 0; letter < 2; ++letter) {
				word.push_back(letter);
				rec();
				word.pop_back();
			}
		}
	};
	rec();
	return result;
}

/// Dynkin weight of a word (0 = X, 1 = Y):
/// sum over decompositions into n blocks (r_1,s_1)..(r_n,s_n) of
/// (-1)^{n-1} / ( n * |w| * prod r_i! s_i! ).
Rat bch_word_weight(const std::vector<int>& word);

/// BCH on the gauge Lie algebra (degree-0 elements, carrier bracket).
template <class Carrier>
Truncated<Carrier> bch(const Carrier& car, const Truncated<Carrier>& X,
                       const Truncated<Carrier>& Y)
{
	if (X.degree != 0 || Y.degree != 0)
		throw GradingError("bch: degree-0 elements required");
	return bch_generic(car, [&](const Truncated<Carrier>& a, const Truncated<Carrier>& b) {
		return tr_bracket(car, a, b);
	}, X, Y);
}

/// exp(X) * A = A - sum_{n>=0} ad(X)^n / (n+1)! d_A X.
template <class Carrier>
Truncated<Carrier> gauge_act(const Carrier& car, const Truncated<Carrier>& X,
                             const Truncated<Carrier>& A)
{
	if (X.degree != 0)
		throw GradingError("gauge_act: degree-0 gauge element required");
	if (A.degree != 1)
		throw GradingError("gauge_act: degree-1 target required");
	Truncated<Carrier> v = d_A(car, A, X); // hbar-degree >= 1
	Truncated<Carrier> r = A;
	Rat fact = 1;
	for (int n = 0; n < A.order; ++n) {
		fact /= (n + 1);
		r = tr_add(car, r, tr_scale(car, -fact, v));
		v = tr_bracket(car, X, v);
		if (v.is_zero(car))
			break;
	}
	return r;
}

/// e^{ad X} w, truncated.
template <class Carrier>
Truncated<Carrier> ad_exp(const Carrier& car, const Truncated<Carrier>& X,
                          const Truncated<Carrier>& w)
{
	Truncated<Carrier> r = w;
	Truncated<Carrier> v = w;
	Rat fact = 1;
	for (int n = 1; n <= w.order; ++n) {
		v = tr_bracket(car, X, v);
		if (v.is_zero(car))
			break;
		fact /= n;
		r = tr_add(car, r, tr_scale(car, fact, v));
	}
	return r;
}

/// {u,v}_A = [d_A u, v] on degree -1 elements.
template <class Carrier>
Truncated<Carrier> bracket_A(const Carrier& car, const Truncated<Carrier>& A,
                             const Truncated<Carrier>& u, const Truncated<Carrier>& v)
{
	if (A.degree != 1)
		throw GradingError("bracket_A: degree-1 connection required");
	if (u.degree != -1 || v.degree != -1)
		throw GradingError("bracket_A: degree -1 elements required");
	return tr_bracket(car, d_A(car, A, u), v);
}

/// 2-morphism (exp_A(u), exp(X), A) of the Deligne 2-groupoid: a gauge
/// transformation X out of the MC element A decorated by u in g^{-1}.
template <class Carrier>
struct TwoMorphism {
	Truncated<Carrier> u; // degree -1
	Truncated<Carrier> X; // degree 0
	Truncated<Carrier> A; // degree 1, Maurer-Cartan

	/// 1-morphism the 2-cell starts at.
	const Truncated<Carrier>& source_1m() const { return X; }
	/// 1-morphism it ends at: exp(X) exp(d_A u).
	Truncated<Carrier> target_1m(const Carrier& car) const
	{
		return bch(car, X, d_A(car, A, u));
	}
};

/// Vertical composition: second after first; realizes the group law of
/// exp(g_A).
template <class Carrier>
TwoMorphism<Carrier> compose_vertical(const Carrier& car, const TwoMorphism<Carrier>& second,
                                      const TwoMorphism<Carrier>& first)
{
	if (!tr_equal(car, first.A, second.A) ||
	    !tr_equal(car, second.X, first.target_1m(car)))
		throw std::invalid_argument("compose_vertical: cells are not stacked");
	auto brA = [&](const Truncated<Carrier>& a, const Truncated<Carrier>& b) {
		return bracket_A(car, first.A, a, b);
	};
	TwoMorphism<Carrier> r;
	r.u = bch_generic(car, brA, first.u, second.u);
	r.X = first.X;
	r.A = first.A;
	return r;
}

/// Horizontal composition: second lives over exp(first.X) * A; its label
/// is transported back with e^{-ad X}.
template <class Carrier>
TwoMorphism<Carrier> compose_horizontal(const Carrier& car, const TwoMorphism<Carrier>& second,
                                        const TwoMorphism<Carrier>& first)
{
	if (!tr_equal(car, second.A, gauge_act(car, first.X, first.A)))
		throw std::invalid_argument("compose_horizontal: cells are not adjacent");
	auto brA = [&](const Truncated<Carrier>& a, const Truncated<Carrier>& b) {
		return bracket_A(car, first.A, a, b);
	};
	TwoMorphism<Carrier> r;
	Truncated<Carrier> transported = ad_exp(car, tr_scale(car, Rat(-1), first.X), second.u);
	r.u = bch_generic(car, brA, transported, first.u);
	r.X = bch(car, second.X, first.X);
	r.A = first.A;
	return r;
}

/// ---- carriers ----

/// g(V,eta) with zero differential.
struct EuclidCarrier {
	Metric eta;
	JetContext context;

	explicit EuclidCarrier(Metric e) : eta(std::move(e)), context(eta.dim(), eta.dim()) {}

	using Element = EuclidElement;
	Element zero() const { return EuclidElement(context); }
	bool is_zero(const Element& e) const { return e.is_zero(); }
	bool equal(const Element& a, const Element& b) const { return a == b; }
	Element add(const Element& a, const Element& b) const { return a + b; }
	Element scale(const Rat& c, const Element& a) const { return a * c; }
	Element bracket(const Element& a, const Element& b) const { return g_bracket(eta, a, b); }
	Element diff(const Element&) const { return zero(); }
	std::optional<int> degree(const Element& e) const
	{
		if (e.is_zero())
			return std::nullopt;
		return e.degree();
	}
};

/// Lambda_infinity over an Omega-X context; optional differential
/// [q0, -] for a fixed degree-1 element q0.
struct LambdaCarrier {
	JetContext context;
	std::optional<DiffPoly> q0;

	explicit LambdaCarrier(JetContext ctx) : context(ctx) {}
	LambdaCarrier(JetContext ctx, DiffPoly base) : context(ctx), q0(std::move(base)) {}

	using Element = DiffPoly;
	Element zero() const { return DiffPoly(context); }
	bool is_zero(const Element& e) const { return e.is_zero(); }
	bool equal(const Element& a, const Element& b) const { return a == b; }
	Element add(const Element& a, const Element& b) const { return a + b; }
	Element scale(const Rat& c, const Element& a) const { return a * c; }
	Element bracket(const Element& a, const Element& b) const { return lambda_bracket(a, b); }
	Element diff(const Element& e) const { return q0 ? lambda_bracket(*q0, e) : zero(); }
	std::optional<int> degree(const Element& e) const
	{
		if (e.is_zero())
			return std::nullopt;
		return e.gradings().schouten_degree;
	}
};

/// L = local functionals; optional differential delta_{Q0}.
struct FunctionalCarrier {
	JetContext context;
	std::optional<LocalFunctional> q0;

	explicit FunctionalCarrier(JetContext ctx) : context(ctx) {}
	FunctionalCarrier(JetContext ctx, LocalFunctional base) : context(ctx), q0(std::move(base)) {}

	using Element = LocalFunctional;
	Element zero() const { return LocalFunctional(DiffPoly(context)); }
	bool is_zero(const Element& e) const { return e.is_zero(); }
	bool equal(const Element& a, const Element& b) const { return a == b; }
	Element add(const Element& a, const Element& b) const { return a + b; }
	Element scale(const Rat& c, const Element& a) const { return a * c; }
	Element bracket(const Element& a, const Element& b) const { return schouten_local(a, b); }
	Element diff(const Element& e) const { return q0 ? schouten_local(*q0, e) : zero(); }
	std::optional<int> degree(const Element& e) const
	{
		if (e.is_zero())
			return std::nullopt;
		return e.rep().gradings().schouten_degree;
	}
};

} // namespace varjet
