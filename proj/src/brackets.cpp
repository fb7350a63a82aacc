#include "varjet/brackets.hpp"

namespace varjet {

namespace {

JetVar coord_var(const JetContext& ctx, int c, int order)
{
	return JetVar{ctx.coord_is_odd(c) ? VarKind::odd : VarKind::even, ctx.coord_index(c), order};
}

int coord_parity(const JetContext& ctx, int c) { return ctx.coord_is_odd(c) ? 1 : 0; }

int require_parity(const DiffPoly& u, const char* who)
{
	auto p = u.parity_opt();
	if (!p)
		throw GradingError(std::string(who) + ": argument not parity-homogeneous");
	return *p;
}

void require_omega(const JetContext& ctx, const char* who)
{
	if (ctx.odd_count != ctx.even_count)
		throw std::invalid_argument(std::string(who) + ": needs an Omega-X context (n = m)");
}

/// Iterated total derivatives of a fixed polynomial, built on demand.
class DxPowers {
public:
	explicit DxPowers(DiffPoly base) { pow_.push_back(std::move(base)); }
	const DiffPoly& operator[](int k)
	{
		while (int(pow_.size()) <= k)
			pow_.push_back(total_derivative(pow_.back()));
		return pow_[k];
	}

private:
	std::vector<DiffPoly> pow_;
};

} // namespace

DiffPoly soloviev(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v)
{
	const JetContext& ctx = P.ctx();
	if (u.ctx() != ctx || v.ctx() != ctx)
		throw ContextMismatch();
	int pu = require_parity(u, "soloviev");

	DiffPoly r(ctx);
	for (int a = 0; a < ctx.coords(); ++a) {
		VarKind ka = ctx.coord_is_odd(a) ? VarKind::odd : VarKind::even;
		int top_a = u.max_order(ka, ctx.coord_index(a));
		for (int k = 0; k <= top_a; ++k) {
			DiffPoly du = euler(u, ka, ctx.coord_index(a), k);
			if (du.is_zero())
				continue;
			for (int b = 0; b < ctx.coords(); ++b) {
				if (P.entry(a, b).is_zero())
					continue;
				VarKind kb = ctx.coord_is_odd(b) ? VarKind::odd : VarKind::even;
				int top_b = v.max_order(kb, ctx.coord_index(b));
				for (int l = 0; l <= top_b; ++l) {
					DiffPoly dv = euler(v, kb, ctx.coord_index(b), l);
					if (dv.is_zero())
						continue;
					DiffPoly inner = P.entry(a, b) * du * dv;
					DiffPoly term = total_derivative(inner, k + l);
					int s = ((coord_parity(ctx, b) + P.nu()) * pu) & 1;
					r += s ? term : -term;
				}
			}
		}
	}
	return r;
}

DiffPoly soloviev_constant(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v)
{
	const JetContext& ctx = P.ctx();
	if (u.ctx() != ctx || v.ctx() != ctx)
		throw ContextMismatch();
	if (!P.is_constant())
		throw std::invalid_argument("soloviev_constant: tensor entries must be constant");
	int pu = require_parity(u, "soloviev_constant");

	DiffPoly r(ctx);
	for (int a = 0; a < ctx.coords(); ++a) {
		VarKind ka = ctx.coord_is_odd(a) ? VarKind::odd : VarKind::even;
		int top_a = u.max_order(ka, ctx.coord_index(a));
		for (int b = 0; b < ctx.coords(); ++b) {
			if (P.entry(a, b).is_zero())
				continue;
			VarKind kb = ctx.coord_is_odd(b) ? VarKind::odd : VarKind::even;
			int top_b = v.max_order(kb, ctx.coord_index(b));
			int s = ((coord_parity(ctx, b) + P.nu()) * pu) & 1;
			for (int k = 0; k <= top_a; ++k) {
				DiffPoly du = partial(u, coord_var(ctx, a, k));
				if (du.is_zero())
					continue;
				DxPowers du_pow(std::move(du));
				for (int l = 0; l <= top_b; ++l) {
					DiffPoly dv = partial(v, coord_var(ctx, b, l));
					if (dv.is_zero())
						continue;
					DiffPoly term = P.entry(a, b) * du_pow[l] * total_derivative(dv, k);
					r += s ? term : -term;
				}
			}
		}
	}
	return r;
}

DiffPoly lambda_bracket(const DiffPoly& u, const DiffPoly& v)
{
	const JetContext& ctx = u.ctx();
	if (v.ctx() != ctx)
		throw ContextMismatch();
	require_omega(ctx, "lambda_bracket");
	int su = u.gradings().schouten_degree;

	DiffPoly r(ctx);
	for (int a = 1; a <= ctx.even_count; ++a) {
		// (-1)^{|u|} d^l(d^a_k u) d^k(d_{l,a} v)
		int top_ku = u.max_order(VarKind::odd, a);
		int top_lv = v.max_order(VarKind::even, a);
		for (int k = 0; k <= top_ku; ++k) {
			DiffPoly du = partial(u, VarKind::odd, a, k);
			if (du.is_zero())
				continue;
			DxPowers du_pow(std::move(du));
			for (int l = 0; l <= top_lv; ++l) {
				DiffPoly dv = partial(v, VarKind::even, a, l);
				if (dv.is_zero())
					continue;
				DiffPoly term = du_pow[l] * total_derivative(dv, k);
				r += (su & 1) ? -term : term;
			}
		}
		// - d^l(d_{k,a} u) d^k(d^a_l v)
		int top_ku2 = u.max_order(VarKind::even, a);
		int top_lv2 = v.max_order(VarKind::odd, a);
		for (int k = 0; k <= top_ku2; ++k) {
			DiffPoly du = partial(u, VarKind::even, a, k);
			if (du.is_zero())
				continue;
			DxPowers du_pow(std::move(du));
			for (int l = 0; l <= top_lv2; ++l) {
				DiffPoly dv = partial(v, VarKind::odd, a, l);
				if (dv.is_zero())
					continue;
				r -= du_pow[l] * total_derivative(dv, k);
			}
		}
	}
	return r;
}

LocalFunctional schouten_local(const LocalFunctional& uf, const LocalFunctional& vf)
{
	const DiffPoly& u = uf.rep();
	const DiffPoly& v = vf.rep();
	const JetContext& ctx = u.ctx();
	if (v.ctx() != ctx)
		throw ContextMismatch();
	require_omega(ctx, "schouten_local");
	int su = u.gradings().schouten_degree;

	DiffPoly r(ctx);
	for (int a = 1; a <= ctx.even_count; ++a) {
		DiffPoly up = euler(u, VarKind::odd, a, 0);
		DiffPoly vl = euler(v, VarKind::even, a, 0);
		if (!up.is_zero() && !vl.is_zero()) {
			DiffPoly term = up * vl;
			r += (su & 1) ? -term : term;
		}
		DiffPoly ul = euler(u, VarKind::even, a, 0);
		DiffPoly vp = euler(v, VarKind::odd, a, 0);
		if (!ul.is_zero() && !vp.is_zero())
			r -= ul * vp;
	}
	return LocalFunctional(r);
}

DiffPoly alpha_form(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v,
                    const DiffPoly& w)
{
	const JetContext& ctx = P.ctx();
	if (u.ctx() != ctx || v.ctx() != ctx || w.ctx() != ctx)
		throw ContextMismatch();
	if (!P.is_constant())
		throw std::invalid_argument("alpha_form: tensor entries must be constant");
	const int nu = P.nu();
	int pu = require_parity(u, "alpha_form");
	int pv = require_parity(v, "alpha_form");
	require_parity(w, "alpha_form");

	DiffPoly r(ctx);
	const int n = ctx.coords();
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			if (P.entry(a, b).is_zero())
				continue;
			VarKind ka = ctx.coord_is_odd(a) ? VarKind::odd : VarKind::even;
			VarKind kb = ctx.coord_is_odd(b) ? VarKind::odd : VarKind::even;
			int top_i = u.max_order(ka, ctx.coord_index(a));
			for (int c = 0; c < n; ++c)
				for (int d = 0; d < n; ++d) {
					if (P.entry(c, d).is_zero())
						continue;
					VarKind kc = ctx.coord_is_odd(c) ? VarKind::odd : VarKind::even;
					VarKind kd = ctx.coord_is_odd(d) ? VarKind::odd : VarKind::even;
					int sgn = (coord_parity(ctx, b) * pu + coord_parity(ctx, d) * pu +
					           (coord_parity(ctx, d) + nu) * (pv + nu) +
					           (coord_parity(ctx, a) + coord_parity(ctx, b) + nu) *
					               coord_parity(ctx, c)) &
					          1;
					Rat pp = P.entry(a, b).constant_term() * P.entry(c, d).constant_term();
					for (int i = 0; i <= top_i; ++i) {
						DiffPoly diu = partial(u, coord_var(ctx, a, i));
						if (diu.is_zero())
							continue;
						int top_k = diu.max_order(kc, ctx.coord_index(c));
						for (int k = 0; k <= top_k; ++k) {
							DiffPoly dku = partial(diu, coord_var(ctx, c, k));
							if (dku.is_zero())
								continue;
							DxPowers dku_pow(std::move(dku));
							int top_j = v.max_order(kb, ctx.coord_index(b));
							for (int j = 0; j <= top_j; ++j) {
								DiffPoly djv = partial(v, coord_var(ctx, b, j));
								if (djv.is_zero())
									continue;
								DxPowers djv_pow(std::move(djv));
								int top_l = w.max_order(kd, ctx.coord_index(d));
								for (int l = 0; l <= top_l; ++l) {
									DiffPoly dlw = partial(w, coord_var(ctx, d, l));
									if (dlw.is_zero())
										continue;
									DxPowers dlw_pow(std::move(dlw));
									for (int p = 0; p <= j; ++p) {
										Rat cjp = binomial(j, p);
										for (int q = 0; q <= l; ++q) {
											Rat coeff = pp * cjp * binomial(l, q);
											if (sgn)
												coeff = -coeff;
											DiffPoly term =
											    dku_pow[j + l - p - q] *
											    djv_pow[i + q] * dlw_pow[k + p];
											r -= term * coeff;
										}
									}
								}
							}
						}
					}
				}
		}
	return r;
}

ConeElement::ConeElement(DiffPoly body, DiffPoly tilde) : body_(std::move(body)), tilde_(std::move(tilde))
{
	if (body_.ctx() != tilde_.ctx())
		throw ContextMismatch();
	// Lambda~ = Lambda / C*1: project the constant away
	Rat c0 = tilde_.constant_term();
	if (c0 != 0)
		tilde_.add_term(Monomial{}, -c0);
	if (!body_.is_zero() && !tilde_.is_zero()) {
		int pb = body_.gradings().theta_degree;
		int pt = tilde_.gradings().theta_degree;
		if (pt != pb + 1)
			throw GradingError("ConeElement: tilde theta degree must exceed body's by one");
	}
}

int ConeElement::degree() const
{
	if (!body_.is_zero())
		return body_.gradings().schouten_degree;
	if (!tilde_.is_zero())
		return tilde_.gradings().schouten_degree - 1;
	return 0;
}

ConeElement ConeElement::operator+(const ConeElement& o) const
{
	return {body_ + o.body_, tilde_ + o.tilde_};
}

ConeElement ConeElement::operator-(const ConeElement& o) const
{
	return {body_ - o.body_, tilde_ - o.tilde_};
}

ConeElement cone_bracket(const ConeElement& x, const ConeElement& y)
{
	int dx = x.degree();
	DiffPoly body = lambda_bracket(x.body(), y.body());
	DiffPoly tilde = lambda_bracket(x.tilde(), y.body());
	DiffPoly cross = lambda_bracket(x.body(), y.tilde());
	tilde += (dx & 1) ? -cross : cross;
	return {std::move(body), std::move(tilde)};
}

ConeElement cone_diff(const ConeElement& x)
{
	return {total_derivative(x.tilde()), DiffPoly(x.ctx())};
}

LocalFunctional integrate(const ConeElement& x) { return LocalFunctional(x.body()); }

} // namespace varjet
