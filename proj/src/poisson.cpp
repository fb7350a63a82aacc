#include "varjet/poisson.hpp"

namespace varjet {

namespace {

JetVar coord_var(const JetContext& ctx, int c, int order = 0)
{
	return JetVar{ctx.coord_is_odd(c) ? VarKind::odd : VarKind::even, ctx.coord_index(c), order};
}

int coord_parity(const JetContext& ctx, int c) { return ctx.coord_is_odd(c) ? 1 : 0; }

void require_order0(const DiffPoly& u, const char* who)
{
	if (u.max_order() > 0)
		throw std::invalid_argument(std::string(who) + ": jet order > 0 rejected");
}

int require_parity(const DiffPoly& u, const char* who)
{
	auto p = u.parity_opt();
	if (!p)
		throw GradingError(std::string(who) + ": argument not parity-homogeneous");
	return *p;
}

} // namespace

PoissonTensor::PoissonTensor(JetContext ctx, int nu, std::vector<std::vector<DiffPoly>> entries)
    : ctx_(ctx), nu_(nu & 1), entries_(std::move(entries))
{
	validate();
}

void PoissonTensor::validate() const
{
	const int n = ctx_.coords();
	if (int(entries_.size()) != n)
		throw std::invalid_argument("PoissonTensor: wrong row count");
	for (auto& row : entries_)
		if (int(row.size()) != n)
			throw std::invalid_argument("PoissonTensor: wrong column count");
	for (int a = 0; a < n; ++a)
		for (int b = 0; b < n; ++b) {
			const DiffPoly& e = entries_[a][b];
			if (e.ctx() != ctx_)
				throw ContextMismatch();
			if (e.max_order() > 0)
				throw std::invalid_argument("PoissonTensor: entries must have jet order 0");
			int want = (coord_parity(ctx_, a) + coord_parity(ctx_, b) + nu_) & 1;
			auto p = e.parity_opt();
			if (!p)
				throw GradingError("PoissonTensor: entry not parity-homogeneous");
			if (!e.is_zero() && *p != want)
				throw GradingError("PoissonTensor: entry parity must be |a|+|b|+nu");
		}
	for (int a = 0; a < n; ++a)
		for (int b = 0; b <= a; ++b) {
			int s = (coord_parity(ctx_, a) * coord_parity(ctx_, b) + nu_) & 1;
			DiffPoly lhs = entries_[b][a] + (s ? -entries_[a][b] : entries_[a][b]);
			if (!lhs.is_zero())
				throw std::invalid_argument("PoissonTensor: graded symmetry violated");
		}
}

PoissonTensor PoissonTensor::zero(JetContext ctx, int nu)
{
	std::vector<std::vector<DiffPoly>> e(ctx.coords(), std::vector<DiffPoly>(ctx.coords(), DiffPoly(ctx)));
	return PoissonTensor(ctx, nu, std::move(e));
}

void PoissonTensor::set_pair(int a, int b, const DiffPoly& u)
{
	if (u.ctx() != ctx_)
		throw ContextMismatch();
	int s = (coord_parity(ctx_, a) * coord_parity(ctx_, b) + nu_) & 1;
	entries_[a][b] = u;
	entries_[b][a] = s ? u : -u;
	if (a == b && !entries_[a][b].is_zero() && s == 0)
		throw std::invalid_argument("PoissonTensor: diagonal entry must vanish here");
	validate();
}

PoissonTensor PoissonTensor::symplectic(int l)
{
	JetContext ctx(2 * l, 0);
	auto P = zero(ctx, 0);
	for (int a = 0; a < l; ++a)
		P.set_pair(a, a + l, DiffPoly::constant(ctx, 1));
	return P;
}

PoissonTensor PoissonTensor::omega_tensor(int m)
{
	JetContext ctx(m, m);
	auto P = zero(ctx, 1);
	for (int a = 0; a < m; ++a)
		P.set_pair(a, m + a, DiffPoly::constant(ctx, 1)); // P^{t^a, th_a} = P^{th_a, t^a} = 1
	return P;
}

bool PoissonTensor::is_constant() const
{
	for (auto& row : entries_)
		for (auto& e : row)
			if (!e.is_zero() && !(e.terms().size() == 1 && e.terms().begin()->first.is_constant()))
				return false;
	return true;
}

DiffPoly poisson_bracket_finite(const PoissonTensor& P, const DiffPoly& u, const DiffPoly& v)
{
	const JetContext& ctx = P.ctx();
	if (u.ctx() != ctx || v.ctx() != ctx)
		throw ContextMismatch();
	require_order0(u, "poisson_bracket_finite");
	require_order0(v, "poisson_bracket_finite");
	int pu = require_parity(u, "poisson_bracket_finite");

	DiffPoly r(ctx);
	for (int a = 0; a < ctx.coords(); ++a) {
		DiffPoly du = partial(u, coord_var(ctx, a));
		if (du.is_zero())
			continue;
		for (int b = 0; b < ctx.coords(); ++b) {
			if (P.entry(a, b).is_zero())
				continue;
			DiffPoly dv = partial(v, coord_var(ctx, b));
			if (dv.is_zero())
				continue;
			int s = ((coord_parity(ctx, b) + P.nu()) * pu) & 1;
			DiffPoly term = P.entry(a, b) * du * dv;
			r += s ? term : -term; // overall minus sign from the definition
		}
	}
	return r;
}

PoissonCheck check_poisson(const PoissonTensor& P)
{
	const JetContext& ctx = P.ctx();
	const int n = ctx.coords();
	const int nu = P.nu();
	for (int b = 0; b < n; ++b)
		for (int c = 0; c < n; ++c)
			for (int d = 0; d < n; ++d) {
				DiffPoly sum(ctx);
				int idx[3] = {b, c, d};
				for (int rot = 0; rot < 3; ++rot) {
					int B = idx[rot % 3], C = idx[(rot + 1) % 3], D = idx[(rot + 2) % 3];
					for (int a = 0; a < n; ++a) {
						if (P.entry(B, a).is_zero())
							continue;
						DiffPoly dP = partial(P.entry(C, D), coord_var(ctx, a));
						if (dP.is_zero())
							continue;
						int s = (coord_parity(ctx, B) *
						         (coord_parity(ctx, a) + coord_parity(ctx, C) + nu)) &
						        1;
						DiffPoly term = P.entry(B, a) * dP;
						sum += s ? -term : term;
					}
				}
				if (!sum.is_zero())
					return PoissonCheck{false, b, c, d, sum};
			}
	return PoissonCheck{};
}

DiffPoly schouten_finite(const DiffPoly& u, const DiffPoly& v)
{
	const JetContext& ctx = u.ctx();
	if (v.ctx() != ctx)
		throw ContextMismatch();
	if (ctx.odd_count != ctx.even_count)
		throw std::invalid_argument("schouten_finite: needs an Omega-X context (n = m)");
	require_order0(u, "schouten_finite");
	require_order0(v, "schouten_finite");
	int su = u.gradings().schouten_degree;

	DiffPoly r(ctx);
	for (int a = 1; a <= ctx.even_count; ++a) {
		DiffPoly up = partial(u, VarKind::odd, a, 0);   // d^a u
		DiffPoly vl = partial(v, VarKind::even, a, 0);  // d_a v
		if (!up.is_zero() && !vl.is_zero()) {
			DiffPoly term = up * vl;
			r += (su & 1) ? -term : term;
		}
		DiffPoly ul = partial(u, VarKind::even, a, 0);
		DiffPoly vp = partial(v, VarKind::odd, a, 0);
		if (!ul.is_zero() && !vp.is_zero())
			r -= ul * vp;
	}
	return r;
}

PoissonTensor bivector_to_tensor(const DiffPoly& q)
{
	const JetContext& ctx = q.ctx();
	if (q.max_order() > 0)
		throw std::invalid_argument("bivector_to_tensor: jet order 0 required");
	if (!q.is_zero() && q.gradings().theta_degree != 2)
		throw GradingError("bivector_to_tensor: theta degree 2 required");
	JetContext base(ctx.even_count, 0);
	auto P = PoissonTensor::zero(base, 0);
	for (int a = 1; a <= ctx.even_count; ++a)
		for (int b = a + 1; b <= ctx.even_count; ++b) {
			DiffPoly comp = partial(partial(q, VarKind::odd, a, 0), VarKind::odd, b, 0);
			// strip the theta block: entries live on the even base
			DiffPoly e(base);
			for (auto& [m, cc] : comp.terms()) {
				Monomial mm;
				mm.even = m.even;
				e.add_term(mm, cc);
			}
			P.set_pair(a - 1, b - 1, e);
		}
	return P;
}

} // namespace varjet
