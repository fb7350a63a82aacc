#include "varjet/hamiltonian.hpp"

namespace varjet {

Metric::Metric(RatMatrix upper) : upper_(std::move(upper))
{
	if (!upper_.is_symmetric())
		throw std::invalid_argument("Metric: matrix must be symmetric");
	try {
		lower_ = upper_.inverse();
	} catch (const std::domain_error&) {
		throw std::invalid_argument("Metric: matrix must be invertible");
	}
}

DiffOperatorMatrix::DiffOperatorMatrix(JetContext ctx, int size)
    : ctx_(ctx), size_(size),
      entries_(size, std::vector<std::vector<std::pair<int, DiffPoly>>>(size))
{
	if (size < 1 || size > ctx.even_count)
		throw std::invalid_argument("DiffOperatorMatrix: size exceeds the even base");
}

void DiffOperatorMatrix::add(int a, int b, int k, const DiffPoly& coeff)
{
	if (coeff.ctx() != ctx_)
		throw ContextMismatch();
	for (auto& [m, c] : coeff.terms())
		if (m.theta_degree() > 0)
			throw std::invalid_argument("DiffOperatorMatrix: coefficients live on the even base");
	auto& cell = entries_.at(a - 1).at(b - 1);
	for (auto& [order, c] : cell)
		if (order == k) {
			c += coeff;
			return;
		}
	cell.push_back({k, coeff});
}

SkewAdjointCheck check_skew_adjoint(const DiffOperatorMatrix& D)
{
	// test argument: a fresh even coordinate appended to the context
	JetContext big(D.ctx().even_count + 1, D.ctx().odd_count);
	DiffPoly u = DiffPoly::var(big, VarKind::even, big.even_count, 0);
	for (int a = 1; a <= D.size(); ++a)
		for (int b = 1; b <= D.size(); ++b) {
			DiffPoly sum(big);
			for (auto& [k, c] : D.entry(a, b))
				sum += c.with_context(big) * total_derivative(u, k);
			for (auto& [k, c] : D.entry(b, a)) {
				DiffPoly t = total_derivative(c.with_context(big) * u, k);
				sum += (k & 1) ? -t : t;
			}
			if (!sum.is_zero())
				return SkewAdjointCheck{false, a, b, sum};
		}
	return SkewAdjointCheck{};
}

LocalFunctional operator_to_bivector(const DiffOperatorMatrix& D)
{
	auto skew = check_skew_adjoint(D);
	if (!skew)
		throw std::invalid_argument("operator_to_bivector: operator is not formally skew-adjoint");
	const JetContext& ctx = D.ctx();
	if (ctx.odd_count != ctx.even_count)
		throw std::invalid_argument("operator_to_bivector: needs an Omega-X context");
	DiffPoly q(ctx);
	for (int a = 1; a <= D.size(); ++a)
		for (int b = 1; b <= D.size(); ++b)
			for (auto& [k, c] : D.entry(a, b))
				q += DiffPoly::var(ctx, VarKind::odd, a, 0) * c *
				     DiffPoly::var(ctx, VarKind::odd, b, k);
	return LocalFunctional(q);
}

HamiltonianCheck is_hamiltonian(const LocalFunctional& q)
{
	if (q.rep().gradings().schouten_degree != 1)
		throw GradingError("is_hamiltonian: schouten degree 1 required");
	LocalFunctional s = schouten_local(q, q);
	HamiltonianCheck r;
	r.ok = s.is_zero(r.witness);
	return r;
}

LocalFunctional delta_Q(const LocalFunctional& q, const LocalFunctional& u)
{
	if (!is_hamiltonian(q))
		throw std::invalid_argument("delta_Q: operator is not Hamiltonian");
	return schouten_local(q, u);
}

LocalFunctional hydrodynamic_operator(const Metric& eta)
{
	const int m = eta.dim();
	JetContext ctx(m, m);
	DiffPoly h(ctx);
	for (int a = 1; a <= m; ++a)
		for (int b = 1; b <= m; ++b) {
			const Rat& e = eta.upper()(a - 1, b - 1);
			if (e == 0)
				continue;
			h += DiffPoly::var(ctx, VarKind::odd, a, 0) *
			     DiffPoly::var(ctx, VarKind::odd, b, 1) * (e / 2);
		}
	return LocalFunctional(h);
}

LocalFunctional d_eta_formula(const Metric& eta, const LocalFunctional& uf)
{
	const DiffPoly& u = uf.rep();
	const JetContext& ctx = u.ctx();
	if (ctx.even_count != eta.dim() || ctx.odd_count != eta.dim())
		throw ContextMismatch();
	DiffPoly r(ctx);
	for (int a = 1; a <= eta.dim(); ++a)
		for (int b = 1; b <= eta.dim(); ++b) {
			const Rat& e = eta.upper()(a - 1, b - 1);
			if (e == 0)
				continue;
			for (int k = 0; k <= u.max_order(VarKind::even, b); ++k) {
				DiffPoly du = partial(u, VarKind::even, b, k);
				if (du.is_zero())
					continue;
				r -= DiffPoly::var(ctx, VarKind::odd, a, k + 1) * du * e;
			}
		}
	return LocalFunctional(r);
}

LiftCheck check_lift(const LocalFunctional& q, const ConeElement& lift)
{
	LiftCheck r;
	r.projects = integrate(lift) == q;
	ConeElement mc = cone_diff(lift) + cone_bracket(lift, lift) * Rat(1, 2);
	r.body_residual = mc.body();
	r.tilde_residual = mc.tilde();
	r.mc_body = mc.body().is_zero();
	r.mc_tilde = mc.tilde().is_zero();
	r.ok = r.projects && r.mc_body && r.mc_tilde;
	return r;
}

LiftResult compute_lift(const DiffPoly& u)
{
	if (!is_hamiltonian(LocalFunctional(u)))
		throw std::invalid_argument("compute_lift: class is not Hamiltonian");
	DiffPoly self = lambda_bracket(u, u);
	// assert rather than assume exactness; NotExact propagates otherwise
	DiffPoly tilde = invert_total_derivative(self * Rat(-1, 2));
	LiftResult res{ConeElement(u, tilde), lambda_bracket(u, tilde).is_zero()};
	return res;
}

DNSpec::DNSpec(Metric eta_, std::vector<RatMatrix> A_, RatMatrix B_)
    : eta(std::move(eta_)), A(std::move(A_)), B(std::move(B_))
{
	const int m = eta.dim();
	if (int(A.size()) != m)
		throw std::invalid_argument("DNSpec: need one A-slice per coordinate");
	for (auto& slice : A)
		if (!slice.is_skew())
			throw std::invalid_argument("DNSpec: A^{ab}_c must be skew in (a,b)");
	if (!B.is_skew())
		throw std::invalid_argument("DNSpec: B must be skew");
}

DiffOperatorMatrix dn_operator(const DNSpec& spec)
{
	const int m = spec.dim();
	JetContext ctx(m, m);
	DiffOperatorMatrix D(ctx, m);
	for (int a = 1; a <= m; ++a)
		for (int b = 1; b <= m; ++b) {
			if (spec.eta.upper()(a - 1, b - 1) != 0)
				D.add(a, b, 1, DiffPoly::constant(ctx, spec.eta.upper()(a - 1, b - 1)));
			DiffPoly order0(ctx, spec.B(a - 1, b - 1));
			for (int c = 1; c <= m; ++c) {
				const Rat& v = spec.A[c - 1](a - 1, b - 1);
				if (v != 0)
					order0 += DiffPoly::var(ctx, VarKind::even, c, 0) * v;
			}
			if (!order0.is_zero())
				D.add(a, b, 0, order0);
		}
	return D;
}

DNReport dn_check(const DNSpec& spec)
{
	const int m = spec.dim();
	DNReport rep;
	auto A = [&](int a, int b, int c) -> const Rat& { return spec.A[c - 1](a - 1, b - 1); };

	// (i) Jacobi: sum_cyc(a,b,c) A^{ab}_e A^{ec}_d = 0 for all a,b,c,d
	for (int a = 1; a <= m && rep.jacobi; ++a)
		for (int b = 1; b <= m && rep.jacobi; ++b)
			for (int c = 1; c <= m && rep.jacobi; ++c)
				for (int d = 1; d <= m && rep.jacobi; ++d) {
					Rat sum = 0;
					int idx[3] = {a, b, c};
					for (int rot = 0; rot < 3; ++rot)
						for (int e = 1; e <= m; ++e)
							sum += A(idx[rot % 3], idx[(rot + 1) % 3], e) *
							       A(e, idx[(rot + 2) % 3], d);
					if (sum != 0)
						rep.jacobi = false;
				}

	// (ii) ad-invariance: eta([e^a,e^b], e^c) + eta(e^b, [e^a,e^c]) = 0
	for (int a = 1; a <= m && rep.killing; ++a)
		for (int b = 1; b <= m && rep.killing; ++b)
			for (int c = 1; c <= m && rep.killing; ++c) {
				Rat sum = 0;
				for (int d = 1; d <= m; ++d)
					sum += A(a, b, d) * spec.eta.upper()(d - 1, c - 1) +
					       A(a, c, d) * spec.eta.upper()(b - 1, d - 1);
				if (sum != 0)
					rep.killing = false;
			}

	// (iii) 2-cocycle: sum_cyc(a,b,c) A^{ab}_d B^{dc} = 0
	for (int a = 1; a <= m && rep.cocycle; ++a)
		for (int b = 1; b <= m && rep.cocycle; ++b)
			for (int c = 1; c <= m && rep.cocycle; ++c) {
				Rat sum = 0;
				int idx[3] = {a, b, c};
				for (int rot = 0; rot < 3; ++rot)
					for (int d = 1; d <= m; ++d)
						sum += A(idx[rot % 3], idx[(rot + 1) % 3], d) *
						       spec.B(d - 1, idx[(rot + 2) % 3] - 1);
				if (sum != 0)
					rep.cocycle = false;
			}

	// (iv) direct engine check of the assembled operator
	rep.direct = bool(is_hamiltonian(operator_to_bivector(dn_operator(spec))));

	if (!rep.equivalent())
		throw std::logic_error("dn_check: algebraic conditions disagree with the direct check");
	return rep;
}

DiffOperatorMatrix kdv_operator()
{
	JetContext ctx(1, 1);
	DiffOperatorMatrix d(ctx, 1);
	d.add(1, 1, 3, DiffPoly::constant(ctx, Rat(1, 8)));
	d.add(1, 1, 1, DiffPoly::var(ctx, VarKind::even, 1, 0));
	d.add(1, 1, 0, DiffPoly::var(ctx, VarKind::even, 1, 1) * Rat(1, 2));
	return d;
}

LocalFunctional kdv_bivector()
{
	JetContext ctx(1, 1);
	auto th = [&](int k) { return DiffPoly::var(ctx, VarKind::odd, 1, k); };
	DiffPoly q = th(0) * th(3) * Rat(1, 8) +
	             DiffPoly::var(ctx, VarKind::even, 1, 0) * th(0) * th(1);
	return LocalFunctional(q);
}

DiffPoly kdv_lift_body(const Rat& a)
{
	JetContext ctx(1, 1);
	auto th = [&](int k) { return DiffPoly::var(ctx, VarKind::odd, 1, k); };
	DiffPoly u = th(0) * th(3) * Rat(1, 8) +
	             DiffPoly::var(ctx, VarKind::even, 1, 0) * th(0) * th(1);
	if (a != 0)
		u += total_derivative(th(0) * th(2)) * a;
	return u;
}

DiffPoly kdv_lift_tilde(const Rat& c)
{
	JetContext ctx(1, 1);
	auto th = [&](int k) { return DiffPoly::var(ctx, VarKind::odd, 1, k); };
	return th(0) * th(1) * th(2) * c;
}

} // namespace varjet
