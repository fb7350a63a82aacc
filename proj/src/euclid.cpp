#include "varjet/euclid.hpp"

namespace varjet {

namespace {

void require_exterior(const DiffPoly& u, int n, const char* who)
{
	if (u.ctx().even_count != n || u.ctx().odd_count != n)
		throw ContextMismatch();
	for (auto& [m, c] : u.terms())
		if (!m.even.empty() || (!m.odd.empty() && m.max_order() > 0))
			throw std::invalid_argument(std::string(who) +
			                            ": exterior elements use order-0 odd variables only");
}

} // namespace

EuclidElement::EuclidElement(DiffPoly at, DiffPoly a)
    : alpha_tilde(std::move(at)), alpha(std::move(a))
{
	if (alpha_tilde.ctx() != alpha.ctx())
		throw ContextMismatch();
}

int EuclidElement::degree() const
{
	std::optional<int> p;
	if (!alpha_tilde.is_zero())
		p = alpha_tilde.gradings().theta_degree - 1;
	if (!alpha.is_zero()) {
		int pa = alpha.gradings().theta_degree - 2;
		if (p && *p != pa)
			throw GradingError("EuclidElement: components of different degree");
		p = pa;
	}
	return p.value_or(0);
}

DiffPoly h_bracket(const Metric& eta, const DiffPoly& alpha, const DiffPoly& beta)
{
	const int n = eta.dim();
	require_exterior(alpha, n, "h_bracket");
	require_exterior(beta, n, "h_bracket");
	int p = alpha.gradings().theta_degree - 2;

	DiffPoly r(alpha.ctx());
	for (int a = 1; a <= n; ++a) {
		DiffPoly da = partial(alpha, VarKind::odd, a, 0);
		if (da.is_zero())
			continue;
		for (int b = 1; b <= n; ++b) {
			const Rat& e = eta.lower()(a - 1, b - 1);
			if (e == 0)
				continue;
			DiffPoly db = partial(beta, VarKind::odd, b, 0);
			if (db.is_zero())
				continue;
			DiffPoly term = da * db * e;
			r += (p & 1) ? term : -term; // (-1)^{p+1}
		}
	}
	return r;
}

DiffPoly h_action(const Metric& eta, const DiffPoly& alpha, const DiffPoly& beta_tilde)
{
	const int n = eta.dim();
	require_exterior(alpha, n, "h_action");
	require_exterior(beta_tilde, n, "h_action");
	DiffPoly r(alpha.ctx());
	for (int a = 1; a <= n; ++a) {
		DiffPoly da = partial(alpha, VarKind::odd, a, 0);
		if (da.is_zero())
			continue;
		for (int b = 1; b <= n; ++b) {
			const Rat& e = eta.lower()(a - 1, b - 1);
			if (e == 0)
				continue;
			DiffPoly db = partial(beta_tilde, VarKind::odd, b, 0);
			if (db.is_zero())
				continue;
			r -= da * db * e;
		}
	}
	return r;
}

EuclidElement g_bracket(const Metric& eta, const EuclidElement& x, const EuclidElement& y)
{
	int p = x.degree(), q = y.degree();
	DiffPoly module = h_action(eta, x.alpha, y.alpha_tilde);
	DiffPoly back = h_action(eta, y.alpha, x.alpha_tilde);
	module += ((p * q) & 1) ? back : -back;
	return {std::move(module), h_bracket(eta, x.alpha, y.alpha)};
}

McLieReport mc_to_lie(const Metric& eta, const EuclidElement& x)
{
	const int n = eta.dim();
	if (x.degree() != 1 && !x.is_zero())
		throw GradingError("mc_to_lie: degree-1 element required");
	JetContext ctx = x.ctx();
	McLieReport rep;
	rep.structure.assign(n, RatMatrix(n, n));
	rep.cocycle = RatMatrix(n, n);

	auto theta = [&](int a) {
		return EuclidElement(DiffPoly(ctx), DiffPoly::var(ctx, VarKind::odd, a, 0));
	};

	// [(a,x'),(b,y')]_{(a~,a)} = [[(a~,a),(a,x')],(b,y')] : the Lambda^1
	// slot gives the bracket, the scalar slot the cocycle
	for (int a = 1; a <= n; ++a) {
		EuclidElement inner = g_bracket(eta, x, theta(a));
		for (int b = 1; b <= n; ++b) {
			EuclidElement full = g_bracket(eta, inner, theta(b));
			rep.cocycle(a - 1, b - 1) = full.alpha_tilde.constant_term();
			for (int c = 1; c <= n; ++c)
				rep.structure[c - 1](a - 1, b - 1) =
				    full.alpha.coeff(DiffPoly::var(ctx, VarKind::odd, c, 0)
				                         .terms()
				                         .begin()
				                         ->first);
		}
	}

	// Jacobi for the extracted structure constants
	rep.jacobi = true;
	auto S = [&](int a, int b, int c) -> const Rat& { return rep.structure[c - 1](a - 1, b - 1); };
	for (int a = 1; a <= n && rep.jacobi; ++a)
		for (int b = 1; b <= n && rep.jacobi; ++b)
			for (int c = 1; c <= n && rep.jacobi; ++c)
				for (int d = 1; d <= n && rep.jacobi; ++d) {
					Rat sum = 0;
					int idx[3] = {a, b, c};
					for (int rot = 0; rot < 3; ++rot)
						for (int e = 1; e <= n; ++e)
							sum += S(idx[rot % 3], idx[(rot + 1) % 3], e) *
							       S(e, idx[(rot + 2) % 3], d);
					if (sum != 0)
						rep.jacobi = false;
				}

	// cocycle condition: sum_cyc omega([th_a,th_b], th_c) = 0
	rep.cocycle_ok = true;
	for (int a = 1; a <= n && rep.cocycle_ok; ++a)
		for (int b = 1; b <= n && rep.cocycle_ok; ++b)
			for (int c = 1; c <= n && rep.cocycle_ok; ++c) {
				Rat sum = 0;
				int idx[3] = {a, b, c};
				for (int rot = 0; rot < 3; ++rot)
					for (int d = 1; d <= n; ++d)
						sum += S(idx[rot % 3], idx[(rot + 1) % 3], d) *
						       rep.cocycle(d - 1, idx[(rot + 2) % 3] - 1);
				if (sum != 0)
					rep.cocycle_ok = false;
			}

	rep.mc = g_bracket(eta, x, x).is_zero();
	if (rep.mc != (rep.jacobi && rep.cocycle_ok))
		throw std::logic_error("mc_to_lie: dictionary equivalence failed");
	return rep;
}

EuclidElement translation_act(const Metric& eta, const std::vector<Rat>& v,
                              const EuclidElement& x)
{
	const int n = eta.dim();
	if (int(v.size()) != n)
		throw std::invalid_argument("translation_act: one pairing value per coordinate");
	if (x.degree() != 1 && !x.is_zero())
		throw GradingError("translation_act: degree-1 element required");
	JetContext ctx = x.ctx();

	// v(alpha)(th_a, th_b) = v([th_a, th_b]_alpha): assemble the target
	// cocycle matrix, then solve for the Lambda^2 element evaluating to it.
	EuclidElement alpha_only(DiffPoly(ctx), x.alpha);
	McLieReport base = mc_to_lie(eta, alpha_only);
	RatMatrix target(n, n);
	for (int a = 1; a <= n; ++a)
		for (int b = 1; b <= n; ++b) {
			Rat sum = 0;
			for (int c = 1; c <= n; ++c)
				sum += base.structure[c - 1](a - 1, b - 1) * v[c - 1];
			target(a - 1, b - 1) = sum;
		}

	// evaluation of a basis two-form th_c th_d at (th_a, th_b):
	// -eta_{ac} eta_{bd} + eta_{ad} eta_{bc}
	const int dim2 = n * (n - 1) / 2;
	std::vector<std::pair<int, int>> basis;
	for (int c = 1; c <= n; ++c)
		for (int d = c + 1; d <= n; ++d)
			basis.push_back({c, d});
	RatMatrix M(dim2, dim2), rhs(dim2, 1);
	int row = 0;
	for (int a = 1; a <= n; ++a)
		for (int b = a + 1; b <= n; ++b, ++row) {
			for (int col = 0; col < dim2; ++col) {
				auto [c, d] = basis[col];
				M(row, col) = -eta.lower()(a - 1, c - 1) * eta.lower()(b - 1, d - 1) +
				              eta.lower()(a - 1, d - 1) * eta.lower()(b - 1, c - 1);
			}
			rhs(row, 0) = target(a - 1, b - 1);
		}
	RatMatrix sol = M.solve(rhs);
	DiffPoly shift(ctx);
	for (int col = 0; col < dim2; ++col) {
		auto [c, d] = basis[col];
		if (sol(col, 0) != 0)
			shift += DiffPoly::var(ctx, VarKind::odd, c, 0) *
			         DiffPoly::var(ctx, VarKind::odd, d, 0) * sol(col, 0);
	}
	return {x.alpha_tilde + shift, x.alpha};
}

namespace {

/// sum_k eta^{ab} th[a, k+shift] d_{k,b}: the common shape of d and d0.
DiffPoly eta_theta_op(const Metric& eta, const DiffPoly& u, int shift)
{
	const JetContext& ctx = u.ctx();
	if (ctx.even_count != eta.dim() || ctx.odd_count != eta.dim())
		throw ContextMismatch();
	DiffPoly r(ctx);
	for (int b = 1; b <= eta.dim(); ++b) {
		for (int k = 0; k <= u.max_order(VarKind::even, b); ++k) {
			DiffPoly du = partial(u, VarKind::even, b, k);
			if (du.is_zero())
				continue;
			for (int a = 1; a <= eta.dim(); ++a) {
				const Rat& e = eta.upper()(a - 1, b - 1);
				if (e == 0)
					continue;
				r += DiffPoly::var(ctx, VarKind::odd, a, k + shift) * du * e;
			}
		}
	}
	return r;
}

} // namespace

DiffPoly d_op(const Metric& eta, const DiffPoly& u) { return eta_theta_op(eta, u, 1); }
DiffPoly d0_op(const Metric& eta, const DiffPoly& u) { return eta_theta_op(eta, u, 0); }

DiffPoly d_eta_op(const Metric& eta, const DiffPoly& u)
{
	return total_derivative(d0_op(eta, u)) * Rat(1, 2) - d_op(eta, u);
}

ConeElement d_eta_cone(const Metric& eta, const ConeElement& z)
{
	// odd operators graded-commute with eps
	return {d_eta_op(eta, z.body()), -d_eta_op(eta, z.tilde())};
}

ConeElement cone_total_diff(const Metric& eta, const ConeElement& z)
{
	return cone_diff(z) + d_eta_cone(eta, z);
}

ConeElement cone_minus_d(const Metric& eta, const ConeElement& z)
{
	return cone_diff(z) - ConeElement(d_op(eta, z.body()), -d_op(eta, z.tilde()));
}

DiffPoly tau0(const DiffPoly& alpha) { return alpha; }

ConeElement tau(const Metric& eta, const EuclidElement& x)
{
	const int n = eta.dim();
	require_exterior(x.alpha_tilde, n, "tau");
	require_exterior(x.alpha, n, "tau");
	int p = x.degree();
	JetContext ctx = x.ctx();

	DiffPoly body = tau0(x.alpha_tilde);
	for (int a = 1; a <= n; ++a)
		for (int b = 1; b <= n; ++b) {
			const Rat& e = eta.lower()(a - 1, b - 1);
			if (e == 0)
				continue;
			DiffPoly db = partial(tau0(x.alpha), VarKind::odd, b, 0);
			if (db.is_zero())
				continue;
			body += DiffPoly::var(ctx, VarKind::even, a, 0) * db * e;
		}
	DiffPoly tilde = tau0(x.alpha) * Rat(-p, 2);
	return {std::move(body), std::move(tilde)};
}

ConeElement T_map(const Metric& eta, const ConeElement& z)
{
	return {z.body(), z.tilde() + d0_op(eta, z.body()) * Rat(1, 2)};
}

LocalFunctional sigma(const Metric& eta, const EuclidElement& x)
{
	return integrate(tau(eta, x));
}

} // namespace varjet
