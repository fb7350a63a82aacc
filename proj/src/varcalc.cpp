#include "varjet/varcalc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <tuple>

namespace varjet {

DiffPoly total_derivative(const DiffPoly& u)
{
	DiffPoly r(u.ctx());
	for (auto& [m, c] : u.terms()) {
		// even factors: exponent rule
		for (size_t i = 0; i < m.even.size(); ++i) {
			Monomial d = m;
			auto& [v, e] = d.even[i];
			Rat coeff = c * e;
			VarRef bumped{v.index, v.order + 1};
			if (--e == 0)
				d.even.erase(d.even.begin() + i);
			Monomial factor;
			factor.even.push_back({bumped, 1});
			Monomial prod;
			int sign = mul_monomials(d, factor, prod);
			r.add_term(prod, sign > 0 ? coeff : -coeff);
		}
		// odd factors: in-place order bump; ordering by (index, order)
		// keeps the factor's position, so no sign appears
		for (size_t i = 0; i < m.odd.size(); ++i) {
			if (i + 1 < m.odd.size() && m.odd[i + 1].index == m.odd[i].index &&
			    m.odd[i + 1].order == m.odd[i].order + 1)
				continue; // bumped factor already present: term dies
			Monomial d = m;
			d.odd[i].order += 1;
			r.add_term(d, c);
		}
	}
	return r;
}

DiffPoly total_derivative(const DiffPoly& u, int k)
{
	DiffPoly r = u;
	for (int i = 0; i < k; ++i)
		r = total_derivative(r);
	return r;
}

DiffPoly euler(const DiffPoly& u, VarKind kind, int index, int k)
{
	DiffPoly r(u.ctx());
	int top = u.max_order(kind, index);
	for (int i = 0; k + i <= top; ++i) {
		DiffPoly d = partial(u, kind, index, k + i);
		if (d.is_zero())
			continue;
		DiffPoly term = total_derivative(d, i) * binomial(k + i, k);
		r += (i & 1) ? -term : term;
	}
	return r;
}

CoordinateMap::CoordinateMap(JetContext ctx, std::vector<DiffPoly> even_targets,
                             std::vector<DiffPoly> odd_targets)
    : ctx_(ctx), even_(std::move(even_targets)), odd_(std::move(odd_targets))
{
	if (int(even_.size()) != ctx.even_count || int(odd_.size()) != ctx.odd_count)
		throw std::invalid_argument("CoordinateMap: one target per coordinate");
	auto check = [&](const DiffPoly& t, int want_parity) {
		if (t.ctx() != ctx_)
			throw ContextMismatch();
		if (t.max_order() > 0)
			throw std::invalid_argument("CoordinateMap: targets must have jet order 0");
		auto p = t.parity_opt();
		if (!p || (!t.is_zero() && *p != want_parity))
			throw GradingError("CoordinateMap: target parity mismatch");
	};
	for (auto& t : even_)
		check(t, 0);
	for (auto& t : odd_)
		check(t, 1);

	const int n = ctx_.coords();
	jac_.assign(n, std::vector<DiffPoly>(n, DiffPoly(ctx_)));
	for (int a = 0; a < n; ++a) {
		JetVar va{ctx_.coord_is_odd(a) ? VarKind::odd : VarKind::even, ctx_.coord_index(a), 0};
		for (int b = 0; b < n; ++b)
			jac_[a][b] = partial(target(ctx_.coord_is_odd(b) ? VarKind::odd : VarKind::even,
			                            ctx_.coord_index(b)),
			                     va);
	}
}

CoordinateMap CoordinateMap::identity(JetContext ctx)
{
	std::vector<DiffPoly> ev, od;
	for (int a = 1; a <= ctx.even_count; ++a)
		ev.push_back(DiffPoly::var(ctx, VarKind::even, a, 0));
	for (int b = 1; b <= ctx.odd_count; ++b)
		od.push_back(DiffPoly::var(ctx, VarKind::odd, b, 0));
	return CoordinateMap(ctx, std::move(ev), std::move(od));
}

const DiffPoly& CoordinateMap::target(VarKind kind, int index) const
{
	return kind == VarKind::even ? even_.at(index - 1) : odd_.at(index - 1);
}

DiffPoly pullback(const CoordinateMap& f, const DiffPoly& u)
{
	if (u.ctx() != f.ctx())
		throw ContextMismatch();
	const JetContext& ctx = f.ctx();
	// cache f* x_k = d^k (f* x_0) per (kind, index, order)
	std::map<std::tuple<int, int, int>, DiffPoly> image;
	auto var_image = [&](VarKind kind, int index, int order) -> const DiffPoly& {
		auto key = std::make_tuple(kind == VarKind::odd, index, order);
		auto it = image.find(key);
		if (it != image.end())
			return it->second;
		DiffPoly img = f.target(kind, index);
		int have = 0;
		for (int k = order; k >= 1; --k) {
			auto lower = image.find(std::make_tuple(kind == VarKind::odd, index, k));
			if (lower != image.end()) {
				img = lower->second;
				have = k;
				break;
			}
		}
		for (int k = have; k < order; ++k) {
			img = total_derivative(img);
			image.emplace(std::make_tuple(kind == VarKind::odd, index, k + 1), img);
		}
		return image.emplace(key, std::move(img)).first->second;
	};

	DiffPoly r(ctx);
	for (auto& [m, c] : u.terms()) {
		DiffPoly term = DiffPoly::constant(ctx, c);
		for (auto& [v, e] : m.even) {
			const DiffPoly& img = var_image(VarKind::even, v.index, v.order);
			for (int i = 0; i < e; ++i)
				term = term * img;
		}
		for (auto& v : m.odd)
			term = term * var_image(VarKind::odd, v.index, v.order);
		r += term;
	}
	return r;
}

CoordinateMap CoordinateMap::compose(const CoordinateMap& f, const CoordinateMap& g)
{
	std::vector<DiffPoly> ev, od;
	for (int a = 1; a <= f.ctx().even_count; ++a)
		ev.push_back(pullback(f, g.target(VarKind::even, a)));
	for (int b = 1; b <= f.ctx().odd_count; ++b)
		od.push_back(pullback(f, g.target(VarKind::odd, b)));
	return CoordinateMap(f.ctx(), std::move(ev), std::move(od));
}

namespace {

/// Applies sum_x c(order) * x_{order+shift} d_{x,order} term-wise, the
/// common shape of rho and H.
DiffPoly weighted_shift(const DiffPoly& u, int shift, const std::function<long(int)>& weight)
{
	DiffPoly r(u.ctx());
	for (auto& [m, c] : u.terms()) {
		for (size_t i = 0; i < m.even.size(); ++i) {
			auto [v, e] = m.even[i];
			long w = weight(v.order);
			if (w == 0)
				continue;
			Monomial d = m;
			Rat coeff = c * e * w;
			if (--d.even[i].second == 0)
				d.even.erase(d.even.begin() + i);
			Monomial factor;
			factor.even.push_back({VarRef{v.index, v.order + shift}, 1});
			Monomial prod;
			int sign = mul_monomials(d, factor, prod);
			r.add_term(prod, sign > 0 ? coeff : -coeff);
		}
		for (size_t i = 0; i < m.odd.size(); ++i) {
			auto v = m.odd[i];
			long w = weight(v.order);
			if (w == 0)
				continue;
			// in-place order shift, like the total derivative
			Monomial d = m;
			d.odd.erase(d.odd.begin() + i);
			Monomial factor;
			factor.odd.push_back(VarRef{v.index, v.order + shift});
			Monomial prod;
			int sign = mul_monomials(factor, d, prod);
			// the stripped factor sat at position i: left-derivative sign
			if (i & 1)
				sign = -sign;
			if (sign != 0)
				r.add_term(prod, sign > 0 ? c * w : -(c * w));
		}
	}
	return r;
}

} // namespace

DiffPoly sl2_rho(const DiffPoly& u)
{
	// rho = sum k(k+1) x_k d_{k+1}: acts on order k+1, lands at order k
	return weighted_shift(u, -1, [](int order) { return long(order - 1) * order; });
}

DiffPoly sl2_weight(const DiffPoly& u)
{
	return weighted_shift(u, 0, [](int order) { return long(order); });
}

std::string ExactnessWitness::describe() const
{
	std::ostringstream os;
	if (constant_term)
		os << "constant term = " << to_string(value);
	else
		os << "euler_0(" << (kind == VarKind::even ? "t" : "th") << index
		   << ") = " << to_string(value);
	return os.str();
}

bool is_exact(const DiffPoly& u, ExactnessWitness& w)
{
	Rat c0 = u.constant_term();
	if (c0 != 0) {
		w.constant_term = true;
		w.value = DiffPoly::constant(u.ctx(), c0);
		return false;
	}
	for (int a = 1; a <= u.ctx().even_count; ++a) {
		DiffPoly e = euler(u, VarKind::even, a, 0);
		if (!e.is_zero()) {
			w = ExactnessWitness{false, VarKind::even, a, e};
			return false;
		}
	}
	for (int b = 1; b <= u.ctx().odd_count; ++b) {
		DiffPoly e = euler(u, VarKind::odd, b, 0);
		if (!e.is_zero()) {
			w = ExactnessWitness{false, VarKind::odd, b, e};
			return false;
		}
	}
	return true;
}

bool is_exact(const DiffPoly& u)
{
	ExactnessWitness w;
	return is_exact(u, w);
}

namespace {

struct TopVar {
	VarKind kind;
	int index;
	int order;
};

/// Greatest variable at the maximal jet order present (odd block ranks
/// above even, then by index).
std::optional<TopVar> top_variable(const DiffPoly& u)
{
	std::optional<TopVar> best;
	auto consider = [&](VarKind kind, int index, int order) {
		if (order == 0)
			return; // order-0 terms are never integrable targets
		if (!best || order > best->order ||
		    (order == best->order &&
		     std::pair(kind == VarKind::odd, index) > std::pair(best->kind == VarKind::odd, best->index)))
			best = TopVar{kind, index, order};
	};
	for (auto& [m, c] : u.terms()) {
		for (auto& [v, e] : m.even)
			consider(VarKind::even, v.index, v.order);
		for (auto& v : m.odd)
			consider(VarKind::odd, v.index, v.order);
	}
	return best;
}

bool monomial_has(const Monomial& m, VarKind kind, const VarRef& ref, int* exp = nullptr)
{
	if (kind == VarKind::even) {
		for (auto& [v, e] : m.even)
			if (v == ref) {
				if (exp)
					*exp = e;
				return true;
			}
		return false;
	}
	return std::binary_search(m.odd.begin(), m.odd.end(), ref);
}

/// One descent step: formally integrates every term containing x at its
/// top order against x at order-1 and subtracts the correction. `strict`
/// demands the invariants exactness guarantees (linearity in the top
/// variable); lenient mode sidelines nonconforming terms into `residual`.
bool descend_step(DiffPoly& u, DiffPoly& primitive, DiffPoly& residual, bool strict)
{
	auto tv = top_variable(u);
	if (!tv)
		return false;
	VarRef top{tv->index, tv->order};
	VarRef below{tv->index, tv->order - 1};

	DiffPoly w(u.ctx());
	DiffPoly keep(u.ctx());
	for (auto& [m, c] : u.terms()) {
		int e_top = 0;
		if (!monomial_has(m, tv->kind, top, &e_top))
			continue;
		bool linear = tv->kind == VarKind::odd || e_top == 1;
		if (!linear || (tv->kind == VarKind::odd && monomial_has(m, tv->kind, below))) {
			if (strict)
				throw std::logic_error("invert_total_derivative: non-integrable top term");
			keep.add_term(m, c);
			continue;
		}
		Monomial d = m;
		if (tv->kind == VarKind::even) {
			// c x_K (x_{K-1})^e M' -> c/(e+1) (x_{K-1})^{e+1} M'
			int e_below = 0;
			for (size_t i = 0; i < d.even.size(); ++i)
				if (d.even[i].first == below)
					e_below = d.even[i].second;
			for (size_t i = 0; i < d.even.size(); ++i)
				if (d.even[i].first == top) {
					d.even.erase(d.even.begin() + i);
					break;
				}
			bool merged = false;
			for (auto& [v, e] : d.even)
				if (v == below) {
					++e;
					merged = true;
					break;
				}
			if (!merged) {
				d.even.push_back({below, 1});
				std::sort(d.even.begin(), d.even.end());
			}
			w.add_term(d, c / (e_below + 1));
		} else {
			// ordering by (index, order): the replacement keeps its slot
			for (auto& v : d.odd)
				if (v == top) {
					v = below;
					break;
				}
			w.add_term(d, c);
		}
	}
	if (!w.is_zero()) {
		primitive += w;
		u -= total_derivative(w);
	}
	if (!keep.is_zero()) {
		residual += keep;
		u -= keep;
	}
	return !w.is_zero() || !keep.is_zero();
}

} // namespace

DiffPoly invert_total_derivative(const DiffPoly& u)
{
	ExactnessWitness w;
	if (!is_exact(u, w))
		throw NotExact(w);
	DiffPoly rest = u;
	DiffPoly primitive(u.ctx());
	DiffPoly residual(u.ctx());
	// strictly decreasing (order, variable) measure on exact inputs; the
	// cap only guards against internal logic errors
	for (int step = 0; step < 100000 && !rest.is_zero(); ++step)
		if (!descend_step(rest, primitive, residual, /*strict=*/true))
			break;
	assert(residual.is_zero());
	if (!rest.is_zero())
		throw std::logic_error("invert_total_derivative: descent failed to terminate");
	return primitive;
}

DiffPoly reduce_representative(const DiffPoly& u)
{
	DiffPoly rest = u;
	DiffPoly primitive(u.ctx());
	DiffPoly residual(u.ctx());
	for (int step = 0; step < 2000; ++step)
		if (!descend_step(rest, primitive, residual, /*strict=*/false))
			break;
	return rest + residual;
}

} // namespace varjet
