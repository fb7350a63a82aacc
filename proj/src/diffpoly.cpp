#include "varjet/diffpoly.hpp"

#include <algorithm>
#include <sstream>

namespace varjet {

DiffPoly DiffPoly::var(JetContext ctx, JetVar v)
{
	int limit = v.kind == VarKind::even ? ctx.even_count : ctx.odd_count;
	if (v.index < 1 || v.index > limit)
		throw std::out_of_range("variable index outside declared context");
	if (v.order < 0)
		throw std::out_of_range("negative jet order");
	Monomial m;
	if (v.kind == VarKind::even)
		m.even.push_back({VarRef{v.index, v.order}, 1});
	else
		m.odd.push_back(VarRef{v.index, v.order});
	DiffPoly u(ctx);
	u.terms_[m] = 1;
	return u;
}

void DiffPoly::add_term(const Monomial& m, const Rat& c)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

DiffPoly DiffPoly::operator-() const
{
	DiffPoly r(ctx_);
	for (auto& [m, c] : terms_)
		r.terms_[m] = -c;
	return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o)
{
	if (ctx_ != o.ctx_)
		throw ContextMismatch();
	for (auto& [m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o)
{
	if (ctx_ != o.ctx_)
		throw ContextMismatch();
	for (auto& [m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const
{
	DiffPoly r = *this;
	r += o;
	return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const
{
	DiffPoly r = *this;
	r -= o;
	return r;
}

DiffPoly DiffPoly::operator*(const Rat& c) const
{
	DiffPoly r(ctx_);
	if (c == 0)
		return r;
	for (auto& [m, k] : terms_)
		r.terms_[m] = k * c;
	return r;
}

int mul_monomials(const Monomial& a, const Monomial& b, Monomial& out)
{
	out.even.clear();
	out.odd.clear();

	// even parts: merge, adding exponents
	auto i = a.even.begin();
	auto j = b.even.begin();
	while (i != a.even.end() && j != b.even.end()) {
		if (i->first < j->first)
			out.even.push_back(*i++);
		else if (j->first < i->first)
			out.even.push_back(*j++);
		else {
			out.even.push_back({i->first, i->second + j->second});
			++i, ++j;
		}
	}
	out.even.insert(out.even.end(), i, a.even.end());
	out.even.insert(out.even.end(), j, b.even.end());

	// odd parts: merge counting inversions; a duplicate kills the term
	int inversions = 0;
	auto p = a.odd.begin();
	auto q = b.odd.begin();
	while (p != a.odd.end() && q != b.odd.end()) {
		if (*p < *q)
			out.odd.push_back(*p++);
		else if (*q < *p) {
			// *q jumps over the remaining factors of a
			inversions += int(a.odd.end() - p);
			out.odd.push_back(*q++);
		} else
			return 0;
	}
	out.odd.insert(out.odd.end(), p, a.odd.end());
	out.odd.insert(out.odd.end(), q, b.odd.end());
	return (inversions & 1) ? -1 : 1;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const
{
	if (ctx_ != o.ctx_)
		throw ContextMismatch();
	DiffPoly r(ctx_);
	Monomial prod;
	for (auto& [ma, ca] : terms_)
		for (auto& [mb, cb] : o.terms_) {
			int sign = mul_monomials(ma, mb, prod);
			if (sign != 0)
				r.add_term(prod, sign > 0 ? ca * cb : -(ca * cb));
		}
	return r;
}

DiffPoly DiffPoly::with_context(JetContext bigger) const
{
	if (bigger.even_count < ctx_.even_count || bigger.odd_count < ctx_.odd_count)
		throw std::invalid_argument("with_context: target context too small");
	DiffPoly r(bigger);
	for (auto& [m, c] : terms_)
		r.terms_[m] = c;
	return r;
}

int DiffPoly::max_order(VarKind kind, int index) const
{
	int k = -1;
	for (auto& [m, c] : terms_) {
		if (kind == VarKind::even) {
			for (auto& [v, e] : m.even)
				if (v.index == index)
					k = std::max(k, v.order);
		} else {
			for (auto& v : m.odd)
				if (v.index == index)
					k = std::max(k, v.order);
		}
	}
	return k; // -1 when the coordinate does not occur
}

int DiffPoly::max_order() const
{
	int k = 0;
	for (auto& [m, c] : terms_)
		k = std::max(k, m.max_order());
	return k;
}

std::optional<Gradings> DiffPoly::gradings_opt() const
{
	if (terms_.empty())
		return Gradings{0, 0, -1};
	int d = terms_.begin()->first.theta_degree();
	for (auto& [m, c] : terms_)
		if (m.theta_degree() != d)
			return std::nullopt;
	return Gradings{d & 1, d, d - 1};
}

Gradings DiffPoly::gradings() const
{
	auto g = gradings_opt();
	if (!g)
		throw GradingError("value is not homogeneous in theta degree");
	return *g;
}

std::optional<int> DiffPoly::parity_opt() const
{
	if (terms_.empty())
		return 0;
	int p = terms_.begin()->first.parity();
	for (auto& [m, c] : terms_)
		if (m.parity() != p)
			return std::nullopt;
	return p;
}

DiffPoly partial(const DiffPoly& u, JetVar x)
{
	DiffPoly r(u.ctx());
	VarRef ref{x.index, x.order};
	for (auto& [m, c] : u.terms()) {
		if (x.kind == VarKind::even) {
			auto it = std::lower_bound(m.even.begin(), m.even.end(), ref,
			                           [](auto& p, const VarRef& v) { return p.first < v; });
			if (it == m.even.end() || it->first != ref)
				continue;
			Monomial d = m;
			auto dit = d.even.begin() + (it - m.even.begin());
			Rat coeff = c * dit->second;
			if (--dit->second == 0)
				d.even.erase(dit);
			r.add_term(d, coeff);
		} else {
			auto it = std::lower_bound(m.odd.begin(), m.odd.end(), ref);
			if (it == m.odd.end() || *it != ref)
				continue;
			int pos = int(it - m.odd.begin());
			Monomial d = m;
			d.odd.erase(d.odd.begin() + pos);
			r.add_term(d, (pos & 1) ? -c : c);
		}
	}
	return r;
}

namespace {

void print_factor(std::ostream& os, VarKind kind, const VarRef& v, int exp)
{
	os << (kind == VarKind::even ? "t" : "th") << v.index << '_' << v.order;
	if (exp > 1)
		os << '^' << exp;
}

void print_monomial(std::ostream& os, const Monomial& m, const Rat& coeff_abs)
{
	bool need_star = false;
	if (coeff_abs != 1 || m.is_constant()) {
		os << coeff_abs.get_str();
		need_star = true;
	}
	for (auto& [v, e] : m.even) {
		if (need_star)
			os << '*';
		print_factor(os, VarKind::even, v, e);
		need_star = true;
	}
	for (auto& v : m.odd) {
		if (need_star)
			os << '*';
		print_factor(os, VarKind::odd, v, 1);
		need_star = true;
	}
}

} // namespace

std::ostream& operator<<(std::ostream& os, const DiffPoly& u)
{
	if (u.is_zero())
		return os << '0';
	bool first = true;
	for (auto& [m, c] : u.terms()) {
		if (first) {
			if (c < 0)
				os << '-';
			first = false;
		} else {
			os << (c < 0 ? " - " : " + ");
		}
		print_monomial(os, m, abs(c));
	}
	return os;
}

std::string to_string(const DiffPoly& u)
{
	std::ostringstream os;
	os << u;
	return os.str();
}

} // namespace varjet
