#pragma once

#include "varjet/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace varjet {

/// A jet superspace with m even base coordinates t[1..m] and n odd base
/// coordinates th[1..n]. Each base coordinate carries an infinite tower of
/// jet variables t[a,k] / th[b,k], k >= 0.
struct JetContext {
	int even_count = 1; // m
	int odd_count = 0;  // n

	JetContext() = default;
	JetContext(int m, int n) : even_count(m), odd_count(n)
	{
		if (m < 1 || n < 0)
			throw std::invalid_argument("JetContext: need m >= 1, n >= 0");
	}

	bool operator==(const JetContext&) const = default;

	/// Total number of base coordinates; coordinates are indexed 0..m+n-1
	/// with the even block first.
	int coords() const { return even_count + odd_count; }
	bool coord_is_odd(int c) const { return c >= even_count; }
	/// 1-based index of coordinate c within its block.
	int coord_index(int c) const { return coord_is_odd(c) ? c - even_count + 1 : c + 1; }
};

struct ContextMismatch : std::invalid_argument {
	ContextMismatch() : std::invalid_argument("jet context mismatch") {}
};

struct GradingError : std::invalid_argument {
	explicit GradingError(const std::string& what) : std::invalid_argument(what) {}
};

enum class VarKind { even, odd };

/// One jet variable: t[index,order] (even) or th[index,order] (odd).
struct JetVar {
	VarKind kind;
	int index; // 1-based
	int order; // >= 0

	friend auto operator<=>(const JetVar&, const JetVar&) = default;
};

/// (index, order) reference inside a single parity block.
struct VarRef {
	int index;
	int order;

	friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

/// Canonical term: even factors as a sorted (variable, exponent) list, odd
/// factors as a sorted duplicate-free list. A monomial denotes the product
/// (even part) * th_{r1} * th_{r2} * ... with r1 < r2 < ... ; every sign in
/// the engine flows from sorting permutations of odd factors.
struct Monomial {
	std::vector<std::pair<VarRef, int>> even; // sorted by VarRef, exponents > 0
	std::vector<VarRef> odd;                  // sorted, distinct

	friend auto operator<=>(const Monomial&, const Monomial&) = default;

	int theta_degree() const { return int(odd.size()); }
	int parity() const { return int(odd.size()) & 1; }
	bool is_constant() const { return even.empty() && odd.empty(); }

	int max_order() const
	{
		int k = 0;
		for (auto& [v, e] : even)
			k = std::max(k, v.order);
		for (auto& v : odd)
			k = std::max(k, v.order);
		return k;
	}
};

struct Gradings {
	int parity;
	int theta_degree;
	int schouten_degree;
};

/// Graded-commutative differential polynomial over a JetContext with exact
/// rational coefficients: the engine's universal carrier. Immutable in
/// spirit; all operations return fresh values.
class DiffPoly {
public:
	DiffPoly() = default;
	explicit DiffPoly(JetContext ctx) : ctx_(ctx) {}
	DiffPoly(JetContext ctx, const Rat& c) : ctx_(ctx)
	{
		if (c != 0)
			terms_[Monomial{}] = c;
	}

	static DiffPoly constant(JetContext ctx, const Rat& c) { return DiffPoly(ctx, c); }

	/// A single jet variable as a polynomial. Validates the index against
	/// the context.
	static DiffPoly var(JetContext ctx, JetVar v);
	static DiffPoly var(JetContext ctx, VarKind kind, int index, int order)
	{
		return var(ctx, JetVar{kind, index, order});
	}

	const JetContext& ctx() const { return ctx_; }
	const std::map<Monomial, Rat>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	/// Coefficient of the empty monomial.
	Rat constant_term() const
	{
		auto it = terms_.find(Monomial{});
		return it == terms_.end() ? Rat(0) : it->second;
	}

	Rat coeff(const Monomial& m) const
	{
		auto it = terms_.find(m);
		return it == terms_.end() ? Rat(0) : it->second;
	}

	/// Adds c * m, dropping the term if the total cancels.
	void add_term(const Monomial& m, const Rat& c);

	DiffPoly operator-() const;
	DiffPoly operator+(const DiffPoly& o) const;
	DiffPoly operator-(const DiffPoly& o) const;
	DiffPoly& operator+=(const DiffPoly& o);
	DiffPoly& operator-=(const DiffPoly& o);
	DiffPoly operator*(const Rat& c) const;
	friend DiffPoly operator*(const Rat& c, const DiffPoly& u) { return u * c; }
	/// Graded-commutative product.
	DiffPoly operator*(const DiffPoly& o) const;
	bool operator==(const DiffPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }

	/// Reinterprets the value in a larger context (same variable names).
	DiffPoly with_context(JetContext bigger) const;

	/// nullopt when u has no term in the given coordinate.
	int max_order(VarKind kind, int index) const;
	int max_order() const;

	/// parity / theta_degree / schouten_degree of a graded-homogeneous
	/// value. Throws GradingError on mixed theta degrees. Zero counts as
	/// homogeneous of degree 0.
	Gradings gradings() const;
	std::optional<Gradings> gradings_opt() const;
	bool is_homogeneous() const { return gradings_opt().has_value(); }
	int theta_degree() const { return gradings().theta_degree; }
	int schouten_degree() const { return gradings().schouten_degree; }
	/// Parity of a parity-homogeneous value (theta degree may be mixed).
	std::optional<int> parity_opt() const;

	/// Canonical sorted-monomial form, the same text the parser accepts.
	friend std::ostream& operator<<(std::ostream& os, const DiffPoly& u);

private:
	JetContext ctx_;
	std::map<Monomial, Rat> terms_;
};

/// Multiplies two monomials; returns the Koszul sign (0 if an odd factor
/// repeats) and writes the merged monomial to `out`.
int mul_monomials(const Monomial& a, const Monomial& b, Monomial& out);

/// Left partial derivative with respect to one jet variable. For an odd
/// variable the factor is commuted to the front (collecting the Koszul
/// sign) and stripped.
DiffPoly partial(const DiffPoly& u, JetVar x);
inline DiffPoly partial(const DiffPoly& u, VarKind kind, int index, int order)
{
	return partial(u, JetVar{kind, index, order});
}

std::string to_string(const DiffPoly& u);

} // namespace varjet
