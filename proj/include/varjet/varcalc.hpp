#pragma once

#include "varjet/diffpoly.hpp"

namespace varjet {

/// Total derivative d/dx on jets: raises every jet order by one where it
/// applies; an even derivation.
DiffPoly total_derivative(const DiffPoly& u);
/// k-fold total derivative.
DiffPoly total_derivative(const DiffPoly& u, int k);

/// Higher Euler operator delta_{k,a} (odd-variable analogue with left
/// derivatives when kind == odd). The i-sum truncates at the top jet order
/// of the coordinate in u.
DiffPoly euler(const DiffPoly& u, VarKind kind, int index, int k);

/// Polynomial change of coordinates: one jet-order-0 target per base
/// coordinate, matching parity. Pullback is the unique algebra map with
/// f* t^a_k = d^k(f* t^a).
class CoordinateMap {
public:
	CoordinateMap(JetContext ctx, std::vector<DiffPoly> even_targets,
	              std::vector<DiffPoly> odd_targets);

	static CoordinateMap identity(JetContext ctx);

	const JetContext& ctx() const { return ctx_; }
	const DiffPoly& target(VarKind kind, int index) const;
	/// J[a][b] = partial(target b, base coordinate a); coordinates indexed
	/// 0..m+n-1, even block first.
	const DiffPoly& jacobian(int a, int b) const { return jac_[a][b]; }

	/// Composition g after f: pullback(compose(f,g), u) = pullback(f, pullback(g, u)).
	static CoordinateMap compose(const CoordinateMap& f, const CoordinateMap& g);

private:
	JetContext ctx_;
	std::vector<DiffPoly> even_, odd_;
	std::vector<std::vector<DiffPoly>> jac_;
};

DiffPoly pullback(const CoordinateMap& f, const DiffPoly& u);

/// rho = sum k(k+1) x_k d_{k+1} over all coordinates: lowers sl(2) weight.
DiffPoly sl2_rho(const DiffPoly& u);
/// H = sum k x_k d_k: the weight operator.
DiffPoly sl2_weight(const DiffPoly& u);

/// Non-exactness witness: the first nonvanishing classical Euler
/// derivative, or a nonzero constant term.
struct ExactnessWitness {
	bool constant_term = false;
	VarKind kind = VarKind::even;
	int index = 0;
	DiffPoly value;

	std::string describe() const;
};

struct NotExact : std::runtime_error {
	ExactnessWitness witness;
	explicit NotExact(ExactnessWitness w)
	    : std::runtime_error("not in the image of the total derivative: " + w.describe()),
	      witness(std::move(w))
	{
	}
};

bool is_exact(const DiffPoly& u);
/// As is_exact, but hands back the witness on failure.
bool is_exact(const DiffPoly& u, ExactnessWitness& w);

/// Primitive of an exact u, normalized to zero jet-constant term. Throws
/// NotExact otherwise. Recursive descent on the greatest variable of
/// maximal jet order.
DiffPoly invert_total_derivative(const DiffPoly& u);

/// Display normal form of the class of u modulo im d/dx: repeatedly strips
/// integrable top-order terms. Semantics-free (CLI display only).
DiffPoly reduce_representative(const DiffPoly& u);

} // namespace varjet
