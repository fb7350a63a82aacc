#pragma once

#include "varjet/rational.hpp"

#include <vector>

namespace varjet {

/// Small dense matrix over Rat. Only what the engine needs: exact
/// inverse / solve (Gauss-Jordan) and a few predicates.
class RatMatrix {
public:
	RatMatrix() = default;
	RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

	static RatMatrix identity(int n)
	{
		RatMatrix m(n, n);
		for (int i = 0; i < n; ++i)
			m(i, i) = 1;
		return m;
	}

	int rows() const { return rows_; }
	int cols() const { return cols_; }

	Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
	const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

	bool operator==(const RatMatrix& o) const
	{
		return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
	}

	bool is_symmetric() const
	{
		if (rows_ != cols_)
			return false;
		for (int i = 0; i < rows_; ++i)
			for (int j = i + 1; j < cols_; ++j)
				if ((*this)(i, j) != (*this)(j, i))
					return false;
		return true;
	}

	bool is_skew() const
	{
		if (rows_ != cols_)
			return false;
		for (int i = 0; i < rows_; ++i)
			for (int j = i; j < cols_; ++j)
				if ((*this)(i, j) != -(*this)(j, i))
					return false;
		return true;
	}

	RatMatrix operator*(const RatMatrix& o) const
	{
		RatMatrix r(rows_, o.cols_);
		for (int i = 0; i < rows_; ++i)
			for (int k = 0; k < cols_; ++k) {
				const Rat& x = (*this)(i, k);
				if (x == 0)
					continue;
				for (int j = 0; j < o.cols_; ++j)
					r(i, j) += x * o(k, j);
			}
		return r;
	}

	/// Solves A X = B exactly. Throws std::domain_error if A is singular.
	RatMatrix solve(RatMatrix b) const
	{
		if (rows_ != cols_ || b.rows() != rows_)
			throw std::invalid_argument("solve: shape mismatch");
		RatMatrix a = *this;
		const int n = rows_;
		for (int col = 0; col < n; ++col) {
			int piv = -1;
			for (int r = col; r < n; ++r)
				if (a(r, col) != 0) {
					piv = r;
					break;
				}
			if (piv < 0)
				throw std::domain_error("singular matrix");
			if (piv != col) {
				for (int j = 0; j < n; ++j)
					std::swap(a(piv, j), a(col, j));
				for (int j = 0; j < b.cols(); ++j)
					std::swap(b(piv, j), b(col, j));
			}
			Rat inv = 1 / a(col, col);
			for (int j = 0; j < n; ++j)
				a(col, j) *= inv;
			for (int j = 0; j < b.cols(); ++j)
				b(col, j) *= inv;
			for (int r = 0; r < n; ++r) {
				if (r == col || a(r, col) == 0)
					continue;
				Rat f = a(r, col);
				for (int j = 0; j < n; ++j)
					a(r, j) -= f * a(col, j);
				for (int j = 0; j < b.cols(); ++j)
					b(r, j) -= f * b(col, j);
			}
		}
		return b;
	}

	RatMatrix inverse() const { return solve(identity(rows_)); }

	bool is_invertible() const
	{
		try {
			inverse();
			return true;
		} catch (const std::domain_error&) {
			return false;
		}
	}

private:
	int rows_ = 0, cols_ = 0;
	std::vector<Rat> a_;
};

} // namespace varjet
