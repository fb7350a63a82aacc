#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace varjet {

/// Exact arbitrary-precision rational. Arithmetic on mpq_class always
/// keeps values in canonical form.
using Rat = mpq_class;

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on garbage or q=0.
inline Rat rat_from_string(const std::string& s)
{
	if (s.empty())
		throw std::invalid_argument("empty rational literal");
	mpq_class r;
	if (r.set_str(s, 10) != 0)
		throw std::invalid_argument("bad rational literal: " + s);
	if (r.get_den() == 0)
		throw std::invalid_argument("zero denominator: " + s);
	r.canonicalize();
	return r;
}

inline Rat binomial(unsigned long n, unsigned long k)
{
	mpz_class b;
	mpz_bin_uiui(b.get_mpz_t(), n, k);
	return Rat(b);
}

} // namespace varjet
