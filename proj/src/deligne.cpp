#include "varjet/deligne.hpp"

namespace varjet {

namespace {

Rat factorial(int n)
{
	Rat r = 1;
	for (int i = 2; i <= n; ++i)
		r *= i;
	return r;
}

/// A block is a subword of the shape X^r Y^s (r+s >= 1); its weight
/// factor is 1/(r! s!). Non-decreasing letters (X=0 before Y=1) exactly
/// characterize the shape.
bool block_weight(const std::vector<int>& w, int from, int to, Rat& out)
{
	int r = 0, s = 0;
	for (int i = from; i < to; ++i) {
		if (w[i] == 0) {
			if (s > 0)
				return false;
			++r;
		} else
			++s;
	}
	out = 1 / (factorial(r) * factorial(s));
	return true;
}

void decompose(const std::vector<int>& w, int from, int blocks, const Rat& acc, Rat& total)
{
	const int m = int(w.size());
	if (from == m) {
		// (-1)^{n-1} / (n * m) * prod 1/(r_i! s_i!)
		Rat term = acc / (blocks * m);
		total += (blocks & 1) ? term : -term;
		return;
	}
	for (int to = from + 1; to <= m; ++to) {
		Rat bw;
		if (block_weight(w, from, to, bw))
			decompose(w, to, blocks + 1, acc * bw, total);
	}
}

} // namespace

Rat bch_word_weight(const std::vector<int>& word)
{
	Rat total = 0;
	decompose(word, 0, 0, Rat(1), total);
	return total;
}

} // namespace varjet
