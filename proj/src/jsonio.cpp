#include "varjet/jsonio.hpp"
#include "varjet/expr.hpp"

namespace varjet {

using nlohmann::json;

JetContext parse_context(const std::string& spec)
{
	auto comma = spec.find(',');
	try {
		if (comma == std::string::npos)
			throw std::invalid_argument("no comma");
		int m = std::stoi(spec.substr(0, comma));
		int n = std::stoi(spec.substr(comma + 1));
		return JetContext(m, n);
	} catch (const std::exception&) {
		throw InputError("bad context '" + spec + "': expected \"m,n\"");
	}
}

Rat rat_from_json(const json& j)
{
	try {
		if (j.is_number_integer())
			return Rat(j.get<long>());
		if (j.is_string())
			return rat_from_string(j.get<std::string>());
	} catch (const std::invalid_argument& e) {
		throw InputError(e.what());
	}
	throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

RatMatrix matrix_from_json(const json& j)
{
	if (!j.is_array() || j.empty())
		throw InputError("expected a non-empty matrix");
	int rows = int(j.size());
	int cols = int(j.at(0).size());
	RatMatrix m(rows, cols);
	for (int i = 0; i < rows; ++i) {
		if (int(j.at(i).size()) != cols)
			throw InputError("ragged matrix");
		for (int k = 0; k < cols; ++k)
			m(i, k) = rat_from_json(j.at(i).at(k));
	}
	return m;
}

json matrix_to_json(const RatMatrix& m)
{
	json rows = json::array();
	for (int i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (int k = 0; k < m.cols(); ++k)
			row.push_back(to_string(m(i, k)));
		rows.push_back(row);
	}
	return rows;
}

DiffOperatorMatrix operator_from_json(const json& j)
{
	if (!j.is_object() || !j.contains("context") || !j.contains("entries"))
		throw InputError("operator JSON needs {context, entries}");
	JetContext ctx = parse_context(j.at("context").get<std::string>());
	int size = 0;
	for (auto& e : j.at("entries"))
		size = std::max({size, e.at("a").get<int>(), e.at("b").get<int>()});
	if (size == 0)
		throw InputError("operator JSON has no entries");
	DiffOperatorMatrix d(ctx, size);
	for (auto& e : j.at("entries")) {
		int a = e.at("a").get<int>();
		int b = e.at("b").get<int>();
		int k = e.at("k").get<int>();
		if (k < 0)
			throw InputError("operator JSON: negative order");
		DiffPoly coeff;
		try {
			coeff = parse(e.at("coeff").get<std::string>(), ctx);
		} catch (const ParseError& pe) {
			throw InputError(std::string("operator coefficient: ") + pe.what());
		}
		d.add(a, b, k, coeff);
	}
	return d;
}

json operator_to_json(const DiffOperatorMatrix& d)
{
	json entries = json::array();
	for (int a = 1; a <= d.size(); ++a)
		for (int b = 1; b <= d.size(); ++b)
			for (auto& [k, c] : d.entry(a, b))
				if (!c.is_zero())
					entries.push_back(
					    {{"a", a}, {"b", b}, {"k", k}, {"coeff", print(c)}});
	return {{"context", std::to_string(d.ctx().even_count) + "," +
	                        std::to_string(d.ctx().odd_count)},
	        {"entries", entries}};
}

DNSpec dnspec_from_json(const json& j)
{
	if (!j.is_object() || !j.contains("eta"))
		throw InputError("DN spec JSON needs {eta, A, B}");
	RatMatrix eta = matrix_from_json(j.at("eta"));
	const int m = eta.rows();
	std::vector<RatMatrix> A(m, RatMatrix(m, m));
	if (j.contains("A"))
		for (auto& e : j.at("A")) {
			int a = e.at("a").get<int>();
			int b = e.at("b").get<int>();
			int c = e.at("c").get<int>();
			if (a < 1 || a > m || b < 1 || b > m || c < 1 || c > m)
				throw InputError("DN spec: A index out of range");
			Rat v = rat_from_json(e.at("val"));
			A[c - 1](a - 1, b - 1) = v;
			A[c - 1](b - 1, a - 1) = -v;
		}
	RatMatrix B(m, m);
	if (j.contains("B"))
		B = matrix_from_json(j.at("B"));
	try {
		return DNSpec(Metric(eta), std::move(A), std::move(B));
	} catch (const std::invalid_argument& e) {
		throw InputError(e.what());
	}
}

json dnspec_to_json(const DNSpec& spec)
{
	json A = json::array();
	const int m = spec.dim();
	for (int c = 1; c <= m; ++c)
		for (int a = 1; a <= m; ++a)
			for (int b = a + 1; b <= m; ++b)
				if (spec.A[c - 1](a - 1, b - 1) != 0)
					A.push_back({{"a", a},
					             {"b", b},
					             {"c", c},
					             {"val", to_string(spec.A[c - 1](a - 1, b - 1))}});
	return {{"eta", matrix_to_json(spec.eta.upper())},
	        {"A", A},
	        {"B", matrix_to_json(spec.B)}};
}

} // namespace varjet
