#pragma once

#include <string>
#include <vector>

namespace varjet {

struct CriterionResult {
	std::string name;
	bool pass = false;
	double ms = 0;
	std::string detail;
};

/// Runs the full acceptance suite (exact arithmetic, fixed seeds).
/// One result per criterion, in order.
std::vector<CriterionResult> run_acceptance();

} // namespace varjet
