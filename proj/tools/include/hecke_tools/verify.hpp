#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hecke/tower.hpp"

namespace hecke::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string group;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* group;
  const char* summary;
};

const std::vector<CriterionInfo>& criteria();

struct VerifyOptions {
  /// Group name, criterion name or number; empty runs everything.
  std::string only;
  /// Replacement for hecke::mu in the mu check; used for fault injection.
  std::function<MuResult(int m, int j, int k, int l)> mu;
  /// Progress lines go here when set.
  std::ostream* log = nullptr;
};

/// Runs the selected criteria in order. Throws std::invalid_argument when
/// `only` matches nothing.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// "PASS  3 product-homomorphism (1.20 s)" style line.
std::string format_result(const CriterionResult& r);

}  // namespace hecke::tools
