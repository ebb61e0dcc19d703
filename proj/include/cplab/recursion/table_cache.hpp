#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "cplab/polycore/polynomial.hpp"
#include "cplab/recursion/second_moment.hpp"

namespace cplab {

/// [[i, j, "num/den"], ...] in (i, j) order.
nlohmann::json polynomial_to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const nlohmann::json& j);

/// {ensemble, b, n_max, m_max, entries: [{n, m, terms}]}, entries in (n, m) order.
nlohmann::json moment_table_to_json(const MomentTable& table);
MomentTable moment_table_from_json(const nlohmann::json& j);

/// File-backed cache of exact moment tables keyed by (ensemble, b, n_max, m_max).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

  std::filesystem::path path_for(const EnsembleSpec& ensemble, int n_max, int m_max) const;
  std::optional<MomentTable> load(const EnsembleSpec& ensemble, int n_max, int m_max) const;
  void store(const MomentTable& table) const;
  /// Loads a matching table or builds and stores it. `hit` reports which.
  MomentTable get_or_build(const EnsembleSpec& ensemble, int n_max, int m_max, bool* hit = nullptr) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cplab
