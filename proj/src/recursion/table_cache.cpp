#include "cplab/recursion/table_cache.hpp"

#include <fstream>
#include <stdexcept>

namespace cplab {

nlohmann::json polynomial_to_json(const BivariatePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) terms.push_back({t.i, t.j, rational_to_string(t.c)});
  return terms;
}

BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<BivariatePolynomial::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term must be [i, j, \"p/q\"]");
    terms.push_back({t[0].get<int>(), t[1].get<int>(), parse_rational(t[2].get<std::string>())});
  }
  return BivariatePolynomial::from_terms(std::move(terms));
}

nlohmann::json moment_table_to_json(const MomentTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (int n = 0; n <= table.n_max(); ++n) {
    for (int m = 0; m <= table.m_max(); ++m) {
      entries.push_back({{"n", n}, {"m", m}, {"terms", polynomial_to_json(table.at(n, m))}});
    }
  }
  return {{"ensemble", to_string(table.ensemble().variant())},
          {"b", rational_to_string(table.ensemble().b())},
          {"n_max", table.n_max()},
          {"m_max", table.m_max()},
          {"entries", entries}};
}

MomentTable moment_table_from_json(const nlohmann::json& j) {
  EnsembleSpec ensemble(parse_variant(j.at("ensemble").get<std::string>()),
                        parse_rational(j.at("b").get<std::string>()));
  const int n_max = j.at("n_max").get<int>();
  const int m_max = j.at("m_max").get<int>();
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("table cache: negative size");
  std::vector<BivariatePolynomial> entries(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(m_max + 1));
  std::vector<bool> seen(entries.size(), false);
  for (const auto& e : j.at("entries")) {
    const int n = e.at("n").get<int>();
    const int m = e.at("m").get<int>();
    if (n < 0 || m < 0 || n > n_max || m > m_max) throw std::invalid_argument("table cache: entry out of range");
    std::size_t idx = static_cast<std::size_t>(n) * static_cast<std::size_t>(m_max + 1) + m;
    entries[idx] = polynomial_from_json(e.at("terms"));
    seen[idx] = true;
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("table cache: missing entries");
  }
  return MomentTable::from_entries(ensemble, n_max, m_max, std::move(entries));
}

std::filesystem::path TableCache::path_for(const EnsembleSpec& ensemble, int n_max, int m_max) const {
  std::string b = rational_to_string(ensemble.b());
  for (char& c : b) {
    if (c == '/') c = '_';
  }
  return dir_ / (to_string(ensemble.variant()) + "_b" + b + "_n" + std::to_string(n_max) + "_m" +
                 std::to_string(m_max) + ".json");
}

std::optional<MomentTable> TableCache::load(const EnsembleSpec& ensemble, int n_max, int m_max) const {
  std::ifstream in(path_for(ensemble, n_max, m_max));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    MomentTable t = moment_table_from_json(j);
    if (t.ensemble() == ensemble && t.n_max() == n_max && t.m_max() == m_max) return t;
  } catch (const std::exception&) {
    // A corrupt or foreign file is treated as a miss.
  }
  return std::nullopt;
}

void TableCache::store(const MomentTable& table) const {
  std::filesystem::create_directories(dir_);
  auto path = path_for(table.ensemble(), table.n_max(), table.m_max());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write table cache " + path.string());
  out << moment_table_to_json(table).dump() << "\n";
}

MomentTable TableCache::get_or_build(const EnsembleSpec& ensemble, int n_max, int m_max, bool* hit) const {
  if (auto cached = load(ensemble, n_max, m_max)) {
    if (hit) *hit = true;
    return *std::move(cached);
  }
  if (hit) *hit = false;
  MomentTable t = MomentTable::build(ensemble, n_max, m_max);
  store(t);
  return t;
}

}  // namespace cplab
