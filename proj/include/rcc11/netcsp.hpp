#pragma once

// Qualitative constraint networks over RCC11: algebraic closure and a
// backtracking search for atomic scenarios.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcc11/comp_table.hpp"
#include "rcc11/golden_table.hpp"
#include "rcc11/random.hpp"
#include "rcc11/relation.hpp"

namespace rcc11::netcsp {

class Network {
 public:
  explicit Network(int n) : Network(default_names(n)) {}
  explicit Network(std::vector<std::string> names)
      : n_(static_cast<int>(names.size())), names_(std::move(names)),
        cells_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), RelSet::universal()) {
    for (int i = 0; i < n_; ++i) cells_[index(i, i)] = RelSet(BaseRel::EQ);
  }

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const RelSet& at(int i, int j) const { return cells_[index(i, j)]; }

  /// Sets (i,j) and its converse (j,i). On the diagonal only {EQ} is accepted.
  void set(int i, int j, RelSet r) {
    if (i == j) {
      if (r != RelSet(BaseRel::EQ)) throw std::invalid_argument("diagonal constraints must be EQ");
      return;
    }
    cells_[index(i, j)] = r;
    cells_[index(j, i)] = converse(r);
  }

  /// Intersects (i,j) with r.
  void constrain(int i, int j, RelSet r) {
    if (i == j) {
      set(i, j, r);
      return;
    }
    set(i, j, at(i, j) & r);
  }

  int index_of(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
      if (names_[static_cast<std::size_t>(i)] == name) return i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }

  bool is_atomic() const {
    for (const auto& c : cells_)
      if (c.size() != 1) return false;
    return true;
  }
  bool has_empty() const {
    for (const auto& c : cells_)
      if (c.empty()) return true;
    return false;
  }

  bool operator==(const Network&) const = default;

 private:
  static std::vector<std::string> default_names(int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("variable index");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<std::string> names_;
  std::vector<RelSet> cells_;
};

/// Path consistency: (i,k) ← (i,k) ∩ (i,j)∘(j,k), swept over triples in
/// lexicographic order until nothing changes. nullopt when a constraint
/// becomes empty.
inline std::optional<Network> closure(Network net, const CompTable& table = golden_table()) {
  const int n = net.size();
  if (net.has_empty()) return std::nullopt;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == k) continue;
          const RelSet refined = net.at(i, k) & compose(table, net.at(i, j), net.at(j, k));
          if (refined == net.at(i, k)) continue;
          if (refined.empty()) return std::nullopt;
          net.set(i, k, refined);
          changed = true;
        }
  }
  return net;
}

namespace detail {
inline std::optional<Network> search(const Network& net, const CompTable& table, long& nodes) {
  ++nodes;
  auto closed = closure(net, table);
  if (!closed) return std::nullopt;
  const int n = closed->size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (closed->at(i, j).size() == 1) continue;
      for (BaseRel r : closed->at(i, j)) {
        Network next = *closed;
        next.set(i, j, RelSet(r));
        if (auto found = search(next, table, nodes)) return found;
      }
      return std::nullopt;
    }
  return closed;
}
}  // namespace detail

/// An atomic, algebraically closed refinement; branches on the first
/// non-atomic cell, relations in canonical order.
inline std::optional<Network> scenario_search(const Network& net, const CompTable& table = golden_table()) {
  long nodes = 0;
  return detail::search(net, table, nodes);
}

struct NetworkParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `{"vars":[...],"constraints":[{"i":"x","j":"y","rels":["TPP"]}]}`.
/// Repeated constraints on one pair intersect.
inline Network parse_network(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw NetworkParseError(e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("vars")) throw NetworkParseError("network needs a \"vars\" array");
    std::vector<std::string> names = doc.at("vars").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw NetworkParseError("duplicate variable '" + names[i] + "'");
    Network net(names);
    if (doc.contains("constraints")) {
      for (const auto& c : doc.at("constraints")) {
        const int i = net.index_of(c.at("i").get<std::string>());
        const int j = net.index_of(c.at("j").get<std::string>());
        RelSet rels;
        for (const auto& tok : c.at("rels")) {
          auto r = parse_base_rel(tok.get<std::string>());
          if (!r) throw NetworkParseError("unknown relation '" + tok.get<std::string>() + "'");
          rels.insert(*r);
        }
        net.constrain(i, j, rels);
      }
    }
    return net;
  } catch (const nlohmann::json::exception& e) {
    throw NetworkParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw NetworkParseError(e.what());
  }
}

/// Constraints for i < j in index order; universal pairs are omitted.
inline nlohmann::json to_json(const Network& net) {
  nlohmann::json out;
  out["vars"] = net.names();
  out["constraints"] = nlohmann::json::array();
  for (int i = 0; i < net.size(); ++i)
    for (int j = i + 1; j < net.size(); ++j) {
      if (net.at(i, j).is_universal()) continue;
      std::vector<std::string> rels;
      for (BaseRel r : net.at(i, j)) rels.emplace_back(token(r));
      out["constraints"].push_back({{"i", net.names()[static_cast<std::size_t>(i)]},
                                    {"j", net.names()[static_cast<std::size_t>(j)]},
                                    {"rels", rels}});
    }
  return out;
}

/// Each pair independently universal or a random nonempty subset.
inline Network random_network(Rng& rng, int n, int universal_percent = 30) {
  Network net(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform(0, 99) < universal_percent) continue;
      RelSet r;
      while (r.empty())
        for (BaseRel b : kAllBaseRels)
          if (rng.uniform(0, 2) == 0) r.insert(b);
      net.set(i, j, r);
    }
  return net;
}

}  // namespace rcc11::netcsp
