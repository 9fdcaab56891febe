// Copyright 2026 The ksc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Instance files: one JSON document declaring k, the weighted elements, and
// one of three utility payloads (coverage, separable, tabular). The schema
// is documented in the README. Parsing is strict; semantic violations are
// reported with the offending JSON path.

#ifndef KSC_INSTANCE_HPP_
#define KSC_INSTANCE_HPP_

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ksc/enumeration.hpp"
#include "ksc/errors.hpp"
#include "ksc/families.hpp"
#include "ksc/kset.hpp"
#include "ksc/oracle.hpp"

namespace ksc {

struct CoveragePayload {
  std::vector<double> universe_weights;
  // covers[x][i-1] = universe items covered by the pair (x, i)
  std::vector<std::vector<std::vector<int>>> covers;
};

struct SeparablePayload {
  std::vector<SeparableOracle::Part> parts;  // one per position
};

struct TabularPayload {
  std::vector<double> values;  // indexed by enumeration code
};

struct InstanceFile {
  enum class Kind { coverage, separable, tabular };

  Kind kind = Kind::coverage;
  int k = 0;
  std::vector<std::string> element_names;
  std::vector<double> element_weights;
  std::optional<bool> declared_monotone;
  std::variant<CoveragePayload, SeparablePayload, TabularPayload> payload;

  int n() const { return static_cast<int>(element_names.size()); }
};

inline const char* to_string(InstanceFile::Kind kind) {
  switch (kind) {
    case InstanceFile::Kind::coverage: return "coverage";
    case InstanceFile::Kind::separable: return "separable";
    case InstanceFile::Kind::tabular: return "tabular";
  }
  return "?";
}

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw validation_error(where + ": expected a number");
  return j.get<double>();
}

inline int require_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw validation_error(where + ": expected an integer");
  return j.get<int>();
}

inline const nlohmann::json& require_key(const nlohmann::json& j, const std::string& key,
                                         const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw validation_error(where + ": missing required key '" + key + "'");
  return *it;
}

inline std::vector<int> parse_item_list(const nlohmann::json& j, int universe_size,
                                        const std::string& where) {
  if (!j.is_array()) throw validation_error(where + ": expected an array of universe indices");
  std::vector<int> items;
  items.reserve(j.size());
  for (const auto& v : j) {
    int u = require_int(v, where);
    if (u < 0 || u >= universe_size) {
      throw validation_error(where + ": universe index " + std::to_string(u) + " outside 0.." +
                             std::to_string(universe_size - 1));
    }
    items.push_back(u);
  }
  return items;
}

inline std::vector<double> parse_universe(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw validation_error(where + ": expected an array of weights");
  std::vector<double> weights;
  weights.reserve(j.size());
  for (std::size_t u = 0; u < j.size(); ++u) {
    double wu = require_number(j[u], where + "[" + std::to_string(u) + "]");
    if (wu < 0.0) {
      throw validation_error(where + "[" + std::to_string(u) + "]: universe weights must be >= 0");
    }
    weights.push_back(wu);
  }
  return weights;
}

}  // namespace detail

inline InstanceFile instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw validation_error("instance: top level must be an object");

  InstanceFile inst;
  std::string kind = detail::require_key(doc, "kind", "instance").get<std::string>();
  if (kind == "coverage") {
    inst.kind = InstanceFile::Kind::coverage;
  } else if (kind == "separable") {
    inst.kind = InstanceFile::Kind::separable;
  } else if (kind == "tabular") {
    inst.kind = InstanceFile::Kind::tabular;
  } else {
    throw validation_error("instance.kind: unknown kind '" + kind + "'");
  }

  for (const auto& [key, value] : doc.items()) {
    if (key != "kind" && key != "k" && key != "elements" && key != "monotone" && key != kind) {
      throw validation_error("instance: unexpected key '" + key + "'");
    }
  }

  inst.k = detail::require_int(detail::require_key(doc, "k", "instance"), "instance.k");
  if (inst.k < 1) throw validation_error("instance.k: must be >= 1");

  const auto& elements = detail::require_key(doc, "elements", "instance");
  if (!elements.is_array() || elements.empty()) {
    throw validation_error("instance.elements: expected a non-empty array");
  }
  std::set<std::string> names;
  for (std::size_t x = 0; x < elements.size(); ++x) {
    std::string where = "instance.elements[" + std::to_string(x) + "]";
    std::string name = detail::require_key(elements[x], "name", where).get<std::string>();
    double weight = detail::require_number(detail::require_key(elements[x], "weight", where),
                                           where + ".weight");
    if (!names.insert(name).second) {
      throw validation_error(where + ": duplicate element name '" + name + "'");
    }
    if (!(weight > 0.0)) {
      throw validation_error(where + ".weight: must be strictly positive, got " +
                             std::to_string(weight));
    }
    inst.element_names.push_back(name);
    inst.element_weights.push_back(weight);
  }
  int n = inst.n();

  if (auto it = doc.find("monotone"); it != doc.end()) {
    if (!it->is_boolean()) throw validation_error("instance.monotone: expected a boolean");
    inst.declared_monotone = it->get<bool>();
  }

  const auto& payload = detail::require_key(doc, kind, "instance");
  if (inst.kind == InstanceFile::Kind::coverage) {
    CoveragePayload cov;
    cov.universe_weights =
        detail::parse_universe(detail::require_key(payload, "universe", "coverage"), "coverage.universe");
    const auto& covers = detail::require_key(payload, "covers", "coverage");
    cov.covers.resize(static_cast<std::size_t>(n));
    for (const auto& [name, per_position] : covers.items()) {
      auto pos = std::find(inst.element_names.begin(), inst.element_names.end(), name);
      if (pos == inst.element_names.end()) {
        throw validation_error("coverage.covers: unknown element '" + name + "'");
      }
      std::size_t x = static_cast<std::size_t>(pos - inst.element_names.begin());
      std::string where = "coverage.covers." + name;
      if (!per_position.is_array() || static_cast<int>(per_position.size()) != inst.k) {
        throw validation_error(where + ": expected exactly k=" + std::to_string(inst.k) +
                               " cover sets");
      }
      for (const auto& items : per_position) {
        cov.covers[x].push_back(detail::parse_item_list(
            items, static_cast<int>(cov.universe_weights.size()), where));
      }
    }
    for (int x = 0; x < n; ++x) {
      if (cov.covers[static_cast<std::size_t>(x)].empty()) {
        throw validation_error("coverage.covers: no entry for element '" + inst.element_names[static_cast<std::size_t>(x)] + "'");
      }
    }
    inst.payload = std::move(cov);
  } else if (inst.kind == InstanceFile::Kind::separable) {
    SeparablePayload sep;
    const auto& parts = detail::require_key(payload, "parts", "separable");
    if (!parts.is_array() || static_cast<int>(parts.size()) != inst.k) {
      throw validation_error("separable.parts: expected exactly k=" + std::to_string(inst.k) +
                             " parts");
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
      std::string where = "separable.parts[" + std::to_string(p) + "]";
      SeparableOracle::Part part;
      part.universe_weights =
          detail::parse_universe(detail::require_key(parts[p], "universe", where), where + ".universe");
      const auto& covers = detail::require_key(parts[p], "covers", where);
      part.covers.resize(static_cast<std::size_t>(n));
      std::set<std::string> covered;
      for (const auto& [name, items] : covers.items()) {
        auto pos = std::find(inst.element_names.begin(), inst.element_names.end(), name);
        if (pos == inst.element_names.end()) {
          throw validation_error(where + ".covers: unknown element '" + name + "'");
        }
        covered.insert(name);
        std::size_t x = static_cast<std::size_t>(pos - inst.element_names.begin());
        part.covers[x] = detail::parse_item_list(
            items, static_cast<int>(part.universe_weights.size()), where + ".covers." + name);
      }
      if (static_cast<int>(covered.size()) != n) {
        throw validation_error(where + ".covers: every element needs an entry");
      }
      sep.parts.push_back(std::move(part));
    }
    inst.payload = std::move(sep);
  } else {
    if (inst.k > 9) {
      throw validation_error("tabular: position-vector keys support k <= 9");
    }
    CodeSpace codes(n, inst.k);
    TabularPayload tab;
    tab.values.assign(codes.size(), -1.0);
    const auto& values = detail::require_key(payload, "values", "tabular");
    if (!values.is_object()) throw validation_error("tabular.values: expected an object");
    for (const auto& [digits, value] : values.items()) {
      std::uint64_t c;
      try {
        c = codes.from_digits(digits);
      } catch (const parse_error& e) {
        throw validation_error(std::string("tabular.values: ") + e.what());
      }
      double v = detail::require_number(value, "tabular.values." + digits);
      if (v < 0.0) throw validation_error("tabular.values." + digits + ": must be >= 0");
      if (tab.values[c] >= 0.0) {
        throw validation_error("tabular.values." + digits + ": duplicate position vector");
      }
      tab.values[c] = v;
    }
    for (std::uint64_t c = 0; c < codes.size(); ++c) {
      if (tab.values[c] < 0.0) {
        throw validation_error("tabular.values: missing entry for position vector " +
                               codes.to_digits(c));
      }
    }
    if (tab.values[0] != 0.0) {
      throw validation_error("tabular.values: the all-zero position vector must map to 0");
    }
    inst.payload = std::move(tab);
  }
  return inst;
}

inline nlohmann::json instance_to_json(const InstanceFile& inst) {
  nlohmann::json doc;
  doc["kind"] = to_string(inst.kind);
  doc["k"] = inst.k;
  doc["elements"] = nlohmann::json::array();
  for (int x = 0; x < inst.n(); ++x) {
    doc["elements"].push_back({{"name", inst.element_names[static_cast<std::size_t>(x)]},
                               {"weight", inst.element_weights[static_cast<std::size_t>(x)]}});
  }
  if (inst.declared_monotone) doc["monotone"] = *inst.declared_monotone;
  if (inst.kind == InstanceFile::Kind::coverage) {
    const auto& cov = std::get<CoveragePayload>(inst.payload);
    nlohmann::json covers = nlohmann::json::object();
    for (int x = 0; x < inst.n(); ++x) {
      covers[inst.element_names[static_cast<std::size_t>(x)]] = cov.covers[static_cast<std::size_t>(x)];
    }
    doc["coverage"] = {{"universe", cov.universe_weights}, {"covers", covers}};
  } else if (inst.kind == InstanceFile::Kind::separable) {
    const auto& sep = std::get<SeparablePayload>(inst.payload);
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : sep.parts) {
      nlohmann::json covers = nlohmann::json::object();
      for (int x = 0; x < inst.n(); ++x) {
        covers[inst.element_names[static_cast<std::size_t>(x)]] = part.covers[static_cast<std::size_t>(x)];
      }
      parts.push_back({{"universe", part.universe_weights}, {"covers", covers}});
    }
    doc["separable"] = {{"parts", parts}};
  } else {
    const auto& tab = std::get<TabularPayload>(inst.payload);
    CodeSpace codes(inst.n(), inst.k);
    nlohmann::json values = nlohmann::json::object();
    for (std::uint64_t c = 0; c < codes.size(); ++c) {
      values[codes.to_digits(c)] = tab.values[c];
    }
    doc["tabular"] = {{"values", values}};
  }
  return doc;
}

inline std::string serialize_instance(const InstanceFile& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline InstanceFile parse_instance_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("instance parse failed: ") + e.what());
  }
  return instance_from_json(doc);
}

inline InstanceFile parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance_text(buffer.str());
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  } catch (const validation_error& e) {
    throw validation_error(path + ": " + e.what());
  }
}

inline void write_instance(const InstanceFile& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write instance file '" + path + "'");
  out << serialize_instance(inst);
}

// Oracle construction for the declared kind.
inline std::unique_ptr<UtilityOracle> make_oracle(const InstanceFile& inst) {
  if (inst.kind == InstanceFile::Kind::coverage) {
    const auto& cov = std::get<CoveragePayload>(inst.payload);
    return std::make_unique<CoverageOracle>(inst.k, cov.universe_weights, cov.covers);
  }
  if (inst.kind == InstanceFile::Kind::separable) {
    const auto& sep = std::get<SeparablePayload>(inst.payload);
    return std::make_unique<SeparableOracle>(inst.n(), sep.parts);
  }
  const auto& tab = std::get<TabularPayload>(inst.payload);
  return std::make_unique<TabularOracle>(inst.n(), inst.k, tab.values);
}

inline WeightTable make_weight_table(const InstanceFile& inst) {
  return WeightTable(inst.element_weights);
}

}  // namespace ksc

#endif  // KSC_INSTANCE_HPP_
