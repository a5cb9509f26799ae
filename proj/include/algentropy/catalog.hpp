#pragma once

#include <string>
#include <vector>

#include "algentropy/mapping.hpp"

namespace algentropy {

struct CatalogInfo {
  std::string name;
  std::string description;
  std::vector<std::string> variants;  // first entry is the default
};

const std::vector<CatalogInfo>& catalog_list();

/// Built-in mapping with its default parameters. Variants:
///   "confining" (default where a stream exists): stream satisfies the confinement constraint;
///   "generic": quadratic stream 1 + n + n^2/2 violating every linear constraint;
///   eq17-hv-k: "k1", "k2" (default), "k3" select the exponent;
///   eq27-dp1-add: "late2" confines after the block repeats twice;
///   eq20-bedford-kim: "b0" sets b = 0.
/// Throws UnknownMapping for an unknown name or variant.
Mapping catalog_get(const std::string& name, const std::string& variant = "");

/// Whether the catalog says the mapping (with this variant) is integrable.
bool catalog_expected_integrable(const std::string& name, const std::string& variant = "");

}  // namespace algentropy
