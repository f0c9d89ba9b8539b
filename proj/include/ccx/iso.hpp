#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ccx/covering.hpp"

namespace ccx {

enum class IsoStatus { Isomorphic, NonIsomorphic, Unknown };
std::string to_string(IsoStatus s);

struct IsoResult {
  IsoStatus status = IsoStatus::Unknown;
  std::optional<CellMap> witness;  // set when Isomorphic
  std::size_t search_nodes = 0;
};

// Default search budget (search tree nodes); overridden by the CCX_ORACLE_BUDGET
// environment variable.
std::size_t oracle_budget();

// Exact isomorphism test: a bijection of cells preserving rank and inclusion both ways.
// Individualization-refinement over the containment relation, starting from stable HOMP
// colors. Returns Unknown if the budget runs out. Witnesses are checked before return.
IsoResult cc_isomorphic(const ComplexPtr& a, const ComplexPtr& b, std::size_t budget);
IsoResult cc_isomorphic(const ComplexPtr& a, const ComplexPtr& b);

struct IsoCheck {
  bool ok = true;
  std::string reason;  // first violated condition
};
// Checks that the map is a bijection on every skeleton and that x ⊆ y iff map(x) ⊆ map(y).
IsoCheck check_isomorphism(const CellMap& map);

}  // namespace ccx
