#pragma once

#include <optional>
#include <string>

#include "ccx/covering.hpp"
#include "ccx/iso.hpp"
#include "ccx/refinement.hpp"

namespace ccx {

enum class EngineKind { HompFull, Scl, Smcn, Oracle };

struct Engine {
  EngineKind kind = EngineKind::HompFull;
  DiagramConfig diagram;  // unused by the oracle
  std::string name;
};

Engine homp_engine();
Engine scl_engine(Rank r1, Rank r2, Marking marking);
Engine smcn_engine(DiagramConfig diagram = default_smcn_diagram());
Engine oracle_engine();
// "homp", "scl:R1,R2,dist|bin", "smcn" / "smcn:default", "oracle". Throws ParseError.
Engine parse_engine(const std::string& text);

struct Verdict {
  bool distinguished = false;
  std::optional<Step> step;          // earliest separating step of a refinement engine
  std::optional<IsoStatus> oracle;   // oracle engine only

  std::string describe() const;
};

// For refinement engines "not distinguished" means equal stable fingerprints, a statement
// about the engine's power and not about isomorphism.
Verdict distinguish(const ComplexPtr& a, const ComplexPtr& b, const Engine& engine);

}  // namespace ccx
