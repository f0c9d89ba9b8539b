#include "ccx/distinguish.hpp"

#include "ccx/error.hpp"

namespace ccx {

Engine homp_engine() { return Engine{EngineKind::HompFull, homp_full_diagram(), "homp"}; }

Engine scl_engine(Rank r1, Rank r2, Marking marking) {
  return Engine{EngineKind::Scl, scl_diagram(r1, r2, marking),
                "scl:" + std::to_string(r1) + "," + std::to_string(r2) + "," +
                    (marking == Marking::Distance ? "dist" : "bin")};
}

Engine smcn_engine(DiagramConfig diagram) {
  return Engine{EngineKind::Smcn, std::move(diagram), "smcn"};
}

Engine oracle_engine() { return Engine{EngineKind::Oracle, {}, "oracle"}; }

Engine parse_engine(const std::string& text) {
  if (text == "homp") return homp_engine();
  if (text == "oracle") return oracle_engine();
  if (text == "smcn" || text == "smcn:default") return smcn_engine();
  if (text.rfind("scl:", 0) == 0) {
    Engine e{EngineKind::Scl, parse_diagram(text), text};
    return e;
  }
  throw Error(ErrorCode::ParseError, "unknown engine '" + text + "'");
}

std::string Verdict::describe() const {
  if (oracle) {
    switch (*oracle) {
      case IsoStatus::NonIsomorphic: return "Distinguished (non-isomorphic)";
      case IsoStatus::Isomorphic: return "Indistinguishable (isomorphic)";
      case IsoStatus::Unknown: return "Unknown (oracle budget exhausted)";
    }
  }
  if (!distinguished) return "Indistinguishable";
  if (step->stage < 0) return "Distinguished at the initial coloring";
  return "Distinguished at stage " + std::to_string(step->stage) + ", round " + std::to_string(step->round);
}

Verdict distinguish(const ComplexPtr& a, const ComplexPtr& b, const Engine& engine) {
  Verdict v;
  if (engine.kind == EngineKind::Oracle) {
    const auto iso = cc_isomorphic(a, b);
    v.oracle = iso.status;
    v.distinguished = iso.status == IsoStatus::NonIsomorphic;
    return v;
  }
  const auto result = smcn_refine({a.get(), b.get()}, engine.diagram);
  v.step = result.first_separation;
  v.distinguished = v.step.has_value();
  return v;
}

}  // namespace ccx
