#ifndef GIRA_HILBERT_HPP
#define GIRA_HILBERT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gira/eval.hpp"
#include "gira/formula.hpp"
#include "gira/profile.hpp"

namespace gira {

/// Axiom schema over the metavariables p, q, r.
struct AxiomSchema {
  std::string id;       // HL1..HL24, MINGLE
  FormulaPtr pattern;
};

/// The full schema table, HL1..HL24 plus the optional MINGLE schema.
const std::vector<AxiomSchema>& schemata();
const AxiomSchema* schema_by_id(const std::string& id);

/// Matches f against a schema pattern; a metavariable must map to the
/// same formula at every occurrence, constants only match themselves.
std::optional<std::vector<std::pair<std::string, FormulaPtr>>> match_schema(
    const FormulaPtr& f, const AxiomSchema& s);

struct System {
  std::string id;  // MALL | LL | LR | ILL | custom
  std::vector<std::string> axiom_ids;
  bool has_mp = false, has_adj = false, has_nec = false;

  bool has_axiom(const std::string& id) const;
};

const System& system_mall();
const System& system_ll();
const System& system_lr();
const System& system_ill();
const System* system_by_id(const std::string& id);

struct JAxiom { std::string id; };
struct JHyp { int index; };       // 1-based, as written in proof files
struct JMp { int i, j; };         // i: phi, j: phi -> psi
struct JAdj { int i, j; };
struct JNec { int i; };
using Justification = std::variant<JAxiom, JHyp, JMp, JAdj, JNec>;

struct Step {
  FormulaPtr f;
  Justification just;
};

struct Derivation {
  std::string name;
  std::string system_id;
  std::vector<FormulaPtr> hyps;
  std::vector<Step> steps;
};

/// Checks every step: axiom instance, hypothesis, or rule application with
/// exactly matching shapes. Rule references are 1-based and must point at
/// earlier steps. Nec applies only to steps derivable without hypotheses
/// (tracked per step as a "categorical" flag). On failure, the report
/// names the first bad step in the condition string.
CheckReport check_derivation(const Derivation& d, const System& sys);

/// Cross-validates the checker against the algebraic semantics: for every
/// corpus algebra, the conclusion must be a semantic consequence of the
/// hypotheses. Any violation lands in the report with the algebra's index.
CheckReport soundness_scan(const Derivation& d, const System& sys,
                           const std::vector<FiniteAlgebra>& corpus);

/// Text format:
///   derivation <name>
///   system MALL|LL|LR|ILL
///   hyp <formula>            (repeatable)
///   step <k>: <formula> by axiom <id> | hyp <i> | mp <i> <j> | adj <i> <j> | nec <i>
Derivation parse_derivation(const std::string& text);
Derivation parse_derivation_file(const std::string& path);

}  // namespace gira

#endif
