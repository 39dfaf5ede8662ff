// Criticality analysis for the two minor-monotone parameters (Euler genus
// and augmented Euler genus), decreaser sets, and the cascade predicate.
#pragma once

#include <optional>
#include <vector>

#include "cascade/genus.hpp"
#include "cascade/graph.hpp"

namespace cascade {

enum class ParameterId { EulerGenus, EulerGenusPlus };

struct ClassifyOptions {
  GenusCache* cache = nullptr;
  int timeout_ms = 300000;  // whole-call budget
  int workers = 1;          // per-operation evaluations run concurrently
  bool underlying_flags = true;   // also compute the terminal-free classes
  bool cascade_only_fast = false;  // abandon work once a condition dies
};

// Parameter value of a graph; EulerGenusPlus requires terminals.
int parameter_value(const LabeledGraph& g, ParameterId p,
                    const ClassifyOptions& opt = {});

// Operations decreasing the parameter by at least k.
std::vector<MinorOp> decreasers(const LabeledGraph& g, ParameterId p, int k,
                                const ClassifyOptions& opt = {});

// Every available operation decreases the parameter.
bool is_parameter_critical(const LabeledGraph& g, ParameterId p,
                           const ClassifyOptions& opt = {});

struct OpRecord {
  MinorOp op;
  int genus = -1;
  int genus_plus = -1;  // absent without terminals
  bool dec_genus = false;
  bool dec_genus_plus = false;
};

struct CriticalityReport {
  int genus = 0;
  int genus_plus = -1;  // absent without terminals
  std::vector<OpRecord> ops;

  // Cascade conditions; meaningful when terminals are present and the
  // terminal edge is absent.
  bool c1 = false;  // every op decreases one of the two parameters
  bool c2 = false;  // some op keeps the genus
  bool c3 = false;  // some op keeps the augmented genus
  bool is_cascade = false;
  bool in_s1 = false;  // cascade with augmented genus exactly 2

  // Terminal-free criticality of the underlying graph.
  bool in_e_k = false;       // minor-minimal above genus k = genus-1
  bool in_e_star_k = false;  // deletion-minimal with min degree 3
  bool in_c_circ_plus = false;

  std::optional<MinorOp> c2_witness, c3_witness;
  std::vector<MinorOp> c1_violations;
};

CriticalityReport classify(const LabeledGraph& g,
                           const ClassifyOptions& opt = {});

}  // namespace cascade
