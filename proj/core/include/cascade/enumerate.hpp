// Candidate generation and filtering: the planar critical list derived from
// obstruction data, the base catalog, nonplanar extensions, low-separation
// constructions, and the final cascade census.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cascade/criticality.hpp"
#include "cascade/graph.hpp"

namespace cascade {

struct DatasetError : GraphError {
  using GraphError::GraphError;
};

struct ObstructionDataset {
  std::vector<LabeledGraph> e1;             // minor-minimal, 35 entries
  std::vector<LabeledGraph> e1_star_extra;  // deletion-minimal extras, 68
};

enum class VerifyLevel { Spot, Full };

// Reads a graph6 file with `#E1` and `#E1STAR_EXTRA` section markers and
// validates it: exact counts, nonplanarity of every member, and exact genus
// two on a sample (all members under Full).
ObstructionDataset load_obstructions(const std::string& path,
                                     VerifyLevel level = VerifyLevel::Spot,
                                     GenusCache* cache = nullptr);

// The planar critical graphs for the augmented parameter at value two,
// derived from the dataset: edge removals of minor-minimal members plus
// deletion-minimal extras whose identification lands back in the minor list;
// every candidate is re-verified critical before dedupe.
std::vector<LabeledGraph> derive_planar_c1plus(const ObstructionDataset& ds,
                                               GenusCache* cache = nullptr);

// One abstract linkage: a K4 or K2,3 core with pendant feet at the listed
// attachment points. Attachment names: K4 boundary vertices w1 w2 w3; K2,3
// branch vertices p q and boundary interiors a b.
struct LinkageShape {
  char name;                                  // 'a' .. 'i'
  bool k4_core;
  std::vector<std::vector<std::string>> feet;  // per U-position attachments
};

struct BaseCatalog {
  std::vector<LinkageShape> linkages;     // the nine shapes
  std::vector<LabeledGraph> bases;        // five planar gluings
  std::vector<LabeledGraph> bases_star;   // closure under degree-4 splitting
};

// Materializes the linkage catalog and glues the five bases; the star list
// adds every planarity- and minimality-preserving degree-4 split.
BaseCatalog build_bases();

struct CensusOptions {
  GenusCache* cache = nullptr;
  int workers = 1;
  int timeout_ms = 3600000;
  size_t candidate_budget = 200000;
  unsigned shuffle_seed = 0;  // nonzero: permute candidate processing order
};

// All nonplanar one-obstruction extensions of a base: jumps, crosses,
// tripods and weak tripods, triads. Deduped by canonical form.
std::vector<LabeledGraph> enumerate_extensions(const LabeledGraph& base,
                                               const CensusOptions& opt = {});

// Candidate cascades whose terminal K-graphs are 1- or 2-separated, built
// from the small linkages and the three critical attachment parts.
std::vector<LabeledGraph> enumerate_low_separation();

struct CensusEntry {
  LabeledGraph graph;
  std::string generator;  // "one-separated", "two-separated", "extension"
  std::string base;       // base index for extension entries, else ""
  std::string code_hex;
};

struct CensusResult {
  std::vector<CensusEntry> members;
  size_t candidates_generated = 0;
  size_t candidates_after_dedupe = 0;
  size_t survivors_value_filter = 0;
  // Per-generator candidate and member counts, for debugging census drift.
  std::vector<std::pair<std::string, std::pair<size_t, size_t>>> provenance;
};

// The full census: generate, filter through the cascade predicate, dedupe,
// and re-verify every member.
CensusResult census_s1(const CensusOptions& opt = {});

// Exhaustive catalog of connected terminal graphs (terminal edge absent, up
// to max_n vertices) critical for the augmented parameter at value one.
std::vector<LabeledGraph> census_c0_plus(int max_n,
                                         const CensusOptions& opt = {});

}  // namespace cascade
