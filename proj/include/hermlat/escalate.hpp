#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermlat/classify.hpp"

namespace hermlat {

// All lattices L + O v with H(v, v) = t, up to isometry, sorted by the
// ordering key of their Gram matrices. Three shapes occur:
//  - a bordered Gram [[G, h], [h^*, t]] that stays definite (or, for a
//    non-free L, raises the rank by one);
//  - a bordered Gram of unchanged rank whose border is not an O-combination
//    of the columns of G (v lies in L tensor E but not in L);
//  - L + O v + (conj(b)/t) O v for a non-principal ideal (t, b).
std::vector<HermLattice> escalations(const HermLattice& lattice, const Int& t, unsigned jobs = 1);

enum class NodeStatus { Escalatable, CertifiedUpToCap, EliminatedBy };
const char* node_status_name(NodeStatus status);

struct EscalationNode {
  HermLattice lat;
  std::optional<BinaryClass> truant_class;
  std::vector<BinaryClass> failing_level;
  // Indices into EscalationTree::nodes. A child reached earlier along another
  // path is referenced, not copied.
  std::vector<std::size_t> children;
  std::optional<std::size_t> parent;  // first parent that produced this node
  NodeStatus status = NodeStatus::Escalatable;
};

struct EscalationTree {
  Int s_cap;
  std::size_t max_rank = 0;
  bool include_pseudo = true;
  std::vector<EscalationNode> nodes;  // nodes[0] is the zero lattice

  // Nodes of the given rank with the given status.
  std::vector<std::size_t> select(std::size_t rank, NodeStatus status) const;
};

// Breadth-first walk from the zero lattice. Below max_rank a node with a
// truant is expanded by all its escalations; at max_rank it is eliminated by
// its truant and only escalations of the same rank are followed.
EscalationTree escalation_tree(const Field& field, const Int& s_cap, std::size_t max_rank,
                               bool include_pseudo = true, unsigned jobs = 1);

nlohmann::json tree_json(const EscalationTree& tree);
std::string tree_csv(const EscalationTree& tree);

}  // namespace hermlat
