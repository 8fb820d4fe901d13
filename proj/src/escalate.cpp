#include "hermlat/escalate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hermlat/io.hpp"
#include "parallel.hpp"

namespace hermlat {

namespace {

std::vector<Int> encode(const AlgInt& x) {
  return {x.b, Int(x.a < 0 ? 1 : 0), x.a < 0 ? Int(-x.a) : x.a};
}

bool unit_orbit_least(const Field& f, const AlgInt& x) {
  for (const auto& u : f.units())
    if (expand({f.mul(u, x)}) < expand({x})) return false;
  return true;
}

AlgMatrix bordered(const Field& f, const AlgMatrix& g, const CoordVector& h, std::size_t used, const Int& t) {
  AlgMatrix out(used + 1, used + 1);
  for (std::size_t i = 0; i < used; ++i) {
    for (std::size_t j = 0; j < used; ++j) out(i, j) = g(i, j);
    out(i, used) = h[i];
    out(used, i) = f.conj(h[i]);
  }
  out(used, used) = t;
  return out;
}

bool in_column_span(const Field& f, const AlgMatrix& g, const CoordVector& h) {
  const std::size_t n = g.rows();
  ZSpan span(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    CoordVector col(n), wcol(n);
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = g(i, j);
      wcol[i] = f.mul(f.omega(), g(i, j));
    }
    span.add(expand(col));
    span.add(expand(wcol));
  }
  return span.contains(expand(h));
}

struct Candidate {
  HermLattice lat;
  CanonKey key;
};

}  // namespace

const char* node_status_name(NodeStatus status) {
  switch (status) {
    case NodeStatus::Escalatable: return "Escalatable";
    case NodeStatus::CertifiedUpToCap: return "CertifiedUpToCap";
    case NodeStatus::EliminatedBy: return "EliminatedBy";
  }
  return "Unknown";
}

std::vector<HermLattice> escalations(const HermLattice& lattice, const Int& t, unsigned jobs) {
  const Field& f = lattice.field();
  const AlgMatrix& g = lattice.gram();
  const std::size_t n = lattice.generators();
  if (t < 1) throw Error(ErrorCode::NonPositive, "escalation norm must be positive");
  if (n == 0) return {HermLattice::diagonal(f, {t})};

  // A generator orthogonal to all others can be rescaled by a unit, and equal
  // such generators can be permuted, without changing L.
  std::vector<bool> isolated(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !g(i, j).is_zero()) isolated[i] = false;
  const bool any_isolated = std::find(isolated.begin(), isolated.end(), true) != isolated.end();

  std::vector<std::vector<AlgInt>> pools(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Int k = 0; k <= g(i, i).a * t; ++k)
      for (const auto& x : f.elements_of_norm(k))
        if (!isolated[i] || unit_orbit_least(f, x)) pools[i].push_back(x);
  }
  std::vector<std::optional<std::size_t>> same_block_prev(n);
  for (std::size_t i = 1; i < n; ++i)
    if (isolated[i] && isolated[i - 1] && g(i, i) == g(i - 1, i - 1)) same_block_prev[i] = i - 1;

  const std::vector<AlgInt> nonprincipal = lattice.pseudo() ? std::vector<AlgInt>{} : nonprincipal_residues(f, t);

  std::vector<AlgMatrix> grams;
  CoordVector h(n);
  std::function<void(std::size_t)> descend = [&](std::size_t i) {
    if (i == n) {
      if (!any_isolated) {
        IntVector e = expand(h);
        for (const auto& u : f.units()) {
          CoordVector y(n);
          for (std::size_t k = 0; k < n; ++k) y[k] = f.mul(f.conj(u), h[k]);
          if (expand(y) < e) return;
        }
      }
      AlgMatrix b = bordered(f, g, h, n, t);
      PositivityResult pos = is_positive(f, b);
      if (pos.kind == Positivity::Indefinite) return;
      if (pos.rank == lattice.rank() + 1) {
        grams.push_back(b);
        if (pos.kind == Positivity::Definite)
          for (const auto& r : nonprincipal)
            if (auto nf = nonfree_border(f, g, h, t, r)) grams.push_back(*nf);
      } else if (!lattice.pseudo() && pos.rank == lattice.rank() && !in_column_span(f, g, h)) {
        grams.push_back(b);
      }
      return;
    }
    for (const auto& x : pools[i]) {
      if (same_block_prev[i] && encode(x) < encode(h[*same_block_prev[i]])) continue;
      h[i] = x;
      AlgMatrix partial = bordered(f, g, h, i + 1, t);
      // Only the leading block of G is used by the partial border.
      if (is_positive(f, partial).kind == Positivity::Indefinite) continue;
      descend(i + 1);
    }
    h[i] = AlgInt();
  };
  descend(0);

  std::vector<Candidate> cands;
  for (auto& gm : grams) {
    HermLattice lat = HermLattice::make(f, gm);
    CanonKey key = canon_key(lat, 0);
    cands.push_back({std::move(lat), std::move(key)});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    if (x.lat.rank() != y.lat.rank()) return x.lat.rank() > y.lat.rank();
    return x.key < y.key;
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Candidate& x, const Candidate& y) { return x.lat.gram() == y.lat.gram(); }),
              cands.end());
  std::vector<HermLattice> lats;
  for (const auto& c : cands) lats.push_back(c.lat);
  std::vector<HermLattice> out;
  for (std::size_t i : isometry_representatives(lats, jobs)) out.push_back(lats[i]);
  return out;
}

std::vector<std::size_t> EscalationTree::select(std::size_t rank, NodeStatus status) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].lat.rank() == rank && nodes[i].status == status) out.push_back(i);
  return out;
}

EscalationTree escalation_tree(const Field& field, const Int& s_cap, std::size_t max_rank, bool include_pseudo,
                               unsigned jobs) {
  if (max_rank > 5) throw Error(ErrorCode::PreconditionViolated, "escalation trees stop at rank 5");
  EscalationTree tree;
  tree.s_cap = s_cap;
  tree.max_rank = max_rank;
  tree.include_pseudo = include_pseudo;
  tree.nodes.push_back({HermLattice::zero(field), std::nullopt, {}, {}, std::nullopt, NodeStatus::Escalatable});

  std::map<std::size_t, std::vector<std::size_t>> by_rank{{0, {0}}};
  std::vector<std::vector<Int>> signatures{isometry_signature(tree.nodes[0].lat)};
  std::vector<std::size_t> level{0};
  while (!level.empty()) {
    std::vector<TruantReport> reports(level.size());
    detail::parallel_for(level.size(), jobs, [&](std::size_t i) {
      reports[i] = truant(tree.nodes[level[i]].lat, s_cap, include_pseudo);
    });
    std::vector<std::vector<HermLattice>> kids(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
      EscalationNode& node = tree.nodes[level[i]];
      node.failing_level = reports[i].failing_level;
      node.truant_class = reports[i].truant;
      if (!node.truant_class) {
        node.status = NodeStatus::CertifiedUpToCap;
        continue;
      }
      node.status = node.lat.rank() < max_rank ? NodeStatus::Escalatable : NodeStatus::EliminatedBy;
    }
    detail::parallel_for(level.size(), jobs, [&](std::size_t i) {
      const EscalationNode& node = tree.nodes[level[i]];
      if (!node.truant_class) return;
      for (auto& lat : escalations(node.lat, node.truant_class->s))
        if (lat.rank() <= max_rank && (node.status == NodeStatus::Escalatable || lat.rank() == node.lat.rank()))
          kids[i].push_back(std::move(lat));
    });

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (auto& lat : kids[i]) {
        std::vector<Int> sig = isometry_signature(lat);
        std::optional<std::size_t> existing;
        for (std::size_t id : by_rank[lat.rank()]) {
          const HermLattice& other = tree.nodes[id].lat;
          if (signatures[id] == sig && represents(lat, other) && represents(other, lat)) {
            existing = id;
            break;
          }
        }
        if (!existing) {
          existing = tree.nodes.size();
          signatures.push_back(std::move(sig));
          tree.nodes.push_back({std::move(lat), std::nullopt, {}, {}, level[i], NodeStatus::Escalatable});
          by_rank[tree.nodes.back().lat.rank()].push_back(*existing);
          next.push_back(*existing);
        }
        auto& ch = tree.nodes[level[i]].children;
        if (*existing != level[i] && std::find(ch.begin(), ch.end(), *existing) == ch.end())
          ch.push_back(*existing);
      }
    }
    level = std::move(next);
  }
  return tree;
}

nlohmann::json tree_json(const EscalationTree& tree) {
  std::vector<bool> emitted(tree.nodes.size(), false);
  std::function<nlohmann::json(std::size_t)> node_json = [&](std::size_t id) -> nlohmann::json {
    const EscalationNode& node = tree.nodes[id];
    if (emitted[id]) return {{"ref", id}};
    emitted[id] = true;
    nlohmann::json j = {{"id", id},
                        {"rank", node.lat.rank()},
                        {"lattice", to_json(node.lat)},
                        {"shorthand", format_gram(node.lat.gram())},
                        {"status", node_status_name(node.status)}};
    if (node.truant_class) {
      j["truant_value"] = node.truant_class->s.str();
      j["truant_class"] = binary_class_json(*node.truant_class);
    }
    nlohmann::json children = nlohmann::json::array();
    for (std::size_t c : node.children) children.push_back(node_json(c));
    j["children"] = children;
    return j;
  };
  return {{"s_cap", tree.s_cap.str()},
          {"max_rank", tree.max_rank},
          {"include_pseudo", tree.include_pseudo},
          {"root", node_json(0)}};
}

std::string tree_csv(const EscalationTree& tree) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + '"';
  };
  std::ostringstream os;
  os << "id,parent,rank,pseudo,gram,status,eliminator\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& node = tree.nodes[i];
    os << i << ',' << (node.parent ? std::to_string(*node.parent) : "") << ',' << node.lat.rank() << ','
       << node.lat.pseudo() << ',' << quote(format_gram(node.lat.gram())) << ',' << node_status_name(node.status)
       << ',';
    if (node.status == NodeStatus::EliminatedBy && node.truant_class)
      os << quote(format_gram(node.truant_class->lat.gram()));
    os << '\n';
  }
  return os.str();
}

}  // namespace hermlat
