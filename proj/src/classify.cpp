#include "hermlat/classify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "hermlat/io.hpp"
#include "parallel.hpp"

namespace hermlat {

namespace {

std::vector<Int> encode(const AlgInt& x) {
  return {x.b, Int(x.a < 0 ? 1 : 0), x.a < 0 ? Int(-x.a) : x.a};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + '"';
}

CoordVector omega_times(const Field& f, const CoordVector& x) {
  CoordVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(f.omega(), x[i]);
  return out;
}

}  // namespace

Int generation_threshold(const HermLattice& lattice) {
  const Field& f = lattice.field();
  const std::size_t n = lattice.generators();
  if (n == 0) return 0;
  Int top = 0;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, lattice.gram()(i, i).a);
  ZSpan span(2 * n);
  for (const auto& k : radical_basis(lattice)) span.add(k);
  auto pool = vectors_up_to_norm(lattice, top);
  for (const auto& [t, vectors] : pool) {
    for (const auto& x : vectors) {
      span.add(expand(x));
      span.add(expand(omega_times(f, x)));
    }
    auto idx = span.index();
    if (idx && *idx == 1) return t;
  }
  throw Error(ErrorCode::PreconditionViolated, "generators of bounded norm do not span the lattice");
}

Int s_value(const HermLattice& lattice) {
  if (lattice.rank() != 2) throw Error(ErrorCode::NotBinary, "S-value is defined here for binary lattices");
  return generation_threshold(lattice);
}

AlgInt reduce_off_diagonal(const Field& field, const AlgInt& b, bool allow_conj) {
  std::vector<AlgInt> orbit;
  for (const auto& u : field.units()) {
    orbit.push_back(field.mul(u, b));
    if (allow_conj) orbit.push_back(field.mul(u, field.conj(b)));
  }
  std::optional<AlgInt> best;
  for (const auto& x : orbit) {
    if (x.b < 0) continue;
    if (!best || encode(x) < encode(*best)) best = x;
  }
  return *best;
}

AlgInt canonical_residue(const Field& field, const AlgInt& b, const Int& t) {
  auto mod = [&](const Int& v) {
    Int r = v % t;
    return r < 0 ? Int(r + t) : r;
  };
  AlgInt base(mod(b.a), mod(b.b));
  std::vector<AlgInt> reps;
  for (int x = -2; x <= 1; ++x)
    for (int y = -2; y <= 1; ++y) {
      AlgInt c(base.a + t * x, base.b + t * y);
      reps.push_back(c);
      reps.push_back(-c);
    }
  Int least = field.norm(reps.front());
  for (const auto& c : reps) least = std::min(least, field.norm(c));
  std::optional<AlgInt> best;
  for (const auto& c : reps) {
    if (field.norm(c) != least || c.b < 0) continue;
    if (!best || encode(c) < encode(*best)) best = c;
  }
  return *best;
}

std::vector<AlgInt> nonprincipal_residues(const Field& field, const Int& t) {
  std::vector<AlgInt> out;
  for (Int x = 0; x < t; ++x)
    for (Int y = 0; y < t; ++y) {
      AlgInt b(x, y);
      if (field.norm(b) % t != 0) continue;
      if (field.is_principal_ideal({AlgInt(t), b})) continue;
      AlgInt c = canonical_residue(field, b, t);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  std::sort(out.begin(), out.end(), [](const AlgInt& x, const AlgInt& y) { return encode(x) < encode(y); });
  return out;
}

std::optional<AlgMatrix> nonfree_border(const Field& field, const AlgMatrix& gram, const CoordVector& h,
                                        const Int& t, const AlgInt& b) {
  const std::size_t n = gram.rows();
  if (field.norm(b) % t != 0) return std::nullopt;
  CoordVector scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    AlgInt p = field.mul(b, h[i]);
    if (p.a % t != 0 || p.b % t != 0) return std::nullopt;
    scaled[i] = AlgInt(p.a / t, p.b / t);
  }
  AlgMatrix out(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = gram(i, j);
    out(i, n) = h[i];
    out(n, i) = field.conj(h[i]);
    out(i, n + 1) = scaled[i];
    out(n + 1, i) = field.conj(scaled[i]);
  }
  out(n, n) = t;
  out(n, n + 1) = b;
  out(n + 1, n) = field.conj(b);
  out(n + 1, n + 1) = field.norm(b) / t;
  return out;
}

CanonKey canon_key(const HermLattice& lattice, const Int& s) {
  CanonKey key;
  key.s = s;
  key.pseudo = lattice.pseudo();
  const AlgMatrix& g = lattice.gram();
  for (std::size_t i = 0; i < g.rows(); ++i) key.diagonal.push_back(g(i, i).a);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      for (auto& v : encode(g(i, j))) key.off_diagonal.push_back(v);
  return key;
}

namespace {

std::vector<BinaryClass> build_binary(const Field& f, const Int& s_max, bool include_pseudo) {
  // A class generated by vectors of norm <= s_max need not have a basis of
  // such vectors, so bases are scanned up to twice the cap.
  const Int bound = 2 * s_max;
  std::vector<AlgMatrix> grams;
  for (Int a = 1; a <= bound; ++a)
    for (Int c = a; c <= bound; ++c) {
      std::vector<AlgInt> offs;
      for (Int nb = 0; nb < a * c; ++nb)
        for (const auto& b : f.elements_of_norm(nb)) {
          AlgInt r = reduce_off_diagonal(f, b, a == c);
          if (std::find(offs.begin(), offs.end(), r) == offs.end()) offs.push_back(r);
        }
      for (const auto& b : offs) grams.push_back(AlgMatrix{{a, b}, {f.conj(b), c}});
    }

  if (include_pseudo) {
    for (Int t = 2; t <= bound; ++t) {
      auto residues = nonprincipal_residues(f, t);
      if (residues.empty()) continue;
      for (Int a = 1; a <= bound; ++a)
        for (Int nh = 0; nh < a * t; ++nh)
          for (const auto& h : f.elements_of_norm(nh))
            for (const auto& b : residues) {
              if (f.norm(b) / t > bound) continue;
              auto g = nonfree_border(f, AlgMatrix{{a}}, {h}, t, b);
              if (g) grams.push_back(*g);
            }
    }
  }

  std::vector<BinaryClass> candidates;
  for (auto& g : grams) {
    HermLattice lat = HermLattice::make(f, g);
    Int s = s_value(lat);
    if (s > s_max) continue;
    CanonKey key = canon_key(lat, s);
    candidates.push_back({std::move(lat), s, std::move(key)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const BinaryClass& x, const BinaryClass& y) { return x.key < y.key; });
  std::vector<HermLattice> lats;
  for (const auto& c : candidates) lats.push_back(c.lat);
  std::vector<BinaryClass> out;
  for (std::size_t i : isometry_representatives(lats)) out.push_back(candidates[i]);
  return out;
}

}  // namespace

const std::vector<BinaryClass>& enumerate_binary(const Field& field, const Int& s_max, bool include_pseudo) {
  static std::mutex mutex;
  static std::map<std::tuple<std::int64_t, Int, bool>, std::unique_ptr<std::vector<BinaryClass>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(field.m(), s_max, include_pseudo);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<std::vector<BinaryClass>>(build_binary(field, s_max, include_pseudo)))
             .first;
  return *it->second;
}

TruantReport truant(const HermLattice& lattice, const Int& s_cap, bool include_pseudo) {
  TruantReport report;
  report.s_cap = s_cap;
  report.include_pseudo = include_pseudo;
  RepresentationSearch search(lattice);
  for (const auto& cls : enumerate_binary(lattice.field(), s_cap, include_pseudo)) {
    if (report.truant && cls.s != report.truant->s) break;
    if (search.find(cls.lat)) continue;
    if (!report.truant) report.truant = cls;
    report.failing_level.push_back(cls);
  }
  return report;
}

CertificationReport certify_2universal(const HermLattice& lattice, const Int& s_cap, bool include_pseudo,
                                       unsigned jobs) {
  const auto& classes = enumerate_binary(lattice.field(), s_cap, include_pseudo);
  std::vector<std::optional<Witness>> found(classes.size());
  detail::parallel_for(classes.size(), jobs, [&](std::size_t i) {
    RepresentationSearch search(lattice);
    found[i] = search.find(classes[i].lat);
  });
  CertificationReport report;
  report.s_cap = s_cap;
  report.include_pseudo = include_pseudo;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    report.entries.push_back({classes[i], found[i]});
    if (!found[i]) break;
  }
  return report;
}

nlohmann::json binary_class_json(const BinaryClass& cls) {
  return {{"gram", to_json(cls.lat.gram())},
          {"shorthand", format_gram(cls.lat.gram())},
          {"pseudo", cls.lat.pseudo()},
          {"s", cls.s.str()}};
}

nlohmann::json truant_json(const TruantReport& report) {
  nlohmann::json out;
  out["s_cap"] = report.s_cap.str();
  out["include_pseudo"] = report.include_pseudo;
  if (report.truant) {
    out["status"] = "truant";
    out["truant_value"] = report.truant->s.str();
    out["class"] = binary_class_json(*report.truant);
    nlohmann::json level = nlohmann::json::array();
    for (const auto& c : report.failing_level) level.push_back(binary_class_json(c));
    out["failing_level"] = level;
  } else {
    out["status"] = "certified_up_to_cap";
  }
  return out;
}

nlohmann::json certification_json(const CertificationReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j = {{"class", binary_class_json(e.cls)},
                        {"s", e.cls.s.str()},
                        {"status", e.witness ? "represented" : "not_represented"}};
    if (e.witness) j["witness"] = to_json(*e.witness);
    entries.push_back(j);
  }
  return {{"s_cap", report.s_cap.str()},
          {"include_pseudo", report.include_pseudo},
          {"certified_up_to_cap", report.certified_up_to_cap()},
          {"classes", entries}};
}

std::string certification_csv(const CertificationReport& report) {
  std::ostringstream os;
  os << "class,s,pseudo,status,witness\n";
  for (const auto& e : report.entries) {
    os << csv_quote(format_gram(e.cls.lat.gram())) << ',' << e.cls.s << ',' << e.cls.lat.pseudo() << ','
       << (e.witness ? "represented" : "not_represented") << ',';
    if (e.witness) {
      std::string w = to_json(*e.witness).at("rows").dump();
      os << csv_quote(w);
    }
    os << '\n';
  }
  return os.str();
}

std::string binary_classes_csv(const std::vector<BinaryClass>& classes) {
  std::ostringstream os;
  os << "class,s,pseudo\n";
  for (const auto& c : classes) os << csv_quote(format_gram(c.lat.gram())) << ',' << c.s << ',' << c.lat.pseudo() << '\n';
  return os.str();
}

}  // namespace hermlat
