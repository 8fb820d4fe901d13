#pragma once

#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermlat/represent.hpp"

namespace hermlat {

// Ordering key of a binary class: S-value, diagonal, reduced off-diagonal
// entries, then whether the Gram is formal.
struct CanonKey {
  Int s;
  std::vector<Int> diagonal;
  std::vector<Int> off_diagonal;  // per entry: (w-coordinate, a < 0, |a|)
  bool pseudo = false;

  friend bool operator<(const CanonKey& x, const CanonKey& y) {
    return std::tie(x.s, x.diagonal, x.off_diagonal, x.pseudo) <
           std::tie(y.s, y.diagonal, y.off_diagonal, y.pseudo);
  }
  friend bool operator==(const CanonKey& x, const CanonKey& y) {
    return std::tie(x.s, x.diagonal, x.off_diagonal, x.pseudo) ==
           std::tie(y.s, y.diagonal, y.off_diagonal, y.pseudo);
  }
};

struct BinaryClass {
  HermLattice lat;
  Int s;
  CanonKey key;
};

// Least t such that the vectors of norm <= t generate the lattice as an
// O-module. Rank 2 only.
Int s_value(const HermLattice& lattice);
// Same threshold for any rank; used where larger lattices need it.
Int generation_threshold(const HermLattice& lattice);

// Element of the orbit of b under multiplication by units (and conjugation
// when allow_conj) preferred by the ordering key.
AlgInt reduce_off_diagonal(const Field& field, const AlgInt& b, bool allow_conj);
CanonKey canon_key(const HermLattice& lattice, const Int& s);
// Representative of b modulo t*O of least norm, up to sign, with
// nonnegative w-coordinate.
AlgInt canonical_residue(const Field& field, const AlgInt& b, const Int& t);
// Canonical residues b modulo t with t | N(b) and (t, b) not principal.
std::vector<AlgInt> nonprincipal_residues(const Field& field, const Int& t);
// Formal Gram of L + O v + (conj(b)/t) O v, where v has norm t and inner
// products h with the generators of L. Empty when b h / t is not integral.
std::optional<AlgMatrix> nonfree_border(const Field& field, const AlgMatrix& gram, const CoordVector& h,
                                        const Int& t, const AlgInt& b);

// All isometry classes of positive binary lattices with S <= s_max, sorted by
// canon key. Cached per (m, s_max, include_pseudo); thread safe.
const std::vector<BinaryClass>& enumerate_binary(const Field& field, const Int& s_max,
                                                 bool include_pseudo);

struct TruantReport {
  std::optional<BinaryClass> truant;
  // Every unrepresented class sharing the truant's S-value.
  std::vector<BinaryClass> failing_level;
  Int s_cap;
  bool include_pseudo = false;
  // All classes with S <= s_cap represented. Never a claim of full 2-universality.
  bool certified_up_to_cap() const { return !truant.has_value(); }
};

TruantReport truant(const HermLattice& lattice, const Int& s_cap, bool include_pseudo = true);

struct CertificationEntry {
  BinaryClass cls;
  std::optional<Witness> witness;
};

struct CertificationReport {
  std::vector<CertificationEntry> entries;  // stops after the first failure
  Int s_cap;
  bool include_pseudo = false;
  bool certified_up_to_cap() const {
    return entries.empty() || entries.back().witness.has_value();
  }
};

CertificationReport certify_2universal(const HermLattice& lattice, const Int& s_cap,
                                       bool include_pseudo, unsigned jobs = 1);

nlohmann::json binary_class_json(const BinaryClass& cls);
nlohmann::json truant_json(const TruantReport& report);
nlohmann::json certification_json(const CertificationReport& report);
std::string certification_csv(const CertificationReport& report);
std::string binary_classes_csv(const std::vector<BinaryClass>& classes);

}  // namespace hermlat
