#ifndef TROPCLUSTER_IO_HPP
#define TROPCLUSTER_IO_HPP

// JSON input files and report documents. Rationals are written as exact
// strings ("3", "-1/2"); inputs accept JSON integers or such strings.

#include <string>
#include <string_view>

#include "tropcluster/apps.hpp"
#include "tropcluster/present.hpp"

namespace tropcluster {

/// {"n": 2, "m": 1, "B": [[...], ...], "d": [...], "labels": [...]}. "d"
/// defaults to all ones and "labels" to A1..A{n+m}. Throws Parse or
/// InvalidArgument.
SeedData parse_seed(std::string_view text);
std::string seed_json(const SeedData& seed);

/// {"basis": [{"name": "A4", "word": [1], "index": 1}, ...]}.
std::vector<BasisElement> parse_basis(std::string_view text);

/// {"variables": [...], "degrees": [[...], ...], "generators": [...]};
/// "degrees" is optional.
Ideal parse_ideal(std::string_view text);

/// {"rays": [[...], ...], "lineality": [[...], ...], "convention": "max"}
/// over the variables of `ring`. With "convention": "min" the rays are
/// negated for the engine. Lineality defaults to lineality_vectors(ring).
Cone parse_cone(std::string_view text, const PolyRing& ring);

/// "1,2,1", "121" or "" (the empty word).
MutationWord parse_word(std::string_view text);

/// A finished report: overall verdict, canonical JSON and a plain-text
/// summary. Both renderings are deterministic.
struct ReportDoc {
  bool passed = true;
  std::string json;
  std::string text;
};

ReportDoc mutate_document(const SeedData& mutated);
ReportDoc gvectors_document(const KhovanskiiSpec& spec, const MutationWord& frame, const QMatrix& G);
ReportDoc present_document(const Presentation& p);
ReportDoc rays_document(const KhovanskiiSpec& spec, const MutationWord& frame, const QMatrix& R);
ReportDoc theorem_document(const TheoremReport& rep);
ReportDoc cone_document(const Ideal& ideal, const Cone& cone, const ConeReport& rep);
ReportDoc flag3_document(const Flag3Report& rep);
ReportDoc census_document(const CensusReport& rep, bool extended);
ReportDoc fflv_document(const FflvReport& rep);
ReportDoc orbit_document(const OrbitReport& rep);

}  // namespace tropcluster

#endif  // TROPCLUSTER_IO_HPP
