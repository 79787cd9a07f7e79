#include "tropcluster/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace tropcluster {

using json = nlohmann::ordered_json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::Parse, "expected an integer or a rational string, got " + v.dump());
}

long integer_of(const json& v) {
  if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "expected an integer, got " + v.dump());
  return v.get<long>();
}

QVector qvector_of(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::Parse, "expected an array, got " + v.dump());
  QVector out;
  for (const auto& x : v) out.push_back(rational_of(x));
  return out;
}

std::vector<std::string> strings_of(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::Parse, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw Error(ErrorCode::Parse, "expected a string, got " + x.dump());
    out.push_back(x.get<std::string>());
  }
  return out;
}

json qvector_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json qmatrix_json(const QMatrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(qvector_json(m.row(r)));
  return a;
}

json word_json(const MutationWord& w) {
  json a = json::array();
  for (auto k : w) a.push_back(k);
  return a;
}

std::string word_text(const MutationWord& w) {
  std::string s;
  for (auto k : w) s += (s.empty() ? "" : ",") + std::to_string(k);
  return s.empty() ? "(initial)" : s;
}

std::string vector_text(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string matrix_text(const QMatrix& m, const std::vector<std::string>& cols,
                        const std::vector<std::string>& rows = {}) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1);
  cells[0] = cols;
  cells[0].insert(cells[0].begin(), "");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cells[r + 1].push_back(r < rows.size() ? rows[r] : "");
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r + 1].push_back(to_string(m(r, c)));
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string s;
  for (const auto& row : cells) {
    s += row[0] + std::string(width[0] - row[0].size(), ' ');
    for (std::size_t c = 1; c < row.size(); ++c) s += std::string(width[c] - row[c].size() + 2, ' ') + row[c];
    s += '\n';
  }
  return s;
}

json certificate_json(const PositivityCertificate& cert) {
  json j = {{"verdict", verdict_name(cert.verdict)}};
  if (cert.verdict == PositivityCertificate::Verdict::NotPositive) j["witness"] = cert.witness.to_string();
  if (!cert.point.empty()) j["point"] = qvector_json(cert.point);
  if (!cert.approx_point.empty()) {
    json a = json::array();
    for (double x : cert.approx_point) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", x);
      a.push_back(buf);
    }
    j["approximate_point"] = a;
  }
  return j;
}

bool flat(const json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

// Indented JSON with arrays of scalars kept on one line.
void render(const json& j, int depth, std::string& out) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  if (j.is_array() && (j.empty() || flat(j))) {
    out += j.dump();
    return;
  }
  if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      render(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + json(k).dump() + ": ";
      render(v, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  out += j.dump();
}

std::string pretty(const json& j) {
  std::string out;
  render(j, 0, out);
  return out + "\n";
}

std::string mark(bool ok) { return ok ? "PASS" : "FAIL"; }

ReportDoc finish(const json& j, bool passed, const std::string& text) {
  return {passed, pretty(j), text};
}

json failures_json(const std::vector<std::string>& f) { return f; }

}  // namespace

SeedData parse_seed(std::string_view text) {
  json j = parse_text(text);
  SeedData s;
  s.n = static_cast<std::size_t>(integer_of(field(j, "n")));
  s.m = static_cast<std::size_t>(integer_of(field(j, "m")));
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : field(j, "B")) {
    std::vector<std::int64_t> row;
    for (const auto& x : r) row.push_back(integer_of(x));
    rows.push_back(std::move(row));
  }
  s.B = IntMatrix::from_rows(rows);
  if (j.contains("d"))
    for (const auto& x : j["d"]) s.d.push_back(integer_of(x));
  else
    s.d.assign(s.size(), 1);
  if (j.contains("labels"))
    s.labels = strings_of(j["labels"]);
  else
    for (std::size_t i = 1; i <= s.size(); ++i) s.labels.push_back("A" + std::to_string(i));
  s.validate();
  return s;
}

std::string seed_json(const SeedData& seed) {
  json B = json::array();
  for (std::size_t r = 0; r < seed.B.rows(); ++r) B.push_back(seed.B.row(r));
  json j = {{"n", seed.n}, {"m", seed.m}, {"B", B}, {"d", seed.d}, {"labels", seed.labels}};
  return pretty(j);
}

std::vector<BasisElement> parse_basis(std::string_view text) {
  json j = parse_text(text);
  std::vector<BasisElement> out;
  for (const auto& e : field(j, "basis")) {
    BasisElement b;
    b.name = field(e, "name").get<std::string>();
    b.index = static_cast<std::size_t>(integer_of(field(e, "index")));
    if (e.contains("word"))
      for (const auto& k : e["word"]) b.word.push_back(static_cast<std::size_t>(integer_of(k)));
    out.push_back(std::move(b));
  }
  return out;
}

Ideal parse_ideal(std::string_view text) {
  json j = parse_text(text);
  std::vector<std::vector<long>> deg;
  if (j.contains("degrees"))
    for (const auto& d : j["degrees"]) {
      std::vector<long> row;
      for (const auto& x : d) row.push_back(integer_of(x));
      deg.push_back(std::move(row));
    }
  RingPtr ring = PolyRing::make(strings_of(field(j, "variables")), std::move(deg));
  return Ideal::parse(ring, strings_of(field(j, "generators")));
}

Cone parse_cone(std::string_view text, const PolyRing& ring) {
  json j = parse_text(text);
  const std::string conv = j.value("convention", "max");
  if (conv != "max" && conv != "min") throw Error(ErrorCode::Parse, "convention must be \"max\" or \"min\"");
  Cone c;
  for (const auto& r : field(j, "rays")) {
    QVector v = qvector_of(r);
    if (conv == "min") v = negated(v);
    c.rays.push_back(std::move(v));
  }
  if (j.contains("lineality"))
    for (const auto& r : j["lineality"]) c.lineality.push_back(qvector_of(r));
  else
    c.lineality = lineality_vectors(ring);
  c.validate(ring.nvars());
  return c;
}

MutationWord parse_word(std::string_view text) {
  MutationWord w;
  const bool commas = text.find(',') != std::string_view::npos;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    std::size_t k = 0;
    for (char ch : tok) k = 10 * k + static_cast<std::size_t>(ch - '0');
    if (k == 0) throw Error(ErrorCode::Parse, "mutation directions start at 1");
    w.push_back(k);
    tok.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      tok += ch;
      if (!commas) flush();
    } else if (ch == ',') {
      if (tok.empty()) throw Error(ErrorCode::Parse, "empty entry in mutation word");
      flush();
    } else if (ch != ' ') {
      throw Error(ErrorCode::Parse, "bad character in mutation word: " + std::string(1, ch));
    }
  }
  flush();
  return w;
}

ReportDoc mutate_document(const SeedData& mutated) {
  std::string j = seed_json(mutated);
  return {true, j, j};
}

ReportDoc gvectors_document(const KhovanskiiSpec& spec, const MutationWord& frame, const QMatrix& G) {
  std::vector<std::string> names;
  for (const auto& b : spec.basis) names.push_back(b.name);
  json j = {{"frame", word_json(frame)}, {"basis", names}, {"gmatrix", qmatrix_json(G)}};
  return finish(j, true, "g-vectors in frame " + word_text(frame) + "\n" + matrix_text(G, names));
}

ReportDoc present_document(const Presentation& p) {
  json grading = json::array();
  for (const auto& g : p.grading) grading.push_back(qvector_json(g));
  json j = {{"variables", p.ring->names()}, {"generators", canonical_generators(p.ideal)}, {"grading", grading}};
  std::string t = "J_B in " + join(p.ring->names(), ", ") + "\n";
  for (const auto& g : canonical_generators(p.ideal)) t += "  " + g + "\n";
  for (const auto& g : p.grading) t += "grading " + vector_text(g) + "\n";
  return finish(j, true, t);
}

ReportDoc rays_document(const KhovanskiiSpec& spec, const MutationWord& frame, const QMatrix& R) {
  std::vector<std::string> names;
  for (const auto& b : spec.basis) names.push_back(b.name);
  json j = {{"frame", word_json(frame)}, {"basis", names}, {"ray_matrix", qmatrix_json(R)}};
  return finish(j, true, "ray matrix in frame " + word_text(frame) + "\n" + matrix_text(R, names));
}

ReportDoc theorem_document(const TheoremReport& rep) {
  json clauses = json::array();
  std::string t;
  for (const auto& c : rep.clauses) {
    json cj = {{"name", c.name}, {"passed", c.passed}};
    if (!c.witness.empty()) cj["witness"] = c.witness;
    clauses.push_back(cj);
    t += mark(c.passed) + " " + c.name + (c.witness.empty() ? "" : "  [" + c.witness + "]") + "\n";
  }
  json mutated = json::object();
  for (const auto& [k, R] : rep.mutated_rays) {
    json m = {{"ray_matrix", qmatrix_json(R)}};
    if (rep.mutated_ideals.count(k)) m["initial_ideal"] = rep.mutated_ideals.at(k);
    mutated["mu_" + std::to_string(k)] = m;
  }
  json j = {{"passed", rep.passed()},
            {"basis", rep.labels},
            {"frame", {{"ray_matrix", qmatrix_json(rep.frame_rays)}, {"initial_ideal", rep.frame_ideal}}},
            {"mutations", mutated},
            {"clauses", clauses}};
  t += rep.passed() ? "all clauses passed\n" : "failed: " + rep.first_failure() + "\n";
  return finish(j, rep.passed(), t);
}

ReportDoc cone_document(const Ideal& ideal, const Cone& cone, const ConeReport& rep) {
  json rays = json::array();
  for (const auto& r : cone.rays) rays.push_back(qvector_json(r));
  json j = {{"variables", ideal.ring()->names()},
            {"rays", rays},
            {"monomial_free", rep.monomial_free},
            {"binomial", rep.binomial},
            {"prime", rep.prime},
            {"positivity", certificate_json(rep.certificate)},
            {"passed", rep.passed()}};
  std::string t = mark(rep.monomial_free) + " monomial_free\n" + mark(rep.binomial) + " binomial\n" +
                  mark(rep.prime) + " prime\n" +
                  mark(rep.certificate.verdict == PositivityCertificate::Verdict::Positive) + " totally_positive (" + verdict_name(rep.certificate.verdict) + ")\n";
  if (rep.monomial_free) {
    j["initial_ideal"] = canonical_generators(rep.initial_ideal);
    t += "initial ideal\n";
    for (const auto& g : canonical_generators(rep.initial_ideal)) t += "  " + g + "\n";
  }
  return finish(j, rep.passed(), t);
}

ReportDoc flag3_document(const Flag3Report& rep) {
  json rays = json::array();
  std::string t = mark(rep.ideal_matches) + " J_3 = (" + join(rep.ideal, ", ") + ")\n";
  for (const auto& r : rep.rays) {
    json rj = {{"name", r.name},
               {"printed_weight", r.printed_weight},
               {"weight", qvector_json(r.weight)},
               {"corrected", r.corrected},
               {"initial_ideal", r.initial_ideal},
               {"matches_printed", r.matches_printed},
               {"tropical", r.tropical},
               {"verdict", r.verdict}};
    if (!r.witness.empty()) rj["witness"] = r.witness;
    rays.push_back(rj);
    t += mark(r.matches_printed && r.tropical) + " " + r.name + " " + vector_text(r.weight) +
         (r.corrected ? " (corrected)" : "") + "  " + join(r.initial_ideal, ", ") + "  " + r.verdict +
         (r.witness.empty() ? "" : " witness " + r.witness) + "\n";
  }
  t += mark(rep.all_classes) + " three ray classes\n";
  json j = {{"passed", rep.passed()}, {"ideal", rep.ideal}, {"ideal_matches", rep.ideal_matches},
            {"rays", rays}, {"all_classes", rep.all_classes}, {"failures", failures_json(rep.failures)}};
  return finish(j, rep.passed(), t);
}

ReportDoc census_document(const CensusReport& rep, bool extended) {
  json cones = json::array();
  std::string t;
  if (extended)
    t += mark(rep.homogeneous) + " homogeneous with deg x = 2\n" + mark(rep.elimination_matches) +
         " eliminating x gives J_4\n";
  for (const auto& c : rep.cones) {
    cones.push_back({{"name", c.name},
                     {"rays", c.rays},
                     {"listed_prime", c.listed_prime},
                     {"monomial_free", c.monomial_free},
                     {"binomial", c.binomial},
                     {"prime", c.prime},
                     {"verdict", c.verdict},
                     {"initial_ideal", c.initial_ideal},
                     {"neighbours", c.neighbours}});
    bool ok = c.monomial_free && c.binomial && c.prime == c.listed_prime && c.verdict == "positive";
    t += mark(ok) + " " + c.name + " {" + join(c.rays, ",") + "} " + (c.prime ? "prime" : "not prime") + " " +
         c.verdict + "  neighbours " + join(c.neighbours, ",") + "\n";
  }
  json edges = json::array();
  for (const auto& [a, b] : rep.edges) edges.push_back({a, b});
  json j = {{"passed", rep.passed()}, {"variables", rep.variables}, {"cones", cones}, {"edges", edges},
            {"three_regular", rep.three_regular}};
  if (extended) {
    json bij = json::array();
    for (const auto& [v, r] : rep.bijection) bij.push_back({v, r});
    j["homogeneous"] = rep.homogeneous;
    j["elimination_matches"] = rep.elimination_matches;
    j["bijection"] = bij;
    t += "cluster variable / ray\n";
    for (const auto& [v, r] : rep.bijection) t += "  " + v + "  " + r + "\n";
  }
  j["failures"] = failures_json(rep.failures);
  t += mark(rep.three_regular) + " adjacency graph: " + std::to_string(rep.cones.size()) + " cones, " +
       std::to_string(rep.edges.size()) + " edges, 3-regular\n";
  for (const auto& f : rep.failures) t += "failure: " + f + "\n";
  return finish(j, rep.passed(), t);
}

ReportDoc fflv_document(const FflvReport& rep) {
  json roots = json::array();
  std::vector<std::string> root_names;
  for (const auto& [i, k] : rep.roots) {
    roots.push_back({i, k});
    root_names.push_back("e" + std::to_string(i) + std::to_string(k));
  }
  json j = {{"passed", rep.passed()},
            {"n", rep.n},
            {"variables", rep.variables},
            {"roots", roots},
            {"M", qmatrix_json(rep.M)},
            {"weight", qvector_json(rep.weight)},
            {"oracle_matches", rep.oracle_matches},
            {"matrix_equals_weight", rep.matrix_equals_weight},
            {"initial_ideal", rep.initial_ideal},
            {"tropical", rep.tropical},
            {"prime", rep.prime},
            {"verdict", rep.verdict},
            {"witness", rep.witness}};
  std::string t = "M^T (rows are Plücker variables, columns roots)\n" +
                  matrix_text(rep.M.transpose(), root_names, rep.variables);
  t += "weight " + vector_text(rep.weight) + "\n";
  t += mark(rep.oracle_matches) + " closed form equals the search oracle\n";
  t += mark(rep.matrix_equals_weight) + " matrix order and degree weight agree\n";
  t += "I_FFLV\n";
  for (const auto& g : rep.initial_ideal) t += "  " + g + "\n";
  t += mark(rep.tropical) + " in trop(J_" + std::to_string(rep.n) + ")\n" + mark(rep.prime) + " prime\n";
  t += mark(rep.verdict == "not_positive") + " " + rep.verdict + " witness " + rep.witness + "\n";
  if (rep.n == 4) {
    j["matches_printed"] = rep.matches_printed;
    j["sigma"] = rep.sigma;
    j["sigma_ideal"] = rep.sigma_ideal;
    j["sigma_matches_printed"] = rep.sigma_matches_printed;
    j["sigma_verdict"] = rep.sigma_verdict;
    t += mark(rep.matches_printed) + " I_FFLV equals the printed generators\n";
    t += mark(rep.sigma_matches_printed) + " sigma = " + rep.sigma + " image equals the printed ideal\n";
    t += mark(rep.sigma_verdict == "positive") + " image is " + rep.sigma_verdict + "\n";
  }
  j["failures"] = failures_json(rep.failures);
  for (const auto& f : rep.failures) t += "failure: " + f + "\n";
  return finish(j, rep.passed(), t);
}

ReportDoc orbit_document(const OrbitReport& rep) {
  json rows = json::array();
  std::string t;
  for (const auto& r : rep.rows) {
    std::string one_line;
    for (std::size_t i = 0; i < r.sigma.size(); ++i) one_line += (i ? "," : "") + std::to_string(r.sigma[i]);
    rows.push_back({{"sigma", one_line},
                    {"cycles", cycle_string(r.sigma)},
                    {"verdict", r.verdict},
                    {"witness_class", r.witness_class},
                    {"witness", r.witness}});
    t += one_line + "  " + cycle_string(r.sigma) + "  " + r.verdict + "  " + r.witness_class + "  " + r.witness + "\n";
  }
  const bool passed = rep.inconclusive() == 0;
  json j = {{"n", rep.n},
            {"passed", passed},
            {"positive", rep.positive()},
            {"not_positive", rep.not_positive()},
            {"inconclusive", rep.inconclusive()},
            {"rows", rows}};
  t += "positive " + std::to_string(rep.positive()) + ", not_positive " + std::to_string(rep.not_positive()) +
       ", inconclusive " + std::to_string(rep.inconclusive()) + "\n";
  return finish(j, passed, t);
}

}  // namespace tropcluster
