#include "tropcluster/tropcluster.h"

#include <new>
#include <string>

#include "tropcluster/io.hpp"

using namespace tropcluster;

struct tc_seed {
  SeedData seed;
  std::string json;
};

struct tc_spec {
  KhovanskiiSpec spec;
};

struct tc_ideal {
  Ideal ideal;
};

struct tc_report {
  ReportDoc doc;
};

namespace {

thread_local std::string g_last_error;

tc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return TC_ERR_SINGULAR_MATRIX;
    case ErrorCode::FrozenDirection: return TC_ERR_FROZEN_DIRECTION;
    case ErrorCode::AmbiguousMinimum: return TC_ERR_AMBIGUOUS_MINIMUM;
    case ErrorCode::OracleMismatch: return TC_ERR_ORACLE_MISMATCH;
    case ErrorCode::ZeroPolynomial: return TC_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::ResourceBudget: return TC_ERR_RESOURCE_BUDGET;
    case ErrorCode::NotACone: return TC_ERR_NOT_A_CONE;
    case ErrorCode::NotBinomial: return TC_ERR_NOT_BINOMIAL;
    case ErrorCode::NotCertified: return TC_ERR_NOT_CERTIFIED;
    case ErrorCode::IndexClash: return TC_ERR_INDEX_CLASH;
    case ErrorCode::UnsupportedN: return TC_ERR_UNSUPPORTED_N;
    case ErrorCode::MissingWitness: return TC_ERR_MISSING_WITNESS;
    case ErrorCode::NotHomogeneous: return TC_ERR_NOT_HOMOGENEOUS;
    case ErrorCode::Parse: return TC_ERR_PARSE;
    case ErrorCode::InvalidArgument: return TC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Internal: return TC_ERR_INTERNAL;
  }
  return TC_ERR_INTERNAL;
}

template <class F>
tc_status guarded(F&& f) {
  try {
    f();
    return TC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TC_ERR_INTERNAL;
  }
}

tc_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return TC_ERR_NULL_ARGUMENT;
}

template <class F>
tc_status report(tc_report** out, F&& make) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new tc_report{make()}; });
}

}  // namespace

extern "C" {

const char* tc_status_name(tc_status status) {
  switch (status) {
    case TC_OK: return "ok";
    case TC_ERR_NULL_ARGUMENT: return "NullArgument";
    case TC_ERR_SINGULAR_MATRIX: return error_code_name(ErrorCode::SingularMatrix);
    case TC_ERR_FROZEN_DIRECTION: return error_code_name(ErrorCode::FrozenDirection);
    case TC_ERR_AMBIGUOUS_MINIMUM: return error_code_name(ErrorCode::AmbiguousMinimum);
    case TC_ERR_ORACLE_MISMATCH: return error_code_name(ErrorCode::OracleMismatch);
    case TC_ERR_ZERO_POLYNOMIAL: return error_code_name(ErrorCode::ZeroPolynomial);
    case TC_ERR_RESOURCE_BUDGET: return error_code_name(ErrorCode::ResourceBudget);
    case TC_ERR_NOT_A_CONE: return error_code_name(ErrorCode::NotACone);
    case TC_ERR_NOT_BINOMIAL: return error_code_name(ErrorCode::NotBinomial);
    case TC_ERR_NOT_CERTIFIED: return error_code_name(ErrorCode::NotCertified);
    case TC_ERR_INDEX_CLASH: return error_code_name(ErrorCode::IndexClash);
    case TC_ERR_UNSUPPORTED_N: return error_code_name(ErrorCode::UnsupportedN);
    case TC_ERR_MISSING_WITNESS: return error_code_name(ErrorCode::MissingWitness);
    case TC_ERR_NOT_HOMOGENEOUS: return error_code_name(ErrorCode::NotHomogeneous);
    case TC_ERR_PARSE: return error_code_name(ErrorCode::Parse);
    case TC_ERR_INVALID_ARGUMENT: return error_code_name(ErrorCode::InvalidArgument);
    case TC_ERR_INTERNAL: return error_code_name(ErrorCode::Internal);
  }
  return "unknown";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

const char* tc_version(void) { return "0.1.0"; }

void tc_set_budget(uint64_t steps) { set_groebner_budget(steps); }

tc_status tc_seed_parse(const char* json, tc_seed** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    SeedData s = parse_seed(json);
    *out = new tc_seed{s, seed_json(s)};
  });
}

void tc_seed_free(tc_seed* seed) { delete seed; }

tc_status tc_seed_mutate(const tc_seed* seed, const char* word, tc_seed** out) {
  if (!seed) return null_argument("seed");
  if (!word) return null_argument("word");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    SeedData s = mutate_along(seed->seed, parse_word(word));
    *out = new tc_seed{s, seed_json(s)};
  });
}

const char* tc_seed_json(const tc_seed* seed) { return seed ? seed->json.c_str() : ""; }

tc_status tc_spec_new(const tc_seed* seed, const char* basis_json, tc_spec** out) {
  if (!seed) return null_argument("seed");
  if (!basis_json) return null_argument("basis_json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    KhovanskiiSpec k{seed->seed, parse_basis(basis_json)};
    k.validate();
    *out = new tc_spec{std::move(k)};
  });
}

void tc_spec_free(tc_spec* spec) { delete spec; }

tc_status tc_ideal_parse(const char* json, tc_ideal** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new tc_ideal{parse_ideal(json)}; });
}

void tc_ideal_free(tc_ideal* ideal) { delete ideal; }

size_t tc_ideal_nvars(const tc_ideal* ideal) { return ideal ? ideal->ideal.ring()->nvars() : 0; }

tc_status tc_run_mutate(const tc_seed* seed, const char* word, tc_report** out) {
  if (!seed) return null_argument("seed");
  if (!word) return null_argument("word");
  return report(out, [&] { return mutate_document(mutate_along(seed->seed, parse_word(word))); });
}

tc_status tc_run_gvectors(const tc_spec* spec, const char* frame, tc_report** out) {
  if (!spec) return null_argument("spec");
  return report(out, [&] {
    MutationWord w = parse_word(frame ? frame : "");
    return gvectors_document(spec->spec, w, gmatrix(spec->spec.seed, spec->spec.basis, w));
  });
}

tc_status tc_run_present(const tc_spec* spec, tc_report** out) {
  if (!spec) return null_argument("spec");
  return report(out, [&] { return present_document(presentation_ideal(spec->spec)); });
}

tc_status tc_run_rays(const tc_spec* spec, const char* frame, tc_report** out) {
  if (!spec) return null_argument("spec");
  return report(out, [&] {
    MutationWord w = parse_word(frame ? frame : "");
    return rays_document(spec->spec, w, ray_matrix(spec->spec, w));
  });
}

tc_status tc_run_verify(const tc_spec* spec, tc_report** out) {
  if (!spec) return null_argument("spec");
  return report(out, [&] { return theorem_document(verify_main_theorem(spec->spec)); });
}

tc_status tc_run_verify_cone(const tc_ideal* ideal, const char* cone_json, tc_report** out) {
  if (!ideal) return null_argument("ideal");
  if (!cone_json) return null_argument("cone_json");
  return report(out, [&] {
    Cone c = parse_cone(cone_json, *ideal->ideal.ring());
    return cone_document(ideal->ideal, c, certify_cone(ideal->ideal, c));
  });
}

tc_status tc_run_flag3(tc_report** out) {
  return report(out, [] { return flag3_document(flag3_census()); });
}

tc_status tc_run_flag4(unsigned jobs, tc_report** out) {
  return report(out, [&] { return census_document(flag4_census(jobs), false); });
}

tc_status tc_run_flag4_extended(unsigned jobs, tc_report** out) {
  return report(out, [&] { return census_document(flag4_extended_census(jobs), true); });
}

tc_status tc_run_fflv(unsigned n, tc_report** out) {
  return report(out, [&] { return fflv_document(fflv_report(n)); });
}

tc_status tc_run_fflv_orbit(unsigned n, unsigned jobs, tc_report** out) {
  return report(out, [&] { return orbit_document(verify_fflv_not_positive(n, {}, jobs)); });
}

int tc_report_passed(const tc_report* report) { return report && report->doc.passed ? 1 : 0; }

const char* tc_report_json(const tc_report* report) { return report ? report->doc.json.c_str() : ""; }

const char* tc_report_text(const tc_report* report) { return report ? report->doc.text.c_str() : ""; }

void tc_report_free(tc_report* report) { delete report; }

}  // extern "C"
