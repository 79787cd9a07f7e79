// Command-line front end. Prints a text summary to stdout and writes the JSON
// report to --out. Exit codes: 0 all checks passed, 1 a check failed or a
// computation raised an error, 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tropcluster/tropcluster.h"

namespace {

struct Options {
  std::string seed, basis, ideal, cone, word, out;
  unsigned n = 4;
  unsigned jobs = 1;
};

struct UsageError {
  std::string what;
};

std::string slurp(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError{std::string(flag) + " is required"};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool input_error(tc_status s) {
  return s == TC_ERR_PARSE || s == TC_ERR_INVALID_ARGUMENT || s == TC_ERR_NULL_ARGUMENT ||
         s == TC_ERR_UNSUPPORTED_N || s == TC_ERR_FROZEN_DIRECTION;
}

// Owns the handles created while running one subcommand.
class Session {
 public:
  ~Session() {
    tc_report_free(report_);
    tc_spec_free(spec_);
    tc_seed_free(seed_);
    tc_ideal_free(ideal_);
  }

  const tc_seed* seed(const Options& o) {
    if (!seed_) check(tc_seed_parse(slurp(o.seed, "--seed").c_str(), &seed_));
    return seed_;
  }

  const tc_spec* spec(const Options& o) {
    if (!spec_) check(tc_spec_new(seed(o), slurp(o.basis, "--basis").c_str(), &spec_));
    return spec_;
  }

  const tc_ideal* ideal(const Options& o) {
    if (!ideal_) check(tc_ideal_parse(slurp(o.ideal, "--ideal").c_str(), &ideal_));
    return ideal_;
  }

  tc_report** report() { return &report_; }
  const tc_report* result() const { return report_; }

  // Throws on a failed call; the status decides the exit code.
  static void check(tc_status s) {
    if (s != TC_OK) throw s;
  }

 private:
  tc_seed* seed_ = nullptr;
  tc_spec* spec_ = nullptr;
  tc_ideal* ideal_ = nullptr;
  tc_report* report_ = nullptr;
};

int finish(const Session& session, const Options& o) {
  const tc_report* r = session.result();
  std::cout << tc_report_text(r);
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
    out << tc_report_json(r);
  }
  return tc_report_passed(r) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of tropical cluster and flag-variety computations"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "write the JSON report here"); };
  auto add_spec = [&](CLI::App* s) {
    s->add_option("--seed", o.seed, "seed JSON file")->required();
    s->add_option("--basis", o.basis, "basis JSON file")->required();
  };
  auto add_jobs = [&](CLI::App* s) { s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u)); };

  auto* mutate = app.add_subcommand("mutate", "mutate a seed along a word");
  mutate->add_option("--seed", o.seed, "seed JSON file")->required();
  mutate->add_option("--word", o.word, "mutation word, e.g. 1,2,1")->required();
  add_out(mutate);

  auto* gvectors = app.add_subcommand("gvectors", "g-vector matrix of a basis in a frame");
  add_spec(gvectors);
  gvectors->add_option("--word", o.word, "frame seed as a mutation word");
  add_out(gvectors);

  auto* present = app.add_subcommand("present", "presentation ideal J_B of a basis");
  add_spec(present);
  add_out(present);

  auto* rays = app.add_subcommand("rays", "ray matrix -B^{-T} G in a frame");
  add_spec(rays);
  rays->add_option("--word", o.word, "frame seed as a mutation word");
  add_out(rays);

  auto* verify = app.add_subcommand("verify", "check the main theorem (--seed/--basis) or one cone (--ideal/--cone)");
  verify->add_option("--seed", o.seed, "seed JSON file");
  verify->add_option("--basis", o.basis, "basis JSON file");
  verify->add_option("--ideal", o.ideal, "ideal JSON file");
  verify->add_option("--cone", o.cone, "cone JSON file");
  add_out(verify);

  auto* flag3 = app.add_subcommand("flag3", "Flag_3 ray census");
  add_out(flag3);
  auto* flag4 = app.add_subcommand("flag4", "Flag_4 positive cone census");
  add_jobs(flag4);
  add_out(flag4);
  auto* flag4ext = app.add_subcommand("flag4-ext", "census of the extended Flag_4 ideal");
  add_jobs(flag4ext);
  add_out(flag4ext);
  auto* fflv = app.add_subcommand("fflv", "FFLV weighting matrix and initial ideal");
  fflv->add_option("--n", o.n, "flag size, 3 to 5")->check(CLI::Range(3u, 5u));
  add_out(fflv);
  auto* orbit = app.add_subcommand("fflv-orbit", "positivity of the S_n images of I_FFLV");
  orbit->add_option("--n", o.n, "flag size, 3 to 5")->check(CLI::Range(3u, 5u));
  add_jobs(orbit);
  add_out(orbit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Session session;
  try {
    tc_report** r = session.report();
    if (*mutate) {
      Session::check(tc_run_mutate(session.seed(o), o.word.c_str(), r));
    } else if (*gvectors) {
      Session::check(tc_run_gvectors(session.spec(o), o.word.c_str(), r));
    } else if (*present) {
      Session::check(tc_run_present(session.spec(o), r));
    } else if (*rays) {
      Session::check(tc_run_rays(session.spec(o), o.word.c_str(), r));
    } else if (*verify) {
      const bool theorem = !o.seed.empty() || !o.basis.empty();
      const bool cone = !o.ideal.empty() || !o.cone.empty();
      if (theorem == cone) throw UsageError{"verify takes either --seed and --basis or --ideal and --cone"};
      if (theorem)
        Session::check(tc_run_verify(session.spec(o), r));
      else
        Session::check(tc_run_verify_cone(session.ideal(o), slurp(o.cone, "--cone").c_str(), r));
    } else if (*flag3) {
      Session::check(tc_run_flag3(r));
    } else if (*flag4) {
      Session::check(tc_run_flag4(o.jobs, r));
    } else if (*flag4ext) {
      Session::check(tc_run_flag4_extended(o.jobs, r));
    } else if (*fflv) {
      Session::check(tc_run_fflv(o.n, r));
    } else if (*orbit) {
      Session::check(tc_run_fflv_orbit(o.n, o.jobs, r));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what << "\n";
    return 2;
  } catch (tc_status s) {
    std::cerr << "error: " << tc_last_error() << "\n";
    return input_error(s) ? 2 : 1;
  }
  return finish(session, o);
}
