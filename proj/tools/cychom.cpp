// cychom: Hochschild, cyclic and negative cyclic homology of algebras given by
// structure constants, plus the verification suites.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cychom/acceptance.hpp"
#include "cychom/algebra_io.hpp"
#include "cychom/cyclic_homology.hpp"
#include "cychom/errors.hpp"
#include "cychom/lambda.hpp"
#include "cychom/mixed.hpp"
#include "cychom/verify.hpp"

namespace fs = std::filesystem;
using namespace cychom;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2, internal_error = 3 };

struct UsageError : Error {
  using Error::Error;
};

struct DegreeRange {
  int lo = 0;
  int hi = 0;
};

DegreeRange parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("--degrees expects a..b, got '" + text + "'");
  DegreeRange r{std::stoi(m[1]), std::stoi(m[2])};
  if (r.lo > r.hi) throw UsageError("--degrees: empty range " + text);
  return r;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("CYCHOM_DATA")) return env;
#ifdef CYCHOM_INSTALLED_DATA_DIR
  if (fs::exists(CYCHOM_INSTALLED_DATA_DIR)) return CYCHOM_INSTALLED_DATA_DIR;
#endif
  return CYCHOM_SOURCE_DATA_DIR;
}

// a path, or the name of a bundled algebra with or without .alg
std::string resolve_algebra(const std::string& name, const std::string& data_dir) {
  if (fs::exists(name)) return name;
  for (const std::string& cand : {data_dir + "/algebras/" + name, data_dir + "/algebras/" + name + ".alg"}) {
    if (fs::exists(cand)) return cand;
  }
  throw UsageError("algebra file not found: " + name);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string error_json(const std::string& type, const std::string& message, int line) {
  nlohmann::ordered_json e{{"type", type}, {"message", message}};
  if (line > 0) e["line"] = line;
  return nlohmann::ordered_json{{"schema", 1}, {"error", e}}.dump(2);
}

struct Common {
  std::string ring;
  std::string format = "json";
  std::string output;
  std::string data_dir = default_data_dir();
  int threads = 0;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("-o,--output", c.output, "write the report to a file");
  app->add_option("--data", c.data_dir, "directory with the bundled algebras");
  app->add_option("--threads", c.threads, "worker count (same as CYCHOM_THREADS)")->check(CLI::PositiveNumber);
}

struct HomologyJob {
  std::string algebra;
  std::string degrees = "0..4";
  int trunc = -1;
  int depth_cap = -1;
};

std::string render(const HomologyTable& t, const std::string& format) {
  if (format == "csv") return table_to_csv(t);
  if (format == "text") return table_to_text(t);
  return table_to_json(t);
}

int run_homology(HomologyKind kind, const HomologyJob& job, const Common& c) {
  const DegreeRange r = parse_range(job.degrees);
  std::optional<RingSpec> ring;
  if (!c.ring.empty()) ring = RingSpec::parse(c.ring);
  const AlgebraPresentation a = parse_algebra_file(resolve_algebra(job.algebra, c.data_dir), ring);
  HomologyTable t;
  if (kind == HomologyKind::HN) {
    if (r.hi > 0) throw UsageError("hn: degrees must be <= 0");
    DepthSchedule s;
    if (job.depth_cap >= 0) s.cap = job.depth_cap;
    // enough room for the first depth and the one after it
    const int first = (r.hi - r.lo) + 2;
    const int depth = s.cap >= 0 ? std::min(s.cap, first + 2) : first + 2;
    const int trunc = job.trunc >= 0 ? job.trunc : hn_required_truncation(r.hi, depth);
    t = hn(cyclic_nerve(a, trunc), r.lo, r.hi, s);
  } else {
    if (r.lo < 0) throw UsageError("degrees must be >= 0");
    const int trunc = job.trunc >= 0 ? job.trunc : r.hi + 2;
    if (r.hi + 1 >= trunc) {
      throw UsageError("--trunc " + std::to_string(trunc) + " is too small for degree " + std::to_string(r.hi) +
                       " (need trunc > " + std::to_string(r.hi + 1) + ")");
    }
    const CyclicModule m = cyclic_nerve(a, trunc);
    t = kind == HomologyKind::HH ? hh(m, r.lo, r.hi) : hc(m, r.lo, r.hi);
  }
  emit(render(t, c.format), c.output);
  return ok;
}

// the operator identities on the representable module, as reports
std::vector<VerificationReport> identity_reports(int m, int trunc, const RingSpec& ring) {
  const CyclicModule rep = representable_module(ring, m, trunc);
  const auto params = std::vector<std::pair<std::string, std::string>>{
      {"m", std::to_string(m)}, {"N", std::to_string(trunc)}, {"ring", ring.name()}};
  VerificationReport func{"functoriality", params, {}, {}};
  for (const auto& v : check_functoriality(rep)) func.fail(v);
  VerificationReport mixed{"mixed_identities", params, {}, {}};
  for (const auto& v : check_mixed(mixed_complex(rep))) mixed.fail(v);
  VerificationReport contraction{"contraction", params, {}, {}};
  for (int n = 0; n < trunc; ++n) {
    SparseMatrix lhs = b_prime(rep, n + 1) * s_minus1(rep, n);
    if (n >= 1) lhs = lhs + s_minus1(rep, n - 1) * b_prime(rep, n);
    if (!lhs.is_identity()) contraction.fail("s_{-1} b' + b' s_{-1} != id at level " + std::to_string(n));
  }
  return {func, mixed, contraction};
}

std::string reports_text(const std::vector<VerificationReport>& rs) {
  std::ostringstream out;
  for (const auto& r : rs) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name;
    for (const auto& [k, v] : r.parameters) out << ' ' << k << '=' << v;
    out << '\n';
    for (const auto& v : r.violations) out << "  violation: " << v << '\n';
  }
  return out.str();
}

std::string reports_csv(const std::vector<VerificationReport>& rs) {
  std::ostringstream out;
  out << "check,parameters,verdict,violations\n";
  for (const auto& r : rs) {
    std::string params;
    for (const auto& [k, v] : r.parameters) params += (params.empty() ? "" : ";") + k + "=" + v;
    out << r.name << ',' << params << ',' << (r.passed() ? "pass" : "fail") << ',' << r.violations.size() << '\n';
  }
  return out.str();
}

int run_verify(int m, int trunc, const Common& c) {
  if (m < 0) throw UsageError("--m must be >= 0");
  if (trunc < 4) throw UsageError("--N must be >= 4");
  const RingSpec ring = RingSpec::parse(c.ring.empty() ? "Z" : c.ring);
  std::vector<VerificationReport> rs = verify_suite(m, trunc, ring);
  for (auto& r : identity_reports(m, trunc, ring)) rs.push_back(std::move(r));
  const std::string text = c.format == "text" ? reports_text(rs) : c.format == "csv" ? reports_csv(rs) : reports_to_json(rs);
  emit(text, c.output);
  for (const auto& r : rs) {
    if (!r.passed()) return check_failed;
  }
  return ok;
}

int run_lambda(const std::vector<int>& hom, const Common& c) {
  if (hom.size() != 2 || hom[0] < 0 || hom[1] < 0) throw UsageError("--hom expects two levels n m >= 0");
  const int n = hom[0], m = hom[1];
  if (hom_set_size(n, m) > 200000) throw SizeCapError("Lambda(" + std::to_string(n) + "," + std::to_string(m) + ") is too large to list");
  const auto morphisms = hom_set(n, m);
  std::ostringstream out;
  if (c.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& phi : morphisms) {
      const CyclePaths p = phi.paths();
      arr.push_back({{"monotone", phi.monotone()},
                     {"rotation", phi.rotation()},
                     {"start", p.start},
                     {"path_lengths", p.lengths},
                     {"name", phi.to_string()}});
    }
    out << nlohmann::ordered_json{{"schema", 1}, {"source", n}, {"target", m}, {"count", morphisms.size()}, {"morphisms", arr}}.dump(2);
  } else if (c.format == "csv") {
    out << "index,monotone,rotation\n";
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
      std::string f;
      for (int v : morphisms[i].monotone()) f += (f.empty() ? "" : " ") + std::to_string(v);
      out << i << ',' << f << ',' << morphisms[i].rotation() << '\n';
    }
  } else {
    out << "Lambda(" << n << "," << m << "): " << morphisms.size() << " morphisms\n";
    for (const auto& phi : morphisms) out << "  " << phi.to_string() << '\n';
  }
  emit(out.str(), c.output);
  return ok;
}

int run_selftest(const std::vector<int>& only, const Common& c) {
  AcceptanceOptions opts{c.data_dir, only};
  const bool stream = c.format == "text";
  const auto results = run_acceptance(opts, [&](const CriterionResult& r) {
    if (stream) std::cerr << format_criterion(r) << std::endl;
  });
  if (c.format == "text") {
    std::string all;
    for (const auto& r : results) all += format_criterion(r) + "\n";
    if (!c.output.empty()) emit(all, c.output);
  } else {
    emit(acceptance_to_json(results), c.output);
  }
  for (const auto& r : results) {
    if (!r.passed) return check_failed;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hochschild, cyclic and negative cyclic homology"};
  app.require_subcommand(1);
  Common common;

  HomologyJob job;
  std::map<std::string, HomologyKind> kinds{{"hh", HomologyKind::HH}, {"hc", HomologyKind::HC}, {"hn", HomologyKind::HN}};
  std::map<std::string, CLI::App*> homology_cmds;
  for (const auto& [name, kind] : kinds) {
    CLI::App* sub = app.add_subcommand(name, "compute " + kind_name(kind) + " of an algebra");
    sub->add_option("algebra", job.algebra, "algebra file, or a bundled name such as dual_numbers")->required();
    sub->add_option("--ring", common.ring, "Z, Q or Fp");
    sub->add_option("--degrees", job.degrees, "degree range a..b");
    sub->add_option("--trunc", job.trunc, "truncation level N");
    if (kind == HomologyKind::HN) sub->add_option("--depth-cap", job.depth_cap, "largest column depth P to try");
    add_common(sub, common);
    homology_cmds[name] = sub;
  }

  int vm = 0, vN = 8;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suite on k[Lambda(-, m)]");
  verify->add_option("--m", vm, "object [m]");
  verify->add_option("--N", vN, "truncation level");
  verify->add_option("--ring", common.ring, "Z, Q or Fp");
  add_common(verify, common);

  std::vector<int> hom;
  CLI::App* lambda = app.add_subcommand("lambda", "list morphisms of the cyclic category");
  lambda->add_option("--hom", hom, "source and target levels")->expected(2)->required();
  add_common(lambda, common);

  std::vector<int> only;
  CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--only", only, "criterion ids")->delimiter(',');
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << error_json("UsageError", e.what(), 0) << std::endl;
    return input_error;
  }

  if (common.threads > 0) ::setenv("CYCHOM_THREADS", std::to_string(common.threads).c_str(), 1);
  try {
    for (const auto& [name, sub] : homology_cmds) {
      if (sub->parsed()) return run_homology(kinds.at(name), job, common);
    }
    if (verify->parsed()) return run_verify(vm, vN, common);
    if (lambda->parsed()) return run_lambda(hom, common);
    if (selftest->parsed()) return run_selftest(only, common);
  } catch (const ParseError& e) {
    std::cerr << error_json("ParseError", e.what(), e.line()) << std::endl;
    return input_error;
  } catch (const UsageError& e) {
    std::cerr << error_json("UsageError", e.what(), 0) << std::endl;
    return input_error;
  } catch (const AlgebraError& e) {
    std::cerr << error_json("AlgebraError", e.what(), 0) << std::endl;
    return input_error;
  } catch (const RangeError& e) {
    std::cerr << error_json("RangeError", e.what(), 0) << std::endl;
    return input_error;
  } catch (const SizeCapError& e) {
    std::cerr << error_json("SizeCapError", e.what(), 0) << std::endl;
    return input_error;
  } catch (const RingError& e) {
    std::cerr << error_json("RingError", e.what(), 0) << std::endl;
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << error_json("InternalError", e.what(), 0) << std::endl;
    return internal_error;
  }
  return internal_error;
}
