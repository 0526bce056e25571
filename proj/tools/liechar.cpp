// Command-line front end; talks to the library only through liechar.h.
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "liechar/liechar.h"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconsistent = 2;

struct PolyDeleter {
  void operator()(lc_poly* p) const { lc_poly_free(p); }
};
struct AlgebraDeleter {
  void operator()(lc_algebra* a) const { lc_algebra_free(a); }
};
struct StringDeleter {
  void operator()(char* s) const { lc_string_free(s); }
};
using Poly = std::unique_ptr<lc_poly, PolyDeleter>;
using Algebra = std::unique_ptr<lc_algebra, AlgebraDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

int report_failure(lc_status s) {
  std::fprintf(stderr, "error (%s): %s\n", lc_status_name(s), lc_last_error());
  return s == LC_INCONSISTENT ? kInconsistent : kInputError;
}

std::size_t output_width() {
  const char* env = std::getenv("LIECHAR_WIDTH");
  if (!env) return 0;
  char* end = nullptr;
  const unsigned long w = std::strtoul(env, &end, 10);
  return (end && *end == '\0') ? w : 0;
}

std::string poly_text(const lc_poly* p) {
  char* raw = nullptr;
  if (lc_poly_to_string(p, &raw) != LC_OK) return "?";
  String s(raw);
  return s.get();
}

int load(const std::string& path, Algebra& out) {
  lc_algebra* raw = nullptr;
  if (const lc_status s = lc_algebra_load(path.c_str(), &raw); s != LC_OK) return report_failure(s);
  out.reset(raw);
  return kOk;
}

int cmd_charpoly(const std::string& file, const std::string& rep) {
  Algebra a;
  if (int rc = load(file, a)) return rc;
  lc_poly* raw = nullptr;
  if (const lc_status s = lc_charpoly(a.get(), rep.empty() ? nullptr : rep.c_str(), &raw); s != LC_OK)
    return report_failure(s);
  Poly p(raw);
  std::printf("%s\n", poly_text(p.get()).c_str());
  return kOk;
}

int cmd_nilpotent(const std::string& file) {
  Algebra a;
  if (int rc = load(file, a)) return rc;
  lc_nilpotency v{};
  lc_poly* raw = nullptr;
  if (const lc_status s = lc_nilpotency_test(a.get(), &v, &raw); s != LC_OK) return report_failure(s);
  Poly p(raw);
  std::printf("nilpotent: %s (p_ad = %s)\n", v.theorem ? "true" : "false", poly_text(p.get()).c_str());
  return kOk;
}

int cmd_solvable(const std::string& file, const std::string& rep) {
  Algebra a;
  if (int rc = load(file, a)) return rc;
  lc_solvability v{};
  char* fact = nullptr;
  char* outcome = nullptr;
  if (const lc_status s = lc_solvability_test(a.get(), rep.empty() ? nullptr : rep.c_str(), &v, &fact, &outcome);
      s != LC_OK)
    return report_failure(s);
  String f(fact), o(outcome);
  std::printf("solvable: %s\n", v.oracle ? "true" : "false");
  std::printf("factorization: %s\n", f.get());
  std::printf("outcome: %s\n", o.get());
  if (!v.consistent) {
    std::fprintf(stderr, "error (inconsistent): factorization contradicts solvability\n");
    return kInconsistent;
  }
  return kOk;
}

int print_string_result(lc_status s, char* raw) {
  if (s != LC_OK) return report_failure(s);
  String out(raw);
  std::printf("%s\n", out.get());
  return kOk;
}

int cmd_linearize(const std::string& spec) {
  char* raw = nullptr;
  const lc_status s = lc_linearize(spec.c_str(), &raw);
  return print_string_result(s, raw);
}

int cmd_resolve(const std::string& a, const std::string& b) {
  char* raw = nullptr;
  const lc_status s = lc_resolve(a.c_str(), b.c_str(), &raw);
  return print_string_result(s, raw);
}

int cmd_sl2(unsigned m) {
  lc_poly* raw = nullptr;
  if (const lc_status s = lc_sl2_closed_form(m, &raw); s != LC_OK) return report_failure(s);
  Poly p(raw);
  std::printf("%s\n", poly_text(p.get()).c_str());
  return kOk;
}

int cmd_verify_iso(const std::string& file) {
  Algebra a;
  if (int rc = load(file, a)) return rc;
  int verified = 0;
  char* raw = nullptr;
  if (const lc_status s = lc_verify_iso(a.get(), &verified, &raw); s != LC_OK) return report_failure(s);
  String details(raw);
  if (verified) {
    std::printf("isomorphism verified\n");
    return kOk;
  }
  std::printf("isomorphism rejected\n%s\n", details.get());
  return kInputError;
}

int cmd_report(const std::string& dir, const std::string& format, bool timing) {
  char* raw = nullptr;
  int inconsistent = 0, errors = 0;
  const lc_status s =
      lc_report_dir(dir.c_str(), format == "json" ? 1 : 0, timing, output_width(), &raw, &inconsistent, &errors);
  if (s != LC_OK) return report_failure(s);
  String out(raw);
  std::fputs(out.get(), stdout);
  if (inconsistent) return kInconsistent;
  return errors ? kInputError : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic polynomials of Lie algebra representations"};
  app.require_subcommand(1);
  int rc = kOk;

  std::string file, rep, spec_a, spec_b, dir, format = "text";
  bool adjoint = false, timing = false;
  unsigned m = 0;

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a representation");
  charpoly->add_option("file", file, "algebra file")->required();
  auto* rep_opt = charpoly->add_option("--rep", rep, "named representation in the file");
  charpoly->add_flag("--adjoint", adjoint, "adjoint representation (default)")->excludes(rep_opt);
  charpoly->callback([&] { rc = cmd_charpoly(file, rep); });

  auto* nilpotent = app.add_subcommand("nilpotent", "nilpotency test via p_ad = z0^n");
  nilpotent->add_option("file", file, "algebra file")->required();
  nilpotent->callback([&] { rc = cmd_nilpotent(file); });

  auto* solvable = app.add_subcommand("solvable", "linear factorization of the characteristic polynomial");
  solvable->add_option("file", file, "algebra file")->required();
  solvable->add_option("--rep", rep, "named representation (default adjoint)");
  solvable->callback([&] { rc = cmd_solvable(file, rep); });

  auto* linearize = app.add_subcommand("linearize", "linearized characteristic polynomial of V(lambda)");
  linearize->add_option("spec", spec_a, "slN:a1,...,a{N-1}")->required();
  linearize->callback([&] { rc = cmd_linearize(spec_a); });

  auto* resolve = app.add_subcommand("resolve", "resolution product of two linearizations");
  resolve->add_option("spec_a", spec_a, "slN:a1,...")->required();
  resolve->add_option("spec_b", spec_b, "slN:b1,...")->required();
  resolve->callback([&] { rc = cmd_resolve(spec_a, spec_b); });

  auto* sl2 = app.add_subcommand("sl2", "closed-form polynomial of the sl2 irreducible of highest weight m");
  sl2->add_option("m", m, "highest weight")->required();
  sl2->callback([&] { rc = cmd_sl2(m); });

  auto* iso = app.add_subcommand("verify-iso", "check the document's map from its reference algebra");
  iso->add_option("file", file, "algebra file with an iso block")->required();
  iso->callback([&] { rc = cmd_verify_iso(file); });

  auto* report = app.add_subcommand("report", "analyze every .alg file in a directory");
  report->add_option("dir", dir, "corpus directory")->required();
  report->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  report->add_flag("--timing", timing, "include per-record elapsed time");
  report->callback([&] { rc = cmd_report(dir, format, timing); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  return rc;
}
