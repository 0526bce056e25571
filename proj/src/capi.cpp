#include "liechar/liechar.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "liechar/charpoly.hpp"
#include "liechar/document.hpp"
#include "liechar/error.hpp"
#include "liechar/factor.hpp"
#include "liechar/poly.hpp"
#include "liechar/report.hpp"
#include "liechar/typea.hpp"

struct lc_poly {
  liechar::MultiPoly poly;
};

struct lc_algebra {
  liechar::AlgebraDocument doc;
  std::filesystem::path base_dir;
};

namespace {

using liechar::Errc;

thread_local std::string last_error;

lc_status status_of(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::precondition: return LC_INVALID_ARGUMENT;
    case Errc::ring_mismatch: return LC_RING_MISMATCH;
    case Errc::shape:
    case Errc::dimension_mismatch: return LC_SHAPE;
    case Errc::division_by_zero: return LC_DIVISION_BY_ZERO;
    case Errc::degenerate_input: return LC_DEGENERATE;
    case Errc::singular_matrix: return LC_SINGULAR;
    case Errc::parse_syntax: return LC_PARSE;
    case Errc::index_order: return LC_INDEX_ORDER;
    case Errc::jacobi_violation: return LC_JACOBI;
    case Errc::not_found: return LC_NOT_FOUND;
    case Errc::io: return LC_IO;
    case Errc::inconsistent: return LC_INCONSISTENT;
  }
  return LC_INTERNAL;
}

template <class F>
lc_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const liechar::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LC_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LC_INTERNAL;
  }
}

lc_status fail(lc_status s, const char* what) {
  last_error = what;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const liechar::Representation& pick_rep(const lc_algebra* a, const char* rep_name, liechar::Representation& storage) {
  if (!rep_name) {
    storage = liechar::adjoint_representation(a->doc.algebra);
    return storage;
  }
  const auto* rep = a->doc.find_rep(rep_name);
  if (!rep) throw liechar::Error(Errc::not_found, std::string("no representation named '") + rep_name + "'");
  return *rep;
}

liechar::typea::LinearizedPoly linearize_spec(const char* spec) {
  using namespace liechar::typea;
  const DominantWeight w = parse_dominant(spec);
  return linearize_from_character(weight_multiplicities(partition_from_dominant(w), w.n()));
}

}  // namespace

extern "C" {

const char* lc_status_name(lc_status status) {
  switch (status) {
    case LC_OK: return "ok";
    case LC_INVALID_ARGUMENT: return "invalid-argument";
    case LC_IO: return "io";
    case LC_PARSE: return "parse";
    case LC_INDEX_ORDER: return "index-order";
    case LC_JACOBI: return "jacobi";
    case LC_SHAPE: return "shape";
    case LC_RING_MISMATCH: return "ring-mismatch";
    case LC_DIVISION_BY_ZERO: return "division-by-zero";
    case LC_SINGULAR: return "singular";
    case LC_DEGENERATE: return "degenerate";
    case LC_NOT_FOUND: return "not-found";
    case LC_INCONSISTENT: return "inconsistent";
    case LC_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lc_last_error(void) { return last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_poly_parse(const char* text, size_t num_vars, lc_poly** out) {
  if (!text || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lc_poly{liechar::MultiPoly::parse(text, num_vars)};
    return LC_OK;
  });
}

void lc_poly_free(lc_poly* p) { delete p; }

size_t lc_poly_num_vars(const lc_poly* p) { return p ? p->poly.num_vars() : 0; }

lc_status lc_poly_to_string(const lc_poly* p, char** out) {
  if (!p || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(p->poly.to_string());
    return LC_OK;
  });
}

lc_status lc_poly_mul(const lc_poly* a, const lc_poly* b, lc_poly** out) {
  if (!a || !b || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lc_poly{a->poly * b->poly};
    return LC_OK;
  });
}

int lc_poly_equal(const lc_poly* a, const lc_poly* b) { return a && b && a->poly == b->poly; }

lc_status lc_poly_structure(const lc_poly* p, int* homogeneous, unsigned* degree, unsigned* z0_multiplicity) {
  if (!p || !homogeneous || !degree || !z0_multiplicity) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto info = liechar::structure_checks(p->poly);
    *homogeneous = info.homogeneous_degree.has_value();
    if (info.homogeneous_degree) *degree = *info.homogeneous_degree;
    *z0_multiplicity = info.z0_multiplicity;
    return LC_OK;
  });
}

lc_status lc_poly_divide(const lc_poly* p, const lc_poly* d, lc_poly** quotient) {
  if (!p || !d || !quotient) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto q = liechar::exact_divide(p->poly, d->poly);
    *quotient = q ? new lc_poly{std::move(*q)} : nullptr;
    return LC_OK;
  });
}

lc_status lc_poly_factor(const lc_poly* p, int* complete, char** out) {
  if (!p || !complete || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = liechar::linear_factorization(p->poly);
    *complete = f.complete;
    *out = dup(f.to_string());
    return LC_OK;
  });
}

lc_status lc_algebra_load(const char* path, lc_algebra** out) {
  if (!path || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::filesystem::path p(path);
    *out = new lc_algebra{liechar::load_algebra_file(p), p.parent_path()};
    return LC_OK;
  });
}

lc_status lc_algebra_parse(const char* text, const char* base_dir, lc_algebra** out) {
  if (!text || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lc_algebra{liechar::parse_algebra(text), base_dir ? base_dir : ""};
    return LC_OK;
  });
}

void lc_algebra_free(lc_algebra* a) { delete a; }

size_t lc_algebra_dim(const lc_algebra* a) { return a ? a->doc.algebra.dim() : 0; }

const char* lc_algebra_name(const lc_algebra* a) { return a ? a->doc.name.c_str() : ""; }

lc_status lc_algebra_render(const lc_algebra* a, char** out) {
  if (!a || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(liechar::render_algebra(a->doc));
    return LC_OK;
  });
}

lc_status lc_charpoly(const lc_algebra* a, const char* rep_name, lc_poly** out) {
  if (!a || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    liechar::Representation storage;
    *out = new lc_poly{liechar::char_poly(pick_rep(a, rep_name, storage)).poly};
    return LC_OK;
  });
}

lc_status lc_nilpotency_test(const lc_algebra* a, lc_nilpotency* out, lc_poly** p_ad) {
  if (!a || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& L = a->doc.algebra;
    const auto v = liechar::nilpotency_tests(L);
    const auto oracle = liechar::classify_oracle(L);
    if (v.theorem != oracle.nilpotent)
      throw liechar::Error(Errc::inconsistent, "nilpotency theorem disagrees with the lower central series");
    out->theorem = v.theorem;
    out->corollary = v.corollary;
    out->oracle = oracle.nilpotent;
    if (p_ad) *p_ad = new lc_poly{v.p_ad};
    return LC_OK;
  });
}

lc_status lc_solvability_test(const lc_algebra* a, const char* rep_name, lc_solvability* out, char** factorization,
                              char** outcome) {
  if (!a || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    liechar::Representation storage;
    const auto r = liechar::solvability_test(a->doc.algebra, pick_rep(a, rep_name, storage));
    out->oracle = r.oracle;
    out->image_solvable = r.image_solvable;
    out->complete = r.factorization.complete;
    out->consistent = r.consistent;
    std::string text = r.factorization.to_string();
    if (!r.factorization.complete) text += std::string(" [") + liechar::reason_name(r.factorization.reason) + "]";
    if (factorization) *factorization = dup(text);
    if (outcome) *outcome = dup(liechar::outcome_name(r.outcome));
    return LC_OK;
  });
}

lc_status lc_codim_check(const lc_algebra* a, lc_codim* out) {
  if (!a || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto c = liechar::codim_factor_check(a->doc.algebra);
    out->codim = c.codim;
    out->z0_multiplicity = c.z0_multiplicity;
    out->holds = c.holds;
    return LC_OK;
  });
}

lc_status lc_verify_iso(const lc_algebra* a, int* verified, char** details) {
  if (!a || !verified) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto v = liechar::verify_iso(a->doc, a->base_dir);
    *verified = v.verified();
    if (details) {
      std::string text = "reference: " + v.reference_name;
      if (!v.check.bijective) text += "\nmap is not bijective";
      for (const auto& [i, j] : v.check.failures)
        text += "\nbracket of reference basis (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                ") not preserved";
      *details = dup(text);
    }
    return LC_OK;
  });
}

lc_status lc_sl2_closed_form(unsigned m, lc_poly** out) {
  if (!out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lc_poly{liechar::typea::sl2_closed_form(m)};
    return LC_OK;
  });
}

lc_status lc_linearize(const char* spec, char** out) {
  if (!spec || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = linearize_spec(spec);
    if (!liechar::typea::weyl_invariance_check(f))
      throw liechar::Error(Errc::inconsistent, "linearization is not Weyl invariant");
    *out = dup(f.to_string());
    return LC_OK;
  });
}

lc_status lc_resolve(const char* spec_a, const char* spec_b, char** out) {
  if (!spec_a || !spec_b || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    using namespace liechar::typea;
    const DominantWeight wa = parse_dominant(spec_a);
    const DominantWeight wb = parse_dominant(spec_b);
    if (wa.n() != wb.n()) throw liechar::Error(Errc::dimension_mismatch, "weights belong to different sl_n");
    const Character ca = weight_multiplicities(partition_from_dominant(wa), wa.n());
    const Character cb = weight_multiplicities(partition_from_dominant(wb), wb.n());
    const auto product = resolution_product(linearize_from_character(ca), linearize_from_character(cb));
    if (product != linearize_from_character(tensor_character(ca, cb)))
      throw liechar::Error(Errc::inconsistent, "resolution product differs from the tensor product linearization");
    *out = dup(product.to_string());
    return LC_OK;
  });
}

lc_status lc_report_dir(const char* dir, int format, int timing, size_t width, char** out, int* inconsistent,
                        int* errors) {
  if (!dir || !out) return fail(LC_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto report = liechar::analyze_directory(dir, timing != 0);
    *out = dup(liechar::render_report(report, format == 1 ? liechar::ReportFormat::json : liechar::ReportFormat::text,
                                      width));
    if (inconsistent) *inconsistent = report.any_inconsistent();
    if (errors) *errors = report.any_error();
    return LC_OK;
  });
}

}  // extern "C"
