#include "fgfourier.h"

#include "verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct fgf_group {
  fgf::FiniteGroup g;
};

struct fgf_dual {
  fgf::UnitaryDual d;
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
fgf_status wrap(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return FGF_OK;
  } catch (const fgf::ParseError& e) {
    t_last_error = e.what();
    return FGF_PARSE_ERROR;
  } catch (const fgf::NotAGroupError& e) {
    t_last_error = e.what();
    return FGF_NOT_A_GROUP;
  } catch (const fgf::NumericError& e) {
    t_last_error = e.what();
    return FGF_NO_CONVERGENCE;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return FGF_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return FGF_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

fgf::ScalarFunction read_function(const double* values, int order) {
  fgf::ScalarFunction u(order);
  for (int s = 0; s < order; ++s)
    u(s) = fgf::Complex(values[2 * s], values[2 * s + 1]);
  return u;
}

void write_function(const fgf::ScalarFunction& u, double* out) {
  for (Eigen::Index s = 0; s < u.size(); ++s) {
    out[2 * s] = u(s).real();
    out[2 * s + 1] = u(s).imag();
  }
}

fgf::BlockOperator read_operator(const fgf::UnitaryDual& dual,
                                 const double* values) {
  fgf::BlockOperator t;
  std::size_t at = 0;
  for (int p = 0; p < dual.size(); ++p) {
    const int d = dual.dim(p);
    fgf::CMatrix block(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        block(i, j) = fgf::Complex(values[at], values[at + 1]);
        at += 2;
      }
    t.blocks.push_back(std::move(block));
  }
  return t;
}

std::vector<std::string> split_list(const char* text) {
  std::vector<std::string> out;
  if (!text) return out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ';'))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* fgf_version(void) { return "1.0.0"; }

const char* fgf_last_error(void) { return t_last_error.c_str(); }

void fgf_string_free(char* s) { std::free(s); }

fgf_status fgf_group_from_spec(const char* spec, fgf_group** out) {
  return wrap([&] {
    require(spec && out, "spec and out must be non-null");
    auto handle = std::make_unique<fgf_group>();
    handle->g = fgf::group_from_spec(spec);
    *out = handle.release();
  });
}

fgf_status fgf_group_from_cayley(const char* text, fgf_group** out) {
  return wrap([&] {
    require(text && out, "text and out must be non-null");
    auto handle = std::make_unique<fgf_group>();
    handle->g = fgf::parse_cayley(text);
    *out = handle.release();
  });
}

void fgf_group_free(fgf_group* g) { delete g; }

int fgf_group_order(const fgf_group* g) { return g ? g->g.order : 0; }

fgf_status fgf_group_cayley(const fgf_group* g, char** out_text) {
  return wrap([&] {
    require(g && out_text, "group and out must be non-null");
    *out_text = dup_string(fgf::serialize_cayley(g->g));
  });
}

fgf_status fgf_dual_compute(const fgf_group* g, uint64_t seed,
                            fgf_dual** out) {
  return wrap([&] {
    require(g && out, "group and out must be non-null");
    auto handle = std::make_unique<fgf_dual>();
    handle->d = fgf::compute_dual(g->g, seed);
    *out = handle.release();
  });
}

void fgf_dual_free(fgf_dual* d) { delete d; }

int fgf_dual_irrep_count(const fgf_dual* d) { return d ? d->d.size() : 0; }

int fgf_dual_total_dim(const fgf_dual* d) { return d ? d->d.total_dim : 0; }

fgf_status fgf_dual_dims(const fgf_dual* d, int* dims) {
  return wrap([&] {
    require(d && dims, "dual and dims must be non-null");
    for (int p = 0; p < d->d.size(); ++p) dims[p] = d->d.dim(p);
  });
}

fgf_status fgf_dual_to_json(const fgf_dual* d, char** out_json) {
  return wrap([&] {
    require(d && out_json, "dual and out must be non-null");
    *out_json = dup_string(fgf::dual_to_json(d->d).dump(2));
  });
}

fgf_status fgf_function_norms(const fgf_dual* d, const double* values,
                              double* norm_a, double* norm_adelta,
                              double* norm_agamma) {
  return wrap([&] {
    require(d && values, "dual and values must be non-null");
    const fgf::ScalarFunction u = read_function(values, d->d.group.order);
    if (norm_a) *norm_a = fgf::norm_A(d->d, u);
    if (norm_adelta) *norm_adelta = fgf::norm_ADelta(d->d, u);
    if (norm_agamma) *norm_agamma = fgf::norm_Agamma(d->d, u);
  });
}

fgf_status fgf_operator_norms(const fgf_dual* d, const double* values,
                              double* norm_vn, double* norm_adelta_dual) {
  return wrap([&] {
    require(d && values, "dual and values must be non-null");
    const fgf::BlockOperator t = read_operator(d->d, values);
    if (norm_vn) *norm_vn = fgf::norm_VN(d->d, t);
    if (norm_adelta_dual) *norm_adelta_dual = fgf::norm_ADelta_dual(d->d, t);
  });
}

fgf_status fgf_apply_gamma(const fgf_group* g, const double* w, double* out) {
  return wrap([&] {
    require(g && w && out, "group, w and out must be non-null");
    const int n = g->g.order;
    fgf::BiFunction wm(n, n);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        wm(s, t) = fgf::Complex(w[2 * (s * n + t)], w[2 * (s * n + t) + 1]);
    write_function(fgf::gamma_map(g->g, wm), out);
  });
}

fgf_status fgf_apply_gamma_check(const fgf_group* g, const double* w,
                                 double* out) {
  return wrap([&] {
    require(g && w && out, "group, w and out must be non-null");
    const int n = g->g.order;
    fgf::BiFunction wm(n, n);
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        wm(s, t) = fgf::Complex(w[2 * (s * n + t)], w[2 * (s * n + t) + 1]);
    write_function(fgf::gamma_check_map(g->g, wm), out);
  });
}

fgf_status fgf_apply_convolve(const fgf_group* g, const double* u,
                              const double* v, double* out) {
  return wrap([&] {
    require(g && u && v && out, "group, u, v and out must be non-null");
    write_function(fgf::convolve(g->g, read_function(u, g->g.order),
                                 read_function(v, g->g.order)),
                   out);
  });
}

fgf_status fgf_adjoint_norm_table(const fgf_dual* d, const double* t,
                                  int level, int check_variant,
                                  char** out_csv) {
  return wrap([&] {
    require(d && t && out_csv, "dual, t and out must be non-null");
    require(level >= 1, "level must be >= 1");
    require(check_variant == 0 || check_variant == 1,
            "check_variant must be 0 or 1");
    const fgf::BlockOperator op = read_operator(d->d, t);
    fgf::BlockOperatorMatrix ts(level);
    for (int i = 0; i < level; ++i)
      for (int j = 0; j < level; ++j)
        ts[i].push_back(i == j ? op : fgf::zero_operator(d->d));
    const fgf::BiBlockOperator b = check_variant
                                       ? fgf::gamma_check_adjoint(d->d, ts)
                                       : fgf::gamma_adjoint(d->d, ts);
    *out_csv = dup_string(fgf::norm_table_csv(d->d, b));
  });
}

fgf_status fgf_verify_run(const char* check_ids, const char* groups,
                          uint64_t seed, double tolerance, int trials,
                          int max_level, int* all_pass,
                          int* nonconverged_failure, char** out_json) {
  return wrap([&] {
    require(out_json != nullptr, "out_json must be non-null");
    fgf::CheckSpec spec;
    spec.check_ids = split_list(check_ids);
    spec.groups = split_list(groups);
    spec.seed = seed;
    spec.tolerance = tolerance;
    spec.trials = trials;
    spec.max_level = max_level > 0 ? max_level : 3;
    for (const auto& id : spec.check_ids)
      if (!fgf::is_known_check(id))
        throw std::invalid_argument("unknown check id '" + id + "'");
    const std::vector<fgf::CheckReport> reports = fgf::run_checks(spec);
    if (all_pass) *all_pass = fgf::all_pass(reports) ? 1 : 0;
    if (nonconverged_failure)
      *nonconverged_failure = fgf::any_failure_nonconverged(reports) ? 1 : 0;
    *out_json = dup_string(fgf::reports_to_json(reports, spec).dump(2));
  });
}

}  // extern "C"
