/*
 * Copyright 2026 The demjanenko authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "demjanenko/demjanenko.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "search.hpp"
#include "singular.hpp"
#include "verify.hpp"

using namespace demj;

struct demj_kset {
  singular::KSetReport rep;
};
struct demj_matrix {
  matrix::DemjanenkoMatrix dm;
};
struct demj_u64_list {
  std::vector<arith::u64> values;
};
struct demj_ls {
  search::LsRecord rec;
};
struct demj_lbm {
  unsigned beta;
  arith::u64 m;
  std::vector<search::LbmRow> rows;
};
struct demj_density {
  search::DensityReport rep;
};
struct demj_resultant {
  cyclotomic::ResultantRecord rec;
};
struct demj_mstats {
  singular::MStatsSummary summary;
};
struct demj_verify {
  verify::Report rep;
};

namespace {

thread_local std::string last_error;

template <class F>
demj_status guard(F&& body) noexcept {
  try {
    body();
    return DEMJ_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<demj_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return DEMJ_INTERNAL;
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

format::Format to_format(demj_format fmt) {
  switch (fmt) {
  case DEMJ_FORMAT_PLAIN: return format::Format::Plain;
  case DEMJ_FORMAT_JSON: return format::Format::Json;
  case DEMJ_FORMAT_CSV: return format::Format::Csv;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown output format");
}

search::SearchConfig to_config(const demj_search_options* opts) {
  search::SearchConfig cfg;
  if (!opts) return cfg;
  cfg.max_ell = opts->max_ell;
  cfg.workers = opts->workers ? opts->workers : 1;
  if (opts->checkpoint_path) cfg.checkpoint_path = std::string(opts->checkpoint_path);
  if (opts->shard_size) cfg.shard_size = opts->shard_size;
  return cfg;
}

verify::Mode to_mode(demj_verify_mode mode) {
  switch (mode) {
  case DEMJ_VERIFY_ORACLE: return verify::Mode::Oracle;
  case DEMJ_VERIFY_COUNT_BOUND: return verify::Mode::CountBound;
  case DEMJ_VERIFY_IDENTITIES: return verify::Mode::Identities;
  case DEMJ_VERIFY_RANK_FORMULA: return verify::Mode::RankFormula;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown verify mode");
}

template <class T, class Render>
demj_status render(const T* obj, char** out, Render&& r) noexcept {
  return guard([&] {
    require(obj, "object");
    require(out, "out");
    *out = copy_string(r(*obj));
  });
}

} // namespace

extern "C" {

const char* demj_version(void) { return "0.1.0"; }

const char* demj_status_name(demj_status status) {
  if (status == DEMJ_OK) return "ok";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* demj_last_error_message(void) { return last_error.c_str(); }

void demj_string_free(char* s) { std::free(s); }

size_t demj_default_rank_cap(void) { return matrix::kDefaultRankCap; }

demj_status demj_is_prime(uint64_t n, int* out) {
  return guard([&] {
    require(out, "out");
    *out = arith::is_prime(n) ? 1 : 0;
  });
}

demj_status demj_prime_split(uint64_t ell, unsigned* alpha, unsigned* beta, uint64_t* m) {
  return guard([&] {
    require(alpha, "alpha");
    require(beta, "beta");
    require(m, "m");
    const auto ctx = arith::make_context(ell);
    *alpha = ctx.alpha;
    *beta = ctx.beta;
    *m = ctx.m;
  });
}

demj_status demj_mult_order(uint64_t ell, int64_t u, uint64_t* order) {
  return guard([&] {
    require(order, "order");
    *order = arith::mult_order(u, arith::make_context(ell)).order;
  });
}

demj_status demj_kset_compute(uint64_t ell, demj_kset** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_kset{singular::k_set(arith::make_context(ell))};
  });
}

demj_status demj_kset_compute_oracle(uint64_t ell, size_t rank_cap, demj_kset** out) {
  return guard([&] {
    require(out, "out");
    const auto ctx = arith::make_context(ell);
    *out = new demj_kset{singular::make_report(ctx, singular::k_set_oracle(ctx, rank_cap))};
  });
}

uint64_t demj_kset_ell(const demj_kset* ks) { return ks ? ks->rep.ctx.ell : 0; }
size_t demj_kset_count(const demj_kset* ks) { return ks ? ks->rep.count() : 0; }
uint64_t demj_kset_member(const demj_kset* ks, size_t index) {
  return ks && index < ks->rep.members.size() ? ks->rep.members[index] : 0;
}
int demj_kset_within_bound(const demj_kset* ks) { return ks && ks->rep.within_bound ? 1 : 0; }

demj_status demj_kset_format(const demj_kset* ks, demj_format fmt, char** out) {
  return render(ks, out, [&](const demj_kset& k) { return format::kset(k.rep, to_format(fmt)); });
}

demj_status demj_kset_format_row(const demj_kset* ks, demj_format fmt, char** out) {
  return render(ks, out,
                [&](const demj_kset& k) { return format::census_row(k.rep, to_format(fmt)); });
}

void demj_kset_free(demj_kset* ks) { delete ks; }

demj_status demj_criterion_format(uint64_t ell, uint64_t k, demj_format fmt, int* in_k,
                                  char** out) {
  return guard([&] {
    require(out, "out");
    const auto ctx = arith::make_context(ell);
    const auto ev = singular::criterion(ctx, k);
    *out = copy_string(format::criterion(ev, ell, to_format(fmt)));
    if (in_k) *in_k = ev.in_k() ? 1 : 0;
  });
}

demj_status demj_matrix_build(uint64_t ell, uint64_t k, demj_matrix** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_matrix{matrix::build_matrix(arith::make_context(ell), k)};
  });
}

size_t demj_matrix_dim(const demj_matrix* mx) { return mx ? mx->dm.dim() : 0; }
size_t demj_matrix_stabilizer_size(const demj_matrix* mx) {
  return mx ? mx->dm.stabilizer_size : 0;
}
int demj_matrix_sign(const demj_matrix* mx, size_t row, size_t col) {
  if (!mx || row >= mx->dm.dim() || col >= mx->dm.dim()) return 0;
  return mx->dm.sign(row, col);
}

demj_status demj_matrix_rank(const demj_matrix* mx, size_t cap, size_t* rank) {
  return guard([&] {
    require(mx, "matrix");
    require(rank, "rank");
    *rank = matrix::exact_rank(mx->dm, cap);
  });
}

demj_status demj_matrix_format(const demj_matrix* mx, demj_format fmt, char** out) {
  return render(mx, out, [&](const demj_matrix& m) { return format::matrix(m.dm, to_format(fmt)); });
}

demj_status demj_matrix_format_rank(const demj_matrix* mx, size_t rank, demj_format fmt,
                                    char** out) {
  return render(mx, out,
                [&](const demj_matrix& m) { return format::rank(m.dm, rank, to_format(fmt)); });
}

void demj_matrix_free(demj_matrix* mx) { delete mx; }

void demj_search_options_init(demj_search_options* opts) {
  if (!opts) return;
  const search::SearchConfig cfg;
  opts->max_ell = cfg.max_ell;
  opts->workers = cfg.workers;
  opts->checkpoint_path = nullptr;
  opts->shard_size = cfg.shard_size;
}

demj_status demj_census(const demj_search_options* opts, demj_census_callback cb, void* user) {
  return guard([&] {
    require(opts, "options");
    if (!cb) throw Error(ErrorCode::InvalidArgument, "callback must not be NULL");
    search::census(to_config(opts), [&](const singular::KSetReport& rep) {
      const demj_kset borrowed{rep};
      const int rc = cb(&borrowed, user);
      if (rc < 0)
        throw Error(ErrorCode::CallbackAborted,
                    "census callback aborted at ell=" + std::to_string(rep.ctx.ell));
      return rc == 0;
    });
  });
}

demj_status demj_census_header(demj_format fmt, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_string(format::census_header(to_format(fmt)));
  });
}

demj_status demj_u64_list_create(const uint64_t* values, size_t n, demj_u64_list** out) {
  return guard([&] {
    require(out, "out");
    if (n) require(values, "values");
    *out = new demj_u64_list{std::vector<arith::u64>(values, values + n)};
  });
}

size_t demj_u64_list_size(const demj_u64_list* list) { return list ? list->values.size() : 0; }
uint64_t demj_u64_list_get(const demj_u64_list* list, size_t index) {
  return list && index < list->values.size() ? list->values[index] : 0;
}

demj_status demj_u64_list_format(const demj_u64_list* list, demj_format fmt, char** out) {
  return render(list, out,
                [&](const demj_u64_list& l) { return format::primes(l.values, to_format(fmt)); });
}

void demj_u64_list_free(demj_u64_list* list) { delete list; }

demj_status demj_family_search(demj_u64_list** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_u64_list{search::family_search()};
  });
}

demj_status demj_family_m_one(demj_u64_list** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_u64_list{search::family_m_one()};
  });
}

demj_status demj_empty_k_primes(const demj_u64_list* primes, unsigned workers,
                                demj_u64_list** out) {
  return guard([&] {
    require(primes, "primes");
    require(out, "out");
    *out = new demj_u64_list{search::empty_k_primes(primes->values, workers ? workers : 1)};
  });
}

demj_status demj_find_ls(unsigned s, uint64_t limit, const demj_search_options* opts,
                         demj_ls** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_ls{search::find_ls(s, limit, to_config(opts))};
  });
}

int demj_ls_found(const demj_ls* rec) { return rec && rec->rec.found() ? 1 : 0; }
uint64_t demj_ls_ell(const demj_ls* rec) { return rec && rec->rec.ell ? *rec->rec.ell : 0; }
size_t demj_ls_factor_count(const demj_ls* rec) {
  return rec ? rec->rec.factorization.size() : 0;
}

demj_status demj_ls_factor(const demj_ls* rec, size_t index, uint64_t* prime,
                           unsigned* exponent) {
  return guard([&] {
    require(rec, "record");
    require(prime, "prime");
    require(exponent, "exponent");
    if (index >= rec->rec.factorization.size())
      throw Error(ErrorCode::InvalidArgument, "factor index out of range");
    *prime = rec->rec.factorization[index].prime;
    *exponent = rec->rec.factorization[index].exponent;
  });
}

demj_status demj_ls_format(const demj_ls* rec, demj_format fmt, char** out) {
  return render(rec, out, [&](const demj_ls& r) { return format::ls(r.rec, to_format(fmt)); });
}

void demj_ls_free(demj_ls* rec) { delete rec; }

demj_status demj_lbm_scan(unsigned beta, uint64_t m, unsigned alpha_max, uint64_t budget,
                          demj_lbm** out) {
  return guard([&] {
    require(out, "out");
    auto rows = search::lbm_scan(beta, m, alpha_max, budget ? budget : search::kLbmBudget);
    *out = new demj_lbm{beta, m, std::move(rows)};
  });
}

size_t demj_lbm_row_count(const demj_lbm* scan) { return scan ? scan->rows.size() : 0; }

demj_status demj_lbm_row(const demj_lbm* scan, size_t index, unsigned* alpha, uint64_t* ell,
                         demj_lbm_status* status) {
  return guard([&] {
    require(scan, "scan");
    if (index >= scan->rows.size()) throw Error(ErrorCode::InvalidArgument, "row out of range");
    const auto& row = scan->rows[index];
    if (alpha) *alpha = row.alpha;
    if (ell) *ell = row.ell;
    if (status) {
      switch (row.status) {
      case search::LbmStatus::InL: *status = DEMJ_LBM_IN_L; break;
      case search::LbmStatus::NotInL: *status = DEMJ_LBM_NOT_IN_L; break;
      case search::LbmStatus::Skipped: *status = DEMJ_LBM_SKIPPED; break;
      }
    }
  });
}

demj_status demj_lbm_row_divides_resultant(const demj_lbm* scan, size_t index, int* out) {
  return guard([&] {
    require(scan, "scan");
    require(out, "out");
    if (index >= scan->rows.size() || !scan->rows[index].witness)
      throw Error(ErrorCode::InvalidArgument, "row has no witness");
    *out = scan->rows[index].witness->divides_resultant ? 1 : 0;
  });
}

demj_status demj_lbm_format(const demj_lbm* scan, demj_format fmt, char** out) {
  return render(scan, out, [&](const demj_lbm& s) {
    return format::lbm(s.beta, s.m, s.rows, to_format(fmt));
  });
}

void demj_lbm_free(demj_lbm* scan) { delete scan; }

demj_status demj_density_census(uint64_t x, const demj_search_options* opts,
                                demj_density** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_density{search::density_census(x, to_config(opts))};
  });
}

size_t demj_density_count(const demj_density* rep) { return rep ? rep->rep.count() : 0; }

demj_status demj_density_format(const demj_density* rep, demj_format fmt, char** out) {
  return render(rep, out,
                [&](const demj_density& d) { return format::density(d.rep, to_format(fmt)); });
}

void demj_density_free(demj_density* rep) { delete rep; }

demj_status demj_l_set(unsigned a, unsigned b, uint64_t d, uint64_t e, demj_resultant** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_resultant{cyclotomic::l_set(a, b, d, e)};
  });
}

demj_status demj_resultant_decimal(const demj_resultant* rec, char** out) {
  return render(rec, out, [](const demj_resultant& r) { return r.rec.resultant.get_str(); });
}

size_t demj_resultant_prime_count(const demj_resultant* rec) {
  return rec ? rec->rec.prime_divisors.size() : 0;
}

demj_status demj_resultant_prime_decimal(const demj_resultant* rec, size_t index, char** out) {
  return render(rec, out, [&](const demj_resultant& r) {
    if (index >= r.rec.prime_divisors.size())
      throw Error(ErrorCode::InvalidArgument, "prime index out of range");
    return r.rec.prime_divisors[index].get_str();
  });
}

demj_status demj_resultant_format(const demj_resultant* rec, demj_format fmt, char** out) {
  return render(rec, out, [&](const demj_resultant& r) {
    return format::resultant(r.rec, to_format(fmt));
  });
}

void demj_resultant_free(demj_resultant* rec) { delete rec; }

demj_status demj_cyclotomic_string(uint64_t n, char** out) {
  return guard([&] {
    require(out, "out");
    *out = copy_string(cyclotomic::cyclotomic_poly(n).to_string());
  });
}

demj_status demj_mstats_compute(uint64_t ell, demj_mstats** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_mstats{singular::m_stats(arith::make_context(ell))};
  });
}

size_t demj_mstats_count(const demj_mstats* s) { return s ? s->summary.values.size() : 0; }

demj_status demj_mstats_format(const demj_mstats* s, demj_format fmt, char** out) {
  return render(s, out,
                [&](const demj_mstats& m) { return format::mstats(m.summary, to_format(fmt)); });
}

void demj_mstats_free(demj_mstats* s) { delete s; }

demj_status demj_verify_parse_mode(const char* name, demj_verify_mode* mode) {
  return guard([&] {
    require(name, "name");
    require(mode, "mode");
    const auto parsed = verify::parse_mode(name);
    if (!parsed) throw Error(ErrorCode::InvalidArgument, std::string("unknown mode: ") + name);
    switch (*parsed) {
    case verify::Mode::Oracle: *mode = DEMJ_VERIFY_ORACLE; break;
    case verify::Mode::CountBound: *mode = DEMJ_VERIFY_COUNT_BOUND; break;
    case verify::Mode::Identities: *mode = DEMJ_VERIFY_IDENTITIES; break;
    case verify::Mode::RankFormula: *mode = DEMJ_VERIFY_RANK_FORMULA; break;
    }
  });
}

uint64_t demj_verify_mode_cap(demj_verify_mode mode, size_t rank_cap) {
  try {
    return verify::mode_cap(to_mode(mode), rank_cap);
  } catch (...) {
    return 0;
  }
}

demj_status demj_verify_run(demj_verify_mode mode, uint64_t max_ell, unsigned workers,
                            size_t rank_cap, demj_verify** out) {
  return guard([&] {
    require(out, "out");
    *out = new demj_verify{verify::run(to_mode(mode), max_ell, workers ? workers : 1, rank_cap)};
  });
}

int demj_verify_passed(const demj_verify* rep) { return rep && rep->rep.passed() ? 1 : 0; }
size_t demj_verify_failure_count(const demj_verify* rep) {
  return rep ? rep->rep.failures.size() : 0;
}

demj_status demj_verify_format(const demj_verify* rep, demj_format fmt, char** out) {
  return render(rep, out,
                [&](const demj_verify& v) { return format::verify(v.rep, to_format(fmt)); });
}

void demj_verify_free(demj_verify* rep) { delete rep; }

} // extern "C"
