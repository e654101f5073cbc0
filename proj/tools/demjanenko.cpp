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
// Command-line front end. Everything goes through the C interface.

#include <CLI11.hpp>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "demjanenko/demjanenko.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int exit_code;
};

int exit_code_for(demj_status st) {
  switch (st) {
  case DEMJ_OK: return kExitOk;
  case DEMJ_BOUND_VIOLATED:
  case DEMJ_CALLBACK_ABORTED:
  case DEMJ_IO:
  case DEMJ_INTERNAL:
  case DEMJ_FACTORIZATION_INCOMPLETE: return kExitCheckFailed;
  default: return kExitUsage;
  }
}

void check(demj_status st) {
  if (st == DEMJ_OK) return;
  std::cerr << "error: " << demj_status_name(st) << ": " << demj_last_error_message() << "\n";
  throw Failure{exit_code_for(st)};
}

// Takes ownership of a library string and writes it to stdout.
void emit(char* s) {
  std::fputs(s, stdout);
  demj_string_free(s);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Owned = std::unique_ptr<T, Deleter<T, Free>>;

using KSet = Owned<demj_kset, demj_kset_free>;
using Matrix = Owned<demj_matrix, demj_matrix_free>;
using List = Owned<demj_u64_list, demj_u64_list_free>;
using Ls = Owned<demj_ls, demj_ls_free>;
using Lbm = Owned<demj_lbm, demj_lbm_free>;
using Density = Owned<demj_density, demj_density_free>;
using Resultant = Owned<demj_resultant, demj_resultant_free>;
using MStats = Owned<demj_mstats, demj_mstats_free>;
using Verify = Owned<demj_verify, demj_verify_free>;

size_t rank_cap() {
  const char* env = std::getenv("DEMJANENKO_EXACT_RANK_CAP");
  if (!env || !*env) return demj_default_rank_cap();
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno || *end || v == 0 || env[0] == '-') {
    std::cerr << "error: DEMJANENKO_EXACT_RANK_CAP must be a positive integer\n";
    throw Failure{kExitUsage};
  }
  return static_cast<size_t>(v);
}

struct Table1Row {
  unsigned s;
  uint64_t ell;
  std::vector<std::pair<uint64_t, unsigned>> factors;
};

const std::vector<Table1Row>& table1_expected() {
  static const std::vector<Table1Row> rows = {
      {3, 31, {{2, 1}, {3, 1}, {5, 1}}},
      {4, 3121, {{2, 4}, {3, 1}, {5, 1}, {13, 1}}},
      {5, 127681, {{2, 6}, {3, 1}, {5, 1}, {7, 1}, {19, 1}}},
      {6, 25858561, {{2, 9}, {3, 1}, {5, 1}, {7, 1}, {13, 1}, {37, 1}}},
  };
  return rows;
}

constexpr uint64_t kTable1Limit = 31000000;

std::string factor_text(const std::vector<std::pair<uint64_t, unsigned>>& f) {
  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += "·";
    out += std::to_string(f[i].first);
    if (f[i].second > 1) out += "^" + std::to_string(f[i].second);
  }
  return out;
}

struct Common {
  std::string format = "plain";
  unsigned workers = 1;
  std::string checkpoint;

  demj_format fmt() const {
    static const std::map<std::string, demj_format> names = {
        {"plain", DEMJ_FORMAT_PLAIN}, {"json", DEMJ_FORMAT_JSON}, {"csv", DEMJ_FORMAT_CSV}};
    return names.at(format);
  }

  demj_search_options options(uint64_t max_ell = 3) const {
    demj_search_options o;
    demj_search_options_init(&o);
    o.max_ell = max_ell;
    o.workers = workers;
    o.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
    return o;
  }
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

void add_workers(CLI::App* cmd, Common& c) {
  cmd->add_option("--workers", c.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_parallel(CLI::App* cmd, Common& c) {
  add_workers(cmd, c);
  cmd->add_option("--checkpoint", c.checkpoint, "Checkpoint file for resumable scans");
}

int census_row(const demj_kset* ks, void* user) {
  char* row = nullptr;
  if (demj_kset_format_row(ks, *static_cast<demj_format*>(user), &row) != DEMJ_OK) return -1;
  emit(row);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular Demjanenko matrices: K-set counts, searches and checks"};
  app.require_subcommand(1);
  Common c;

  uint64_t ell = 0, k = 0, max_ell = 0, x = 0, m = 1, d = 1, e = 1, budget = 0;
  unsigned a = 0, b = 0, beta = 0, alpha_max = 40;
  bool oracle = false, skip_s6 = false, m_one = false, empty_only = false;
  std::string mode;
  std::vector<uint64_t> explain;

  auto* kset = app.add_subcommand("kset", "K-set of a prime with its count bound");
  kset->add_option("--ell", ell, "Prime modulus")->required();
  kset->add_flag("--oracle", oracle, "Take members from matrix rank deficiency");
  kset->add_option("--explain", explain, "Show criterion evidence for these k instead");
  add_format(kset, c);

  auto* census = app.add_subcommand("census", "Count report for every prime up to a limit");
  census->alias("count");
  census->add_option("--max-ell", max_ell, "Largest prime to include")->required();
  add_format(census, c);
  add_parallel(census, c);

  auto* mat = app.add_subcommand("matrix", "Sign matrix for (ell, k)");
  mat->add_option("--ell", ell, "Prime modulus")->required();
  mat->add_option("--k", k, "Parameter in [1, ell-2]")->required();
  add_format(mat, c);

  auto* rank = app.add_subcommand("rank", "Exact rank of the sign matrix for (ell, k)");
  rank->add_option("--ell", ell, "Prime modulus")->required();
  rank->add_option("--k", k, "Parameter in [1, ell-2]")->required();
  add_format(rank, c);

  auto* ver = app.add_subcommand("verify", "Range-wide consistency checks");
  ver->add_option("--mode", mode, "Check to run")
      ->required()
      ->check(CLI::IsMember({"oracle", "theorem1", "identities", "rankformula"}));
  ver->add_option("--max-ell", max_ell, "Largest prime to check")->required();
  add_format(ver, c);
  add_workers(ver, c);

  auto* table1 = app.add_subcommand("table1", "Smallest empty-K primes with many prime factors");
  table1->add_flag("--skip-s6", skip_s6, "Stop after s = 5");
  add_format(table1, c);
  add_parallel(table1, c);

  auto* fam = app.add_subcommand("search-712", "Primes 2*3^beta*m + 1 in the finite range");
  fam->add_flag("--m-one", m_one, "Only the m = 1 members");
  fam->add_flag("--empty-k", empty_only, "Keep only primes with empty K");
  add_format(fam, c);
  add_workers(fam, c);

  auto* lset = app.add_subcommand("lset", "Cyclotomic resultant and its prime divisors");
  lset->add_option("--a", a, "3-adic exponent of the first order")->required();
  lset->add_option("--b", b, "3-adic exponent of the second order")->required();
  lset->add_option("--d", d, "Cofactor of the first order")->capture_default_str();
  lset->add_option("--e", e, "Cofactor of the second order")->capture_default_str();
  add_format(lset, c);

  auto* lbm = app.add_subcommand("lbm", "Primes 2^alpha 3^beta m + 1 with nonempty K");
  lbm->add_option("--beta", beta, "Power of 3")->required();
  lbm->add_option("--m", m, "Cofactor prime to 6")->capture_default_str();
  lbm->add_option("--alpha-max", alpha_max, "Largest power of 2")->capture_default_str();
  lbm->add_option("--budget", budget, "Skip primes above this bound (default 2^40)");
  add_format(lbm, c);

  auto* ms = app.add_subcommand("mstats", "M(k, ell) over the K-set");
  ms->add_option("--ell", ell, "Prime modulus")->required();
  add_format(ms, c);

  auto* dens = app.add_subcommand("density", "Primes = 1 mod 3 up to x with empty K");
  dens->add_option("--x", x, "Upper limit")->required();
  add_format(dens, c);
  add_parallel(dens, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    const demj_format fmt = c.fmt();
    char* out = nullptr;

    if (*kset) {
      if (!explain.empty()) {
        for (uint64_t kk : explain) {
          check(demj_criterion_format(ell, kk, fmt, nullptr, &out));
          emit(out);
        }
        return kExitOk;
      }
      demj_kset* raw = nullptr;
      check(oracle ? demj_kset_compute_oracle(ell, rank_cap(), &raw)
                   : demj_kset_compute(ell, &raw));
      KSet ks(raw);
      check(demj_kset_format(ks.get(), fmt, &out));
      emit(out);
      return demj_kset_within_bound(ks.get()) ? kExitOk : kExitCheckFailed;
    }

    if (*census) {
      const auto opts = c.options(max_ell);
      check(demj_census_header(fmt, &out));
      emit(out);
      demj_format row_fmt = fmt;
      const demj_status st = demj_census(&opts, census_row, &row_fmt);
      std::fflush(stdout);
      check(st);
      return kExitOk;
    }

    if (*mat || *rank) {
      demj_matrix* raw = nullptr;
      check(demj_matrix_build(ell, k, &raw));
      Matrix mx(raw);
      if (*mat) {
        check(demj_matrix_format(mx.get(), fmt, &out));
      } else {
        size_t r = 0;
        check(demj_matrix_rank(mx.get(), rank_cap(), &r));
        check(demj_matrix_format_rank(mx.get(), r, fmt, &out));
      }
      emit(out);
      return kExitOk;
    }

    if (*ver) {
      demj_verify_mode vm;
      check(demj_verify_parse_mode(mode.c_str(), &vm));
      demj_verify* raw = nullptr;
      check(demj_verify_run(vm, max_ell, c.workers, rank_cap(), &raw));
      Verify rep(raw);
      check(demj_verify_format(rep.get(), fmt, &out));
      emit(out);
      return demj_verify_passed(rep.get()) ? kExitOk : kExitCheckFailed;
    }

    if (*table1) {
      const auto opts = c.options();
      bool all_match = true;
      if (fmt == DEMJ_FORMAT_CSV) std::cout << "s,ell,factorization,match\n";
      if (fmt == DEMJ_FORMAT_JSON) std::cout << "[";
      bool first = true;
      for (const auto& want : table1_expected()) {
        if (skip_s6 && want.s == 6) continue;
        demj_ls* raw = nullptr;
        check(demj_find_ls(want.s, kTable1Limit, &opts, &raw));
        Ls rec(raw);
        std::vector<std::pair<uint64_t, unsigned>> got;
        for (size_t i = 0; i < demj_ls_factor_count(rec.get()); ++i) {
          uint64_t p = 0;
          unsigned ex = 0;
          check(demj_ls_factor(rec.get(), i, &p, &ex));
          got.emplace_back(p, ex);
        }
        const bool match = demj_ls_found(rec.get()) && demj_ls_ell(rec.get()) == want.ell &&
                           got == want.factors;
        all_match = all_match && match;
        const std::string ell_text =
            demj_ls_found(rec.get()) ? std::to_string(demj_ls_ell(rec.get())) : "NOT-FOUND";
        switch (fmt) {
        case DEMJ_FORMAT_CSV:
          std::cout << want.s << ',' << ell_text << ',' << factor_text(got) << ','
                    << (match ? "true" : "false") << "\n";
          break;
        case DEMJ_FORMAT_JSON:
          std::cout << (first ? "" : ",") << "{\"s\":" << want.s << ",\"ell\":"
                    << (demj_ls_found(rec.get()) ? ell_text : "null")
                    << ",\"factorization\":\"" << factor_text(got)
                    << "\",\"match\":" << (match ? "true" : "false") << "}";
          break;
        default:
          std::cout << "s=" << want.s << "  " << ell_text << ", " << factor_text(got)
                    << (match ? "" : "  MISMATCH (expected " + std::to_string(want.ell) + ", " +
                                         factor_text(want.factors) + ")")
                    << "\n";
        }
        first = false;
      }
      if (fmt == DEMJ_FORMAT_JSON) std::cout << "]\n";
      return all_match ? kExitOk : kExitCheckFailed;
    }

    if (*fam) {
      demj_u64_list* raw = nullptr;
      check(m_one ? demj_family_m_one(&raw) : demj_family_search(&raw));
      List primes(raw);
      if (empty_only) {
        check(demj_empty_k_primes(primes.get(), c.workers, &raw));
        primes.reset(raw);
      }
      check(demj_u64_list_format(primes.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }

    if (*lset) {
      demj_resultant* raw = nullptr;
      check(demj_l_set(a, b, d, e, &raw));
      Resultant rec(raw);
      check(demj_resultant_format(rec.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }

    if (*lbm) {
      demj_lbm* raw = nullptr;
      check(demj_lbm_scan(beta, m, alpha_max, budget, &raw));
      Lbm scan(raw);
      check(demj_lbm_format(scan.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }

    if (*ms) {
      demj_mstats* raw = nullptr;
      check(demj_mstats_compute(ell, &raw));
      MStats s(raw);
      check(demj_mstats_format(s.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }

    if (*dens) {
      const auto opts = c.options();
      demj_density* raw = nullptr;
      check(demj_density_census(x, &opts, &raw));
      Density rep(raw);
      check(demj_density_format(rep.get(), fmt, &out));
      emit(out);
      return kExitOk;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitUsage;
}
