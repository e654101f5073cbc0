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
// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance [--long] [--only N]

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "demjanenko/demjanenko.h"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds; // 0 means untimed
  std::function<Outcome()> body;
};

unsigned workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = "'" DEMJ_CLI_PATH "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string status_text(demj_status st) {
  return std::string(demj_status_name(st)) + ": " + demj_last_error_message();
}

size_t kset_count(uint64_t ell, demj_status* st) {
  demj_kset* ks = nullptr;
  *st = demj_kset_compute(ell, &ks);
  if (*st != DEMJ_OK) return 0;
  const size_t n = demj_kset_count(ks);
  demj_kset_free(ks);
  return n;
}

Outcome empty_k_primes() {
  std::ostringstream d;
  bool ok = true;
  for (uint64_t ell : {7u, 19u, 163u, 487u, 1459u, 39367u}) {
    const auto r = cli("kset --ell " + std::to_string(ell) + " --format json");
    const auto pos = r.out.find("\"count\":");
    if (r.code != 0 || pos == std::string::npos) return {false, "kset failed for " + std::to_string(ell)};
    const unsigned long count = std::strtoul(r.out.c_str() + pos + 8, nullptr, 10);
    const bool want_empty = ell == 7 || ell == 19;
    ok = ok && (want_empty ? count == 0 : count > 0);
    d << ell << ":" << count << " ";
  }
  return {ok, d.str()};
}

std::string one_line(std::string text) {
  for (auto& ch : text) if (ch == '\n') ch = ' ';
  return text;
}

Outcome family_search() {
  const std::string want = "7\n19\n163\n487\n1459\n39367\n86093443\n258280327\n";
  const auto r = cli("search-712 --format plain");
  size_t lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  const bool ok = r.code == 0 && r.out == want;
  std::string detail = std::to_string(lines) + " primes";
  if (!ok) {
    detail += " (first: " + one_line(r.out.substr(0, 40)) + "...)";
    const auto m1 = cli("search-712 --m-one --format plain");
    detail += "; m = 1 members: " + one_line(m1.out) +
              (m1.out == want ? "match the expected list" : "differ from the expected list");
  }
  return {ok, detail};
}

Outcome table_rows(const std::vector<std::pair<unsigned, uint64_t>>& rows) {
  demj_search_options opts;
  demj_search_options_init(&opts);
  opts.workers = workers();
  std::ostringstream d;
  bool ok = true;
  for (auto [s, want] : rows) {
    demj_ls* rec = nullptr;
    const demj_status st = demj_find_ls(s, 31000000, &opts, &rec);
    if (st != DEMJ_OK) return {false, status_text(st)};
    const uint64_t got = demj_ls_found(rec) ? demj_ls_ell(rec) : 0;
    demj_ls_free(rec);
    ok = ok && got == want;
    d << "s=" << s << ":" << got << " ";
  }
  return {ok, d.str()};
}

Outcome verify_mode(demj_verify_mode mode, uint64_t max_ell) {
  demj_verify* rep = nullptr;
  const demj_status st = demj_verify_run(mode, max_ell, workers(), demj_default_rank_cap(), &rep);
  if (st != DEMJ_OK) return {false, status_text(st)};
  const bool ok = demj_verify_passed(rep) != 0;
  std::string detail = std::to_string(demj_verify_failure_count(rep)) + " failures";
  if (!ok) {
    char* out = nullptr;
    if (demj_verify_format(rep, DEMJ_FORMAT_PLAIN, &out) == DEMJ_OK) {
      std::string text = out;
      demj_string_free(out);
      std::istringstream lines(text);
      std::string line;
      int shown = 0;
      while (std::getline(lines, line) && shown < 4) {
        if (line.find("ell=") == std::string::npos) continue;
        detail += "; " + line;
        ++shown;
      }
    }
  }
  demj_verify_free(rep);
  return {ok, detail};
}

Outcome l_sets() {
  struct ByValue {
    bool operator()(const std::string& x, const std::string& y) const {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    }
  };
  using PrimeSet = std::set<std::string, ByValue>;
  struct Case {
    unsigned a, b;
    PrimeSet primes;
  };
  const Case cases[] = {{2, 1, {"3"}}, {3, 2, {"3", "271"}}, {3, 1, {"3", "271"}}};
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    demj_resultant* rec = nullptr;
    const demj_status st = demj_l_set(c.a, c.b, 1, 1, &rec);
    if (st != DEMJ_OK) return {false, status_text(st)};
    PrimeSet got;
    for (size_t i = 0; i < demj_resultant_prime_count(rec); ++i) {
      char* p = nullptr;
      demj_resultant_prime_decimal(rec, i, &p);
      got.insert(p);
      demj_string_free(p);
    }
    demj_resultant_free(rec);
    ok = ok && got == c.primes;
    d << "(" << c.a << "," << c.b << "):{";
    for (const auto& p : got) d << p << (p == *got.rbegin() ? "" : ",");
    d << "} ";
  }
  return {ok, d.str()};
}

struct ContrapositiveState {
  uint64_t checked = 0;
  std::vector<uint64_t> violations;
};

int contrapositive_row(const demj_kset* ks, void* user) {
  auto* state = static_cast<ContrapositiveState*>(user);
  const uint64_t ell = demj_kset_ell(ks);
  unsigned alpha = 0, beta = 0;
  uint64_t m = 0;
  if (demj_prime_split(ell, &alpha, &beta, &m) != DEMJ_OK) return -1;
  if (beta == 0 || demj_kset_count(ks) != 0) return 0;
  ++state->checked;
  const unsigned __int128 b4 = static_cast<unsigned __int128>(beta) * beta * beta * beta;
  const bool small = 4 * alpha >= 100 || ell <= (static_cast<unsigned __int128>(441) << (4 * alpha)) * b4;
  if (!small) state->violations.push_back(ell);
  return 0;
}

Outcome contrapositive() {
  demj_search_options opts;
  demj_search_options_init(&opts);
  opts.max_ell = 10000;
  opts.workers = workers();
  ContrapositiveState state;
  const demj_status st = demj_census(&opts, contrapositive_row, &state);
  if (st != DEMJ_OK) return {false, status_text(st)};
  std::string detail = std::to_string(state.checked) + " empty-K primes checked";
  for (uint64_t v : state.violations) detail += "; violation " + std::to_string(v);
  return {state.violations.empty() && state.checked > 0, detail};
}

Outcome lbm_empty() {
  std::ostringstream d;
  bool ok = true;
  for (unsigned beta = 1; beta <= 3; ++beta) {
    demj_lbm* scan = nullptr;
    const demj_status st = demj_lbm_scan(beta, 1, 40, uint64_t{1} << 40, &scan);
    if (st != DEMJ_OK) return {false, status_text(st)};
    size_t in_l = 0, scanned = 0;
    for (size_t i = 0; i < demj_lbm_row_count(scan); ++i) {
      unsigned alpha = 0;
      uint64_t ell = 0;
      demj_lbm_status s;
      demj_lbm_row(scan, i, &alpha, &ell, &s);
      in_l += s == DEMJ_LBM_IN_L;
      scanned += s != DEMJ_LBM_SKIPPED;
    }
    demj_lbm_free(scan);
    ok = ok && in_l == 0 && scanned > 0;
    d << "beta=" << beta << ": " << scanned << " primes, " << in_l << " in L ";
  }
  return {ok, d.str()};
}

} // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) {
      long_run = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::fprintf(stderr, "usage: %s [--long] [--only ID]\n", argv[0]);
      return 2;
    }
  }

  std::vector<Criterion> criteria = {
      {"1", "empty K exactly at 7 and 19 among the family members", 1.0, empty_k_primes},
      {"2", "family search returns the eight primes", 60.0, family_search},
      {"3", "smallest empty-K primes for s = 3, 4, 5", 60.0,
       [] { return table_rows({{3, 31}, {4, 3121}, {5, 127681}}); }},
      {"4", "criterion equals rank deficiency for ell <= 200", 120.0,
       [] { return verify_mode(DEMJ_VERIFY_ORACLE, 200); }},
      {"5", "count bound for every prime ell <= 1e5", 300.0,
       [] { return verify_mode(DEMJ_VERIFY_COUNT_BOUND, 100000); }},
      {"6", "rank formula for every k in K, ell <= 500", 0.0,
       [] { return verify_mode(DEMJ_VERIFY_RANK_FORMULA, 500); }},
      {"7", "resultant prime sets", 1.0, l_sets},
      {"8", "identity suite for ell <= 200", 60.0,
       [] { return verify_mode(DEMJ_VERIFY_IDENTITIES, 200); }},
      {"9", "empty K implies ell <= 441 2^(4 alpha) beta^4 for ell <= 1e4", 0.0, contrapositive},
      {"10", "L(beta, 1) empty for beta = 1, 2, 3 up to 2^40", 120.0, lbm_empty},
  };
  if (long_run) {
    criteria = {{"3-long", "smallest empty-K prime for s = 6", 0.0,
                 [] { return table_rows({{6, 25858561}}); }}};
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && c.id != only) continue;
    const auto start = Clock::now();
    Outcome res = c.body();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::string detail = res.detail;
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      res.ok = false;
      detail += " (over time limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
    }
    failed += res.ok ? 0 : 1;
    std::printf("%s criterion %s: %s [%.2f s] %s\n", res.ok ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), secs, detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
