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
#include "format.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace demj::format {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump() + "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json u64_array(const std::vector<u64>& v) {
  Json a = Json::array();
  for (u64 x : v) a.push_back(x);
  return a;
}

std::string joined(const std::vector<u64>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big(const mpz_class& z) {
  if (z >= 0 && mpz_fits_ulong_p(z.get_mpz_t())) return Json(static_cast<u64>(z.get_ui()));
  return Json(z.get_str());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json kset_json(const singular::KSetReport& rep, bool with_members) {
  Json j;
  j["ell"] = rep.ctx.ell;
  j["alpha"] = rep.ctx.alpha;
  j["beta"] = rep.ctx.beta;
  j["m"] = rep.ctx.m;
  j["count"] = rep.count();
  if (with_members) j["members"] = u64_array(rep.members);
  j["main_term"] = rational(rep.main_term);
  j["error_bound"] = rational(rep.error_bound);
  j["within_bound"] = rep.within_bound;
  return j;
}

Json order_json(const arith::OrderProfile& o) {
  return Json{{"residue", o.residue}, {"order", o.order}, {"nu2", o.nu2}, {"nu3", o.nu3}};
}

const char* status_name(search::LbmStatus s) {
  switch (s) {
  case search::LbmStatus::InL: return "in_L";
  case search::LbmStatus::NotInL: return "not_in_L";
  case search::LbmStatus::Skipped: return "skipped";
  }
  return "unknown";
}

} // namespace

std::string rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string factorization(const arith::Factorization& f) {
  if (f.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += "·";
    out += std::to_string(f[i].prime);
    if (f[i].exponent > 1) out += "^" + std::to_string(f[i].exponent);
  }
  return out;
}

std::string kset(const singular::KSetReport& rep, Format fmt) {
  switch (fmt) {
  case Format::Json: return dump(kset_json(rep, true));
  case Format::Csv: return census_header(fmt) + census_row(rep, fmt);
  case Format::Plain: break;
  }
  std::ostringstream out;
  out << "ell=" << rep.ctx.ell << " alpha=" << rep.ctx.alpha << " beta=" << rep.ctx.beta
      << " m=" << rep.ctx.m << "\n"
      << "count=" << rep.count() << "\n"
      << "members=" << joined(rep.members, " ") << "\n"
      << "main_term=" << rational(rep.main_term) << "\n"
      << "error_bound=" << rational(rep.error_bound) << "\n"
      << "within_bound=" << yes_no(rep.within_bound) << "\n";
  return out.str();
}

std::string census_header(Format fmt) {
  return fmt == Format::Csv ? "ell,alpha,beta,m,count,main_term,bound,within\n" : "";
}

std::string census_row(const singular::KSetReport& rep, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
  case Format::Json: return dump(kset_json(rep, false));
  case Format::Csv:
    out << rep.ctx.ell << ',' << rep.ctx.alpha << ',' << rep.ctx.beta << ',' << rep.ctx.m << ','
        << rep.count() << ',' << rational(rep.main_term) << ',' << rational(rep.error_bound)
        << ',' << (rep.within_bound ? "true" : "false") << "\n";
    return out.str();
  case Format::Plain: break;
  }
  out << "ell=" << rep.ctx.ell << " count=" << rep.count()
      << " main_term=" << rational(rep.main_term) << " bound=" << rational(rep.error_bound)
      << " within=" << yes_no(rep.within_bound) << "\n";
  return out.str();
}

std::string criterion(const singular::CriterionEvidence& ev, u64 ell, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
  case Format::Json: {
    Json j;
    j["ell"] = ell;
    j["k"] = ev.k;
    j["ord_k"] = order_json(ev.ord_k);
    j["ord_neg"] = order_json(ev.ord_neg);
    j["ord_pos"] = order_json(ev.ord_pos);
    j["cond_i"] = ev.cond_i;
    j["cond_ii"] = ev.cond_ii;
    j["cond_iii"] = ev.cond_iii;
    j["in_k"] = ev.in_k();
    j["in_k_star"] = ev.in_k_star();
    return dump(j);
  }
  case Format::Csv:
    out << "ell,k,ord_k,ord_neg,ord_pos,cond_i,cond_ii,cond_iii,in_k\n"
        << ell << ',' << ev.k << ',' << ev.ord_k.order << ',' << ev.ord_neg.order << ','
        << ev.ord_pos.order << ',' << ev.cond_i << ',' << ev.cond_ii << ',' << ev.cond_iii << ','
        << ev.in_k() << "\n";
    return out.str();
  case Format::Plain: break;
  }
  out << "ell=" << ell << " k=" << ev.k << "\n"
      << "ord(k)=" << ev.ord_k.order << " ord(-k^2-k)=" << ev.ord_neg.order
      << " ord(k^2+k)=" << ev.ord_pos.order << "\n"
      << "order not 3: " << yes_no(ev.cond_i) << "\n"
      << "odd orders: " << yes_no(ev.cond_ii) << "\n"
      << "3-adic drop: " << yes_no(ev.cond_iii) << "\n"
      << "in K: " << yes_no(ev.in_k()) << "\n";
  return out.str();
}

std::string matrix(const matrix::DemjanenkoMatrix& dm, Format fmt) {
  if (fmt == Format::Plain) return matrix::dump(dm);
  std::ostringstream out;
  if (fmt == Format::Csv) {
    for (std::size_t r = 0; r < dm.dim(); ++r) {
      for (std::size_t c = 0; c < dm.dim(); ++c) out << (c ? "," : "") << dm.sign(r, c);
      out << "\n";
    }
    return out.str();
  }
  Json rows = Json::array();
  for (std::size_t r = 0; r < dm.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < dm.dim(); ++c) row.push_back(dm.sign(r, c));
    rows.push_back(std::move(row));
  }
  Json j;
  j["ell"] = dm.ell;
  j["k"] = dm.k;
  j["dim"] = dm.dim();
  j["stabilizer_size"] = dm.stabilizer_size;
  j["reps"] = u64_array(dm.reps);
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string rank(const matrix::DemjanenkoMatrix& dm, std::size_t rank, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
  case Format::Json:
    return dump(Json{{"ell", dm.ell},
                     {"k", dm.k},
                     {"dim", dm.dim()},
                     {"rank", rank},
                     {"deficient", rank < dm.dim()}});
  case Format::Csv:
    out << "ell,k,dim,rank\n" << dm.ell << ',' << dm.k << ',' << dm.dim() << ',' << rank << "\n";
    return out.str();
  case Format::Plain: break;
  }
  out << "ell=" << dm.ell << " k=" << dm.k << " dim=" << dm.dim() << " rank=" << rank
      << (rank < dm.dim() ? " deficient" : " full") << "\n";
  return out.str();
}

std::string resultant(const cyclotomic::ResultantRecord& rec, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
  case Format::Json: {
    Json primes = Json::array();
    for (const auto& p : rec.prime_divisors) primes.push_back(big(p));
    return dump(Json{{"a", rec.a},
                     {"b", rec.b},
                     {"d", rec.d},
                     {"e", rec.e},
                     {"resultant", rec.resultant.get_str()},
                     {"primes", std::move(primes)}});
  }
  case Format::Csv:
    out << "a,b,d,e,resultant,primes\n"
        << rec.a << ',' << rec.b << ',' << rec.d << ',' << rec.e << ',' << rec.resultant << ',';
    for (std::size_t i = 0; i < rec.prime_divisors.size(); ++i)
      out << (i ? " " : "") << rec.prime_divisors[i];
    out << "\n";
    return out.str();
  case Format::Plain: break;
  }
  out << "a=" << rec.a << " b=" << rec.b << " d=" << rec.d << " e=" << rec.e << "\n"
      << "resultant=" << rec.resultant << "\n"
      << "primes=";
  for (std::size_t i = 0; i < rec.prime_divisors.size(); ++i)
    out << (i ? " " : "") << rec.prime_divisors[i];
  out << "\n";
  return out.str();
}

std::string primes(const std::vector<u64>& list, Format fmt) {
  switch (fmt) {
  case Format::Json: return dump(u64_array(list));
  case Format::Csv: return "ell\n" + (list.empty() ? "" : joined(list, "\n") + "\n");
  case Format::Plain: break;
  }
  return list.empty() ? "" : joined(list, "\n") + "\n";
}

std::string ls(const search::LsRecord& rec, Format fmt) {
  const std::string fact = rec.found() ? factorization(rec.factorization) : "";
  std::ostringstream out;
  switch (fmt) {
  case Format::Json: {
    Json factors = Json::array();
    for (const auto& f : rec.factorization) factors.push_back(Json::array({f.prime, f.exponent}));
    Json j;
    j["s"] = rec.s;
    j["limit"] = rec.limit;
    j["found"] = rec.found();
    j["ell"] = rec.found() ? Json(*rec.ell) : Json(nullptr);
    j["factorization"] = std::move(factors);
    j["factorization_text"] = fact;
    return dump(j);
  }
  case Format::Csv:
    out << "s,ell,factorization\n"
        << rec.s << ',' << (rec.found() ? std::to_string(*rec.ell) : "NOT-FOUND") << ',' << fact
        << "\n";
    return out.str();
  case Format::Plain: break;
  }
  if (rec.found())
    out << "s=" << rec.s << " ell=" << *rec.ell << " ell-1=" << fact << "\n";
  else
    out << "s=" << rec.s << " NOT-FOUND below " << rec.limit << "\n";
  return out.str();
}

std::string lbm(unsigned beta, u64 m, const std::vector<search::LbmRow>& rows, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::Json) {
    Json list = Json::array();
    Json members = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["alpha"] = r.alpha;
      row["ell"] = r.ell;
      row["status"] = status_name(r.status);
      row["note"] = r.note;
      if (r.witness) {
        const auto& w = *r.witness;
        row["witness"] = Json{{"k", w.k},           {"a", w.a}, {"b", w.b}, {"d", w.d},
                              {"e", w.e}, {"divides_resultant", w.divides_resultant}};
      }
      if (r.status == search::LbmStatus::InL) members.push_back(r.ell);
      list.push_back(std::move(row));
    }
    Json j;
    j["beta"] = beta;
    j["m"] = m;
    j["rows"] = std::move(list);
    j["members"] = std::move(members);
    return dump(j);
  }
  if (fmt == Format::Csv) {
    out << "alpha,ell,status,k,a,b,d,e,divides_resultant,note\n";
    for (const auto& r : rows) {
      out << r.alpha << ',' << r.ell << ',' << status_name(r.status) << ',';
      if (r.witness) {
        const auto& w = *r.witness;
        out << w.k << ',' << w.a << ',' << w.b << ',' << w.d << ',' << w.e << ','
            << (w.divides_resultant ? "true" : "false");
      } else {
        out << ",,,,,";
      }
      out << ',' << csv_field(r.note) << "\n";
    }
    return out.str();
  }
  std::size_t in_l = 0;
  out << "beta=" << beta << " m=" << m << "\n";
  for (const auto& r : rows) {
    out << "alpha=" << r.alpha << " ell=" << r.ell << " " << status_name(r.status);
    if (r.witness)
      out << " k=" << r.witness->k << " (a,b,d,e)=(" << r.witness->a << "," << r.witness->b
          << "," << r.witness->d << "," << r.witness->e << ") divides_resultant="
          << yes_no(r.witness->divides_resultant);
    if (!r.note.empty()) out << " [" << r.note << "]";
    out << "\n";
    in_l += r.status == search::LbmStatus::InL;
  }
  out << "in_L_count=" << in_l << "\n";
  return out.str();
}

std::string verify(const verify::Report& rep, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::Json) {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
      failures.push_back(Json{{"ell", f.ell},
                              {"k", f.k ? Json(*f.k) : Json(nullptr)},
                              {"detail", f.detail}});
    Json j;
    j["mode"] = verify::mode_name(rep.mode);
    j["max_ell"] = rep.max_ell;
    j["primes_checked"] = rep.primes_checked;
    j["checks"] = rep.checks;
    j["passed"] = rep.passed();
    j["failures"] = std::move(failures);
    return dump(j);
  }
  if (fmt == Format::Csv) {
    out << "ell,k,detail\n";
    for (const auto& f : rep.failures)
      out << f.ell << ',' << (f.k ? std::to_string(*f.k) : "") << ',' << csv_field(f.detail)
          << "\n";
    return out.str();
  }
  out << "mode=" << verify::mode_name(rep.mode) << " max_ell=" << rep.max_ell
      << " primes=" << rep.primes_checked << " checks=" << rep.checks
      << " failures=" << rep.failures.size() << "\n";
  for (const auto& f : rep.failures) {
    out << "FAIL ell=" << f.ell;
    if (f.k) out << " k=" << *f.k;
    out << ": " << f.detail << "\n";
  }
  out << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string mstats(const singular::MStatsSummary& s, Format fmt) {
  std::ostringstream out;
  switch (fmt) {
  case Format::Json: {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(Json{{"k", v.k}, {"M", v.M}});
    Json j;
    j["ell"] = s.ell;
    j["count"] = s.values.size();
    j["min_M"] = s.min_M ? Json(*s.min_M) : Json(nullptr);
    j["max_M"] = s.max_M ? Json(*s.max_M) : Json(nullptr);
    j["values"] = std::move(values);
    return dump(j);
  }
  case Format::Csv:
    out << "k,M\n";
    for (const auto& v : s.values) out << v.k << ',' << v.M << "\n";
    return out.str();
  case Format::Plain: break;
  }
  out << "ell=" << s.ell << " count=" << s.values.size();
  if (s.min_M) out << " min_M=" << *s.min_M << " max_M=" << *s.max_M;
  out << "\n";
  for (const auto& v : s.values) out << "k=" << v.k << " M=" << v.M << "\n";
  return out.str();
}

std::string density(const search::DensityReport& rep, Format fmt) {
  char ref[64];
  std::snprintf(ref, sizeof ref, "%.6g", rep.reference);
  std::ostringstream out;
  switch (fmt) {
  case Format::Json: {
    Json j;
    j["x"] = rep.x;
    j["count"] = rep.count();
    j["reference"] = rep.reference;
    j["primes"] = u64_array(rep.primes);
    return dump(j);
  }
  case Format::Csv:
    out << "x,count,reference\n" << rep.x << ',' << rep.count() << ',' << ref << "\n";
    return out.str();
  case Format::Plain: break;
  }
  out << "x=" << rep.x << " count=" << rep.count() << " x^(3/4)(log x)^3=" << ref << "\n"
      << "primes=" << joined(rep.primes, " ") << "\n";
  return out.str();
}

} // namespace demj::format
