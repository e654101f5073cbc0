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
#include <gtest/gtest.h>

#include "format.hpp"
#include "json_schema.hpp"
#include "verify.hpp"

using namespace demj;
using format::Format;
using nlohmann::json;

namespace {

json parse(const std::string& s) { return json::parse(s); }

} // namespace

TEST(Schema, RejectsMalformedDocuments) {
  json good = parse(format::kset(singular::k_set(arith::make_context(7)), Format::Json));
  EXPECT_EQ(schema::validate(good, schema::kset()), "");
  json bad = good;
  bad.erase("members");
  EXPECT_NE(schema::validate(bad, schema::kset()), "");
  bad = good;
  bad["main_term"] = 0.5;
  EXPECT_NE(schema::validate(bad, schema::kset()), "");
  bad = good;
  bad["main_term"] = "7/18.0";
  EXPECT_NE(schema::validate(bad, schema::kset()), "");
  bad = good;
  bad["extra"] = 1;
  EXPECT_NE(schema::validate(bad, schema::kset()), "");
}

TEST(Format, Rationals) {
  EXPECT_EQ(format::rational(mpq_class(7, 18)), "7/18");
  EXPECT_EQ(format::rational(mpq_class(0)), "0/1");
  EXPECT_EQ(format::rational(mpq_class(-3, 2)), "-3/2");
  EXPECT_EQ(format::rational(mpq_class(5)), "5/1");
}

TEST(Format, Factorization) {
  EXPECT_EQ(format::factorization(arith::factorize(30)), "2·3·5");
  EXPECT_EQ(format::factorization(arith::factorize(25858560)), "2^9·3·5·7·13·37");
  EXPECT_EQ(format::factorization({}), "1");
}

TEST(Format, KSetJson) {
  const auto rep = singular::k_set(arith::make_context(163));
  const json j = parse(format::kset(rep, Format::Json));
  EXPECT_EQ(schema::validate(j, schema::kset()), "");
  EXPECT_EQ(j["ell"], 163);
  EXPECT_EQ(j["count"], 12);
  EXPECT_EQ(j["members"].size(), 12u);
  EXPECT_EQ(j["main_term"], format::rational(rep.main_term));
  const auto ordered = nlohmann::ordered_json::parse(format::kset(rep, Format::Json));
  std::vector<std::string> keys;
  for (auto it = ordered.begin(); it != ordered.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"ell", "alpha", "beta", "m", "count", "members",
                                            "main_term", "error_bound", "within_bound"}));
}

TEST(Format, CensusCsv) {
  const auto rep = singular::k_set(arith::make_context(7));
  EXPECT_EQ(format::census_header(Format::Csv), "ell,alpha,beta,m,count,main_term,bound,within\n");
  EXPECT_EQ(format::census_row(rep, Format::Csv), "7,1,1,1,0,7/18," +
                                                      format::rational(rep.error_bound) +
                                                      ",true\n");
  EXPECT_EQ(format::census_header(Format::Json), "");
  EXPECT_EQ(schema::validate(parse(format::census_row(rep, Format::Json)), schema::census_row()),
            "");
}

TEST(Format, ResultantJson) {
  const auto rec = cyclotomic::l_set(3, 2, 1, 1);
  const json j = parse(format::resultant(rec, Format::Json));
  EXPECT_EQ(schema::validate(j, schema::resultant()), "");
  EXPECT_EQ(j["resultant"], "2866369804403121");
  EXPECT_EQ(j["primes"], json::array({3, 271}));
}

TEST(Format, OtherJsonDocuments) {
  EXPECT_EQ(schema::validate(parse(format::ls(search::find_ls(3, 1000), Format::Json)),
                             schema::ls()),
            "");
  search::LsRecord missing;
  missing.s = 7;
  missing.limit = 100;
  const json jm = parse(format::ls(missing, Format::Json));
  EXPECT_EQ(schema::validate(jm, schema::ls()), "");
  EXPECT_TRUE(jm["ell"].is_null());
  EXPECT_EQ(schema::validate(parse(format::lbm(1, 11, search::lbm_scan(1, 11, 6), Format::Json)),
                             schema::lbm()),
            "");
  EXPECT_EQ(schema::validate(parse(format::mstats(singular::m_stats(arith::make_context(163)),
                                                  Format::Json)),
                             schema::mstats()),
            "");
  EXPECT_EQ(
      schema::validate(parse(format::density(search::density_census(500), Format::Json)),
                       schema::density()),
      "");
  EXPECT_EQ(schema::validate(parse(format::matrix(matrix::build_matrix(arith::make_context(13), 1),
                                                  Format::Json)),
                             schema::matrix()),
            "");
  EXPECT_EQ(schema::validate(parse(format::primes({7, 19}, Format::Json)), schema::prime_list()),
            "");
  EXPECT_EQ(schema::validate(parse(format::verify(verify::run(verify::Mode::Identities, 40),
                                                  Format::Json)),
                             schema::verify()),
            "");
}

TEST(Format, Stable) {
  const auto rep = singular::k_set(arith::make_context(1459));
  for (Format f : {Format::Plain, Format::Json, Format::Csv})
    EXPECT_EQ(format::kset(rep, f), format::kset(singular::k_set(arith::make_context(1459)), f));
}

TEST(Format, PlainLs) {
  EXPECT_EQ(format::ls(search::find_ls(3, 1000), Format::Plain), "s=3 ell=31 ell-1=2·3·5\n");
  search::LsRecord missing;
  missing.s = 7;
  missing.limit = 31000000;
  EXPECT_EQ(format::ls(missing, Format::Plain), "s=7 NOT-FOUND below 31000000\n");
}
