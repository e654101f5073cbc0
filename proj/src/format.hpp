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
#pragma once

// Text renderings of library results. Rationals always appear as "p/q".
// JSON and CSV output is byte-stable for identical inputs.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "matrix.hpp"
#include "search.hpp"
#include "singular.hpp"
#include "verify.hpp"

namespace demj::format {

using arith::u64;

enum class Format { Plain, Json, Csv };

std::string rational(const mpq_class& q);
/// "2^9·3·5" style, or "1" for the empty factorization.
std::string factorization(const arith::Factorization& f);

std::string kset(const singular::KSetReport& rep, Format fmt);

/// Census output is a header (possibly empty) followed by one row per prime.
std::string census_header(Format fmt);
std::string census_row(const singular::KSetReport& rep, Format fmt);

std::string criterion(const singular::CriterionEvidence& ev, u64 ell, Format fmt);
std::string matrix(const matrix::DemjanenkoMatrix& dm, Format fmt);
std::string rank(const matrix::DemjanenkoMatrix& dm, std::size_t rank, Format fmt);
std::string resultant(const cyclotomic::ResultantRecord& rec, Format fmt);
std::string primes(const std::vector<u64>& list, Format fmt);
std::string ls(const search::LsRecord& rec, Format fmt);
std::string lbm(unsigned beta, u64 m, const std::vector<search::LbmRow>& rows, Format fmt);
std::string verify(const verify::Report& rep, Format fmt);
std::string mstats(const singular::MStatsSummary& s, Format fmt);
std::string density(const search::DensityReport& rep, Format fmt);

} // namespace demj::format
