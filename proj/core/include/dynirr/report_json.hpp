#pragma once

#include <nlohmann/json.hpp>

#include "dynirr/charsum.hpp"
#include "dynirr/closure.hpp"
#include "dynirr/constructions.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/search.hpp"

namespace dynirr {

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json big_to_json(const BigInt& v);

nlohmann::json field_to_json(const FieldCtx& ctx);
nlohmann::json verdict_to_json(Verdict v);
nlohmann::json closure_to_json(const FieldCtx& ctx, const ClosureReport& report);
nlohmann::json oracle_to_json(const OracleResult& result);
nlohmann::json gamma_to_json(const GammaReport& report);
nlohmann::json search_to_json(const SearchReport& report);
nlohmann::json charsum_to_json(const CharsumReport& report);

}  // namespace dynirr
