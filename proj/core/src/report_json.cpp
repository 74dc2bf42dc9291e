#include "dynirr/report_json.hpp"

#include <cmath>

#include "dynirr/bounds.hpp"
#include "dynirr/poly_set_io.hpp"

namespace dynirr {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return v.convert_to<std::uint64_t>();
  }
  if (v < 0 && v >= BigInt(std::numeric_limits<std::int64_t>::min())) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json field_to_json(const FieldCtx& ctx) {
  json j;
  j["header"] = ctx.header();
  j["p"] = ctx.p();
  j["d"] = ctx.d();
  j["modulus"] = ctx.d() > 1 ? json(format_coeffs(ctx.modulus())) : json(nullptr);
  j["q"] = big_to_json(ctx.q());
  return j;
}

json verdict_to_json(Verdict v) {
  return v == Verdict::DynamicallyIrreducible ? "DynamicallyIrreducible" : "NotDI";
}

json closure_to_json(const FieldCtx& ctx, const ClosureReport& report) {
  json j;
  j["field"] = field_to_json(ctx);
  j["verdict"] = verdict_to_json(report.verdict);
  json values = json::array();
  for (const auto& v : report.iterate_set) values.push_back(format_element(v));
  j["iterate_set"] = std::move(values);
  j["iterate_size"] = report.iterate_set.size();
  if (report.witness) {
    const Witness& w = *report.witness;
    json wj;
    if (w.reason == WitnessReason::ReducibleGenerator) {
      wj["reason"] = "ReducibleGenerator";
      wj["index"] = w.index;
    } else {
      wj["reason"] = "SquareIterate";
      wj["chain"] = w.chain;
      wj["j"] = w.index;
      wj["value"] = format_element(w.value);
    }
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  json stats{{"sq_tests", report.stats.sq_tests},
             {"insertions", report.stats.insertions},
             {"rounds", report.stats.rounds}};
  if (report.stats.repetition_scale) stats["repetition_scale_q34"] = *report.stats.repetition_scale;
  j["stats"] = std::move(stats);
  j["bound_B"] = big_to_json(bound_B(ctx));
  return j;
}

json oracle_to_json(const OracleResult& result) {
  json j;
  j["max_depth"] = result.max_depth;
  j["all_irreducible"] = result.all_irreducible();
  j["reducible_chain"] = result.reducible_chain ? json(*result.reducible_chain) : json(nullptr);
  j["chains_tested"] = result.chains_tested;
  return j;
}

json gamma_to_json(const GammaReport& report) {
  return json{{"u", format_element(report.u)},
              {"r", report.r},
              {"image_size", report.image_size},
              {"max_fiber", report.max_fiber}};
}

json search_to_json(const SearchReport& report) {
  json j;
  j["field"] = field_to_json(*report.ctx);
  j["m"] = report.m;
  j["complete"] = report.complete;
  j["upper_bound"] = big_to_json(report.upper_bound);
  j["candidates"] = report.candidates;
  j["nodes_explored"] = report.nodes_explored;
  j["seconds"] = report.seconds;
  json polys = json::array();
  for (const auto& f : report.witness.polys) polys.push_back(format_quad(f));
  j["witness"] = std::move(polys);
  j["witness_file"] = emit_poly_set(report.witness);
  return j;
}

json charsum_to_json(const CharsumReport& report) {
  json j;
  j["p"] = report.p;
  j["e"] = report.e;
  j["q"] = big_to_json(report.ctx->q());
  j["field"] = field_to_json(*report.ctx);
  j["S"] = big_to_json(report.S);
  j["weil_floor"] = std::isfinite(report.weil_floor) ? json(report.weil_floor) : json(nullptr);
  j["admissible_count"] = report.admissible_count;
  j["alpha"] = report.alpha ? json(format_element(*report.alpha)) : json(nullptr);
  return j;
}

}  // namespace dynirr
