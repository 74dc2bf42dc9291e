#include "dynirr/charsum.hpp"

#include <cmath>
#include <thread>

#include "dynirr/error.hpp"

namespace dynirr {

namespace {

struct Partial {
  BigInt S;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> first_alpha;
};

Partial scan(const FieldCtx& ctx, std::uint64_t begin, std::uint64_t end) {
  Partial out;
  const std::uint32_t p = ctx.p();
  std::vector<FieldElem> shifts;
  for (std::uint32_t a = 0; a < p; ++a) shifts.push_back(ctx.from_int(a));
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const FieldElem alpha = ctx.from_index(idx);
    BigInt term = 1;
    bool all_nonsquare = true;
    for (const auto& a : shifts) {
      const int c = ctx.chi(ctx.add(a, alpha));
      term *= 1 - c;
      if (c != -1) all_nonsquare = false;
      if (term == 0) break;
    }
    out.S += term;
    if (all_nonsquare) {
      ++out.count;
      if (!out.first_alpha) out.first_alpha = idx;
    }
  }
  return out;
}

}  // namespace

CharsumReport charsum_find_alpha(std::uint32_t p, std::uint32_t e, unsigned jobs) {
  if (e < 1) throw Error(ErrorCode::PreconditionFailed, "e must be at least 1");
  const BigInt qbig = boost::multiprecision::pow(BigInt(p), e);
  if (qbig > kCharsumMaxQ) throw Error(ErrorCode::GuardExceeded, "q exceeds 10^7");

  CharsumReport report;
  report.p = p;
  report.e = e;
  report.ctx = std::make_shared<const FieldCtx>(FieldCtx::with_default_modulus(p, e));
  const FieldCtx& ctx = *report.ctx;
  const std::uint64_t q = ctx.q_u64();

  jobs = std::max(1U, jobs);
  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    parts[0] = scan(ctx, 0, q);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (q + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(q, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(q, begin + chunk);
      workers.emplace_back([&, w, begin, end] { parts[w] = scan(ctx, begin, end); });
    }
    for (auto& t : workers) t.join();
  }
  // Chunks are contiguous in element order, so the first hit wins.
  for (const auto& part : parts) {
    report.S += part.S;
    report.admissible_count += part.count;
    if (!report.alpha && part.first_alpha) report.alpha = ctx.from_index(*part.first_alpha);
  }

  const double qd = static_cast<double>(q);
  report.weil_floor = qd - std::sqrt(qd) * p * (std::pow(2.0, p) - 1.0);

  // S >= q - K sqrt(q) with K = p (2^p - 1), checked in exact arithmetic.
  const BigInt K = BigInt(p) * ((BigInt(1) << p) - 1);
  const BigInt deficit = BigInt(q) - report.S;
  if (deficit > 0 && K * K * q < deficit * deficit) {
    throw Error(ErrorCode::InternalBoundExceeded, "S below the Weil floor");
  }
  return report;
}

}  // namespace dynirr
