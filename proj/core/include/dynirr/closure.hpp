#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dynirr/field.hpp"
#include "dynirr/quad_poly.hpp"

namespace dynirr {

/// A candidate set f_1, ..., f_r over one field. Construction drops repeated
/// polynomials (keeping first occurrences) and records what was dropped.
struct DISetInstance {
  std::shared_ptr<const FieldCtx> ctx;
  std::vector<MonicQuad> polys;
  std::vector<MonicQuad> dropped_duplicates;

  /// Throws MixedFields if any coefficient is not an element of ctx.
  static DISetInstance make(std::shared_ptr<const FieldCtx> ctx, std::vector<MonicQuad> polys);
  static DISetInstance make(const FieldCtx& ctx, std::vector<MonicQuad> polys) {
    return make(std::make_shared<const FieldCtx>(ctx), std::move(polys));
  }

  std::size_t size() const noexcept { return polys.size(); }
};

enum class Verdict { DynamicallyIrreducible, NotDI };
enum class WitnessReason { ReducibleGenerator, SquareIterate };

struct Witness {
  WitnessReason reason;
  /// ReducibleGenerator: the offending polynomial. SquareIterate: the index j
  /// of the starting value c_j.
  std::size_t index = 0;
  /// Polynomial indices, outermost first; empty for ReducibleGenerator.
  std::vector<std::size_t> chain;
  /// chain applied to c_j; a square (possibly 0).
  FieldElem value;

  /// Length of the composition this witness certifies reducible:
  /// chain ∘ f_j for SquareIterate, the generator alone otherwise.
  std::size_t composition_length() const noexcept {
    return reason == WitnessReason::ReducibleGenerator ? 1 : chain.size() + 1;
  }
  /// The certified-reducible composition as polynomial indices, outermost first.
  std::vector<std::size_t> reducible_composition() const;
};

struct ClosureStats {
  std::uint64_t sq_tests = 0;
  std::uint64_t insertions = 0;
  std::uint64_t rounds = 0;
  /// q^{3/4}, the known repetition scale for a single polynomial's orbit.
  /// Reported by single_test only.
  std::optional<double> repetition_scale;
};

struct ClosureReport {
  Verdict verdict = Verdict::NotDI;
  /// Every value reached, including the c_j, strictly increasing.
  std::vector<FieldElem> iterate_set;
  std::optional<Witness> witness;
  ClosureStats stats;

  bool is_di() const noexcept { return verdict == Verdict::DynamicallyIrreducible; }
};

struct ClosureOptions {
  /// Precomputed bound_B(q); computed on demand when absent.
  std::optional<BigInt> bound;
};

/// Decides dynamical irreducibility by growing the ordered set of iterate
/// values level by level, stopping at the first value that is not a strict
/// non-square. The ordered set is a std::map, a red-black tree in every
/// mainstream standard library.
ClosureReport closure_test(const FieldCtx& ctx, std::span<const MonicQuad> polys,
                           const ClosureOptions& options = {});
ClosureReport closure_test(const DISetInstance& inst, const ClosureOptions& options = {});

/// r = 1 criterion: f irreducible and every f^{(n)}(c), n >= 1, a non-square.
ClosureReport single_test(const FieldCtx& ctx, const MonicQuad& f);

/// Replays a SquareIterate witness: chain applied to c_j.
FieldElem replay_witness(const FieldCtx& ctx, std::span<const MonicQuad> polys,
                         const Witness& witness);

struct GammaReport {
  FieldElem u;
  std::size_t r = 0;
  std::size_t image_size = 0;
  std::size_t max_fiber = 0;
};

/// Fibres of f_i -> f_i(u) for a set sharing the value c_i = u.
/// Throws CommonCViolated if the c-values differ, PreconditionFailed on
/// repeated polynomials.
GammaReport gamma_two_to_one(const FieldCtx& ctx, std::span<const MonicQuad> polys);

}  // namespace dynirr
