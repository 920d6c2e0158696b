#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "fvlab/caps.hpp"
#include "fvlab/complex.hpp"
#include "fvlab/poset.hpp"

namespace fvlab {

struct GorensteinCheck {
    bool ok = false;
    // First face (in order of size, then lexicographic) whose link is not a sphere of the right dimension.
    std::optional<Face> failing_face;

    explicit operator bool() const { return ok; }
};

/// Every link in the order complex of the proper part, the whole complex
/// included, is a rational homology sphere of dimension dim - |F|.
///
/// Throws CapExceeded above caps.max_gorenstein_rank or caps.max_gorenstein_proper.
GorensteinCheck is_gorenstein_star(const GradedPoset& p, const Caps& caps = {},
                                   HomologyField field = HomologyField::Rational);

struct FlagDecision {
    enum class Verdict { Realizable, NotRealizable, CapExceeded };
    Verdict verdict = Verdict::NotRealizable;
    std::optional<GradedPoset> witness;
    std::uint64_t nodes = 0;       // partial assignments visited
    std::uint64_t candidates = 0;  // complete posets whose flag vector matched
};

/// Exhaustive search for a Gorenstein* poset with flag vector v.
///
/// Posets are built level by level from the rank sizes f_{i}. Each element
/// of rank r + 1 picks a nonempty set of lower covers at rank r, encoded as a
/// bitmask; masks are nondecreasing within a level, which keeps one
/// representative of every isomorphism class. Partial flag numbers f_S with
/// max S <= r prune after each level. The search order is levels bottom-up,
/// masks in increasing numeric order, so the first witness is deterministic.
FlagDecision decide_flag_gorenstein(const FlagVector& v, const Caps& caps = {});

}  // namespace fvlab
