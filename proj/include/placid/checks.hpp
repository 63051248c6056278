#pragma once

#include <string_view>
#include <vector>

#include "placid/search.hpp"

namespace placid {

/// Searches (a, u, v) with a in {1..rank} and bounded u, v for
/// a.u == a.v in m while u != v in m.
Verdict check_left_cancellative(MonoidId m, const SearchBounds& b, int jobs = 0);
/// Mirror image: u.a == v.a while u != v.
Verdict check_right_cancellative(MonoidId m, const SearchBounds& b, int jobs = 0);

enum class SameEvalSide { left, right, both };

SameEvalSide default_sameeval_side(MonoidId m);
std::string_view to_string(SameEvalSide s);
SameEvalSide parse_sameeval_side(std::string_view s);

/// Tests the equal-evaluation product collapse over all bounded tuples of
/// words with pairwise equal evaluations:
///   right: p.r == q.r    left: s.p == s.q    both: s.p.r == s.q.r.
/// Only sylv (right), sylvsharp (left) and baxt (both) are expected to pass.
Verdict check_sameeval(MonoidId m, SameEvalSide side, const SearchBounds& b);

/// Confirms that every balanced identity u.xx = v.yx (for sylv) or
/// xx.u = xy.v (for sylvsharp) with |u|,|v| <= max_prefix_len is refuted by
/// the single substitution x -> 2, y -> 1 (sylv) or x -> 1, y -> 2
/// (sylvsharp). A counterexample here is a candidate the substitution fails
/// to refute.
Verdict check_uxx_vyx_family(MonoidId m, int max_prefix_len);

/// Checks that all products of <= max_blocks generator blocks are pairwise
/// inequivalent in m unless the block sequences are identical.
Verdict check_free_submonoid(MonoidId m, const std::vector<Word>& generators, int max_blocks);

/// check_identity of (xy)^{n+1} = (xy)^n yx on rps; requires b.rank == n.
Verdict check_rps_rank_identity(int n, const SearchBounds& b, int jobs = 0);

enum class AdianVariant { plac2, plac3 };

/// Adian's identity on plac at rank 2 (expected unrefuted) or rank 3
/// (expected refuted). The variant fixes the rank; other bounds from b.
Verdict check_plactic_adian(AdianVariant variant, const SearchBounds& b, int jobs = 0);

/// The 50-letters-per-side identity built from the Adian sides, on plac.
Verdict check_plac3_pq_identity(const SearchBounds& b, int jobs = 0);

/// For every pair of equivalent bounded words and every letter a, left and
/// right multiplication by a preserves equivalence.
Verdict check_congruence_compatibility(MonoidId m, const SearchBounds& b);

/// Equivalent bounded words have equal evaluations.
Verdict check_evaluation_invariance(MonoidId m, const SearchBounds& b);

/// Equivalence in `fine` implies equivalence in `coarse` on bounded words.
Verdict check_refinement(MonoidId fine, MonoidId coarse, const SearchBounds& b);

}  // namespace placid
