#pragma once

#include <vector>

#include "placid/term.hpp"

namespace placid {

/// True iff both sides have the same length and the same count of every
/// variable. A monoid containing a free monogenic submonoid can only satisfy
/// balanced identities.
bool is_balanced(const Identity& id);

/// Least identity in the orbit of `id` under variable renaming and side
/// swapping; two identities are equivalent iff their canonical forms agree.
Identity canonical_identity(const Identity& id);

bool equivalent_identities(const Identity& a, const Identity& b);

/// All non-trivial balanced two-variable identities of the given length, one
/// canonical representative per equivalence class, in increasing order.
std::vector<Identity> enumerate_candidates(std::size_t length);

/// xyyxxyxyyx = xyyxyxxyyx
Identity adian_identity();

/// pqppq = pqqpq with p, q the two sides of the Adian identity (50 letters
/// per side).
Identity plac3_pq_identity();

/// (xy)^{n+1} = (xy)^n yx
Identity rps_rank_identity(int n);

}  // namespace placid
