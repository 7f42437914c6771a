#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "mwi/index.hpp"
#include "mwi/words.hpp"

namespace mwi {

// Return false to stop the enumeration early.
using EmitFn = std::function<bool(const WordHandle&)>;

enum class Bound { kAtLeast, kAtMost };

// Each enumerator returns the number of words emitted and reports every
// member of its set exactly once. Orientation is transparent: handles carry
// the reversed flag and materialize() undoes it.
int64_t enumerate_maws(const Index& ix, const EmitFn& emit, Counters* ctr = nullptr);
int64_t enumerate_ebfs(const Index& ix, const EmitFn& emit, Counters* ctr = nullptr);
int64_t enumerate_occurring_mrws(const Index& ix, const EmitFn& emit);
int64_t enumerate_mus(const Index& ix, const EmitFn& emit);

// Words of length >= ell (kAtLeast, streamed in traversal order) or
// <= ell (kAtMost, streamed in non-decreasing length order). kAtMost replays
// the stored set when ell <= m_star unless force_traversal is set; both
// paths produce the same stream. ell < 2 throws std::invalid_argument.
int64_t maws_length_bounded(const Index& ix, int64_t ell, Bound dir, const EmitFn& emit,
                            Counters* ctr = nullptr, bool force_traversal = false);
int64_t ebfs_length_bounded(const Index& ix, int64_t ell, Bound dir, const EmitFn& emit,
                            Counters* ctr = nullptr, bool force_traversal = false);

// Spells a·u·b in original orientation; time linear in the length.
std::string materialize(const Index& ix, const WordHandle& h);

// Fills ix.stored_maws / ix.stored_ebfs (full enumeration, kept up to the
// e_min budget). Called at the end of every build.
void precompute_stored_sets(Index& ix);

}  // namespace mwi
