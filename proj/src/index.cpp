#include "mwi/index.hpp"

#include <algorithm>

#include "mwi/enumerate.hpp"

namespace mwi {

Index build_index(const std::string& raw, const BuildOptions& opts) {
  Index ix;
  ix.mode = opts.mode;
  std::string built = wrap_text(raw, opts.mode);
  ix.stats = compute_stats(built);
  switch (opts.orientation) {
    case Orientation::kAuto:
      break;
    case Orientation::kForward:
      ix.stats.reversed = false;
      break;
    case Orientation::kReversed:
      ix.stats.reversed = true;
      break;
  }
  if (ix.stats.reversed) std::reverse(built.begin(), built.end());

  ix.cdawg = build_cdawg(built);
  ix.grammar = build_grammar(ix.cdawg, &built);
  ix.lpt = build_lpt_plus(ix.cdawg);
  compute_fast_links(ix.lpt, ix.cdawg, &built,
                     static_cast<int64_t>(built.size()) <= opts.verify_limit);
  ix.every_visit_emits = unique_last_byte(built);
  precompute_stored_sets(ix);
  if (opts.retain_text) ix.text = std::move(built);
  return ix;
}

}  // namespace mwi
