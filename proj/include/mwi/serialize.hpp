#pragma once

#include <iosfwd>
#include <string>

#include "mwi/index.hpp"

namespace mwi {

// Binary index image: fixed header (magic, version, flags, sentinel mode,
// stats) followed by length-tagged NODE / EDGE / TEXT sections, all
// little-endian with 8-byte integers. Only the automaton and the optional
// build text are stored; the grammar, tree, fast links and stored word sets
// are rebuilt on load, so saving the same index always yields the same bytes.
void save_index(const Index& ix, std::ostream& out);

// Throws std::runtime_error on malformed input or an unsupported version,
// std::logic_error when the rebuilt layers fail their self-checks.
Index load_index(std::istream& in);

void save_index_file(const Index& ix, const std::string& path);
Index load_index_file(const std::string& path);

}  // namespace mwi
