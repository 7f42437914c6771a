#include "mwi/serialize.hpp"

#include <cassert>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mwi/enumerate.hpp"

namespace mwi {
namespace {

constexpr char kMagic[4] = {'C', 'D', 'W', 'G'};
constexpr uint32_t kVersion = 1;
constexpr uint8_t kIntWidth = 8;
constexpr uint8_t kFlagReversed = 1u << 0;
constexpr uint8_t kFlagHasText = 1u << 1;

void put_u8(std::string& out, uint8_t v) { out.push_back(static_cast<char>(v)); }

void put_u32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_i64(std::string& out, int64_t v) { put_u64(out, static_cast<uint64_t>(v)); }

void put_section(std::ostream& o, const char tag[4], const std::string& payload) {
  o.write(tag, 4);
  std::string len;
  put_u64(len, payload.size());
  o.write(len.data(), static_cast<std::streamsize>(len.size()));
  o.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

struct Reader {
  std::istream& in;

  void bytes(void* p, size_t n) {
    in.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in.gcount()) != n)
      throw std::runtime_error("index file: truncated");
  }
  uint8_t u8() {
    uint8_t v;
    bytes(&v, 1);
    return v;
  }
  uint32_t u32() {
    uint8_t b[4];
    bytes(b, 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
  }
  uint64_t u64() {
    uint8_t b[8];
    bytes(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
  }
  int64_t i64() { return static_cast<int64_t>(u64()); }
};

struct StringReader {
  const std::string& s;
  size_t pos = 0;

  void need(size_t n) {
    if (pos + n > s.size()) throw std::runtime_error("index file: section truncated");
  }
  uint8_t u8() {
    need(1);
    return static_cast<uint8_t>(s[pos++]);
  }
  uint64_t u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<uint8_t>(s[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  int64_t i64() { return static_cast<int64_t>(u64()); }
  void done() const {
    if (pos != s.size()) throw std::runtime_error("index file: trailing bytes in section");
  }
};

}  // namespace

void save_index(const Index& ix, std::ostream& out) {
  out.write(kMagic, 4);
  std::string head;
  put_u32(head, kVersion);
  put_u8(head, kIntWidth);
  uint8_t flags = 0;
  if (ix.stats.reversed) flags |= kFlagReversed;
  if (!ix.text.empty()) flags |= kFlagHasText;
  put_u8(head, flags);
  put_u8(head, static_cast<uint8_t>(ix.mode));
  put_u64(head, static_cast<uint64_t>(ix.stats.n));
  put_u64(head, static_cast<uint64_t>(ix.stats.sigma));
  put_u64(head, static_cast<uint64_t>(ix.stats.e_R));
  put_u64(head, static_cast<uint64_t>(ix.stats.e_L));
  put_u64(head, static_cast<uint64_t>(ix.stats.e_min));
  put_u64(head, static_cast<uint64_t>(ix.stats.node_count));
  out.write(head.data(), static_cast<std::streamsize>(head.size()));

  std::string nodes;
  put_u64(nodes, ix.cdawg.nodes.size());
  for (const auto& nd : ix.cdawg.nodes) {
    put_u64(nodes, static_cast<uint64_t>(nd.max_len));
    put_u64(nodes, static_cast<uint64_t>(nd.min_len));
    put_i64(nodes, nd.slink);
    put_i64(nodes, nd.end_pos);
    put_u64(nodes, static_cast<uint64_t>(nd.occ));
    put_u64(nodes, static_cast<uint64_t>(nd.left_cnt));
    put_u8(nodes, nd.wchar);
    put_u8(nodes, nd.is_final ? 1 : 0);
  }
  put_section(out, "NODE", nodes);

  std::string edges;
  put_u64(edges, ix.cdawg.edges.size());
  for (const auto& e : ix.cdawg.edges) {
    put_u64(edges, static_cast<uint64_t>(e.src));
    put_u64(edges, static_cast<uint64_t>(e.dst));
    put_u64(edges, static_cast<uint64_t>(e.label_len));
    put_i64(edges, e.label_end);
    put_u8(edges, e.first_char);
    put_u8(edges, e.primary ? 1 : 0);
  }
  put_section(out, "EDGE", edges);

  if (!ix.text.empty()) put_section(out, "TEXT", ix.text);
  if (!out) throw std::runtime_error("index file: write failed");
}

Index load_index(std::istream& in) {
  Reader r{in};
  char magic[4];
  r.bytes(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("index file: bad magic");
  uint32_t version = r.u32();
  if (version != kVersion)
    throw std::runtime_error("index file: unsupported version " + std::to_string(version));
  if (r.u8() != kIntWidth) throw std::runtime_error("index file: unsupported integer width");
  uint8_t flags = r.u8();
  if (flags & ~(kFlagReversed | kFlagHasText))
    throw std::runtime_error("index file: unknown flags");
  uint8_t mode = r.u8();
  if (mode > 2) throw std::runtime_error("index file: bad sentinel mode");

  Index ix;
  ix.mode = static_cast<SentinelMode>(mode);
  ix.stats.reversed = (flags & kFlagReversed) != 0;
  ix.stats.n = r.i64();
  ix.stats.sigma = static_cast<int32_t>(r.u64());
  ix.stats.e_R = r.i64();
  ix.stats.e_L = r.i64();
  ix.stats.e_min = r.i64();
  ix.stats.node_count = r.i64();

  bool saw_node = false, saw_edge = false, saw_text = false;
  for (;;) {
    char tag[4];
    in.read(tag, 4);
    if (in.gcount() == 0 && in.eof()) break;
    if (in.gcount() != 4) throw std::runtime_error("index file: truncated");
    uint64_t len = r.u64();
    std::string payload(len, '\0');
    if (len) r.bytes(payload.data(), len);

    if (std::memcmp(tag, "NODE", 4) == 0) {
      if (saw_node) throw std::runtime_error("index file: duplicate NODE section");
      saw_node = true;
      StringReader s{payload};
      uint64_t count = s.u64();
      ix.cdawg.nodes.resize(count);
      for (auto& nd : ix.cdawg.nodes) {
        nd.max_len = s.i64();
        nd.min_len = s.i64();
        nd.slink = static_cast<int32_t>(s.i64());
        nd.end_pos = s.i64();
        nd.occ = s.i64();
        nd.left_cnt = static_cast<int32_t>(s.i64());
        nd.wchar = s.u8();
        nd.is_final = s.u8() != 0;
      }
      s.done();
    } else if (std::memcmp(tag, "EDGE", 4) == 0) {
      if (saw_edge) throw std::runtime_error("index file: duplicate EDGE section");
      saw_edge = true;
      StringReader s{payload};
      uint64_t count = s.u64();
      ix.cdawg.edges.resize(count);
      for (auto& e : ix.cdawg.edges) {
        e.src = static_cast<int32_t>(s.i64());
        e.dst = static_cast<int32_t>(s.i64());
        e.label_len = s.i64();
        e.label_end = s.i64();
        e.first_char = s.u8();
        e.primary = s.u8() != 0;
      }
      s.done();
    } else if (std::memcmp(tag, "TEXT", 4) == 0) {
      if (saw_text) throw std::runtime_error("index file: duplicate TEXT section");
      saw_text = true;
      ix.text = std::move(payload);
    } else {
      throw std::runtime_error("index file: unknown section");
    }
  }
  if (!saw_node || !saw_edge) throw std::runtime_error("index file: missing section");
  if (((flags & kFlagHasText) != 0) != saw_text)
    throw std::runtime_error("index file: text flag disagrees with sections");
  if (ix.cdawg.nodes.empty()) throw std::runtime_error("index file: no nodes");
  if (static_cast<int64_t>(ix.cdawg.nodes.size()) != ix.stats.node_count)
    throw std::runtime_error("index file: node count disagrees with stats");
  int64_t e_built = ix.stats.reversed ? ix.stats.e_L : ix.stats.e_R;
  if (static_cast<int64_t>(ix.cdawg.edges.size()) != e_built)
    throw std::runtime_error("index file: edge count disagrees with stats");

  ix.cdawg.n = ix.stats.n;
  if (saw_text && static_cast<int64_t>(ix.text.size()) != ix.stats.n)
    throw std::runtime_error("index file: text length disagrees with stats");

  // Edge spans: edges are stored node-major, sorted by first char within a
  // node, exactly as built.
  {
    int32_t node_count = static_cast<int32_t>(ix.cdawg.nodes.size());
    int32_t prev_src = 0;
    for (auto& nd : ix.cdawg.nodes) nd.edge_begin = nd.edge_end = 0;
    for (size_t i = 0; i < ix.cdawg.edges.size(); ++i) {
      const auto& e = ix.cdawg.edges[i];
      if (e.src < 0 || e.src >= node_count || e.dst <= e.src || e.dst >= node_count)
        throw std::runtime_error("index file: edge endpoints out of range");
      if (e.src < prev_src) throw std::runtime_error("index file: edges not node-major");
      if (i > 0 && e.src == ix.cdawg.edges[i - 1].src &&
          e.first_char <= ix.cdawg.edges[i - 1].first_char)
        throw std::runtime_error("index file: edge labels not strictly sorted");
      prev_src = e.src;
      ++ix.cdawg.nodes[e.src].edge_end;
    }
    int32_t at = 0;
    for (auto& nd : ix.cdawg.nodes) {
      nd.edge_begin = at;
      at += nd.edge_end;
      nd.edge_end = at;
    }
  }

  ix.grammar = build_grammar(ix.cdawg, ix.text.empty() ? nullptr : &ix.text);
  ix.lpt = build_lpt_plus(ix.cdawg);
  compute_fast_links(ix.lpt, ix.cdawg, ix.text.empty() ? nullptr : &ix.text, false);
  ix.every_visit_emits = ix.cdawg.nodes[ix.cdawg.sink()].min_len == 1;
  if (!ix.text.empty()) assert(ix.every_visit_emits == unique_last_byte(ix.text));
  precompute_stored_sets(ix);
  return ix;
}

void save_index_file(const Index& ix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_index(ix, out);
  out.flush();
  if (!out) throw std::runtime_error("index file: write failed");
}

Index load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_index(in);
}

}  // namespace mwi
