#include "mwi/dot.hpp"

#include <cstdio>

namespace mwi {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : escape_bytes(s)) {
    if (c == '"') out += "\\\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

std::string edge_text(const Index& ix, const CdawgEdge& e) {
  char head[32];
  if (!ix.text.empty()) {
    size_t from = static_cast<size_t>(e.label_end - e.label_len + 1);
    if (e.label_len <= 12) return ix.text.substr(from, static_cast<size_t>(e.label_len));
    snprintf(head, sizeof(head), "\xe2\x80\xa6(%lld)", static_cast<long long>(e.label_len));
    return ix.text.substr(from, 8) + head;
  }
  std::string s(1, static_cast<char>(e.first_char));
  if (e.label_len > 1) {
    snprintf(head, sizeof(head), "\xe2\x80\xa6(%lld)", static_cast<long long>(e.label_len));
    s += head;
  }
  return s;
}

}  // namespace

std::string cdawg_dot(const Index& ix) {
  const Cdawg& c = ix.cdawg;
  std::string out = "digraph cdawg {\n  rankdir=LR;\n  node [shape=circle];\n";
  char buf[160];
  for (size_t v = 0; v < c.nodes.size(); ++v) {
    const auto& nd = c.nodes[v];
    std::string name;
    if (!ix.text.empty() && nd.max_len > 0 && nd.max_len <= 12) {
      name = "\\n";
      for (char ch : escape_bytes(ix.text.substr(static_cast<size_t>(nd.end_pos - nd.max_len + 1),
                                                 static_cast<size_t>(nd.max_len)))) {
        if (ch == '"') name += "\\\"";
        else name.push_back(ch);
      }
    }
    snprintf(buf, sizeof(buf), "  n%zu [label=\"%zu%s\\n[%lld..%lld] occ=%lld\"%s];\n", v, v,
             name.c_str(), static_cast<long long>(nd.min_len), static_cast<long long>(nd.max_len),
             static_cast<long long>(nd.occ), nd.is_final ? " peripheries=2" : "");
    out += buf;
  }
  for (const auto& e : c.edges) {
    snprintf(buf, sizeof(buf), "  n%d -> n%d [label=%s%s];\n", e.src, e.dst,
             quote(edge_text(ix, e)).c_str(), e.primary ? "" : " style=solid color=gray40");
    out += buf;
  }
  for (size_t v = 1; v < c.nodes.size(); ++v) {
    snprintf(buf, sizeof(buf), "  n%zu -> n%d [style=dashed color=gray60 constraint=false];\n",
             v, c.nodes[v].slink);
    out += buf;
  }
  out += "}\n";
  return out;
}

std::string lpt_dot(const Index& ix) {
  const LptPlus& t = ix.lpt;
  std::string out = "digraph lpt {\n  node [shape=box];\n";
  char buf[200];
  for (size_t x = 0; x < t.nodes.size(); ++x) {
    const auto& nd = t.nodes[x];
    snprintf(buf, sizeof(buf), "  t%zu [label=\"%zu\\nlen=%lld\"%s];\n", x, x,
             static_cast<long long>(nd.str_len),
             nd.gray ? " style=filled fillcolor=gray85" : "");
    out += buf;
  }
  for (size_t x = 0; x < t.nodes.size(); ++x) {
    const auto& nd = t.nodes[x];
    if (nd.parent < 0) continue;
    std::string lab(1, static_cast<char>(nd.pedge_first));
    if (nd.pedge_len > 1) {
      snprintf(buf, sizeof(buf), "\xe2\x80\xa6(%lld)", static_cast<long long>(nd.pedge_len));
      lab += buf;
    }
    snprintf(buf, sizeof(buf), "  t%d -> t%zu [label=%s];\n", nd.parent, x, quote(lab).c_str());
    out += buf;
    if (nd.top >= 0) {
      snprintf(buf, sizeof(buf), "  t%zu -> t%d [style=dotted penwidth=2 constraint=false];\n",
               x, nd.top);
      out += buf;
    }
  }
  for (size_t x = 0; x < t.nodes.size(); ++x) {
    if (t.nodes[x].slink < 0) continue;
    snprintf(buf, sizeof(buf), "  t%zu -> t%d [style=dashed color=gray60 constraint=false];\n",
             x, t.nodes[x].slink);
    out += buf;
  }
  out += "}\n";
  return out;
}

}  // namespace mwi
