#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mwi/check.hpp"
#include "mwi/dot.hpp"
#include "mwi/enumerate.hpp"
#include "mwi/index.hpp"
#include "mwi/oracle.hpp"
#include "mwi/serialize.hpp"

namespace {

using namespace mwi;

// Exit codes: 1 unreadable/empty input, 2 reserved byte, 3 write failure,
// 4 usage, 5 invariant/check failure.
enum ExitCode { kOk = 0, kBadInput = 1, kReservedByte = 2, kWriteFailure = 3, kUsage = 4, kInvariant = 5 };

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    if (std::cin.bad()) throw std::runtime_error("cannot read standard input");
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read: " + path);
    ss << f.rdbuf();
    if (f.bad()) throw std::runtime_error("cannot read: " + path);
  }
  return ss.str();
}

// An index image starts with the magic; anything else is treated as text.
bool looks_like_index(const std::string& bytes) {
  return bytes.size() >= 4 && bytes.compare(0, 4, "CDWG") == 0;
}

Index load_index_or_text(const std::string& path, SentinelMode mode, bool force_text) {
  std::string bytes = read_input(path);
  if (!force_text && looks_like_index(bytes)) {
    std::istringstream in(bytes);
    return load_index(in);
  }
  return build_index(bytes, BuildOptions{mode, Orientation::kAuto, true, 512});
}

std::string render_word(const std::string& w, bool pretty) {
  std::string out;
  for (char c : w) {
    uint8_t b = static_cast<uint8_t>(c);
    if (pretty && b == kSentinelStart) out += "\xe2\x99\xaf";  // U+266F
    else if (pretty && b == kSentinelEnd) out += "$";
    else out += escape_bytes(std::string(1, c));
  }
  return out;
}

int cmd_index(const std::string& in, const std::string& out, const std::string& sentinels,
              const std::string& orientation, bool no_text, bool quiet) {
  std::string raw;
  try {
    raw = read_input(in);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  BuildOptions opts;
  opts.mode = parse_sentinel_mode(sentinels);
  opts.orientation = orientation == "forward"    ? Orientation::kForward
                     : orientation == "reversed" ? Orientation::kReversed
                                                 : Orientation::kAuto;
  opts.retain_text = !no_text;
  Index ix;
  try {
    ix = build_index(raw, opts);
  } catch (const ReservedByteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kReservedByte;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  try {
    save_index_file(ix, out);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kWriteFailure;
  }
  if (!quiet) {
    const IndexStats& st = ix.stats;
    printf("n=%lld sigma=%d e_R=%lld e_L=%lld e_min=%lld nodes=%lld orientation=%s "
           "sentinels=%s maw_m_star=%lld ebf_m_star=%lld\n",
           static_cast<long long>(st.n), st.sigma, static_cast<long long>(st.e_R),
           static_cast<long long>(st.e_L), static_cast<long long>(st.e_min),
           static_cast<long long>(st.node_count), st.reversed ? "reversed" : "forward",
           sentinel_mode_name(ix.mode), static_cast<long long>(ix.stored_maws.m_star),
           static_cast<long long>(ix.stored_ebfs.m_star));
  }
  return kOk;
}

int cmd_enumerate(const std::string& path, const std::string& set, int64_t kfilter,
                  int64_t min_len, int64_t max_len, const std::string& format, int64_t limit,
                  bool pretty, bool force_traversal) {
  Index ix;
  try {
    ix = load_index_file(path);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  bool bounded = min_len > 0 || max_len > 0;
  if (bounded && set != "maw" && set != "ebf") {
    std::cerr << "error: --min-len/--max-len apply to --set maw and --set ebf only\n";
    return kUsage;
  }

  bool counting = format == "count";
  bool tsv = format == "tsv";
  int64_t printed = 0;
  std::string line;
  EmitFn emit = [&](const WordHandle& h) -> bool {
    if (kfilter >= 0 && h.k != kfilter) return true;
    ++printed;
    if (!counting) {
      std::string w = render_word(materialize(ix, h), pretty);
      if (tsv) {
        line = w;
        char buf[128];
        snprintf(buf, sizeof(buf), "\t%lld\t%s\t%lld\t", static_cast<long long>(h.len),
                 word_kind_name(h.kind), static_cast<long long>(h.k));
        line += buf;
        line += render_word(std::string(1, static_cast<char>(h.a)), pretty);
        snprintf(buf, sizeof(buf), "\t%d\t", h.u_node);
        line += buf;
        line += render_word(std::string(1, static_cast<char>(h.b)), pretty);
        if (h.kind == WordKind::kMus) {
          snprintf(buf, sizeof(buf), "\t%lld\t%lld", static_cast<long long>(h.begin),
                   static_cast<long long>(h.end));
          line += buf;
        }
        line += '\n';
        fwrite(line.data(), 1, line.size(), stdout);
      } else {
        w += '\n';
        fwrite(w.data(), 1, w.size(), stdout);
      }
    }
    return limit <= 0 || printed < limit;
  };

  if (set == "maw" || set == "ebf") {
    auto bounded_fn = set == "maw" ? maws_length_bounded : ebfs_length_bounded;
    auto full_fn = set == "maw" ? enumerate_maws : enumerate_ebfs;
    if (min_len > 0) bounded_fn(ix, min_len, Bound::kAtLeast, emit, nullptr, force_traversal);
    else if (max_len > 0) bounded_fn(ix, max_len, Bound::kAtMost, emit, nullptr, force_traversal);
    else full_fn(ix, emit, nullptr);
  } else if (set == "mrw") {
    enumerate_occurring_mrws(ix, emit);
  } else {
    enumerate_mus(ix, emit);
  }
  if (counting) printf("%lld\n", static_cast<long long>(printed));
  return kOk;
}

int cmd_check(const std::string& path, const std::string& sentinels, bool force_text,
              int64_t cap, bool mutate) {
  Index ix;
  try {
    ix = load_index_or_text(path, parse_sentinel_mode(sentinels), force_text);
  } catch (const ReservedByteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kReservedByte;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  if (mutate) {
    if (ix.cdawg.nodes.size() > 1) ix.cdawg.nodes[1].wchar ^= 1;
    else ix.cdawg.nodes[0].occ ^= 1;
  }
  CheckReport rep = check_index(ix, cap);
  for (const auto& f : rep.failures) printf("FAIL %s\n", f.c_str());
  if (!rep.ok()) {
    printf("FAIL %lld of %lld checks\n", static_cast<long long>(rep.failures.size()),
           static_cast<long long>(rep.checks));
    return kInvariant;
  }
  printf("OK %lld checks\n", static_cast<long long>(rep.checks));
  return kOk;
}

int cmd_dot(const std::string& path, const std::string& graph, const std::string& out,
            const std::string& sentinels, bool force_text) {
  Index ix;
  try {
    ix = load_index_or_text(path, parse_sentinel_mode(sentinels), force_text);
  } catch (const ReservedByteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kReservedByte;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  std::string dot = graph == "lpt" ? lpt_dot(ix) : cdawg_dot(ix);
  if (out == "-") {
    fwrite(dot.data(), 1, dot.size(), stdout);
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  f.write(dot.data(), static_cast<std::streamsize>(dot.size()));
  f.flush();
  if (!f) {
    std::cerr << "error: cannot write: " << out << "\n";
    return kWriteFailure;
  }
  return kOk;
}

int cmd_bench(const std::string& family, const std::string& sizes_csv, int sigma_opt,
              uint64_t seed, int kmin, int kmax, const std::string& sentinels,
              const std::string& out_path) {
  std::vector<std::pair<std::string, std::string>> inputs;  // label, payload
  if (family == "random") {
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      long long n = std::atoll(tok.c_str());
      if (n <= 0) {
        std::cerr << "error: bad size '" << tok << "'\n";
        return kUsage;
      }
      std::mt19937_64 rng(seed ^ static_cast<uint64_t>(n) * 0x9e3779b97f4a7c15ull);
      std::uniform_int_distribution<int> pick(0, sigma_opt - 1);
      std::string s(static_cast<size_t>(n), 'a');
      for (auto& c : s) c = static_cast<char>('a' + pick(rng));
      inputs.emplace_back("n=" + std::to_string(n), std::move(s));
    }
  } else if (family == "fib") {
    for (int k = kmin; k <= kmax; ++k)
      inputs.emplace_back("F_" + std::to_string(k), fibonacci_word(k));
  } else {
    for (int k = kmin; k <= kmax; ++k)
      inputs.emplace_back("k=" + std::to_string(k), de_bruijn(sigma_opt, k));
  }

  std::ostringstream csv;
  csv << "family,label,n,sigma,e_R,e_L,e_min,V,maw,ebf,mrw1,wall_ms,maw_ratio\n";
  SentinelMode mode = parse_sentinel_mode(sentinels);
  for (auto& [label, payload] : inputs) {
    auto t0 = std::chrono::steady_clock::now();
    BuildOptions opts;
    opts.mode = mode;
    opts.retain_text = false;
    Index ix = build_index(payload, opts);
    auto keep = [](const WordHandle&) { return true; };
    int64_t maw = enumerate_maws(ix, keep);
    int64_t ebf = enumerate_ebfs(ix, keep);
    int64_t mrw1 = enumerate_occurring_mrws(ix, keep);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const IndexStats& st = ix.stats;
    if (st.e_min >= 2 * st.n) {
      std::cerr << "error: edge bound violated on " << label << "\n";
      return kInvariant;
    }
    char row[256];
    snprintf(row, sizeof(row), "%s,%s,%lld,%d,%lld,%lld,%lld,%lld,%lld,%lld,%lld,%.3f,%.4f\n",
             family.c_str(), label.c_str(), static_cast<long long>(st.n), st.sigma,
             static_cast<long long>(st.e_R), static_cast<long long>(st.e_L),
             static_cast<long long>(st.e_min), static_cast<long long>(st.node_count),
             static_cast<long long>(maw), static_cast<long long>(ebf),
             static_cast<long long>(mrw1), ms,
             static_cast<double>(maw) / (static_cast<double>(st.sigma) * static_cast<double>(st.e_min)));
    csv << row;
  }
  if (out_path == "-") {
    std::string s = csv.str();
    fwrite(s.data(), 1, s.size(), stdout);
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  std::string s = csv.str();
  f.write(s.data(), static_cast<std::streamsize>(s.size()));
  f.flush();
  if (!f) {
    std::cerr << "error: cannot write: " << out_path << "\n";
    return kWriteFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal-words index: build, query and inspect CDAWG-based word-set indexes"};
  app.require_subcommand(1);

  const std::vector<std::string> kModes = {"none", "end", "both"};

  auto* sub_index = app.add_subcommand("index", "build an index file from text");
  std::string in_path, out_path, sentinels = "none", orientation = "auto";
  bool no_text = false, quiet = false;
  sub_index->add_option("input", in_path, "input file, or - for stdin")->required();
  sub_index->add_option("--out", out_path, "output index file")->required();
  sub_index->add_option("--sentinels", sentinels)->check(CLI::IsMember(kModes));
  sub_index->add_option("--orientation", orientation)
      ->check(CLI::IsMember({"auto", "forward", "reversed"}));
  sub_index->add_flag("--no-text", no_text, "do not embed the build text");
  sub_index->add_flag("--quiet", quiet, "suppress the stats line");

  auto* sub_enum = app.add_subcommand("enumerate", "stream a word set from an index file");
  std::string enum_path, set = "maw", format = "plain";
  int64_t kfilter = -1, min_len = 0, max_len = 0, limit = 0;
  bool pretty = false, force_traversal = false;
  sub_enum->add_option("index", enum_path, "index file")->required();
  sub_enum->add_option("--set", set)->check(CLI::IsMember({"maw", "ebf", "mrw", "mus"}));
  sub_enum->add_option("--k", kfilter, "keep only words occurring exactly K times");
  auto* omin = sub_enum->add_option("--min-len", min_len, "words of length >= L")
                   ->check(CLI::PositiveNumber);
  sub_enum->add_option("--max-len", max_len, "words of length <= L, shortest first")
      ->check(CLI::PositiveNumber)
      ->excludes(omin);
  sub_enum->add_option("--format", format)->check(CLI::IsMember({"plain", "tsv", "count"}));
  sub_enum->add_option("--limit", limit, "stop after N words");
  sub_enum->add_flag("--pretty", pretty, "render sentinels as \xe2\x99\xaf and $");
  sub_enum->add_flag("--force-traversal", force_traversal,
                     "bypass the stored-set replay for --max-len");

  auto* sub_check = app.add_subcommand("check", "verify an index file or a text end to end");
  std::string check_path, check_sentinels = "none";
  bool check_text = false, mutate = false;
  int64_t cap = 0;
  sub_check->add_option("input", check_path, "index file or text file")->required();
  sub_check->add_option("--sentinels", check_sentinels)->check(CLI::IsMember(kModes));
  sub_check->add_flag("--text", check_text, "treat the input as text even if it looks like an index");
  sub_check->add_option("--oracle-cap", cap, "max text length for oracle comparison");
  sub_check->add_flag("--mutate", mutate, "flip one stored byte first; the check must fail");

  auto* sub_bench = app.add_subcommand("bench", "index generated families and emit CSV");
  std::string family = "random", sizes = "1000,10000,100000", bench_out = "-",
              bench_sentinels = "none";
  int bench_sigma = 4, kmin = 10, kmax = 25;
  uint64_t seed = 42;
  sub_bench->add_option("--family", family)->check(CLI::IsMember({"random", "fib", "debruijn"}));
  sub_bench->add_option("--sizes", sizes, "comma-separated lengths (random family)");
  sub_bench->add_option("--sigma", bench_sigma)->check(CLI::Range(1, 26));
  sub_bench->add_option("--seed", seed);
  sub_bench->add_option("--kmin", kmin, "first index/order (fib, debruijn)");
  sub_bench->add_option("--kmax", kmax, "last index/order (fib, debruijn)");
  sub_bench->add_option("--sentinels", bench_sentinels)->check(CLI::IsMember(kModes));
  sub_bench->add_option("--out", bench_out, "CSV path, - for stdout");

  auto* sub_dot = app.add_subcommand("dot", "render the automaton or the tree as DOT");
  std::string dot_path, graph = "cdawg", dot_out = "-", dot_sentinels = "none";
  bool dot_text = false;
  sub_dot->add_option("input", dot_path, "index file or text file")->required();
  sub_dot->add_option("--graph", graph)->check(CLI::IsMember({"cdawg", "lpt"}));
  sub_dot->add_option("--out", dot_out, "output path, - for stdout");
  sub_dot->add_option("--sentinels", dot_sentinels)->check(CLI::IsMember(kModes));
  sub_dot->add_flag("--text", dot_text, "treat the input as text even if it looks like an index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*sub_index)
      return cmd_index(in_path, out_path, sentinels, orientation, no_text, quiet);
    if (*sub_enum)
      return cmd_enumerate(enum_path, set, kfilter, min_len, max_len, format, limit, pretty,
                           force_traversal);
    if (*sub_check) return cmd_check(check_path, check_sentinels, check_text, cap, mutate);
    if (*sub_bench) {
      if (family == "debruijn") {  // keep sigma^k generatable out of the box
        if (!sub_bench->count("--kmin")) kmin = 3;
        if (!sub_bench->count("--kmax")) kmax = 10;
      }
      return cmd_bench(family, sizes, bench_sigma, seed, kmin, kmax, bench_sentinels, bench_out);
    }
    if (*sub_dot) return cmd_dot(dot_path, graph, dot_out, dot_sentinels, dot_text);
  } catch (const mwi::ReservedByteError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kReservedByte;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kUsage;
}
