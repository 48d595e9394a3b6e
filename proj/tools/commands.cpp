#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ordsplit/combinatorics.hpp"
#include "ordsplit/constructions.hpp"
#include "ordsplit/embedding.hpp"
#include "ordsplit/exec.hpp"
#include "ordsplit/json_io.hpp"
#include "ordsplit/oracle.hpp"
#include "ordsplit/patterns.hpp"
#include "ordsplit/splitting.hpp"

namespace ordsplit::cli {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  int max_pattern_vertices = 12;
  int oracle_cap = 36;

  // command-specific
  std::string family;
  int n = 0, r = 0, k = 2, ell = 1, n1 = 0, n2 = 0, kk = 1, d = 1;
  std::uint64_t edges = 0;
  double p = -1;
  double alpha = 2;
  std::string script;
  std::string pattern;
  std::string pattern_file;
  std::string tree_file;
  std::string structure_file;
  std::string forbid = "none";
  std::string forbid_file;
};

class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw CommandError(what + ": malformed JSON (" + e.what() + ")");
  }
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Input file, - for stdin");
  sub->add_option("--output", o.output, "Output file, - for stdout");
  sub->add_option("--seed", o.seed, "Seed for every random choice");
  sub->add_option("--threads", o.threads, "Worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-pattern-vertices", o.max_pattern_vertices, "Largest pattern the searches accept")
      ->check(CLI::PositiveNumber);
  sub->add_option("--oracle-cap", o.oracle_cap, "Largest C(n, r) the brute-force oracle accepts")
      ->check(CLI::PositiveNumber);
}

struct Outcome {
  Json result;
  bool found = true;
};

OrderedHypergraph read_host(const Options& o, std::string& digest) {
  const std::string text = slurp(o.input, std::cin);
  digest = fnv1a_hex(text);
  return hypergraph_from_json(parse_json_text(text, "input"));
}

OrderedHypergraph read_hypergraph_file(const std::string& path, const std::string& what) {
  if (path.empty()) throw CommandError(what + " file is required");
  return hypergraph_from_json(parse_json_text(slurp(path, std::cin), what));
}

Json cmd_gen(const Options& o) {
  Json meta;
  meta["family"] = o.family;
  OrderedHypergraph h;
  const std::string& f = o.family;
  if (f == "lemma1") {
    h = lemma1_graph(o.n1, o.n2);
    meta["n1"] = o.n1;
    meta["n2"] = o.n2;
  } else if (f == "c1") {
    h = construction1(o.n, o.r, o.k);
    meta.update({{"n", o.n}, {"r", o.r}, {"k", o.k}});
  } else if (f == "c2") {
    h = construction2(o.n, o.r, o.k);
    meta.update({{"n", o.n}, {"r", o.r}, {"k", o.k}});
  } else if (f == "c3") {
    h = construction3(o.n, o.r);
    meta.update({{"n", o.n}, {"r", o.r}});
  } else if (f == "c4") {
    h = construction4(o.n, o.r, o.ell);
    meta.update({{"n", o.n}, {"r", o.r}, {"ell", o.ell}});
  } else if (f == "tightpath") {
    h = tight_path(o.kk, o.r);
    meta.update({{"kk", o.kk}, {"r", o.r}});
  } else if (f == "zigzag") {
    h = zigzag_path(o.kk, o.r);
    meta.update({{"kk", o.kk}, {"r", o.r}});
  } else if (f == "simplex") {
    h = canonical_simplex(o.d, o.r);
    meta.update({{"d", o.d}, {"r", o.r}});
  } else if (f == "expansion") {
    h = expansion(hypergraph_from_json(parse_json_text(slurp(o.input, std::cin), "input")));
  } else if (f == "tighttree") {
    // --script '[[1,2],[2,3]]': the shadow set used by each step.
    const Json j = parse_json_text(o.script.empty() ? "[]" : o.script, "script");
    if (!j.is_array()) throw CommandError("script must be a JSON array of vertex lists");
    TreeBuildScript s{o.r, {}};
    for (const auto& step : j) s.steps.push_back(step.get<Edge>());
    h = tight_tree(s);
    meta.update({{"r", o.r}, {"steps", j}});
  } else if (f == "loosetriangle") {
    h = loose_triangle(o.r);
    meta["r"] = o.r;
  } else if (f == "ekr") {
    h = ekr_extremal_family(o.n, o.r);
    meta.update({{"n", o.n}, {"r", o.r}, {"in_range", ekr_in_range(o.n, o.r)}});
  } else if (f == "random") {
    if (o.p >= 0) {
      h = random_hypergraph_p(o.n, o.r, o.p, o.seed);
      meta["p"] = o.p;
    } else {
      h = random_hypergraph(o.n, o.r, o.edges, o.seed);
      meta["edges"] = o.edges;
    }
    meta.update({{"n", o.n}, {"r", o.r}, {"seed", o.seed}});
  } else {
    throw CommandError("unknown family '" + f + "'");
  }
  Json j = to_json(h);
  j["meta"] = std::move(meta);
  return j;
}

Outcome cmd_split(const Options& o, const OrderedHypergraph& h) {
  const auto d = decompose(h, o.k);
  Json res = to_json(d);
  res["verified"] = verify_decomposition(h, d).ok();
  return {res, true};
}

Outcome cmd_extract(const Options& o, const OrderedHypergraph& h) {
  if (h.empty()) return {Json{{"witness", nullptr}}, false};
  return {to_json(extract_dense(h, o.k, o.alpha)), true};
}

Json pair_json(const std::optional<EdgePair>& p) {
  Json j;
  j["found"] = p.has_value();
  if (p) {
    j["pair"] = {p->first, p->second};
    if (auto parts = exact_r_partite_parts(std::vector<Edge>{p->first, p->second})) {
      j["parts"] = intervals_to_json(*parts);
    }
  }
  return j;
}

Json embedding_json(const std::optional<Embedding>& e) {
  Json j;
  j["found"] = e.has_value();
  if (e) j["embedding"] = to_json(*e);
  return j;
}

Outcome cmd_find(const Options& o, const OrderedHypergraph& h) {
  const SearchLimits lim{o.max_pattern_vertices};
  Json res;
  const std::string& p = o.pattern;
  if (p == "crossing" || p == "crossing-pair") {
    res = pair_json(find_crossing_pair(h));
  } else if (p == "intersection") {
    res = pair_json(find_intersection_pair(h, o.ell));
  } else if (p == "zigzag") {
    res = embedding_json(contains_ordered_pattern(h, zigzag_path(o.kk, h.r()), Exec::parallel, lim));
  } else if (p == "tightpath") {
    res = embedding_json(contains_ordered_pattern(h, tight_path(o.kk, h.r()), Exec::parallel, lim));
  } else if (p == "ordered") {
    res = embedding_json(
        contains_ordered_pattern(h, read_hypergraph_file(o.pattern_file, "pattern"), Exec::parallel, lim));
  } else if (p == "ord") {
    res = embedding_json(contains_ord(h, read_hypergraph_file(o.pattern_file, "pattern"), Exec::parallel, lim));
  } else {
    throw CommandError("unknown pattern '" + p + "' (crossing, intersection, zigzag, tightpath, ordered, ord)");
  }
  res["pattern"] = p;
  const bool found = res["found"].get<bool>();
  return {res, found};
}

Outcome cmd_embed(const Options& o, const OrderedHypergraph& h) {
  const auto tree = read_hypergraph_file(o.tree_file, "tree");
  std::optional<Embedding> e;
  if (h.r() == 2) {
    e = embed_forest_ordered(h, tree);
  } else {
    if (o.structure_file.empty()) throw CommandError("--structure is required when r >= 3");
    const Json sj = parse_json_text(slurp(o.structure_file, std::cin), "structure");
    StructuredHost s;
    try {
      for (const auto& iv : sj.at("parts")) s.parts.push_back({iv.at(0).get<int>(), iv.at(1).get<int>()});
      s.doubled = sj.at("doubled").get<int>();
    } catch (const Json::exception& ex) {
      throw CommandError(std::string("structure: expected {\"parts\": [[lo, hi], ...], \"doubled\": i} (") +
                         ex.what() + ")");
    }
    e = embed_tight_tree(h, s, tree);
  }
  return {embedding_json(e), e.has_value()};
}

Outcome cmd_exmax(const Options& o) {
  ForbiddenSpec spec;
  if (o.forbid == "none") spec = ForbiddenSpec::nothing();
  else if (o.forbid == "crossing" || o.forbid == "crossing-pair") spec = ForbiddenSpec::crossing();
  else if (o.forbid == "two-disjoint") spec = ForbiddenSpec::two_disjoint();
  else if (o.forbid == "ord") spec = ForbiddenSpec::ord(read_hypergraph_file(o.forbid_file, "forbidden"));
  else if (o.forbid == "ordered")
    spec = ForbiddenSpec::ordered({read_hypergraph_file(o.forbid_file, "forbidden")});
  else throw CommandError("unknown --forbid '" + o.forbid + "' (none, crossing, two-disjoint, ord, ordered)");
  OracleLimits lim;
  lim.max_candidate_sets = o.oracle_cap;
  lim.search.max_pattern_vertices = o.max_pattern_vertices;
  Json res = to_json(brute_ex_ordered(o.n, o.r, spec, Exec::parallel, lim));
  res["forbid"] = spec.name();
  return {res, true};
}

Outcome cmd_stats(const OrderedHypergraph& h) {
  Json res;
  res["n"] = h.n();
  res["r"] = h.r();
  res["edges"] = h.edge_count();
  const auto sup = h.support();
  res["support"] = sup.size();
  std::uint64_t lo = 0, hi = 0;
  for (Vertex v = 1; v <= h.n(); ++v) {
    const auto deg = h.degree(v);
    if (v == 1 || deg < lo) lo = deg;
    hi = std::max(hi, deg);
  }
  res["min_degree"] = lo;
  res["max_degree"] = hi;
  res["g"] = floor_log2(static_cast<std::uint64_t>(h.n()));
  res["density_r_minus_1"] = h.r() >= 2 ? density(h, h.r() - 1).d : 0.0;
  res["crossing_pair"] = find_crossing_pair(h).has_value();
  return {res, true};
}

std::string command_echo(int argc, const char* const* argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw CommandError("cannot write " + o.output);
  f << text << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dyadic splitting and ordered pattern tools for ordered hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph family as JSON");
  gen->add_option("family", o.family,
                  "lemma1, c1, c2, c3, c4, tightpath, zigzag, simplex, expansion, tighttree, loosetriangle, ekr, random")
      ->required();
  gen->add_option("--n", o.n);
  gen->add_option("--r", o.r);
  gen->add_option("--k", o.k);
  gen->add_option("--ell", o.ell);
  gen->add_option("--n1", o.n1);
  gen->add_option("--n2", o.n2);
  gen->add_option("--kk", o.kk, "Number of path edges");
  gen->add_option("--d", o.d, "Simplex dimension");
  gen->add_option("--edges", o.edges, "Edge count for the uniform random model");
  gen->add_option("--p", o.p, "Edge probability for the binomial random model");
  gen->add_option("--script", o.script, "Tight tree steps as a JSON array");

  auto* split = app.add_subcommand("split", "Dyadic decomposition into interval k-partite pieces");
  split->add_option("--k", o.k)->required();

  auto* extract = app.add_subcommand("extract", "Densest piece of the decomposition");
  extract->add_option("--k", o.k)->required();
  extract->add_option("--alpha", o.alpha)->required();

  auto* find = app.add_subcommand("find", "Search for an ordered pattern");
  find->add_option("--pattern", o.pattern, "crossing, intersection, zigzag, tightpath, ordered, ord")->required();
  find->add_option("--pattern-file", o.pattern_file, "Pattern JSON for 'ordered' and 'ord'");
  find->add_option("--ell", o.ell);
  find->add_option("--kk", o.kk);

  auto* embed = app.add_subcommand("embed", "Embed a forest (r = 2) or tight tree (r >= 3)");
  embed->add_option("--tree", o.tree_file, "Tree JSON")->required();
  embed->add_option("--structure", o.structure_file, "Host layout JSON {\"parts\": [[lo, hi], ...], \"doubled\": i}");

  auto* exmax = app.add_subcommand("exmax", "Exact ordered extremal number by exhaustive search");
  exmax->add_option("--n", o.n)->required();
  exmax->add_option("--r", o.r)->required();
  exmax->add_option("--forbid", o.forbid, "none, crossing, two-disjoint, ord, ordered");
  exmax->add_option("--forbid-file", o.forbid_file, "Hypergraph JSON for 'ord' and 'ordered'");

  auto* stats = app.add_subcommand("stats", "Basic statistics");

  for (auto* sub : {gen, split, extract, find, embed, exmax, stats}) add_common(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : error;
  }

  try {
    if (o.threads > 0) set_thread_count(o.threads);
    if (gen->parsed()) {
      emit(o, cmd_gen(o).dump(), out);
      return ok;
    }
    const auto start = std::chrono::steady_clock::now();
    std::string digest = fnv1a_hex("");
    Outcome res;
    if (exmax->parsed()) {
      res = cmd_exmax(o);
    } else {
      const auto h = read_host(o, digest);
      if (split->parsed()) res = cmd_split(o, h);
      else if (extract->parsed()) res = cmd_extract(o, h);
      else if (find->parsed()) res = cmd_find(o, h);
      else if (embed->parsed()) res = cmd_embed(o, h);
      else res = cmd_stats(h);
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json report;
    report["command"] = command_echo(argc, argv);
    report["input_digest"] = digest;
    report["timing_ms"] = ms;
    report["result"] = std::move(res.result);
    report["version"] = kVersion;
    emit(o, report.dump(), out);
    return res.found ? ok : not_found;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return error;
  }
}

}  // namespace ordsplit::cli
