// flagcert command-line driver. Every step writes its result to a file under
// --output-dir together with a <step>.manifest.json; stdout carries a summary.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <gmp.h>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "flagcert/certificate.hpp"
#include "flagcert/constructions.hpp"
#include "flagcert/errors.hpp"
#include "flagcert/flag_io.hpp"
#include "flagcert/graph_io.hpp"
#include "flagcert/parallel.hpp"
#include "flagcert/tournament.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace flagcert;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr const char* kTournamentHeader = "#flagcert tournaments v1";

enum Exit { kOk = 0, kVerifyFailed = 1, kInput = 2, kCost = 3, kInternal = 4 };

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
  return out.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot open '" + p.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string rat(const Rational& r) { return format_rational(r); }

// One invocation: inputs read, outputs written, stats gathered.
class Run {
 public:
  std::string step;
  std::vector<std::string> argv;
  fs::path dir = ".";
  bool as_json = false;
  json stats = json::object();

  std::string read_input(const std::string& path) {
    std::string bytes = slurp(path);
    inputs_[path] = sha256_hex(bytes);
    return bytes;
  }

  void write_output(const std::string& name, const std::string& bytes) {
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InputError("cannot write '" + p.string() + "'");
    out << bytes;
    if (!out) throw InputError("write to '" + p.string() + "' failed");
    outputs_[p.string()] = sha256_hex(bytes);
    stats["files"].push_back(p.string());
  }

  void finish(std::chrono::steady_clock::time_point start, int exit_code) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json m;
    m["command"] = argv;
    m["step"] = step;
    m["exit_code"] = exit_code;
    m["inputs"] = inputs_;
    m["outputs"] = outputs_;
    m["versions"] = {{"flagcert", kVersion}, {"gmp", gmp_version}, {"compiler", __VERSION__}};
    m["threads"] = thread_limit();
    m["timing_seconds"] = secs;
    fs::create_directories(dir);
    std::ofstream(dir / (step + ".manifest.json")) << m.dump(2) << '\n';
  }

  void print() const {
    if (as_json) {
      std::cout << stats.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value] : stats.items()) {
      if (key == "files") continue;
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    if (stats.contains("files"))
      for (const auto& f : stats["files"]) std::cout << "wrote " << f.get<std::string>() << '\n';
  }

 private:
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> outputs_;
};

std::string graphs_text(const std::vector<ThreeGraph>& graphs) {
  std::ostringstream out;
  write_graph_list(out, graphs);
  return out.str();
}

std::string tournaments_text(const std::vector<Tournament>& ts) {
  std::string out = std::string(kTournamentHeader) + "\n";
  for (const auto& t : ts) out += encode_tournament(t) + "\n";
  return out;
}

// Tournament lines, skipping blank lines and '#' comments (including the header).
std::vector<Tournament> parse_tournaments(const std::string& text) {
  std::vector<Tournament> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(decode_tournament(line));
  }
  if (out.empty()) throw InputError("no tournament in input");
  return out;
}

json histogram(const std::vector<ThreeGraph>& graphs) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& g : graphs) ++h[g.size()];
  json out = json::object();
  for (const auto& [edges, count] : h) out[std::to_string(edges)] = count;
  return out;
}

// Pair codegree summary of a tournament.
void tournament_stats(json& s, const Tournament& t) {
  const CodegreeReport r = cyclic_codegrees(t);
  s["order"] = t.order();
  s["delta2"] = r.delta2;
  s["codegree_identity"] = r.identity_holds;
  s["cyclic_triangles"] = ct_construction(t).size();
}

int cmd_enumerate(Run& run, int k) {
  ProofContext ctx;
  const GraphBasis& basis = ctx.graphs(k);
  run.stats["k"] = k;
  run.stats["count"] = basis.size();
  run.stats["edge_histogram"] = histogram(basis.graphs());
  run.write_output("F" + std::to_string(k) + ".txt", graphs_text(basis.graphs()));
  return kOk;
}

int cmd_flags(Run& run, const std::string& type_name, int k) {
  ProofContext ctx;
  const TypeGraph& type = types::by_name(type_name);
  const FlagBasis& flags = ctx.flags(type, k);
  run.stats["type"] = type.name;
  run.stats["k"] = k;
  run.stats["count"] = flags.size();
  if (type.order() == 2) {
    std::size_t symmetric = 0;
    for (const Flag& f : flags.flags())
      if (flags.index_of(permute_root(f, {1, 0})) == flags.index_of(f)) ++symmetric;
    run.stats["swap_symmetric"] = symmetric;
  }
  std::ostringstream out;
  write_flag_list(out, flags);
  run.write_output("flags_" + type.name + "_" + std::to_string(k) + ".txt", out.str());
  return kOk;
}

int cmd_expressions(Run& run, const std::string& kind) {
  ProofContext ctx;
  run.stats["kind"] = kind;
  std::vector<NamedLinComb> exprs;
  if (kind == "target") {
    exprs.push_back({"target", target_vector(ctx.graphs(7))});
  } else if (kind == "codegree") {
    for (const auto& e : codegree_expressions(ctx)) exprs.push_back({e.id, e.value});
  } else if (kind == "tightpath") {
    const auto sets = tight_path_flag_sets(ctx);
    json sizes = json::array();
    for (int i = 0; i < 3; ++i) {
      sizes.push_back(sets[i].size());
      exprs.push_back({"P" + std::to_string(i), tight_path_expression(ctx, i, sets[i])});
    }
    run.stats["tight_path_set_sizes"] = sizes;
  } else if (kind.rfind("pairs-", 0) == 0) {
    const std::string name = kind.substr(6);
    const TypeGraph& type = types::by_name(name);
    const PairDensityTable* table = nullptr;
    if (name == "tau") table = &ctx.codegree_table();
    else if (name.rfind("sigma", 0) == 0) table = &ctx.sigma_table(name.back() - '0');
    else if (name.rfind("iota", 0) == 0) table = &ctx.iota_table(name.back() - '0');
    else throw InputError("no pair-density table for type " + type.name);
    std::size_t nonzero = 0;
    for (std::size_t g = 0; g < table->target().size(); ++g) nonzero += table->entries(g).size();
    run.stats["first"] = table->first().id();
    run.stats["second"] = table->second().id();
    run.stats["target"] = table->target().id();
    run.stats["nonzero_entries"] = nonzero;
    std::ostringstream out;
    write_pair_density(out, *table);
    run.write_output("pairdensity_" + name + ".txt", out.str());
    return kOk;
  } else {
    throw InputError("unknown expression kind '" + kind + "' (target, codegree, tightpath, pairs-<type>)");
  }
  run.stats["expressions"] = exprs.size();
  std::ostringstream out;
  write_expressions(out, exprs);
  run.write_output("expressions_" + kind + ".txt", out.str());
  return kOk;
}

int cmd_template(Run& run) {
  ProofContext ctx;
  std::ostringstream out;
  write_certificate(out, zero_certificate(ctx));
  json sizes = json::array();
  for (const auto& [k, d] : iota_sizes(ctx)) sizes.push_back({{"k", k}, {"d", d}, {"side", k - d}});
  run.stats["iota_sizes"] = sizes;
  run.write_output("certificate_template.txt", out.str());
  return kOk;
}

int cmd_verify(Run& run, const std::string& path) {
  std::istringstream in(run.read_input(path));
  const Certificate cert = parse_certificate(in);
  ProofContext ctx;
  const Verdict v = verify_certificate(cert, ctx);
  json psd = json::array();
  for (bool b : v.psd) psd.push_back(b);
  run.stats["pass"] = v.pass;
  run.stats["psd"] = psd;
  run.stats["psd_ok"] = v.psd_ok;
  run.stats["positivity_ok"] = v.positivity_ok;
  run.stats["slack_ok"] = v.slack_ok;
  run.stats["support_ok"] = v.support_ok;
  run.stats["slack_zero"] = v.zero_slack;
  run.stats["slack_positive"] = v.positive_slack;
  run.stats["slack_negative"] = v.negative_slack;
  run.stats["realizable"] = v.realizable;
  run.stats["zero_on_realizable"] = v.zero_on_realizable;
  if (v.first_negative >= 0) {
    const auto g = static_cast<std::size_t>(v.first_negative);
    run.stats["first_negative"] = {{"graph", encode_graph(ctx.graphs(7).graph(g))}, {"slack", rat(v.slack[g])}};
  }
  run.stats["failures"] = v.failures;

  const GraphBasis& f7 = ctx.graphs(7);
  LinComb slack(f7.id(), f7.size());
  for (std::size_t g = 0; g < v.slack.size(); ++g) slack.set(static_cast<int>(g), v.slack[g]);
  std::ostringstream out;
  write_expressions(out, {{"slack", std::move(slack)}});
  run.write_output("slack.txt", out.str());
  return v.pass ? kOk : kVerifyFailed;
}

int cmd_tournaments_enum(Run& run, int k, bool realize_count) {
  const auto ts = enumerate_tournaments(k);
  run.stats["k"] = k;
  run.stats["tournaments"] = ts.size();
  if (realize_count) {
    ProofContext ctx;
    const auto mask = realizable_mask(ctx.graphs(k));
    run.stats["graphs"] = mask.size();
    run.stats["realizable_graphs"] = std::count(mask.begin(), mask.end(), true);
  }
  run.write_output("tournaments_" + std::to_string(k) + ".txt", tournaments_text(ts));
  return kOk;
}

int cmd_tournaments_realize(Run& run, const std::string& path) {
  std::istringstream in(run.read_input(path));
  const auto graphs = read_graph_list(in);
  std::string out = std::string(kTournamentHeader) + "\n";
  std::size_t found = 0;
  for (const auto& g : graphs) {
    const auto t = realize_as_tournament(g);
    if (t) ++found;
    out += (t ? encode_tournament(*t) : std::string("-")) + "\n";
  }
  run.stats["graphs"] = graphs.size();
  run.stats["realizable"] = found;
  run.write_output("realizations.txt", out);
  return kOk;
}

int cmd_tournaments_texact(Run& run, int from, int to) {
  if (from < 3 || to < from) throw InputError("texact range must satisfy 3 <= from <= to");
  json rows = json::array();
  std::string out = "n t_exact upper_bound\n";
  for (int n = from; n <= to; ++n) {
    const int exact = t_exact(n), bound = t_upper_bound(n);
    rows.push_back({{"n", n}, {"t_exact", exact}, {"upper_bound", bound}});
    out += std::to_string(n) + " " + std::to_string(exact) + " " + std::to_string(bound) + "\n";
  }
  run.stats["values"] = rows;
  run.write_output("texact.txt", out);
  return kOk;
}

int cmd_hadamard_from(Run& run, const std::string& path) {
  const Tournament t = parse_tournaments(run.read_input(path)).front();
  const auto h = tournament_to_skew_hadamard(t);
  run.stats["order"] = h.order();
  tournament_stats(run.stats["tournament"], t);
  run.write_output("hadamard.txt", encode_matrix(h));
  return kOk;
}

int cmd_hadamard_to(Run& run, const std::string& path) {
  const auto h = decode_matrix(run.read_input(path));
  const Tournament t = skew_hadamard_to_tournament(h);
  run.stats["order"] = h.order();
  tournament_stats(run.stats["tournament"], t);
  run.stats["doubly_regular"] = doubly_regular_defect(t).empty();
  run.write_output("tournament.txt", tournaments_text({t}));
  return kOk;
}

int cmd_hadamard_paley(Run& run, int q) {
  const Tournament t = paley_tournament(q);
  const auto h = tournament_to_skew_hadamard(t);
  const Tournament back = skew_hadamard_to_tournament(h);
  run.stats["q"] = q;
  tournament_stats(run.stats["tournament"], t);
  run.stats["hadamard_order"] = h.order();
  run.stats["round_trip_isomorphic"] = q <= 9 ? json(are_isomorphic(t, back)) : json("not checked (q > 9)");
  run.write_output("paley_" + std::to_string(q) + ".txt", tournaments_text({t}));
  run.write_output("paley_" + std::to_string(q) + "_hadamard.txt", encode_matrix(h));
  return kOk;
}

int cmd_blowup(Run& run, const BlowupSpec& spec) {
  const BlowupResult r = iterated_blowup(spec);
  run.stats["n"] = spec.n;
  run.stats["depth"] = spec.depth;
  run.stats["seed"] = spec.seed;
  run.stats["paley"] = spec.paley;
  run.stats["edges"] = r.edges;
  run.stats["min_codegree"] = r.min_codegree;
  run.stats["edge_density"] = rat(r.edge_density);
  run.stats["edge_density_approx"] = r.edge_density.get_d();
  run.stats["formula_value"] = rat(r.formula_value);
  run.stats["formula_value_approx"] = r.formula_value.get_d();
  run.stats["part_sizes"] = r.part_sizes;
  run.stats["part_seeds"] = r.seeds;
  run.stats["part_delta2"] = r.inner_delta2;
  if (spec.n <= 60) run.stats["k4minus_free"] = is_k4minus_free(r.graph);
  run.write_output("blowup.txt", graphs_text({r.graph}));
  return kOk;
}

int cmd_random_tournament(Run& run, int n, std::uint64_t seed) {
  const Tournament t = random_tournament(n, seed);
  run.stats["seed"] = seed;
  run.stats["prng"] = "mt19937_64";
  tournament_stats(run.stats["tournament"], t);
  run.write_output("random_tournament.txt", tournaments_text({t}));
  return kOk;
}

int cmd_delete(Run& run, const std::string& path, const std::vector<int>& vertices) {
  const Tournament t = parse_tournaments(run.read_input(path)).front();
  const Tournament r = delete_vertices(t, vertices);
  tournament_stats(run.stats["before"], t);
  tournament_stats(run.stats["after"], r);
  run.write_output("deleted.txt", tournaments_text({r}));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  Run run;
  run.argv.assign(argv, argv + argc);

  CLI::App app{"Flag-algebra certificate tools for K4^- -free 3-graphs"};
  app.require_subcommand(1);
  unsigned threads = 0;
  std::string dir = ".", format = "text";
  app.add_option("--threads", threads, "Worker cap (0 = hardware concurrency)");
  app.add_option("--output-dir", dir, "Directory for step outputs and manifests");
  app.add_option("--format", format, "Summary format")->check(CLI::IsMember({"text", "json"}));

  std::function<int()> action;

  int k = 7;
  auto* enumerate = app.add_subcommand("enumerate", "Write F_k, the K4^- -free 3-graphs on k vertices");
  enumerate->add_option("k", k)->required();
  enumerate->callback([&] { action = [&] { return cmd_enumerate(run, k); }; });

  std::string type_name;
  auto* flags = app.add_subcommand("flags", "Write the k-vertex flags of a type");
  flags->add_option("type", type_name, "tau, sigma0..2, iota1..6 or empty")->required();
  flags->add_option("k", k)->required();
  flags->callback([&] { action = [&] { return cmd_flags(run, type_name, k); }; });

  std::string kind;
  auto* expressions = app.add_subcommand("expressions", "Write target, codegree, tight-path or pair-density data");
  expressions->add_option("kind", kind, "target | codegree | tightpath | pairs-<type>")->required();
  expressions->callback([&] { action = [&] { return cmd_expressions(run, kind); }; });

  app.add_subcommand("template", "Write an all-zero certificate with local fingerprints")->callback([&] {
    action = [&] { return cmd_template(run); };
  });

  std::string path;
  auto* verify = app.add_subcommand("verify", "Check a certificate; exit 0 iff it passes");
  verify->add_option("certificate", path)->required()->check(CLI::ExistingFile);
  verify->callback([&] { action = [&] { return cmd_verify(run, path); }; });

  auto* tournaments = app.add_subcommand("tournaments", "Tournament enumeration and realization");
  tournaments->require_subcommand(1);
  bool realize_count = false;
  auto* tenum = tournaments->add_subcommand("enum", "Non-isomorphic tournaments on k vertices");
  tenum->add_option("k", k)->required();
  tenum->add_flag("--realize-count", realize_count, "Also count tournament-realizable graphs in F_k");
  tenum->callback([&] { action = [&] { return cmd_tournaments_enum(run, k, realize_count); }; });
  auto* realize = tournaments->add_subcommand("realize", "Find T with C(T) = G for each graph of a list");
  realize->add_option("graphs", path)->required()->check(CLI::ExistingFile);
  realize->callback([&] { action = [&] { return cmd_tournaments_realize(run, path); }; });
  int from = 3, to = 7;
  auto* texact = tournaments->add_subcommand("texact", "Exact max delta2 against the upper bound");
  texact->add_option("from", from);
  texact->add_option("to", to);
  texact->callback([&] { action = [&] { return cmd_tournaments_texact(run, from, to); }; });

  auto* hadamard = app.add_subcommand("hadamard", "Doubly regular tournaments and skew Hadamard matrices");
  hadamard->require_subcommand(1);
  auto* hfrom = hadamard->add_subcommand("from-tournament", "Bordered skew Hadamard matrix of a tournament");
  hfrom->add_option("tournament", path)->required()->check(CLI::ExistingFile);
  hfrom->callback([&] { action = [&] { return cmd_hadamard_from(run, path); }; });
  auto* hto = hadamard->add_subcommand("to-tournament", "Tournament of a skew Hadamard matrix");
  hto->add_option("matrix", path)->required()->check(CLI::ExistingFile);
  hto->callback([&] { action = [&] { return cmd_hadamard_to(run, path); }; });
  int q = 7;
  auto* paley = hadamard->add_subcommand("paley", "Paley tournament and its skew Hadamard matrix");
  paley->add_option("q", q)->required();
  paley->callback([&] { action = [&] { return cmd_hadamard_paley(run, q); }; });

  auto* construct = app.add_subcommand("construct", "Lower-bound constructions");
  construct->require_subcommand(1);
  BlowupSpec spec;
  auto* blowup = construct->add_subcommand("blowup", "Iterated H6 blow-up with C(T) in the final parts");
  blowup->add_option("--n", spec.n)->required();
  blowup->add_option("--depth", spec.depth)->required();
  blowup->add_option("--seed", spec.seed)->required();
  blowup->add_flag("--paley", spec.paley, "Use Paley tournaments where the part size allows");
  blowup->callback([&] { action = [&] { return cmd_blowup(run, spec); }; });
  int n = 0;
  std::uint64_t seed = 0;
  auto* rt = construct->add_subcommand("random-tournament", "Seeded uniformly random tournament");
  rt->add_option("--n", n)->required();
  rt->add_option("--seed", seed)->required();
  rt->callback([&] { action = [&] { return cmd_random_tournament(run, n, seed); }; });
  std::vector<int> vertices;
  auto* del = construct->add_subcommand("delete", "Delete vertices from a tournament");
  del->add_option("tournament", path)->required()->check(CLI::ExistingFile);
  del->add_option("--vertices", vertices, "0-based vertices")->required()->delimiter(',');
  del->callback([&] { action = [&] { return cmd_delete(run, path, vertices); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  run.dir = dir;
  run.as_json = format == "json";
  if (threads > 0) set_thread_limit(threads);
  for (const CLI::App* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    run.step += (run.step.empty() ? "" : "-") + sub->get_name();
  }

  int code = kInternal;
  try {
    code = action();
    run.print();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    code = kInput;
  } catch (const CostGuardError& e) {
    std::cerr << "cost guard: " << e.what() << '\n';
    code = kCost;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kInternal;
  }
  try {
    run.finish(start, code);
  } catch (const std::exception& e) {
    std::cerr << "manifest: " << e.what() << '\n';
  }
  return code;
}
