#include "dualart/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "dualart/artin.hpp"
#include "dualart/cache.hpp"
#include "dualart/error.hpp"
#include "dualart/noncrossing.hpp"
#include "dualart/presentation.hpp"
#include "dualart/products.hpp"
#include "json.hpp"

namespace dualart::cli {

namespace {

using nlohmann::json;

constexpr int kInputError = 3;

struct Output {
  std::string payload;
  int exit_code = 0;
};

struct Options {
  std::string system_file;
  std::string out_file;
  std::string format;
  std::string cache_dir;
  std::size_t orbit_cap = 10000;
  std::size_t search_cap = 10000;
  std::size_t braid_len = 5;
  // command specific
  std::string element;
  std::string word;
  std::string braid;
  std::string tau;
  std::string style = "hurwitz";
  std::string kind;
  std::vector<std::string> factor_files;
  std::string graph_file;
  bool cograph = false;
  std::size_t strands = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << data;
    if (!out) throw ParseError("cannot write " + path);
  }
  std::filesystem::rename(tmp, p);
}

std::string infer_format(const Options& o, const std::string& fallback) {
  if (!o.format.empty()) return o.format;
  const auto ext = std::filesystem::path(o.out_file).extension().string();
  if (ext == ".json") return "json";
  if (ext == ".dot" || ext == ".gv") return "dot";
  if (ext == ".gap" || ext == ".g") return "gap";
  return fallback;
}

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ParseError("format '" + f + "' not available here (use " + list + ")");
}

std::string dumps(const json& j) { return j.dump(2) + "\n"; }

// canonical inputs, which also form the cache key

struct Job {
  std::string command;
  std::string format;
  json inputs;
};

CoxeterMatrix load_system(const std::string& path) {
  if (path.empty()) throw ParseError("--system is required");
  return parse_system(read_file(path));
}

std::vector<std::vector<bool>> load_graph(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("vertices"))
    throw ParseError(path + ": expected {\"vertices\": n, \"edges\": [[u, v], ...]}");
  try {
    const auto n = j.at("vertices").get<std::size_t>();
    if (n == 0) throw ParseError(path + ": a graph needs at least one vertex");
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (const auto& e : j.value("edges", json::array())) {
      const auto u = e.at(0).get<std::size_t>(), v = e.at(1).get<std::size_t>();
      if (u == 0 || v == 0 || u > n || v > n || u == v)
        throw ParseError(path + ": bad edge " + e.dump());
      a[u - 1][v - 1] = a[v - 1][u - 1] = true;
    }
    return a;
  } catch (const json::exception& ex) {
    throw ParseError(path + ": " + ex.what());
  }
}

ProductSystem load_product(const Options& o) {
  if (!o.graph_file.empty()) {
    const auto g = load_graph(o.graph_file);
    return o.cograph ? decompose_right_angled(g) : compose_graph(g);
  }
  if (!o.factor_files.empty()) {
    ProductKind kind;
    if (o.kind == "free") kind = ProductKind::Free;
    else if (o.kind == "direct") kind = ProductKind::Direct;
    else throw ParseError("--kind must be free or direct");
    std::vector<ProductSystem> factors;
    for (const auto& f : o.factor_files) factors.push_back(ProductSystem::leaf(load_system(f)));
    return ProductSystem::compose(std::move(factors), kind);
  }
  return ProductSystem::leaf(load_system(o.system_file));
}

json product_json(const ProductSystem& ps) {
  return {{"describe", ps.describe()},
          {"system", json::parse(serialize_system(ps.composed()))},
          {"vertices", ps.vertices()}};
}

std::vector<std::size_t> parse_s_word(const std::string& text, std::size_t rank) {
  std::vector<std::size_t> out;
  for (int l : parse_signed_list(text)) {
    if (l <= 0 || static_cast<std::size_t>(l) > rank)
      throw IndexOutOfRange("generator " + std::to_string(l) + " in --element");
    out.push_back(static_cast<std::size_t>(l) - 1);
  }
  return out;
}

std::string name_tuple(const Tuple<GroupElement>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + element_name(t[i]);
  return s + ")";
}

json names(const Tuple<GroupElement>& t) {
  json a = json::array();
  for (const auto& x : t) a.push_back(element_name(x));
  return a;
}

int truncation_code(bool complete) { return complete ? 0 : exit_code(Verdict::NoViolationWithinBound); }

// commands

Output cmd_interval(const Options& o, const std::string& fmt) {
  auto p = build_interval(CoxeterSystem::create(load_system(o.system_file)), o.orbit_cap);
  require_format(fmt, {"dot", "json", "text"});
  std::string s;
  if (fmt == "dot") s = poset_to_dot(p);
  else if (fmt == "json") s = poset_to_json(p) + "\n";
  else {
    s = "interval: " + std::to_string(p.size()) + " elements, " + std::to_string(p.covers().size()) +
        " covers" + (p.complete() ? "" : " (truncated)") + "\n";
    for (std::size_t e = 0; e < p.size(); ++e)
      s += "  " + std::to_string(e) + " " + element_name(p.elements()[e]) + " height " +
           std::to_string(p.height(e)) + "\n";
    for (const auto& c : p.covers())
      s += "  " + std::to_string(c.lower) + " -> " + std::to_string(c.upper) + " [" +
           element_name(p.labels()[c.label]) + "]\n";
  }
  return {s, truncation_code(p.complete())};
}

Output cmd_redwords(const Options& o, const std::string& fmt) {
  auto w = CoxeterSystem::create(load_system(o.system_file));
  auto p = build_interval(w, o.orbit_cap);
  const GroupElement a = o.element.empty() ? w->coxeter_element() : w->from_word(parse_s_word(o.element, w->rank()));
  auto r = p.red(a);
  require_format(fmt, {"json", "text"});
  if (fmt == "json") {
    json words = json::array();
    for (const auto& t : r.words) words.push_back(names(t));
    return {dumps({{"schema", "dualart.redwords/1"},
                   {"element", element_name(a)},
                   {"complete", r.complete},
                   {"count", r.words.size()},
                   {"words", words}}),
            truncation_code(r.complete)};
  }
  std::string s = "red_T(" + element_name(a) + "): " + std::to_string(r.words.size()) + " words" +
                  (r.complete ? "" : " (truncated)") + "\n";
  for (const auto& t : r.words) s += "  " + name_tuple(t) + "\n";
  return {s, truncation_code(r.complete)};
}

Output cmd_orbit(const Options& o, const std::string& fmt) {
  auto w = CoxeterSystem::create(load_system(o.system_file));
  auto orbit = hurwitz_orbit(w->coxeter_tuple(), o.orbit_cap);
  require_format(fmt, {"json", "text"});
  if (fmt == "json") {
    json nodes = json::array(), edges = json::array();
    for (std::size_t v = 0; v < orbit.size(); ++v)
      nodes.push_back({{"entries", names(orbit.nodes[v])},
                       {"layer", orbit.layer[v]},
                       {"braid", orbit.tree_word(v).letters()}});
    for (const auto& e : orbit.edges) edges.push_back({e.from, e.to, e.letter});
    return {dumps({{"schema", "dualart.orbit/1"},
                   {"size", orbit.size()},
                   {"complete", orbit.complete},
                   {"cap", o.orbit_cap},
                   {"nodes", nodes},
                   {"edges", edges}}),
            truncation_code(orbit.complete)};
  }
  std::string s = "orbit: " + std::to_string(orbit.size()) + " tuples" +
                  (orbit.complete ? "" : " (truncated at cap " + std::to_string(o.orbit_cap) + ")") + "\n";
  for (std::size_t v = 0; v < orbit.size(); ++v)
    s += "  " + std::to_string(v) + " " + name_tuple(orbit.nodes[v]) + " via " + orbit.tree_word(v).to_string() + "\n";
  return {s, truncation_code(orbit.complete)};
}

Output cmd_pan_transitive(const Options& o, const std::string& fmt) {
  auto p = build_interval(CoxeterSystem::create(load_system(o.system_file)), o.orbit_cap);
  auto pt = pan_transitive_check(p, o.search_cap);
  require_format(fmt, {"json", "text"});
  const int code = exit_code(pt.overall);
  if (fmt == "json") {
    json elems = json::array();
    for (const auto& e : pt.elements) {
      json x{{"element", element_name(p.elements()[e.element])}, {"words", e.words}, {"verdict", to_string(e.verdict)}};
      if (e.separated) x["separated"] = {e.separated->first, e.separated->second};
      elems.push_back(x);
    }
    return {dumps({{"schema", "dualart.pan-transitive/1"},
                   {"verdict", to_string(pt.overall)},
                   {"interval_complete", p.complete()},
                   {"caps", {{"orbit", o.orbit_cap}, {"search", o.search_cap}}},
                   {"elements", elems}}),
            code};
  }
  std::string s = "pan-transitive: " + to_string(pt.overall) + "\n";
  for (const auto& e : pt.elements) {
    s += "  " + element_name(p.elements()[e.element]) + ": " + std::to_string(e.words) + " words, " +
         to_string(e.verdict) + "\n";
    if (e.separated) {
      const auto r = p.red(e.element);
      s += "    separated: " + name_tuple(r.words[e.separated->first]) + " / " +
           name_tuple(r.words[e.separated->second]) + "\n";
    }
  }
  return {s, code};
}

Output cmd_well_stabilized(const Options& o, const std::string& fmt) {
  auto r = well_stabilized_check(load_system(o.system_file), o.orbit_cap);
  require_format(fmt, {"json", "text"});
  const int code = exit_code(r.verdict);
  if (fmt == "json") {
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(g.letters());
    json j{{"schema", "dualart.well-stabilized/1"},
           {"verdict", to_string(r.verdict)},
           {"method", r.method},
           {"orbit_nodes", r.orbit_size},
           {"orbit_complete", r.orbit_complete},
           {"generators", gens}};
    if (r.witness) j["witness"] = r.witness->letters();
    return {dumps(j), code};
  }
  std::string s = "well-stabilized: " + to_string(r.verdict) + "\nmethod: " + r.method + "\norbit: " +
                  std::to_string(r.orbit_size) + " tuples" + (r.orbit_complete ? "" : " (not closed)") + "\n";
  for (const auto& g : r.generators) s += "  generator " + g.to_string() + "\n";
  if (r.witness) s += "witness: " + r.witness->to_string() + "\n";
  return {s, code};
}

PresentationStyle parse_style(const std::string& s) {
  if (s == "hurwitz") return PresentationStyle::Hurwitz;
  if (s == "interval") return PresentationStyle::Interval;
  throw ParseError("--style must be hurwitz or interval");
}

Output cmd_presentation(const Options& o, const std::string& fmt) {
  auto p = build_interval(CoxeterSystem::create(load_system(o.system_file)), o.orbit_cap);
  auto pres = emit_presentation(p, parse_style(o.style));
  require_format(fmt, {"text", "gap", "json"});
  if (fmt == "text") return {render_text(pres), 0};
  if (fmt == "gap") return {render_gap(pres), 0};
  json rels = json::array();
  for (const auto& [l, r] : pres.relations) rels.push_back({render_word(pres, l), render_word(pres, r)});
  return {dumps({{"schema", "dualart.presentation/1"},
                 {"style", o.style},
                 {"generators", pres.generators},
                 {"relations", rels}}),
          0};
}

Output cmd_psi(const Options& o, const std::string& fmt) {
  auto p = build_interval(CoxeterSystem::create(load_system(o.system_file)), o.orbit_cap);
  auto pres = emit_presentation(p, PresentationStyle::Hurwitz);
  const auto word = parse_signed_list(o.word);
  const auto img = psi_image(p, word);
  require_format(fmt, {"text", "json"});
  if (fmt == "json")
    return {dumps({{"schema", "dualart.psi/1"},
                   {"word", word},
                   {"image", img},
                   {"rendered", render_word(pres, img)}}),
            0};
  return {render_word(pres, img) + "\n", 0};
}

Output cmd_product(const Options& o, const std::string& fmt) {
  auto ps = load_product(o);
  require_format(fmt, {"json", "text"});
  if (fmt == "json") {
    json j = product_json(ps);
    j["schema"] = "dualart.product/1";
    return {dumps(j), 0};
  }
  return {ps.describe() + "\n" + serialize_system(ps.composed()) + "\n", 0};
}

Output cmd_verify(const Options& o, const std::string& fmt) {
  auto ps = load_product(o);
  Caps caps{o.orbit_cap, o.search_cap, o.braid_len};
  auto report = verify_main_theorem(ps, caps);
  std::optional<BoundedCheck> bounded;
  if (ps.kind() == ProductKind::Free) bounded = verify_stabilizer_product(ps, o.braid_len);
  int code = report.hypotheses_proven() ? 0 : exit_code(Verdict::NoViolationWithinBound);
  if (report.well_stabilized.verdict == Verdict::Refuted || report.pan_transitive == Verdict::Refuted ||
      (bounded && bounded->outcome == BoundedOutcome::Refuted))
    code = exit_code(Verdict::Refuted);
  require_format(fmt, {"json", "text"});
  if (fmt == "json") {
    json j = json::parse(report_to_json(report));
    if (bounded) {
      json b{{"outcome", bounded->outcome == BoundedOutcome::Refuted ? "Refuted" : "ProvenWithinBound"},
             {"braid_len", o.braid_len},
             {"braids_checked", bounded->braids_checked},
             {"stabilizing", bounded->stabilizing}};
      if (bounded->witness) b["witness"] = bounded->witness->letters();
      j["stabilizer_product"] = b;
    }
    return {dumps(j), code};
  }
  std::string s = report_to_text(report);
  if (bounded) {
    s += "stabilizer product (braids up to length " + std::to_string(o.braid_len) + "): " +
         (bounded->outcome == BoundedOutcome::Refuted ? "Refuted" : "ProvenWithinBound") + ", " +
         std::to_string(bounded->stabilizing) + " of " + std::to_string(bounded->braids_checked) +
         " braids stabilize\n";
    if (bounded->witness) s += "  witness: " + bounded->witness->to_string() + "\n";
  }
  return {s, code};
}

Output cmd_star_demo(const Options& o, const std::string& fmt) {
  std::size_t n = o.strands;
  if (n == 0 && !o.system_file.empty()) n = load_system(o.system_file).rank();
  if (n == 0) throw ParseError("give --strands or --system");
  const BraidWord beta(n, parse_signed_list(o.braid));
  const BraidWord tau(n, parse_signed_list(o.tau));
  const auto basis = free_basis(n);
  const auto images = star_images(beta);
  const auto moved = hurwitz_apply(beta, basis);
  std::vector<FreeWord> lhs;
  for (const auto& x : hurwitz_apply(tau, basis)) lhs.push_back(substitute(images, x));
  const auto rhs = hurwitz_apply(tau * inverse(beta), basis);
  std::vector<int> all;
  for (std::size_t i = 1; i <= n; ++i) all.push_back(static_cast<int>(i));
  const FreeWord g(n, all);
  const bool fixes_g = star_apply(beta, g) == g;
  require_format(fmt, {"text", "json"});
  if (fmt == "json") {
    json im = json::array(), mv = json::array();
    for (const auto& x : images) im.push_back(x.to_string());
    for (const auto& x : moved) mv.push_back(x.to_string());
    return {dumps({{"schema", "dualart.star-demo/1"},
                   {"strands", n},
                   {"beta", beta.letters()},
                   {"tau", tau.letters()},
                   {"star_images", im},
                   {"hurwitz", mv},
                   {"fixes_g", fixes_g},
                   {"identity_holds", lhs == rhs}}),
            0};
  }
  std::string s = "beta = " + beta.to_string() + ", tau = " + tau.to_string() + "\n";
  for (std::size_t i = 0; i < n; ++i) s += "beta * f" + std::to_string(i + 1) + " = " + images[i].to_string() + "\n";
  s += "beta . (f1..f" + std::to_string(n) + ") = (";
  for (std::size_t i = 0; i < n; ++i) s += (i ? ", " : "") + moved[i].to_string();
  s += ")\n";
  s += std::string("beta * g = g: ") + (fixes_g ? "yes" : "no") + "\n";
  s += std::string("beta * (tau . f) = (tau beta^-1) . f: ") + (lhs == rhs ? "yes" : "no") + "\n";
  return {s, 0};
}

// canonical description of everything the output depends on

json job_inputs(const std::string& cmd, const Options& o, const std::string& fmt) {
  json j{{"command", cmd}, {"format", fmt}, {"orbit_cap", o.orbit_cap}, {"search_cap", o.search_cap},
         {"braid_len", o.braid_len}, {"element", o.element}, {"word", o.word}, {"braid", o.braid},
         {"tau", o.tau}, {"style", o.style}, {"kind", o.kind}, {"cograph", o.cograph}, {"strands", o.strands}};
  if (!o.system_file.empty()) j["system"] = serialize_system(load_system(o.system_file));
  json factors = json::array();
  for (const auto& f : o.factor_files) factors.push_back(serialize_system(load_system(f)));
  j["factors"] = factors;
  if (!o.graph_file.empty()) {
    json rows = json::array();
    for (const auto& r : load_graph(o.graph_file)) rows.push_back(r);
    j["graph"] = rows;
  }
  return j;
}

using Handler = std::function<Output(const Options&, const std::string&)>;

struct Command {
  const char* name;
  const char* help;
  const char* default_format;
  Handler handler;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--system", o.system_file, "Coxeter system file (JSON or TOML)");
  sub->add_option("--out", o.out_file, "write the artifact here instead of stdout");
  sub->add_option("--format", o.format, "json, dot, text or gap (default from --out)");
  sub->add_option("--cache-dir", o.cache_dir, "content-addressed result cache");
  sub->add_option("--orbit-cap", o.orbit_cap, "maximum number of orbit tuples")->check(CLI::PositiveNumber);
  sub->add_option("--search-cap", o.search_cap, "maximum size of transitivity searches")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dual Artin groups, noncrossing intervals and Hurwitz actions", "dualart"};
  app.require_subcommand(1);
  Options o;
  const std::vector<Command> commands{
      {"interval", "the interval [1,h]_T", "text", cmd_interval},
      {"redwords", "reduced T-words of an element", "text", cmd_redwords},
      {"orbit", "Hurwitz orbit of the Coxeter tuple", "text", cmd_orbit},
      {"pan-transitive", "Hurwitz transitivity on every red_T(a)", "text", cmd_pan_transitive},
      {"well-stabilized", "compare Hurwitz stabilizers in W and Art(W,S)", "text", cmd_well_stabilized},
      {"presentation", "presentation of the dual Artin group", "text", cmd_presentation},
      {"psi", "image of an Artin word in the dual generators", "text", cmd_psi},
      {"product", "compose free, direct or graph products", "text", cmd_product},
      {"verify-theorems", "hypothesis report for a product system", "text", cmd_verify},
      {"star-demo", "the star action of a braid on F_n", "text", cmd_star_demo},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    subs[c.name] = sub;
  }
  subs["redwords"]->add_option("--element", o.element, "S-word of the element, e.g. 1,2 (default h)");
  subs["presentation"]->add_option("--style", o.style, "hurwitz or interval");
  subs["psi"]->add_option("--word", o.word, "signed Artin word, e.g. 1,-2")->required();
  for (const char* name : {"product", "verify-theorems"}) {
    subs[name]->add_option("--kind", o.kind, "free or direct");
    subs[name]->add_option("--factor", o.factor_files, "factor system file (repeat)");
    subs[name]->add_option("--graph", o.graph_file, "right-angled graph file");
    subs[name]->add_flag("--cograph", o.cograph, "decompose by components and co-components");
  }
  subs["verify-theorems"]->add_option("--braid-len", o.braid_len, "braid length for the stabilizer search");
  subs["star-demo"]->add_option("--braid", o.braid, "signed braid word, e.g. 1,-2")->required();
  subs["star-demo"]->add_option("--tau", o.tau, "second braid for the action identity");
  subs["star-demo"]->add_option("--strands", o.strands, "number of strands (default: system rank)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  const Command* cmd = nullptr;
  for (const auto& c : commands)
    if (subs[c.name]->parsed()) cmd = &c;

  try {
    const std::string fmt = infer_format(o, cmd->default_format);
    Output result;
    bool cached = false;
    std::optional<Cache> cache;
    std::string key;
    if (!o.cache_dir.empty()) {
      cache.emplace(o.cache_dir);
      key = sha256_hex(job_inputs(cmd->name, o, fmt).dump());
      try {
        if (auto hit = cache->get(key)) {
          result = {hit->payload, hit->exit_code};
          cached = true;
        }
      } catch (const CorruptCacheEntry& e) {
        err << "cache: " << e.what() << ", recomputing\n";
      }
      err << "cache: " << (cached ? "hit " : "miss ") << key << "\n";
    }
    if (!cached) {
      result = cmd->handler(o, fmt);
      if (cache) cache->put(key, {result.payload, result.exit_code});
    }
    if (o.out_file.empty()) out << result.payload;
    else write_file(o.out_file, result.payload);
    return result.exit_code;
  } catch (const IncompleteInterval& e) {
    err << "error: " << e.what() << " (raise --orbit-cap)\n";
    return exit_code(Verdict::Inconclusive);
  } catch (const IncompleteOrbit& e) {
    err << "error: " << e.what() << " (raise --orbit-cap)\n";
    return exit_code(Verdict::Inconclusive);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace dualart::cli
