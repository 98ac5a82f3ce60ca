// waning: command-line front end.  JSON in, JSON / DOT / text out.
//
// Exit status: 0 success, 1 domain error, 2 usage or malformed input,
// 3 counterexamples found (verify, subset).

#include <fstream>   // for ifstream, ofstream
#include <iostream>  // for cout, cerr
#include <iterator>  // for istreambuf_iterator
#include <optional>  // for optional
#include <string>    // for string
#include <vector>    // for vector

#include "CLI11.hpp"

#include "waning/waning.hpp"

namespace {

  using waning::Nat;
  using waning::io::Json;

  constexpr int kDomainError = 1;
  constexpr int kUsageError  = 2;
  constexpr int kFound       = 3;

  Json parse_flag(std::string const& text) {
    return waning::io::parse(text);
  }

  waning::ExtNat parse_ext_nat(std::string const& text) {
    if (text == "omega") {
      return waning::omega;
    }
    return waning::io::ext_nat_from_json(parse_flag(text));
  }

  std::string slurp(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw waning::FormatError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  void print_bool(bool b) {
    std::cout << (b ? "true" : "false") << '\n';
  }

  // Options shared between subcommands are collected here; each subcommand
  // registers only the ones it reads.
  struct Args {
    std::string f, g, t1, t2, pb, d, d1, d2, X, Ys, poset, functions, kind, n_text, suite, out;
    std::string a, b, covered;
    Nat         n = 0, r = 0, bound = 4, seed = 1;
    std::optional<Nat> sample, suite_bound;
    unsigned    jobs = 0;
    bool        json = false, equal = false, meet = false, dom_miss = false;
  };

  int run_witness(Args const& args) {
    namespace io = waning::io;
    auto const& k = args.kind;
    if (k == "valid-r") {
      std::cout << waning::valid_r_min(io::waning_from_json(parse_flag(args.f)),
                                       io::pb_from_json(parse_flag(args.pb)))
                << '\n';
    } else if (k == "basis") {
      auto const f = io::waning_from_json(parse_flag(args.f));
      auto const g = io::pb_from_json(parse_flag(args.pb));
      Nat const  r = waning::basis_refinement(f, args.n, io::nat_set_from_json(parse_flag(args.X)), g);
      std::cout << io::to_json(waning::SetDescriptor::w_nbhd(f, g, r)).dump() << '\n';
    } else if (k == "much-wan") {
      std::cout << io::to_json(waning::much_wan_witness(io::gen_fn_from_json(parse_flag(args.f)),
                                                          io::pb_from_json(parse_flag(args.pb)),
                                                          args.r))
                       .dump()
                << '\n';
    } else if (k == "tfprime") {
      std::cout << io::to_json(waning::tfprime_refinement(io::gen_fn_from_json(parse_flag(args.f)),
                                                            args.n,
                                                            io::nat_set_from_json(parse_flag(args.X)),
                                                            io::pb_from_json(parse_flag(args.pb))))
                       .dump()
                << '\n';
    } else if (k == "continuity") {
      std::cout << waning::continuity_p(io::waning_from_json(parse_flag(args.f)),
                                        io::pb_from_json(parse_flag(args.a)),
                                        io::pb_from_json(parse_flag(args.b)),
                                        args.r)
                << '\n';
    } else if (k == "order") {
      auto const w = waning::order_counterexample(io::waning_from_json(parse_flag(args.f)),
                                                  io::waning_from_json(parse_flag(args.g)),
                                                  args.r);
      Json j   = Json::object();
      j["n"]   = w.n;
      j["b"]   = w.b;
      j["h"]   = io::to_json(w.h);
      std::cout << j.dump() << '\n';
    } else if (k == "cover") {
      std::cout << io::to_json(waning::cover_witness(args.n,
                                                       io::pb_from_json(parse_flag(args.pb)),
                                                       io::nat_set_from_json(parse_flag(args.X)),
                                                       io::nat_set_from_json(parse_flag(args.covered)),
                                                       args.dom_miss))
                       .dump()
                << '\n';
    } else {
      throw waning::FormatError("unknown witness kind \"" + k + "\"");
    }
    return 0;
  }

  int run_verify(Args const& args) {
    waning::SuiteOptions options;
    options.bound  = args.suite_bound;
    options.seed   = args.seed;
    options.sample = args.sample;
    options.jobs   = args.jobs;

    std::vector<std::string> names;
    if (args.suite == "all") {
      names = waning::suite_names();
    } else {
      names.push_back(args.suite);
    }
    bool        ok = true;
    std::string text;
    Json        docs = Json::array();
    for (auto const& name : names) {
      auto report = waning::run_suite(name, options);
      ok          = ok && report.passed();
      if (args.json) {
        docs.push_back(report.to_json());
      } else {
        text += report.to_text();
      }
    }
    if (args.json) {
      text = (names.size() == 1 ? docs[0] : docs).dump(2) + "\n";
    }
    if (args.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(args.out);
      if (!out) {
        throw waning::FormatError("cannot write " + args.out);
      }
      out << text;
    }
    return ok ? 0 : kFound;
  }

}  // namespace

int main(int argc, char** argv) {
  namespace io = waning::io;
  CLI::App app{"Waning functions and the Polish semigroup topologies on the symmetric inverse monoid"};
  app.require_subcommand(1);
  Args args;

  auto* check = app.add_subcommand("waning-check", "Is a function waning?");
  check->add_option("--f", args.f, "GenFn or WaningFn JSON")->required();

  auto* clos = app.add_subcommand("closure", "Greatest waning function below a GenFn");
  clos->add_option("--f", args.f, "GenFn JSON")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a function at a natural or omega");
  ev->add_option("--f", args.f, "GenFn or WaningFn JSON")->required();
  ev->add_option("--n", args.n_text, "natural or omega")->required();

  auto* cmp = app.add_subcommand("compare", "Compare two topologies");
  cmp->add_option("--t1", args.t1, "topology JSON")->required();
  cmp->add_option("--t2", args.t2, "topology JSON")->required();

  auto* jn = app.add_subcommand("join", "Join of two topologies, or of two waning functions");
  jn->add_option("--t1", args.t1, "topology JSON");
  jn->add_option("--t2", args.t2, "topology JSON");
  jn->add_option("--f", args.f, "WaningFn JSON");
  jn->add_option("--g", args.g, "WaningFn JSON");
  jn->add_flag("--meet", args.meet, "pointwise max of --f and --g instead of the join");

  auto* ch = app.add_subcommand("chain", "First n members of the descending chain");
  ch->add_option("--n", args.n, "length")->required();

  auto* bel = app.add_subcommand("below", "All waning functions pointwise below f");
  bel->add_option("--f", args.f, "Omega-free WaningFn JSON")->required();

  auto* emb = app.add_subcommand("embed", "Embed a finite poset into the waning functions");
  emb->add_option("--poset", args.poset, "poset JSON file")->required();

  auto* has = app.add_subcommand("hasse", "Hasse diagram as DOT");
  has->add_option("--poset", args.poset, "poset JSON file, embedded first");
  has->add_option("--functions", args.functions, "JSON array of WaningFn");

  auto* mem = app.add_subcommand("member", "Membership of a finite partial bijection");
  mem->add_option("--d", args.d, "descriptor JSON")->required();
  mem->add_option("--pb", args.pb, "partial bijection JSON")->required();

  auto* sub = app.add_subcommand("subset", "Bounded containment check");
  sub->add_option("--d1", args.d1, "descriptor JSON")->required();
  sub->add_option("--d2", args.d2, "descriptor JSON")->required();
  sub->add_option("--bound", args.bound, "universe bound");
  sub->add_flag("--equal", args.equal, "check both directions");
  sub->add_flag("--json", args.json, "machine-readable report");

  auto* wit = app.add_subcommand("witness", "Constructive witnesses");
  wit->add_option("--kind", args.kind, "valid-r | basis | much-wan | tfprime | continuity | order | cover")
      ->required();
  wit->add_option("--f", args.f, "function JSON");
  wit->add_option("--g", args.g, "WaningFn JSON");
  wit->add_option("--pb", args.pb, "partial bijection JSON");
  wit->add_option("--a", args.a, "partial bijection JSON");
  wit->add_option("--b", args.b, "partial bijection JSON");
  wit->add_option("--n", args.n, "natural");
  wit->add_option("--r", args.r, "natural");
  wit->add_option("--X", args.X, "set JSON")->default_val("[]");
  wit->add_option("--covered", args.covered, "set JSON")->default_val("[]");
  wit->add_flag("--dom-miss", args.dom_miss, "the subfamily contains {f : n not in dom f}");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", args.suite, "suite name or all")->required();
  ver->add_option("--bound", args.suite_bound, "universe bound");
  ver->add_option("--seed", args.seed, "sampling seed");
  ver->add_option("--sample", args.sample, "number of sampled cases");
  ver->add_option("--jobs", args.jobs, "worker threads, 0 for all cores");
  ver->add_flag("--json", args.json, "machine-readable report");
  ver->add_option("--out", args.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (check->parsed()) {
      auto const f = io::any_fn_from_json(parse_flag(args.f));
      print_bool(std::holds_alternative<waning::WaningFn>(f)
                 || waning::is_waning(std::get<waning::GenFn>(f)));
    } else if (clos->parsed()) {
      std::cout << io::to_json(waning::closure(io::gen_fn_from_json(parse_flag(args.f)))).dump()
                << '\n';
    } else if (ev->parsed()) {
      auto const f = io::any_fn_from_json(parse_flag(args.f));
      std::cout << waning::eval(f, parse_ext_nat(args.n_text)) << '\n';
    } else if (cmp->parsed()) {
      std::cout << waning::to_string(waning::compare(io::topology_from_json(parse_flag(args.t1)),
                                                     io::topology_from_json(parse_flag(args.t2))))
                << '\n';
    } else if (jn->parsed()) {
      if (!args.t1.empty() && !args.t2.empty()) {
        std::cout << io::to_json(waning::join_topology(io::topology_from_json(parse_flag(args.t1)),
                                                       io::topology_from_json(parse_flag(args.t2))))
                         .dump()
                  << '\n';
      } else if (!args.f.empty() && !args.g.empty()) {
        auto const f = io::waning_from_json(parse_flag(args.f));
        auto const g = io::waning_from_json(parse_flag(args.g));
        std::cout << io::to_json(args.meet ? waning::meet_if_waning(f, g) : waning::join(f, g)).dump()
                  << '\n';
      } else {
        throw waning::FormatError("join needs --t1 and --t2, or --f and --g");
      }
    } else if (ch->parsed()) {
      for (Nat i = 0; i < args.n; ++i) {
        std::cout << io::to_json(waning::descending_chain_element(i)).dump() << '\n';
      }
    } else if (bel->parsed()) {
      for (auto const& h : waning::enumerate_below(io::waning_from_json(parse_flag(args.f)))) {
        std::cout << io::to_json(h).dump() << '\n';
      }
    } else if (emb->parsed()) {
      auto const image = waning::embed_poset(waning::poset_from_json(parse_flag(slurp(args.poset))));
      Json       j     = Json::object();
      for (auto const& [label, f] : image) {
        j[label] = io::to_json(f);
      }
      std::cout << j.dump() << '\n';
    } else if (has->parsed()) {
      std::vector<waning::WaningFn> fs;
      if (!args.poset.empty()) {
        for (auto const& [label, f] :
             waning::embed_poset(waning::poset_from_json(parse_flag(slurp(args.poset))))) {
          fs.push_back(f);
        }
      } else if (!args.functions.empty()) {
        auto const j = parse_flag(args.functions);
        if (!j.is_array()) {
          throw waning::FormatError("--functions takes a JSON array");
        }
        for (auto const& x : j) {
          fs.push_back(io::waning_from_json(x));
        }
      } else {
        throw waning::FormatError("hasse needs --poset or --functions");
      }
      std::cout << waning::hasse_dot(std::move(fs));
    } else if (mem->parsed()) {
      print_bool(waning::member(io::descriptor_from_json(parse_flag(args.d)),
                                io::pb_from_json(parse_flag(args.pb))));
    } else if (sub->parsed()) {
      auto const d1     = io::descriptor_from_json(parse_flag(args.d1));
      auto const d2     = io::descriptor_from_json(parse_flag(args.d2));
      auto const report = args.equal ? waning::equality_check(d1, d2, args.bound)
                                     : waning::subset_check(d1, d2, args.bound);
      if (args.json) {
        std::cout << report.to_json(false).dump(2) << '\n';
      } else {
        std::cout << report.to_text(false);
      }
      return report.passed() ? 0 : kFound;
    } else if (wit->parsed()) {
      return run_witness(args);
    } else if (ver->parsed()) {
      return run_verify(args);
    }
  } catch (waning::FormatError const& e) {
    std::cerr << "waning: " << e.what() << '\n';
    return kUsageError;
  } catch (waning::UnknownSuite const& e) {
    std::cerr << "waning: " << e.what() << '\n';
    return kUsageError;
  } catch (waning::Error const& e) {
    std::cerr << "waning: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}
