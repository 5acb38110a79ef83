#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "bigfree/cayley.hpp"
#include "bigfree/combinatorial.hpp"
#include "bigfree/error.hpp"
#include "bigfree/sampling.hpp"
#include "bigfree/suite.hpp"
#include "bigfree/topology.hpp"
#include "bigfree/tree.hpp"
#include "bigfree/words.hpp"

namespace bigfree::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string alphabet_text = "omega";
  bool json = false;
  Alphabet alphabet() const { return parse_alphabet(alphabet_text); }
};

// What a subcommand produces: a line of text, and the same result as JSON.
struct Output {
  std::string text;
  json data;
  int status = ok;
  std::optional<std::string> json_text = std::nullopt;  // preformatted JSON
};

Output plain(const std::string& text) { return {text, json{{"result", text}}}; }

std::string show_word(const Word& w) { return to_string(w); }

json word_list(const std::vector<Word>& words) {
  json list = json::array();
  for (const auto& w : words) list.push_back(to_string(w));
  return list;
}

AlphabetIndex parse_index(const std::string& text, Alphabet alphabet) {
  const Letter l = parse_letter(text, alphabet);
  if (l.sign != Sign::positive) {
    throw ParseError("expected a generator such as a3, got '" + text + "'", 0);
  }
  return l.index;
}

// Positional arguments registered on a subcommand, read after parsing.
class Args {
 public:
  explicit Args(CLI::App* app) : app_(app) {}
  Args& add(const std::string& name, const std::string& help) {
    values_.push_back(std::make_unique<std::string>());
    app_->add_option(name, *values_.back(), help)->required();
    return *this;
  }
  const std::string& operator[](std::size_t i) const { return *values_[i]; }

 private:
  CLI::App* app_;
  std::vector<std::unique_ptr<std::string>> values_;
};

struct Command {
  CLI::App* app;
  std::shared_ptr<Args> args;
  std::function<Output()> action;
};

std::string demo_table(const std::vector<InstabilityRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "k" << std::setw(10) << "edge"
      << "point\n";
  for (const auto& row : rows) {
    out << std::setw(4) << row.k << std::setw(10)
        << (row.edge_letter ? to_string(*row.edge_letter) : std::string("-"))
        << to_string(row.point) << "\n";
  }
  std::string text = out.str();
  text.pop_back();
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact computations in the big free group BF(omega)", "bigfree"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--alphabet", g.alphabet_text,
                 "Index set instance: omega or omega+1")
      ->check(CLI::IsMember({"omega", "omega+1"}))
      ->capture_default_str();
  app.add_flag("--json", g.json, "Machine-readable output");

  std::vector<Command> commands;
  auto command = [&](const std::string& name, const std::string& help,
                     std::vector<std::pair<std::string, std::string>> positionals,
                     std::function<Output(const Args&)> action) -> CLI::App* {
    CLI::App* sub = app.add_subcommand(name, help);
    auto a = std::make_shared<Args>(sub);
    for (const auto& [arg, arg_help] : positionals) a->add(arg, arg_help);
    commands.push_back({sub, a, [a, action] { return action(*a); }});
    return sub;
  };
  auto word = [&](const std::string& text) { return Word::parse(text, g.alphabet()); };
  const std::string W = "Word: tokens a<k> or a<k>^<e>, e.g. \"a1 a2^-1\"";
  const std::string P = "Tree point: \"<vector> @ <word>\", e.g. \"[1,1] @ a1 a2\"";
  const std::string E = "Triple: \"(<word> ; a<k>^<+-1> ; <vector>)\" or a word";
  const std::string X = "Cayley point: \"(<word> ; a<k>^<+-1> ; <p/q>)\" or a word";
  const std::string C = "Circle point: \"C(a<k>) @ <vector>\" or \"C(*) @ []\"";

  // words
  command("reduce", "Free reduction", {{"word", W}},
          [&](const Args& a) { return plain(show_word(reduce(word(a[0])))); });
  command("mul", "Reduced product", {{"w", W}, {"v", W}}, [&](const Args& a) {
    return plain(show_word(multiply(word(a[0]), word(a[1]))));
  });
  command("inv", "Inverse", {{"word", W}},
          [&](const Args& a) { return plain(show_word(inverse(word(a[0])))); });
  command("len", "Length vector L(w)", {{"word", W}}, [&](const Args& a) {
    return plain(to_string(length_vector(word(a[0]))));
  });
  command("dist", "Word metric L(w^-1 v)", {{"w", W}, {"v", W}}, [&](const Args& a) {
    return plain(to_string(word_dist(word(a[0]), word(a[1]))));
  });
  command("gromov", "Gromov product at the identity", {{"g", W}, {"g2", W}},
          [&](const Args& a) {
            return plain(to_string(gromov(word(a[0]), word(a[1]))));
          });
  command("prefix", "Longest common initial segment of reduced words",
          {{"g", W}, {"g2", W}}, [&](const Args& a) {
            return plain(show_word(common_prefix(word(a[0]), word(a[1]))));
          });
  command("subwords", "Initial segments of a reduced word, one per line",
          {{"word", W}}, [&](const Args& a) {
            const auto subs = subwords(word(a[0]));
            std::string text;
            for (std::size_t i = 0; i < subs.size(); ++i) {
              if (i) text += "\n";
              text += to_string(subs[i]) + "\t" + to_string(length_vector(subs[i]));
            }
            return Output{text, json{{"result", word_list(subs)}}};
          });
  command("cancel-verify", "Check a pairing against the cancellation conditions",
          {{"word", W}, {"pairs", "Comma-separated 1-based pairs, e.g. \"1-4,2-3\""}},
          [&](const Args& a) {
            const Word w = word(a[0]);
            const Cancellation c = Cancellation::parse(a[1]);
            const auto v = verify_cancellation(w, c);
            if (!v) {
              return Output{"valid; leaves '" + to_string(apply_cancellation(w, c)) + "'",
                            json{{"valid", true},
                                 {"result", to_string(apply_cancellation(w, c))}}};
            }
            std::string text = "invalid: " + to_string(v->condition) + " fails at t=" +
                               std::to_string(v->position) + ", t*=" +
                               std::to_string(v->partner);
            if (!v->detail.empty()) text += ": " + v->detail;
            return Output{text, json{{"valid", false},
                                     {"condition", to_string(v->condition)},
                                     {"position", v->position},
                                     {"partner", v->partner},
                                     {"detail", v->detail}}};
          });

  // tree
  auto point = [&](const std::string& text) { return TreePoint::parse(text, g.alphabet()); };
  command("tree-dist", "Tree metric", {{"p", P}, {"q", P}}, [&](const Args& a) {
    return plain(to_string(tree_dist(point(a[0]), point(a[1]))));
  });
  command("tree-act", "Left action u.p", {{"u", W}, {"p", P}}, [&](const Args& a) {
    return plain(to_string(tree_act(word(a[0]), point(a[1]))));
  });
  command("y", "Median Y(v, x, y) of three words", {{"v", W}, {"x", W}, {"y", W}},
          [&](const Args& a) {
            return plain(show_word(y_point(word(a[0]), word(a[1]), word(a[2]))));
          });
  std::size_t axioms_len = 3;
  std::uint32_t axioms_letters = 2;
  {
    CLI::App* sub = command("axioms-check",
                            "Length-function axioms on the ball of reduced words",
                            {}, [&](const Args&) {
                              const auto sample =
                                  all_reduced_words(axioms_len, axioms_letters, g.alphabet());
                              const AxiomReport r = check_length_axioms(
                                  big_free_length_oracle(g.alphabet()),
                                  std::span<const Word>(sample));
                              const std::string scope = std::to_string(sample.size()) +
                                                        " words";
                              if (!r) {
                                return Output{"pass (" + scope + ")",
                                              json{{"pass", true}, {"sample", sample.size()}}};
                              }
                              return Output{"fail: " + to_string(r->axiom) + ": " + r->detail,
                                            json{{"pass", false},
                                                 {"axiom", to_string(r->axiom)},
                                                 {"witnesses", r->witnesses},
                                                 {"detail", r->detail}},
                                            domain_error};
                            });
    sub->add_option("--max-len", axioms_len, "Longest word in the sample")
        ->capture_default_str();
    sub->add_option("--letters", axioms_letters, "Generators a1..aN")
        ->capture_default_str()
        ->check(CLI::Range(1u, 64u));
  }

  // combinatorial
  auto triple = [&](const std::string& text) { return parse_triple_point(text, g.alphabet()); };
  auto edge = [&](const std::string& text) {
    TriplePoint e = parse_triple_point(text, g.alphabet());
    if (!std::holds_alternative<EdgeTriple>(e)) {
      throw DomainError("expected an edge triple, got the vertex '" + text + "'");
    }
    return std::get<EdgeTriple>(e);
  };
  command("to-triple", "Edge triple of a tree point", {{"p", P}}, [&](const Args& a) {
    return plain(to_string(to_triple(point(a[0]))));
  });
  command("from-triple", "Tree point of an edge triple", {{"e", E}}, [&](const Args& a) {
    return plain(to_string(from_triple(triple(a[0]))));
  });
  command("triple-act", "Left action on triples", {{"u", W}, {"e", E}}, [&](const Args& a) {
    return plain(to_string(act_triple(word(a[0]), triple(a[1]))));
  });
  command("triple-dist", "Tree distance of triples next to the simplified formula",
          {{"e1", E}, {"e2", E}}, [&](const Args& a) {
            const TriplePoint x = triple(a[0]);
            const TriplePoint y = triple(a[1]);
            const TripleDistance d = triple_dist(x, y);
            std::string config = "vertex";
            if (std::holds_alternative<EdgeTriple>(x) && std::holds_alternative<EdgeTriple>(y)) {
              config = to_string(classify(std::get<EdgeTriple>(x), std::get<EdgeTriple>(y)));
            }
            std::string text = to_string(d.exact);
            if (!d.agrees()) {
              text += " (simplified formula gives " + to_string(d.simplified) + ", " +
                      config + ")";
            }
            return Output{text, json{{"result", to_string(d.exact)},
                                     {"simplified", to_string(d.simplified)},
                                     {"agrees", d.agrees()},
                                     {"configuration", config}}};
          });
  auto circle = [&](const std::string& text) { return CirclePoint::parse(text, g.alphabet()); };
  command("project", "Image in the wedge of circles", {{"e", E}}, [&](const Args& a) {
    return plain(to_string(project(triple(a[0]))));
  });
  command("circle-dist", "Wedge metric", {{"x", C}, {"y", C}}, [&](const Args& a) {
    return plain(to_string(circle_dist(circle(a[0]), circle(a[1]))));
  });
  command("orbit-witness", "u with u.e1 = e2, if any", {{"e1", E}, {"e2", E}},
          [&](const Args& a) {
            const auto u = orbit_witness(edge(a[0]), edge(a[1]));
            if (!u) {
              return Output{"none: different orbits", json{{"result", nullptr}},
                            domain_error};
            }
            return plain(show_word(*u));
          });

  // cayley
  auto cpoint = [&](const std::string& text) { return CayleyPoint::parse(text, g.alphabet()); };
  command("cayley-dist", "Cayley graph metric", {{"x", X}, {"y", X}}, [&](const Args& a) {
    return plain(to_string(cayley_dist(cpoint(a[0]), cpoint(a[1]))));
  });
  command("cayley-act", "Left action on the Cayley graph", {{"u", W}, {"x", X}},
          [&](const Args& a) {
            return plain(to_string(cayley_act(word(a[0]), cpoint(a[1]))));
          });
  std::size_t grid_points = 100;
  std::uint32_t grid_depth = 3;
  int grid_range = 2;
  {
    CLI::App* sub = command(
        "embed-compare", "Where the Cayley and Z^o embeddings of [w, wa] meet",
        {{"w", W}, {"a", "Generator a<k>"}}, [&](const Args& a) {
          const AlphabetIndex index = parse_index(a[1], g.alphabet());
          const auto report =
              embed_compare(word(a[0]), index, rational_grid(grid_points),
                            offset_grid(index, g.alphabet(), grid_depth, grid_range));
          std::string text = std::to_string(report.comparisons) + " comparisons, " +
                             std::to_string(report.coincidences.size()) + " coincidences";
          json list = json::array();
          for (const auto& c : report.coincidences) {
            const std::string t = CoordTraits<Rational>::format(c.t);
            text += "\n  t=" + t + " s=" + to_string(c.s);
            list.push_back({{"t", t}, {"s", to_string(c.s)}});
          }
          const bool endpoints = report.only_endpoints(g.alphabet(), index);
          return Output{text, json{{"comparisons", report.comparisons},
                                   {"coincidences", list},
                                   {"only_endpoints", endpoints}}};
        });
    sub->add_option("--grid", grid_points, "Rational grid k/N, k = 0..N")
        ->capture_default_str();
    sub->add_option("--depth", grid_depth, "Indices after a in the offset grid")
        ->capture_default_str();
    sub->add_option("--range", grid_range, "Offset grid entries in [-R, R]")
        ->capture_default_str();
  }
  std::size_t ball_radius = 2;
  std::uint32_t ball_letters = 2;
  std::size_t ball_limit = 100000;
  bool ball_dot = false;
  {
    CLI::App* sub = command(
        "ball", "Labelled Cayley ball around a word", {{"center", W}},
        [&](const Args& a) {
          const BallGraph b = ball_graph(word(a[0]), ball_radius, ball_letters, ball_limit);
          std::string text;
          if (ball_dot) {
            text = b.to_dot();
            text.pop_back();
          } else {
            text = std::to_string(b.vertices.size()) + " vertices, " +
                   std::to_string(b.edges.size()) + " edges, " +
                   (b.is_tree() ? "tree" : "not a tree");
          }
          return Output{text, json(), ok, b.to_json()};
        });
    sub->add_option("--radius", ball_radius, "Word length of the offsets")
        ->capture_default_str();
    sub->add_option("--letters", ball_letters, "Generators a1..aN")
        ->capture_default_str();
    sub->add_option("--max-vertices", ball_limit, "Refuse larger balls")
        ->capture_default_str();
    sub->add_flag("--dot", ball_dot, "Graphviz output (--json gives the graph as JSON)");
  }

  // topology
  command("ball-letter", "Is v in B(w, a)?", {{"w", W}, {"a", "Generator a<k>"}, {"v", W}},
          [&](const Args& a) {
            const bool in = in_letter_ball(word(a[0]), parse_index(a[1], g.alphabet()),
                                           word(a[2]));
            return Output{in ? "true" : "false", json{{"result", in}}};
          });
  command("ball-metric", "Is v in B(w, eps)?",
          {{"w", W}, {"eps", "Vector radius, e.g. [0,1]"}, {"v", W}}, [&](const Args& a) {
            const bool in = in_metric_ball(word(a[0]),
                                           parse_lex_vector(a[1], g.alphabet()), word(a[2]));
            return Output{in ? "true" : "false", json{{"result", in}}};
          });

  // demo
  std::size_t demo_depth = 20;
  {
    CLI::App* demo = app.add_subcommand("demo", "Worked examples");
    demo->require_subcommand(1);
    CLI::App* sub = demo->add_subcommand(
        "omega-plus-one", "Edge letters of <L(b), a_k ... a_1> in omega+1");
    sub->add_option("--depth", demo_depth, "Largest k")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::size_t{10000}));
    commands.push_back({sub, nullptr, [&] {
                          const auto rows = omega_plus_one_instability(demo_depth);
                          json list = json::array();
                          for (const auto& r : rows) {
                            list.push_back({{"k", r.k},
                                            {"word", to_string(r.word)},
                                            {"point", to_string(r.point)},
                                            {"edge", r.edge_letter ? to_string(*r.edge_letter)
                                                                   : std::string()}});
                          }
                          return Output{demo_table(rows), json{{"rows", list}}};
                        }});
  }

  // suite
  SuiteOptions suite_options;
  std::string suite_only;
  bool suite_timing = false;
  {
    CLI::App* sub = app.add_subcommand("suite", "Run the property suites");
    sub->add_option("--seed", suite_options.seed, "Random seed")->capture_default_str();
    sub->add_option("--samples", suite_options.samples, "Samples per random check")
        ->capture_default_str();
    sub->add_option("--check", suite_only, "Run only this check id (C1..C11, P-*)");
    sub->add_flag("--timing", suite_timing, "Show per-check wall time");
    commands.push_back({sub, nullptr, [&] {
                          std::vector<CheckResult> results;
                          if (suite_only.empty()) {
                            results = run_suite(suite_options);
                          } else {
                            results.push_back(run_check(suite_only, suite_options));
                          }
                          std::string text;
                          json list = json::array();
                          std::size_t passed = 0;
                          for (const auto& r : results) {
                            text += format_result(r, suite_timing) + "\n";
                            passed += r.passed ? 1 : 0;
                            list.push_back({{"id", r.id},
                                            {"title", r.title},
                                            {"passed", r.passed},
                                            {"cases", r.cases},
                                            {"detail", r.detail}});
                          }
                          text += std::to_string(passed) + " passed, " +
                                  std::to_string(results.size() - passed) + " failed";
                          return Output{text,
                                        json{{"checks", list},
                                             {"passed", passed},
                                             {"failed", results.size() - passed}},
                                        passed == results.size() ? ok : domain_error};
                        }});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return usage_error;
  }

  for (const auto& c : commands) {
    if (!c.app->parsed()) continue;
    try {
      Output o = c.action();
      if (g.json) {
        out << (o.json_text ? *o.json_text : o.data.dump()) << "\n";
      } else {
        out << o.text << "\n";
      }
      return o.status;
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n" << c.app->help();
      return usage_error;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return domain_error;
    } catch (const std::overflow_error& e) {
      err << "error: " << e.what() << "\n";
      return domain_error;
    }
  }
  err << app.help();
  return usage_error;
}

}  // namespace bigfree::cli
