// Command-line surface: parsing into Command values and dispatch to the
// library. Kept in a header so the test suites can drive it in-process.
#pragma once

#include "kollar/kollar.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace kollar::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kTheoremViolation = 3 };

struct ResolveCmd { AdeKind kind; int m; };
struct HjCmd { long long n; long long q; };
using ComponentTarget = std::variant<int, Fork, BlowupLocation>;
struct ComponentCmd { AdeKind kind; int m; ComponentTarget target; };
struct AlphaP1Cmd { std::vector<Rational> coefficients; };
struct AlphaGroupCmd { GroupClass group; };
struct CatalogCmd { AdeKind kind; int m; std::string out_file; };
struct VerifyCmd { AdeKind kind; int max_m; unsigned jobs; };
struct WeaklyExceptionalCmd { AdeKind kind; int m; };
struct SemistableCmd { AdeKind kind; int m; };

struct Command {
  std::variant<ResolveCmd, HjCmd, ComponentCmd, AlphaP1Cmd, AlphaGroupCmd, CatalogCmd, VerifyCmd,
               WeaklyExceptionalCmd, SemistableCmd>
      action;
  bool json = false;
};

struct Result {
  int status = kOk;
  std::string out;
  std::string err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Help requested; carries the formatted help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline GroupClass parse_group(const std::string& text) {
  if (text == "A5") return group::Icosahedral{};
  if (text == "S4") return group::Octahedral{};
  if (text == "A4") return group::Tetrahedral{};
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (text.rfind(prefix, 0) != 0) return std::nullopt;
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(text.substr(prefix.size()), &used);
    } catch (const std::logic_error&) {
      return std::nullopt;
    }
    if (used + prefix.size() != text.size()) return std::nullopt;
    return m;
  };
  try {
    if (auto m = param("D:")) return make_dihedral(*m);
    if (auto m = param("C:")) return make_cyclic(*m);
  } catch (const InvalidParameters& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown group '" + text + "' (expected A5, S4, A4, D:<m> or C:<m>)");
}

inline Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"Kollár components of surface singularities", "kollar"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit canonical JSON");

  std::string kind_text;
  int m = 0;
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("kind", kind_text, "A, D or E")->required()->check(CLI::IsMember({"A", "D", "E"}));
  };
  auto add_kind_m = [&](CLI::App* sub) {
    add_kind(sub);
    sub->add_option("m", m, "Rank")->required();
  };

  auto* resolve = app.add_subcommand("resolve", "Minimal resolution graph of a Du Val singularity");
  add_kind_m(resolve);

  long long n = 0, q = 0;
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung chain of 1/n(1,q)");
  hj->add_option("n", n)->required();
  hj->add_option("q", q)->required();

  auto* component = app.add_subcommand("component", "One Kollár component");
  add_kind_m(component);
  int vertex = 0;
  bool fork = false;
  std::string blowup;
  auto* target_group = component->add_option_group("target", "Which extraction");
  auto* vertex_opt = target_group->add_option("--vertex", vertex, "Extract vertex k");
  target_group->add_flag("--fork", fork, "Extract the fork (D, E)");
  target_group->add_option("--blowup", blowup, "node:<k> or tail (A only)");
  target_group->require_option(1);

  std::vector<std::string> coefficient_text;
  auto* alpha_p1 = app.add_subcommand("alpha-p1", "Alpha of (P^1, sum a_i P_i)");
  alpha_p1->add_option("coefficients", coefficient_text, "Boundary coefficients p/q");

  std::string group_text;
  auto* alpha_group = app.add_subcommand("alpha-group", "Invariant alpha of P^1 under a finite group");
  alpha_group->add_option("group", group_text, "A5, S4, A4, D:<m> or C:<m>")->required();

  std::string out_file;
  auto* catalog = app.add_subcommand("catalog", "All catalogued components with the pairwise check");
  add_kind_m(catalog);
  catalog->add_flag("--json", json, "Emit canonical JSON");
  catalog->add_option("--out", out_file, "Append the JSON snapshot to FILE");

  int max_m = 0;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Pairwise alpha-sum check over a whole family");
  add_kind(verify);
  verify->add_option("--max-m", max_m, "Largest rank")->required();
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* weak = app.add_subcommand("weakly-exceptional", "Whether some component has alpha >= 1");
  add_kind_m(weak);
  auto* semistable = app.add_subcommand("semistable", "The component with alpha >= 1/2");
  add_kind_m(semistable);

  for (auto* sub : {resolve, hj, component, alpha_p1, alpha_group, verify, weak, semistable})
    sub->add_flag("--json", json, "Emit canonical JSON");

  std::vector<std::string> argv_storage{"kollar"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  cmd.json = json;
  const AdeKind kind = kind_text.empty() ? AdeKind::A : *parse_ade_kind(kind_text);
  if (resolve->parsed()) {
    cmd.action = ResolveCmd{kind, m};
  } else if (hj->parsed()) {
    cmd.action = HjCmd{n, q};
  } else if (component->parsed()) {
    ComponentTarget target;
    if (*vertex_opt) {
      target = vertex;
    } else if (fork) {
      target = Fork{};
    } else {
      try {
        target = location_from_token(blowup);
      } catch (const InvalidLocation& e) {
        throw UsageError(e.what());
      }
    }
    cmd.action = ComponentCmd{kind, m, target};
  } else if (alpha_p1->parsed()) {
    AlphaP1Cmd c;
    for (const auto& t : coefficient_text) {
      try {
        c.coefficients.push_back(parse_rational(t));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad rational: ") + e.what());
      }
    }
    cmd.action = c;
  } else if (alpha_group->parsed()) {
    cmd.action = AlphaGroupCmd{parse_group(group_text)};
  } else if (catalog->parsed()) {
    cmd.action = CatalogCmd{kind, m, out_file};
  } else if (verify->parsed()) {
    cmd.action = VerifyCmd{kind, max_m, jobs};
  } else if (weak->parsed()) {
    cmd.action = WeaklyExceptionalCmd{kind, m};
  } else {
    cmd.action = SemistableCmd{kind, m};
  }
  return cmd;
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string describe_different(const Different& d) {
  if (d.points.empty()) return "0";
  std::vector<std::string> terms;
  for (const auto& p : d.points) terms.push_back(to_display_string(p.coefficient()) + " [" + p.label + "]");
  return join(terms, " + ");
}

inline void write_component(std::ostream& os, const KollarComponent& c) {
  os << "source:  " << to_string(c.source) << '\n'
     << "diff:    " << describe_different(c.different) << '\n'
     << "indices: ";
  std::vector<std::string> idx;
  for (const auto& i : c.different.sorted_indices()) idx.push_back(i.str());
  os << (idx.empty() ? "-" : join(idx, ", ")) << '\n'
     << "delta:   " << to_display_string(c.delta) << '\n'
     << "alpha:   " << to_display_string(c.alpha) << '\n';
}

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

inline void write_catalog(std::ostream& os, const Catalog& cat, const TheoremReport& rep) {
  os << descriptor(cat.singularity()) << ": " << cat.size() << " components\n";
  os << pad("source", 26) << pad("alpha", 10) << pad("delta", 10) << "diff indices\n";
  for (const auto& c : cat.components()) {
    std::vector<std::string> idx;
    for (const auto& i : c.different.sorted_indices()) idx.push_back(i.str());
    os << pad(to_string(c.source), 26) << pad(to_display_string(c.alpha), 10) << pad(to_display_string(c.delta), 10)
       << (idx.empty() ? "-" : join(idx, ",")) << '\n';
  }
  os << "pairs: " << rep.pairs << ", max alpha-sum: " << (rep.max_sum ? to_display_string(*rep.max_sum) : "-")
     << ", " << rep.violations.size() << " violations\n";
}

}  // namespace detail

/// Runs one parsed command. Library errors propagate to the caller.
inline Result dispatch(const Command& cmd) {
  Result res;
  std::ostringstream os;
  const bool as_json = cmd.json;

  struct Visitor {
    std::ostringstream& os;
    bool as_json;
    Result& res;

    void operator()(const ResolveCmd& c) const {
      const DualGraph g = build_ade(c.kind, c.m);
      const IntMatrix mat = intersection_matrix(g);
      const Integer order = group_order(g);
      const DiscrepancyVector disc = canonical_discrepancies(g);
      if (as_json) {
        os << json{{"singularity", descriptor(DuVal{c.kind, c.m})},
                   {"graph", to_json(g)},
                   {"matrix", to_json(mat)},
                   {"group_order", integer_json(order)},
                   {"discrepancies", to_json(disc)}}
                  .dump()
           << '\n';
        return;
      }
      os << descriptor(DuVal{c.kind, c.m}) << " minimal resolution\n";
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<std::string> nb;
        for (std::size_t j : g.neighbors(i)) nb.push_back(g.vertex(j).id);
        os << "  " << detail::pad(g.vertex(i).id, 6) << detail::pad(std::to_string(g.vertex(i).self_int), 5)
           << "-- " << (nb.empty() ? "-" : detail::join(nb, " ")) << '\n';
      }
      os << "group order: " << order.str() << '\n'
         << "discrepancies: " << (disc.all_zero() ? "all zero (crepant)" : "nonzero") << '\n';
    }

    void operator()(const HjCmd& c) const {
      const CyclicQuotient s(c.n, c.q);
      const std::vector<int> chain = hj_chain(s);
      if (as_json) {
        os << json{{"n", s.n()}, {"q", s.q()}, {"chain", chain}, {"du_val", s.is_du_val()}}.dump() << '\n';
        return;
      }
      std::vector<std::string> parts;
      for (int b : chain) parts.push_back(std::to_string(b));
      os << s.n() << "/" << s.q() << " = [" << detail::join(parts, ", ") << "]\n";
    }

    void operator()(const ComponentCmd& c) const {
      KollarComponent comp;
      if (const auto* v = std::get_if<int>(&c.target)) {
        comp = extract_vertex(c.kind, c.m, *v);
      } else if (std::holds_alternative<Fork>(c.target)) {
        comp = extract_vertex(c.kind, c.m, Fork{});
      } else {
        if (c.kind != AdeKind::A) throw InvalidParameters("point blow-ups are only catalogued on A_m");
        comp = extract_blowup(c.m, std::get<BlowupLocation>(c.target));
      }
      if (as_json) {
        os << to_json(comp).dump() << '\n';
        return;
      }
      detail::write_component(os, comp);
    }

    void operator()(const AlphaP1Cmd& c) const {
      const Rational a = alpha_p1(Boundary(c.coefficients));
      if (as_json) {
        os << json{{"alpha", rational_json(a)}}.dump() << '\n';
        return;
      }
      os << to_display_string(a) << '\n';
    }

    void operator()(const AlphaGroupCmd& c) const {
      const Rational a = alpha_g_p1(c.group);
      if (as_json) {
        os << json{{"group", to_string(c.group)}, {"smallest_orbit", smallest_orbit(c.group)}, {"alpha", rational_json(a)}}
                  .dump()
           << '\n';
        return;
      }
      os << to_display_string(a) << '\n';
    }

    void operator()(const CatalogCmd& c) const {
      const Catalog cat = enumerate(make_du_val(c.kind, c.m));
      const TheoremReport rep = verify_theorem(cat);
      const json snapshot = to_json(cat, rep);
      if (!c.out_file.empty()) append_snapshot(c.out_file, snapshot);
      if (as_json) {
        os << snapshot.dump() << '\n';
      } else {
        detail::write_catalog(os, cat, rep);
      }
      if (!rep.holds()) res.status = kTheoremViolation;
    }

    void operator()(const VerifyCmd& c) const {
      const FamilyReport rep = verify_family(c.kind, c.max_m, c.jobs);
      if (as_json) {
        os << to_json(rep).dump() << '\n';
      } else {
        os << "verified " << rep.singularities.size() << " singularities of type " << to_char(c.kind)
           << " (m <= " << c.max_m << "): " << rep.pairs << " pairs, max alpha-sum "
           << (rep.max_sum ? to_display_string(*rep.max_sum) : "-") << ", " << rep.violations.size()
           << " violations\n";
        for (const auto& [name, v] : rep.violations)
          os << "  " << name << ": " << v.first << " + " << v.second << " = " << to_display_string(v.sum) << '\n';
      }
      if (!rep.holds()) res.status = kTheoremViolation;
    }

    void operator()(const WeaklyExceptionalCmd& c) const {
      const Catalog cat = enumerate(make_du_val(c.kind, c.m));
      const bool w = weakly_exceptional(cat);
      if (as_json) {
        os << json{{"singularity", descriptor(cat.singularity())}, {"weakly_exceptional", w}}.dump() << '\n';
        return;
      }
      os << (w ? "true" : "false") << '\n';
    }

    void operator()(const SemistableCmd& c) const {
      const auto comp = semistable_component(make_du_val(c.kind, c.m));
      if (as_json) {
        os << json{{"singularity", descriptor(DuVal{c.kind, c.m})},
                   {"component", comp ? to_json(*comp) : json(nullptr)}}
                  .dump()
           << '\n';
        return;
      }
      if (comp) {
        detail::write_component(os, *comp);
      } else {
        os << "none\n";
      }
    }
  };

  std::visit(Visitor{os, as_json, res}, cmd.action);
  res.out = os.str();
  return res;
}

/// Parses and dispatches, mapping every failure to its exit code.
inline Result run(const std::vector<std::string>& args) {
  Result res;
  try {
    return dispatch(parse_command(args));
  } catch (const HelpRequested& h) {
    res.out = h.what();
    res.status = kOk;
  } catch (const UsageError& e) {
    res.err = std::string("usage error: ") + e.what() + "\n";
    res.status = kUsageError;
  } catch (const UniquenessViolated& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.status = kTheoremViolation;
  } catch (const Error& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.status = kDomainError;
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.status = kDomainError;
  }
  return res;
}

}  // namespace kollar::cli
