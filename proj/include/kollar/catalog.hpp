// Catalogs of the explicit Kollár components of a surface singularity and
// the checks run over them: pairwise alpha sums, weak exceptionality and the
// K-semistable component.
//
// A catalog lists the constructions implemented here (vertex extractions and
// single point blow-ups); it is not a classification of all components.
#pragma once

#include "kollar/component.hpp"
#include "kollar/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace kollar {

struct DuVal {
  AdeKind kind;
  int m;
  friend bool operator==(const DuVal&, const DuVal&) = default;
};

using Singularity = std::variant<DuVal, CyclicQuotient>;

inline Singularity make_du_val(AdeKind kind, int m) {
  build_ade(kind, m);  // validates the range
  return DuVal{kind, m};
}

/// "A4", "D7", "E8" or "1/7(1,3)".
inline std::string descriptor(const Singularity& s) {
  if (const auto* d = std::get_if<DuVal>(&s)) return std::string(1, to_char(d->kind)) + std::to_string(d->m);
  return std::get<CyclicQuotient>(s).descriptor();
}

inline Singularity parse_singularity(const std::string& text) {
  if (text.size() > 1 && parse_ade_kind(text.substr(0, 1))) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(text.substr(1), &used);
      if (used + 1 == text.size()) return make_du_val(*parse_ade_kind(text.substr(0, 1)), m);
    } catch (const std::logic_error&) {
    }
  }
  long long n = 0, q = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "1/%lld(1,%lld)%c", &n, &q, &tail) == 2) return CyclicQuotient(n, q);
  throw InvalidParameters("unrecognized singularity '" + text + "'");
}

class Catalog {
 public:
  explicit Catalog(Singularity s) : singularity_(std::move(s)) {}

  const Singularity& singularity() const noexcept { return singularity_; }
  const std::vector<KollarComponent>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }

  /// Appends unless a component with the same canonical key is present.
  bool add(KollarComponent c) {
    if (!keys_.insert(c.canonical_key).second) return false;
    components_.push_back(std::move(c));
    return true;
  }

 private:
  Singularity singularity_;
  std::vector<KollarComponent> components_;
  std::set<std::string> keys_;
};

inline Catalog enumerate(const Singularity& s) {
  Catalog cat(s);
  auto add_unique = [&](KollarComponent c) {
    const std::string key = c.canonical_key;
    if (!cat.add(std::move(c))) throw std::logic_error("duplicate canonical key " + key);
  };
  if (const auto* d = std::get_if<DuVal>(&s)) {
    if (d->kind == AdeKind::A) {
      for (int k = 1; 2 * k <= d->m + 1; ++k) add_unique(extract_vertex(AdeKind::A, d->m, k));
      for (int k = 1; 2 * k <= d->m; ++k) add_unique(extract_blowup(d->m, node_location(k)));
      add_unique(extract_blowup(d->m, TailInterior{vertex_label(1)}));
    } else {
      add_unique(extract_vertex(d->kind, d->m, Fork{}));
    }
    return cat;
  }
  const auto& c = std::get<CyclicQuotient>(s);
  const int r = static_cast<int>(hj_chain(c).size());
  for (int k = 1; k <= r; ++k) {
    try {
      cat.add(extract_chain_vertex(c, k));
    } catch (const NotPlt&) {
    } catch (const UnsupportedConfiguration&) {
    }
  }
  return cat;
}

struct Violation {
  std::string first;
  std::string second;
  Rational sum;
};

struct TheoremReport {
  std::size_t pairs = 0;
  /// Largest alpha_X + alpha_Y over distinct pairs; nullopt with no pairs.
  std::optional<Rational> max_sum;
  /// Pairs of distinct components whose alpha-sum is at least 1, named by
  /// their sources.
  std::vector<Violation> violations;

  bool holds() const noexcept { return violations.empty(); }
};

inline TheoremReport verify_theorem(const Catalog& cat) {
  TheoremReport rep;
  const auto& cs = cat.components();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Rational sum = cs[i].alpha + cs[j].alpha;
      ++rep.pairs;
      if (!rep.max_sum || sum > *rep.max_sum) rep.max_sum = sum;
      if (sum >= 1) rep.violations.push_back({to_string(cs[i].source), to_string(cs[j].source), sum});
    }
  }
  return rep;
}

inline TheoremReport verify_theorem(const Singularity& s) { return verify_theorem(enumerate(s)); }

inline bool weakly_exceptional(const Catalog& cat) {
  return std::any_of(cat.components().begin(), cat.components().end(),
                     [](const KollarComponent& c) { return c.alpha >= 1; });
}

inline bool weakly_exceptional(const Singularity& s) { return weakly_exceptional(enumerate(s)); }

/// The catalog component with alpha >= 1/2, if any. Two such components
/// would contradict uniqueness of the K-semistable component and raise
/// UniquenessViolated.
inline std::optional<KollarComponent> semistable_component(const Catalog& cat) {
  std::optional<KollarComponent> found;
  for (const auto& c : cat.components()) {
    if (c.alpha * 2 < 1) continue;
    if (found)
      throw UniquenessViolated(descriptor(cat.singularity()) + ": both " + to_string(found->source) + " and " +
                               to_string(c.source) + " have alpha >= 1/2");
    found = c;
  }
  return found;
}

inline std::optional<KollarComponent> semistable_component(const Singularity& s) {
  return semistable_component(enumerate(s));
}

/// Aggregate of verify_theorem over a whole ADE family.
struct FamilyReport {
  AdeKind kind = AdeKind::A;
  int max_m = 0;
  std::vector<std::string> singularities;
  std::size_t pairs = 0;
  std::optional<Rational> max_sum;
  std::vector<std::pair<std::string, Violation>> violations;

  bool holds() const noexcept { return violations.empty(); }
};

/// Members of the family with m <= max_m, in increasing m.
inline std::vector<Singularity> family_members(AdeKind kind, int max_m) {
  std::vector<Singularity> out;
  const int lo = kind == AdeKind::A ? 1 : kind == AdeKind::D ? 4 : 6;
  const int hi = kind == AdeKind::E ? std::min(max_m, 8) : max_m;
  for (int m = lo; m <= hi; ++m) out.push_back(DuVal{kind, m});
  return out;
}

/// Runs verify_theorem on every member; `jobs` worker threads share the
/// members round-robin. The merged result does not depend on `jobs`.
inline FamilyReport verify_family(AdeKind kind, int max_m, unsigned jobs = 1) {
  const std::vector<Singularity> members = family_members(kind, max_m);
  std::vector<TheoremReport> reports(members.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(members.size(), 1))));
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < members.size(); i += jobs) reports[i] = verify_theorem(members[i]);
    }));
  }
  for (auto& f : workers) f.get();

  FamilyReport out;
  out.kind = kind;
  out.max_m = max_m;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string name = descriptor(members[i]);
    out.singularities.push_back(name);
    out.pairs += reports[i].pairs;
    if (reports[i].max_sum && (!out.max_sum || *reports[i].max_sum > *out.max_sum)) out.max_sum = reports[i].max_sum;
    for (auto& v : reports[i].violations) out.violations.emplace_back(name, std::move(v));
  }
  return out;
}

}  // namespace kollar
