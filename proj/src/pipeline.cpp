#include "cubiq/pipeline.hpp"

#include <functional>
#include <sstream>

#include "cubiq/cube.hpp"
#include "cubiq/cubical_homology.hpp"
#include "cubiq/mpath_homology.hpp"
#include "cubiq/path_homology.hpp"
#include "cubiq/realization.hpp"
#include "cubiq/singular.hpp"

namespace cubiq {

namespace {

// Length of the longest arrow path, or nothing when Q has a directed cycle.
std::optional<int> longest_path(const Quiver& q) {
  std::vector<int> state(q.vertex_count(), 0), depth(q.vertex_count(), 0);
  bool cyclic = false;
  std::function<int(std::size_t)> visit = [&](std::size_t v) -> int {
    if (state[v] == 2) return depth[v];
    if (state[v] == 1) {
      cyclic = true;
      return 0;
    }
    state[v] = 1;
    int best = 0;
    for (std::size_t a : q.out_arrows(v)) best = std::max(best, 1 + visit(q.arrow(a).tgt));
    state[v] = 2;
    return depth[v] = best;
  };
  int best = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) best = std::max(best, visit(v));
  if (cyclic) return std::nullopt;
  return best;
}

int path_degree(const Quiver& q, const HomologyParams& p) {
  if (p.max_dim) {
    if (*p.max_dim < 0) throw ValidationError("--max-dim must be nonnegative");
    return *p.max_dim;
  }
  return longest_path(q).value_or(kDefaultPathDegree);
}

void require_rationals(const HomologyParams& p, Theory t) {
  if (!p.field.is_rational())
    throw ValidationError(theory_name(t) + " homology is computed over Q only");
}

template <class T>
const T& expect(const Artifact& a, const char* what) {
  if (const T* x = std::get_if<T>(&a)) return *x;
  throw ValidationError(std::string("this theory needs a ") + what + " input");
}

Digraph digraph_of(const Artifact& a) {
  if (const auto* s = std::get_if<SimplicialComplexInput>(&a)) return simplicial_to_digraph(*s);
  return to_digraph(expect<Quiver>(a, "quiver or simplicial"));
}

}  // namespace

Theory parse_theory(const std::string& name) {
  if (name == "cubical") return Theory::Cubical;
  if (name == "cell") return Theory::Cell;
  if (name == "path") return Theory::Path;
  if (name == "cubical-path" || name == "cubical_path") return Theory::CubicalPath;
  if (name == "mpath") return Theory::MPath;
  throw ValidationError("unknown homology theory \"" + name + "\"");
}

std::string theory_name(Theory t) {
  switch (t) {
    case Theory::Cubical: return "cubical";
    case Theory::Cell: return "cell";
    case Theory::Path: return "path";
    case Theory::CubicalPath: return "cubical-path";
    case Theory::MPath: return "mpath";
  }
  return "?";
}

HomologyResult compute_homology(Theory theory, const Artifact& input, const HomologyParams& p) {
  HomologyResult r;
  r.theory = theory;
  if (p.max_dim && *p.max_dim < 0) throw ValidationError("--max-dim must be nonnegative");
  switch (theory) {
    case Theory::Cubical: {
      const CubicalSet& k = expect<CubicalSet>(input, "cubical set");
      r.report = normalized_cubical_complex(k, p.max_dim, p.field).homology();
      r.params.push_back({"max_dim", std::to_string(static_cast<int>(r.report.betti.size()) - 1)});
      break;
    }
    case Theory::Cell: {
      const Quiver& q = expect<Quiver>(input, "quiver");
      const OrientationWord w(p.word.value_or("+"));
      const int n = p.max_dim.value_or(kDefaultCellTruncation);
      SingularCubicalSet s(std::make_shared<const Quiver>(q), w, n);
      r.report = normalized_cubical_complex(s.presentation(), n, p.field).homology();
      r.params.push_back({"word", w.str()});
      r.params.push_back({"max_dim", std::to_string(n)});
      break;
    }
    case Theory::Path: {
      require_rationals(p, theory);
      const Digraph g = digraph_of(input);
      const int top = path_degree(g.quiver(), p);
      r.report = path_complex(g, top).complex.homology();
      r.params.push_back({"max_dim", std::to_string(top)});
      break;
    }
    case Theory::CubicalPath: {
      require_rationals(p, theory);
      const CubicalSet& k = expect<CubicalSet>(input, "cubical set");
      std::optional<Digraph> g;
      if (!p.word) {
        if (!is_simple_cubical(k))
          throw ValidationError("path homology without a word needs a simple cubical set");
        g.emplace(to_digraph(realize(k, OrientationWord("+"))));
      } else {
        const OrientationWord w(*p.word);
        if (w.length() < 2) throw ValidationError("the word must have length at least 2");
        g.emplace(to_digraph(realize(k, w)));
        r.params.push_back({"word", w.str()});
      }
      const int top = path_degree(g->quiver(), p);
      r.report = path_complex(*g, top).complex.homology();
      r.params.push_back({"max_dim", std::to_string(top)});
      break;
    }
    case Theory::MPath: {
      require_rationals(p, theory);
      Quiver q;
      if (const auto* k = std::get_if<CubicalSet>(&input))
        q = realize(*k, OrientationWord("+"));
      else
        q = expect<Quiver>(input, "quiver or cubical set");
      const CompletionConfig cfg{p.power, p.include_loops};
      const int top = path_degree(q, p);
      const MPathComplex c = mpath_complex(q, cfg, top);
      r.report = c.omega.complex.homology();
      r.params.push_back({"power", std::to_string(c.completion.power)});
      r.params.push_back({"include_loops", p.include_loops ? "true" : "false"});
      r.params.push_back({"max_dim", std::to_string(top)});
      break;
    }
  }
  bool empty = true;
  for (std::size_t x : r.report.chain_ranks) empty = empty && x == 0;
  if (empty) {
    r.report.betti.clear();
    r.report.chain_ranks.clear();
    r.report.boundary_ranks.clear();
  }
  return r;
}

nlohmann::ordered_json report_json(const HomologyResult& r) {
  nlohmann::ordered_json j;
  j["theory"] = theory_name(r.theory);
  j["field"] = r.report.field.name();
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["chain_ranks"] = r.report.chain_ranks;
  j["boundary_ranks"] = r.report.boundary_ranks;
  j["betti"] = r.report.betti;
  j["valid_up_to"] = r.report.valid_up_to;
  return j;
}

std::string report_text(const HomologyResult& r) {
  std::ostringstream out;
  out << "theory: " << theory_name(r.theory) << "\n";
  out << "field: " << r.report.field.name() << "\n";
  for (const auto& [k, v] : r.params) out << k << ": " << v << "\n";
  if (r.report.betti.empty()) {
    out << "empty complex\n";
    return out.str();
  }
  out << "degree  rank  betti\n";
  for (std::size_t p = 0; p < r.report.betti.size(); ++p) {
    out << p << "       " << r.report.chain_ranks[p] << "     " << r.report.betti[p];
    if (static_cast<int>(p) > r.report.valid_up_to) out << "  (unreliable: beyond truncation)";
    out << "\n";
  }
  out << "valid up to degree " << r.report.valid_up_to << "\n";
  return out.str();
}

}  // namespace cubiq
