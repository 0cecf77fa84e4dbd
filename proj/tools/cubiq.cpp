// Command-line front end: validate, realize, singular, ingest, homology.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cubiq/io.hpp"
#include "cubiq/pipeline.hpp"
#include "cubiq/realization.hpp"
#include "cubiq/singular.hpp"

using namespace cubiq;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

void emit(const nlohmann::ordered_json& doc, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << doc.dump(2) << "\n";
  else
    write_json(out, doc);
}

Field parse_field(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if (s.rfind("f:", 0) == 0) {
    const std::string digits = s.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw CLI::ValidationError("--field", "expected q or f:P");
    return Field::prime(std::stoull(digits));
  }
  throw CLI::ValidationError("--field", "expected q or f:P");
}

std::string describe(const Artifact& a) {
  if (const auto* q = std::get_if<Quiver>(&a))
    return "quiver with " + std::to_string(q->vertex_count()) + " vertices and " +
           std::to_string(q->arrow_count()) + " arrows" + (is_simple(*q) ? " (simple)" : "");
  if (const auto* k = std::get_if<CubicalSet>(&a)) {
    std::string s = "cubical set with generators per dimension [";
    for (int n = 0; n <= k->max_dim(); ++n) s += (n ? "," : "") + std::to_string(k->of_dim(n).size());
    return s + "]";
  }
  return "simplicial complex with " +
         std::to_string(std::get<SimplicialComplexInput>(a).facets.size()) + " facets";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quivers, cubical sets and their homology"};
  app.require_subcommand(1);

  std::string file, out, word, realize_word = "+", theory, field_text = "q";
  std::optional<int> max_dim;
  std::optional<std::size_t> power;
  bool json_out = false, no_loops = false;

  auto* validate = app.add_subcommand("validate", "Load and validate a file");
  validate->add_option("FILE", file)->required();

  auto* realize_cmd = app.add_subcommand("realize", "Quiver realization of a cubical set");
  realize_cmd->add_option("FILE", file)->required();
  realize_cmd->add_option("--word", realize_word, "Orientation word of the line digraph");
  realize_cmd->add_option("-o,--output", out, "Output file (stdout if omitted)");

  auto* singular_cmd = app.add_subcommand("singular", "Truncated singular cubical set of a quiver");
  singular_cmd->add_option("FILE", file)->required();
  singular_cmd->add_option("--word", word)->required();
  singular_cmd->add_option("--max-dim", max_dim)->required();
  singular_cmd->add_option("-o,--output", out);

  auto* ingest = app.add_subcommand("ingest", "Convert external inputs");
  ingest->require_subcommand(1);
  auto* ingest_simplicial = ingest->add_subcommand("simplicial", "Face-poset digraph of a simplicial complex");
  ingest_simplicial->add_option("FILE", file)->required();
  ingest_simplicial->add_option("-o,--output", out);

  auto* homology = app.add_subcommand("homology", "Compute homology");
  homology->add_option("THEORY", theory)
      ->required()
      ->check(CLI::IsMember({"cubical", "cell", "path", "cubical-path", "mpath"}));
  homology->add_option("FILE", file)->required();
  homology->add_option("--word", word);
  homology->add_option("--power", power, "Completion power M");
  homology->add_option("--max-dim", max_dim);
  homology->add_option("--field", field_text, "q or f:P");
  homology->add_flag("--no-loops", no_loops, "Do not complete vertex pairs (v, v)");
  homology->add_flag("--json", json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) {
      const Artifact a = load_artifact(file);
      std::cout << "ok: " << describe(a) << "\n";
    } else if (realize_cmd->parsed()) {
      const Artifact a = load_artifact(file);
      const auto* k = std::get_if<CubicalSet>(&a);
      if (!k) throw ValidationError("realize needs a cubical set");
      emit(to_json(realize(*k, OrientationWord(realize_word))), out);
    } else if (singular_cmd->parsed()) {
      const Artifact a = load_artifact(file);
      const auto* q = std::get_if<Quiver>(&a);
      if (!q) throw ValidationError("singular needs a quiver");
      if (*max_dim < 0) throw ValidationError("--max-dim must be nonnegative");
      SingularCubicalSet s(std::make_shared<const Quiver>(*q), OrientationWord(word), *max_dim);
      emit(to_json(s.presentation()), out);
    } else if (ingest_simplicial->parsed()) {
      const Artifact a = load_artifact(file);
      const auto* s = std::get_if<SimplicialComplexInput>(&a);
      if (!s) throw ValidationError("ingest simplicial needs a simplicial file");
      emit(to_json(simplicial_to_digraph(*s).quiver()), out);
    } else if (homology->parsed()) {
      HomologyParams params;
      try {
        params.field = parse_field(field_text);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      if (!word.empty()) params.word = word;
      params.power = power;
      params.max_dim = max_dim;
      params.include_loops = !no_loops;
      const HomologyResult r = compute_homology(parse_theory(theory), load_artifact(file), params);
      if (json_out)
        std::cout << report_json(r).dump(2) << "\n";
      else
        std::cout << report_text(r);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
