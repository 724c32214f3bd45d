// SPDX-License-Identifier: Apache-2.0
//
// orthond: generalized-orthocenter constructions for triangles in R^n.
//
//   orthond analyze  <scene.json>   verify every theorem clause, emit a report
//   orthond locus    <scene.json>   parametrize the circumcenter/orthocenter loci
//   orthond plotdata <scene.json>   labeled points, Euler line and sphere samples
//   orthond generate                emit seeded random scenes
//
// Exit status: 0 all clauses pass, 1 some clause fails, 2 input/usage error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ortho/generate.hpp"
#include "ortho/report.hpp"

namespace {

struct CommonFlags {
  std::optional<std::string> backend;
  std::optional<std::string> norm;
  std::optional<double> tol;
  std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--backend", flags->backend, "Scalar backend override: exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--norm", flags->norm, "Norm override: euclidean|p:<value> (p >= 1, inf ok)");
  cmd->add_option("--tol", flags->tol, "Float-backend relative tolerance override");
  cmd->add_option("--out", flags->out, "Write the document to this path instead of stdout");
}

ortho::Scene load_scene(const std::string& path, const CommonFlags& flags) {
  ortho::Scene sc = ortho::Scene::load_file(path);
  if (flags.backend)
    sc.backend = *flags.backend == "exact" ? ortho::Scene::Backend::exact
                                           : ortho::Scene::Backend::floating;
  if (flags.norm) {
    auto ns = ortho::NormSpec::parse(*flags.norm);
    if (!ns) throw ortho::SceneError("bad --norm '" + *flags.norm + "'");
    sc.norm = *ns;
  }
  if (flags.tol) {
    if (!(*flags.tol > 0)) throw ortho::SceneError("--tol must be positive");
    sc.tol = *flags.tol;
  }
  return sc;
}

void emit(const std::string& document, const CommonFlags& flags) {
  if (flags.out)
    ortho::write_file_atomic(*flags.out, document);
  else
    std::cout << document;
}

int structured_error(const char* kind, const std::string& message) {
  std::cerr << "{\"error\": {\"kind\": \"" << kind << "\", \"message\": "
            << nlohmann::json(message).dump() << "}}\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized orthocenters, orthocentric systems and Feuerbach spheres in R^n"};
  app.require_subcommand(1);

  std::string scene_path;
  CommonFlags analyze_flags, locus_flags, plot_flags;

  CLI::App* analyze = app.add_subcommand("analyze", "Verify every theorem clause for a scene");
  analyze->add_option("scene", scene_path, "Scene file (JSON)")->required();
  add_common(analyze, &analyze_flags);

  CLI::App* locus = app.add_subcommand("locus", "Emit the circumcenter locus parametrization");
  locus->add_option("scene", scene_path, "Scene file (JSON)")->required();
  add_common(locus, &locus_flags);

  long samples = 64;
  CLI::App* plot = app.add_subcommand("plotdata", "Emit labeled plot data for a scene");
  plot->add_option("scene", scene_path, "Scene file (JSON)")->required();
  plot->add_option("--samples", samples, "Surface samples per sphere (0: centers and radii only)")
      ->check(CLI::NonNegativeNumber);
  add_common(plot, &plot_flags);

  ortho::GenerateConfig gen_cfg;
  std::string gen_out = ".";
  CLI::App* generate = app.add_subcommand("generate", "Emit seeded random rational scenes");
  generate->add_option("--seed", gen_cfg.seed, "RNG seed")->required();
  generate->add_option("--dim", gen_cfg.dimension, "Ambient dimension (>= 2)")->required();
  generate->add_option("--count", gen_cfg.count, "Number of scenes")->required();
  generate->add_option("--bound", gen_cfg.bound, "Coordinate bound");
  generate->add_option("--max-den", gen_cfg.max_den, "Largest denominator");
  generate->add_option("--out", gen_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      ortho::AnalyzeOutcome outcome = ortho::analyze_scene(load_scene(scene_path, analyze_flags));
      emit(outcome.document, analyze_flags);
      return outcome.all_pass ? 0 : 1;
    }
    if (locus->parsed()) {
      emit(ortho::locus_document(load_scene(scene_path, locus_flags)), locus_flags);
      return 0;
    }
    if (plot->parsed()) {
      emit(ortho::plotdata_document(load_scene(scene_path, plot_flags), samples), plot_flags);
      return 0;
    }
    if (generate->parsed()) {
      std::filesystem::create_directories(gen_out);
      std::vector<ortho::Scene> scenes = ortho::generate_scenes(gen_cfg);
      for (std::size_t i = 0; i < scenes.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "scene_%04zu.json", i);
        const std::string path = (std::filesystem::path(gen_out) / name).string();
        ortho::write_file_atomic(path, scenes[i].source_text);
        std::cout << path << "\n";
      }
      return 0;
    }
  } catch (const ortho::SceneError& e) {
    return structured_error("input", e.what());
  } catch (const ortho::GeometryError& e) {
    return structured_error("geometry", e.what());
  } catch (const std::invalid_argument& e) {
    return structured_error("usage", e.what());
  } catch (const std::exception& e) {
    return structured_error("internal", e.what());
  }
  return 2;
}
