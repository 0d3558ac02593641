// grpd: batch front end for the finite-groupoid library. Every verb prints
// deterministic machine lines; --human re-renders the same lines as an
// aligned table. Exit codes: 0 success/true, 1 validation failure/false,
// 2 usage error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grpd/algebra.hpp"
#include "grpd/analysis.hpp"
#include "grpd/corpus.hpp"
#include "grpd/morphism.hpp"
#include "grpd/textio.hpp"
#include "grpd/tiling.hpp"

namespace {

using namespace grpd;

void emit(const std::vector<std::string>& lines, bool human) {
  if (!human) {
    for (const auto& line : lines) std::cout << line << "\n";
    return;
  }
  // Human tables are derived from the machine lines: pad token columns.
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> widths;
  for (const auto& line : lines) {
    std::istringstream ss(line);
    std::vector<std::string> row;
    std::string tok;
    while (ss >> tok) row.push_back(tok);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], row[i].size());
    }
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out += row[i];
      if (i + 1 < row.size()) out += std::string(widths[i] - row[i].size(), ' ');
    }
    std::cout << out << "\n";
  }
}

// ---------------------------------------------------------------------------
// Morphism and homotopy files. A morphism file names its endpoint groupoids
// and lists "fB: x -> x'" / "fG: g -> g'" assignments; a homotopy file holds
// two such blocks prefixed f1./f2. plus "h: x -> g'" lines.
// ---------------------------------------------------------------------------

struct MapLines {
  std::vector<std::pair<std::string, std::string>> fb;
  std::vector<std::pair<std::string, std::string>> fg;
};

struct MorphismFile {
  std::string source_path;
  std::string target_path;
  MapLines f;
  MapLines f1;
  MapLines f2;
  std::vector<std::pair<std::string, std::string>> h;
};

MorphismFile parse_morphism_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("ParseError " + path + ":0: cannot open file");
  MorphismFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head) || head[0] == '#') continue;
    auto expect_arrow = [&](const char* what) {
      std::string from, arrow, to;
      if (!(ss >> from >> arrow >> to) || arrow != "->") {
        throw ParseError("ParseError " + path + ":" + std::to_string(lineno) +
                         ": expected '" + what + " <from> -> <to>'");
      }
      return std::make_pair(from, to);
    };
    if (head == "source:") {
      ss >> out.source_path;
    } else if (head == "target:") {
      ss >> out.target_path;
    } else if (head == "fB:") {
      out.f.fb.push_back(expect_arrow("fB:"));
    } else if (head == "fG:") {
      out.f.fg.push_back(expect_arrow("fG:"));
    } else if (head == "f1.fB:") {
      out.f1.fb.push_back(expect_arrow("f1.fB:"));
    } else if (head == "f1.fG:") {
      out.f1.fg.push_back(expect_arrow("f1.fG:"));
    } else if (head == "f2.fB:") {
      out.f2.fb.push_back(expect_arrow("f2.fB:"));
    } else if (head == "f2.fG:") {
      out.f2.fg.push_back(expect_arrow("f2.fG:"));
    } else if (head == "h:") {
      out.h.push_back(expect_arrow("h:"));
    } else {
      throw ParseError("ParseError " + path + ":" + std::to_string(lineno) +
                       ": unknown directive '" + head + "'");
    }
  }
  if (out.source_path.empty() || out.target_path.empty()) {
    throw ParseError("ParseError " + path + ":0: missing source: or target: line");
  }
  // Paths are relative to the morphism file.
  const auto dir = std::filesystem::path(path).parent_path();
  out.source_path = (dir / out.source_path).string();
  out.target_path = (dir / out.target_path).string();
  return out;
}

GroupoidMorphism morphism_from_lines(const FiniteGroupoid& src, const FiniteGroupoid& dst,
                                     const MapLines& lines, const std::string& what) {
  std::vector<Obj> obj_map(src.object_count(), kNoObj);
  std::vector<Elem> elem_map(src.element_count(), kNoElem);
  for (const auto& [from, to] : lines.fb) {
    obj_map.at(src.object_index(from)) = dst.object_index(to);
  }
  for (const auto& [from, to] : lines.fg) {
    elem_map.at(src.element_index(from)) = dst.element_index(to);
  }
  for (Obj x = 0; x < src.object_count(); ++x) {
    if (obj_map[x] == kNoObj) {
      throw NotAMorphismError("NotAMorphism " + what + " misses fB on object " +
                              src.object_name(x));
    }
  }
  for (Elem e = 0; e < src.element_count(); ++e) {
    if (elem_map[e] == kNoElem) {
      throw NotAMorphismError("NotAMorphism " + what + " misses fG on element " +
                              src.element_name(e));
    }
  }
  return validate_morphism(src, dst, std::move(elem_map), std::move(obj_map));
}

int run(int argc, char** argv) {
  CLI::App app{"finite groupoid toolkit"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "render machine lines as an aligned table");

  std::string file_a, file_b, object_name, coef_a, coef_b, samples_path, out_dir;
  long m = 2, n = 2;

  auto* validate = app.add_subcommand("validate", "check the groupoid axioms");
  validate->add_option("file", file_a)->required();

  auto* orbits_cmd = app.add_subcommand("orbits", "orbit partition of the base");
  orbits_cmd->add_option("file", file_a)->required();

  auto* isotropy_cmd = app.add_subcommand("isotropy", "isotropy group at an object");
  isotropy_cmd->add_option("file", file_a)->required();
  isotropy_cmd->add_option("object", object_name)->required();

  auto* skeleton_cmd = app.add_subcommand("skeleton", "orbit sizes and isotropy classes");
  skeleton_cmd->add_option("file", file_a)->required();

  auto* decompose = app.add_subcommand("decompose", "restrictions to the orbits");
  decompose->add_option("file", file_a)->required();
  decompose->add_option("--out", out_dir, "write each component as a groupoid file");

  auto* morphism_check = app.add_subcommand("morphism-check", "validate a morphism file");
  morphism_check->add_option("file", file_a)->required();

  auto* homotopy_check = app.add_subcommand("homotopy-check", "validate a homotopy file");
  homotopy_check->add_option("file", file_a)->required();

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two groupoids");
  equiv->add_option("fileA", file_a)->required();
  equiv->add_option("fileB", file_b)->required();

  auto* convolve_cmd = app.add_subcommand("convolve", "convolve two algebra elements");
  convolve_cmd->add_option("file", file_a)->required();
  convolve_cmd->add_option("a", coef_a)->required();
  convolve_cmd->add_option("b", coef_b)->required();

  auto* matrix_cmd = app.add_subcommand("matrix", "matrix form over a pair groupoid");
  matrix_cmd->add_option("file", file_a)->required();
  matrix_cmd->add_option("a", coef_a)->required();

  auto* tiling = app.add_subcommand("tiling", "tiled-rectangle groupoids");
  auto* corners = tiling->add_subcommand("corners", "local groupoid on the corner set");
  corners->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  corners->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  auto* restricted = tiling->add_subcommand("restricted", "restricted action groupoid");
  restricted->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  restricted->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  restricted->add_option("--samples", samples_path)->required();
  auto* census = tiling->add_subcommand("census", "local orbit census of sample points");
  census->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  census->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  census->add_option("--samples", samples_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      emit({"valid objects=" + std::to_string(g.object_count()) +
            " elements=" + std::to_string(g.element_count())},
           human);
      return 0;
    }
    if (*orbits_cmd) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      const OrbitPartition orb = orbits(g);
      std::vector<std::string> lines;
      for (const auto& block : orb.blocks) {
        std::string line = "orbit " + g.object_name(block[0]) +
                           " size=" + std::to_string(block.size()) + " members=";
        for (std::size_t i = 0; i < block.size(); ++i) {
          if (i) line += " ";
          line += g.object_name(block[i]);
        }
        lines.push_back(std::move(line));
      }
      emit(lines, human);
      return 0;
    }
    if (*isotropy_cmd) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      const IsotropyGroup iso = isotropy_group(g, object_name);
      std::vector<std::string> lines{"isotropy " + object_name +
                                     " order=" + std::to_string(iso.elements.size()) +
                                     " class=" + iso.cls.name};
      for (const Elem e : iso.elements) lines.push_back("element " + g.element_name(e));
      emit(lines, human);
      return 0;
    }
    if (*skeleton_cmd) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      emit(skeleton_lines(skeleton(g), g), human);
      return 0;
    }
    if (*decompose) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      const auto parts = orbit_decomposition(g);
      std::vector<std::string> lines;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        lines.push_back("component " + parts[i].object_name(0) +
                        " objects=" + std::to_string(parts[i].object_count()) +
                        " elements=" + std::to_string(parts[i].element_count()));
        if (!out_dir.empty()) {
          std::filesystem::create_directories(out_dir);
          write_groupoid_file(
              (std::filesystem::path(out_dir) / ("component-" + std::to_string(i) + ".g"))
                  .string(),
              parts[i]);
        }
      }
      emit(lines, human);
      return 0;
    }
    if (*morphism_check) {
      const MorphismFile mf = parse_morphism_file(file_a);
      const FiniteGroupoid src = read_groupoid_file(mf.source_path);
      const FiniteGroupoid dst = read_groupoid_file(mf.target_path);
      const GroupoidMorphism f = morphism_from_lines(src, dst, mf.f, "morphism");
      emit({"valid fB=" + std::to_string(f.obj_map.size()) +
            " fG=" + std::to_string(f.elem_map.size())},
           human);
      return 0;
    }
    if (*homotopy_check) {
      const MorphismFile mf = parse_morphism_file(file_a);
      const FiniteGroupoid src = read_groupoid_file(mf.source_path);
      const FiniteGroupoid dst = read_groupoid_file(mf.target_path);
      const GroupoidMorphism f1 = morphism_from_lines(src, dst, mf.f1, "f1");
      const GroupoidMorphism f2 = morphism_from_lines(src, dst, mf.f2, "f2");
      std::vector<Elem> h(src.object_count(), kNoElem);
      for (const auto& [from, to] : mf.h) {
        h.at(src.object_index(from)) = dst.element_index(to);
      }
      for (Obj x = 0; x < src.object_count(); ++x) {
        if (h[x] == kNoElem) {
          throw ShapeMismatchError("ShapeMismatch h misses object " + src.object_name(x));
        }
      }
      const HomotopyCheck check = is_homotopy(f1, f2, h);
      if (check.valid) {
        emit({"homotopy valid"}, human);
        return 0;
      }
      emit({"homotopy invalid " + check.failure}, human);
      return 1;
    }
    if (*equiv) {
      const FiniteGroupoid a = read_groupoid_file(file_a);
      const FiniteGroupoid b = read_groupoid_file(file_b);
      const EquivalenceDecision d = are_equivalent(a, b);
      std::vector<std::string> lines;
      switch (d.verdict) {
        case EquivalenceVerdict::Equivalent: {
          lines.push_back("verdict equivalent");
          for (const auto& match : d.matching) {
            lines.push_back("match " + a.object_name(match.rep_a) + " " +
                            b.object_name(match.rep_b) + " isotropy=" + match.isotropy +
                            " sizeA=" + std::to_string(match.size_a) +
                            " sizeB=" + std::to_string(match.size_b));
          }
          break;
        }
        case EquivalenceVerdict::NotEquivalent:
          lines.push_back("verdict not-equivalent");
          break;
        case EquivalenceVerdict::Inconclusive:
          lines.push_back("verdict inconclusive");
          break;
      }
      emit(lines, human);
      return d.verdict == EquivalenceVerdict::Equivalent ? 0 : 1;
    }
    if (*convolve_cmd) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      const AlgebraElement<Rat> a = read_algebra_element_file(g, coef_a);
      const AlgebraElement<Rat> b = read_algebra_element_file(g, coef_b);
      emit(algebra_element_lines(convolve(a, b)), human);
      return 0;
    }
    if (*matrix_cmd) {
      const FiniteGroupoid g = read_groupoid_file(file_a);
      const AlgebraElement<Rat> a = read_algebra_element_file(g, coef_a);
      emit(matrix_lines(to_matrix(a)), human);
      return 0;
    }
    if (*corners) {
      write_groupoid_text(std::cout, local_groupoid_on_corners({m, n}));
      return 0;
    }
    if (*restricted) {
      const auto sample = read_sample_points_file(samples_path);
      write_groupoid_text(std::cout, restricted_action_groupoid({m, n}, sample));
      return 0;
    }
    if (*census) {
      const auto sample = read_sample_points_file(samples_path);
      std::vector<std::string> lines;
      const auto classes = local_orbit_census({m, n}, sample);
      for (const auto& c : classes) {
        lines.push_back("class " + local_class_name(c.kind) +
                        " size=" + std::to_string(c.members.size()) +
                        " isotropy=" + (c.continuous ? "O(2)" : c.isotropy.name));
      }
      for (const auto& c : classes) {
        for (const auto& p : c.members) {
          lines.push_back("member " + local_class_name(c.kind) + " " + point_name(p));
        }
      }
      emit(lines, human);
      return 0;
    }
  } catch (const Error& e) {
    std::cout << e.what() << "\n";
    return 1;
  }
  std::cerr << "usage error: no subcommand\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
