#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chartfold/cli.hpp"
#include "chartfold/coloring.hpp"
#include "chartfold/cover.hpp"
#include "chartfold/essay.hpp"
#include "chartfold/fold.hpp"
#include "chartfold/movie.hpp"
#include "chartfold/seifert.hpp"
#include "chartfold/svg.hpp"

namespace chartfold {

namespace {

struct cli_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    // fall back to the fixture directory if one is configured
    const char* fx = std::getenv("CHARTFOLD_FIXTURES");
    if (fx) {
      std::ifstream alt(std::string(fx) + "/" + path);
      if (alt) {
        std::ostringstream ss;
        ss << alt.rdbuf();
        return ss.str();
      }
    }
    throw cli_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_essay(const std::string& text) {
  return text.find("CHART") != std::string::npos;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw cli_error("cannot write " + path);
  out << content;
}

struct Args {
  std::vector<std::string> positional;
  std::string braid, coloring_text, out;
  int strands = 0;
  bool plat = false, json = false;

  Args(int argc, const char* const* argv, int from) {
    for (int i = from; i < argc; ++i) {
      std::string a = argv[i];
      auto need = [&](const char* flag) -> std::string {
        if (i + 1 >= argc) throw cli_error(std::string(flag) + " needs a value");
        return argv[++i];
      };
      if (a == "--braid")
        braid = need("--braid");
      else if (a == "--strands")
        strands = std::atoi(need("--strands").c_str());
      else if (a == "--coloring")
        coloring_text = need("--coloring");
      else if (a == "--out")
        out = need("--out");
      else if (a == "--plat")
        plat = true;
      else if (a == "--json")
        json = true;
      else if (a.rfind("--", 0) == 0)
        throw cli_error("unknown flag " + a);
      else
        positional.push_back(a);
    }
  }

  Word braid_word(int degree) const {
    if (braid.empty()) throw cli_error("--braid is required");
    if (strands < 1) throw cli_error("--strands is required");
    return parse_word(braid, Kind::Braid, degree);
  }
};

int report(const ValidationReport& rep) {
  if (rep.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const auto& d : rep.diagnostics) std::cerr << d.message << "\n";
  return 1;
}

int cmd_validate(const Args& a) {
  if (a.positional.size() != 1) throw cli_error("usage: validate <file>");
  std::string text = slurp(a.positional[0]);
  if (looks_like_essay(text)) return report(validate_essay(parse_essay(text)));
  return report(validate_movie(parse_movie(text)));
}

int cmd_cover(const Args& a) {
  if (a.positional.size() != 1) throw cli_error("usage: cover <movie>");
  ChartMovie m = parse_movie(slurp(a.positional[0]));
  auto rep = validate_movie(m);
  if (!rep.ok()) return report(rep);
  CoverInvariants ci = cover_invariants(m);
  if (a.json) {
    std::ostringstream out;
    out << "{\"components\":" << ci.components << ",\"euler_closed\":"
        << ci.euler_closed << ",\"genus\":[";
    for (size_t i = 0; i < ci.genus_per_component.size(); ++i)
      out << (i ? "," : "") << ci.genus_per_component[i];
    out << "],\"boundary_circles\":" << ci.boundary_circles << "}\n";
    std::cout << out.str();
  } else {
    std::cout << "components: " << ci.components << "\n"
              << "euler (closed): " << ci.euler_closed << "\n";
    for (size_t i = 0; i < ci.genus_per_component.size(); ++i)
      std::cout << "genus of component " << i + 1 << ": "
                << ci.genus_per_component[i] << "\n";
    std::cout << "boundary circles: " << ci.boundary_circles << "\n";
  }
  return 0;
}

int cmd_hurwitz(const Args& a) {
  if (a.positional.size() < 2) throw cli_error("usage: hurwitz normalize|equiv <systems>");
  const std::string& verb = a.positional[0];
  auto load = [&](const std::string& arg) {
    std::ifstream probe(arg);
    return parse_hurwitz(probe ? slurp(arg) : arg);
  };
  if (verb == "normalize") {
    auto r = hc_normalize(load(a.positional[1]));
    std::cout << hs_to_string(r.normal) << "\n"
              << "steps: " << r.steps.size() << "\n";
    return 0;
  }
  if (verb == "equiv") {
    if (a.positional.size() != 3)
      throw cli_error("usage: hurwitz equiv <system> <system>");
    bool eq = hc_equivalent(load(a.positional[1]), load(a.positional[2]));
    std::cout << (eq ? "equivalent" : "inequivalent") << "\n";
    return eq ? 0 : 1;
  }
  throw cli_error("unknown hurwitz verb " + verb);
}

int cmd_fold(const Args& a) {
  Word w = a.braid_word(a.strands);
  ColorVector cv;
  if (!a.coloring_text.empty()) {
    cv = parse_colors(a.coloring_text);
  } else {
    auto cols = fox_colorings(w, a.strands);
    if (cols.empty()) {
      std::cerr << "closure is not 3-colorable\n";
      return 1;
    }
    cv = *cols.begin();
  }
  FoldResult fr = fold3(w, a.strands, cv);
  write_out(a.out, serialize_essay(fr.essay));
  std::cerr << "node_count: " << fr.node_count << "\n"
            << "moves: " << fr.essay.moves.size() << "\n"
            << "log entries: " << fr.move_log.size() << "\n";
  return 0;
}

int cmd_seifert(const Args& a) {
  Word w = a.braid_word(a.strands);
  Essay e = seifert_essay(w, a.strands, a.plat);
  write_out(a.out, serialize_essay(e));
  auto hc = handle_counts(e);
  std::cerr << "handles: " << hc.one_handles << " " << hc.two_handles << "\n";
  return 0;
}

int cmd_det(const Args& a) {
  Word w = a.braid_word(a.strands);
  std::cout << knot_determinant(w, a.strands) << "\n";
  return 0;
}

int cmd_color(const Args& a) {
  Word w = a.braid_word(a.strands);
  auto cols = fox_colorings(w, a.strands);
  for (const auto& cv : cols) std::cout << color_to_string(cv) << "\n";
  std::cout << "count: " << cols.size() << "\n";
  return 0;
}

int cmd_render(const Args& a) {
  if (a.positional.size() != 1) throw cli_error("usage: render <file> --out f.svg");
  if (a.out.empty()) throw cli_error("render needs --out");
  std::string text = slurp(a.positional[0]);
  std::string svg = looks_like_essay(text)
                        ? render_svg(parse_essay(text))
                        : render_svg(parse_movie(text));
  write_out(a.out, svg);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    if (argc < 2) throw cli_error(
        "usage: chartfold validate|cover|hurwitz|fold|seifert|det|color|render ...");
    std::string cmd = argv[1];
    Args a(argc, argv, 2);
    if (cmd == "validate") return cmd_validate(a);
    if (cmd == "cover") return cmd_cover(a);
    if (cmd == "hurwitz") return cmd_hurwitz(a);
    if (cmd == "fold") return cmd_fold(a);
    if (cmd == "seifert") return cmd_seifert(a);
    if (cmd == "det") return cmd_det(a);
    if (cmd == "color") return cmd_color(a);
    if (cmd == "render") return cmd_render(a);
    throw cli_error("unknown subcommand " + cmd);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cli_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace chartfold
