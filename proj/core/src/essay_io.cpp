#include <sstream>

#include "chartfold/essay.hpp"

namespace chartfold {

std::string serialize_essay(const Essay& e) {
  std::ostringstream out;
  out << "degree: " << e.degree << "\n"
      << "kind: " << (e.kind == Kind::Perm ? "perm" : "braid") << "\n";
  for (size_t i = 0; i < e.charts.size(); ++i) {
    out << "CHART " << serialize_movie_body(e.charts[i]) << "\n";
    if (i < e.moves.size())
      out << "MOVE " << move_name(e.moves[i].kind) << "@" << e.moves[i].site
          << "\n";
  }
  return out.str();
}

Essay parse_essay(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  Essay e;
  if (!(in >> tok) || tok != "degree:" || !(in >> e.degree))
    throw parse_error("essay header must start with degree:");
  if (!(in >> tok) || tok != "kind:" || !(in >> tok))
    throw parse_error("essay header needs kind:");
  if (tok == "perm")
    e.kind = Kind::Perm;
  else if (tok == "braid")
    e.kind = Kind::Braid;
  else
    throw parse_error("kind must be perm or braid");
  if (e.degree < 2) throw parse_error("degree must be at least 2");
  bool expect_chart = true;
  while (in >> tok) {
    if (expect_chart) {
      if (tok != "CHART") throw parse_error("expected CHART, got " + tok);
      std::string body;
      std::getline(in, body);
      if (body.find('[') == std::string::npos ||
          body.find(']') == std::string::npos)
        throw parse_error("CHART body must be a bracketed movie on one line");
      e.charts.push_back(parse_movie_body(body, e.kind, e.degree));
    } else {
      if (tok != "MOVE") throw parse_error("expected MOVE, got " + tok);
      std::string mv;
      if (!(in >> mv)) throw parse_error("MOVE needs name@site");
      size_t at = mv.rfind('@');
      if (at == std::string::npos) throw parse_error("MOVE needs name@site");
      CurtainMove m;
      m.kind = parse_move_name(mv.substr(0, at));
      std::string site = mv.substr(at + 1);
      if (site.empty() ||
          site.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad move site: " + mv);
      m.site = std::stoi(site);
      e.moves.push_back(m);
    }
    expect_chart = !expect_chart;
  }
  if (e.charts.empty()) throw parse_error("essay has no charts");
  if (e.charts.size() != e.moves.size() + 1)
    throw parse_error("essay must end with a chart");
  return e;
}

}  // namespace chartfold
