#include <regex>
#include <sstream>

#include "chartfold/movie.hpp"

namespace chartfold {

std::string event_token(const ChartEvent& e) {
  std::string p = std::to_string(e.pos);
  switch (e.type) {
    case EventType::BlackBirth: return "b" + p + "+";
    case EventType::BlackDeath: return "b" + p + "-";
    case EventType::IIBirth: return "II" + p + "+";
    case EventType::IIDeath: return "II" + p + "-";
    case EventType::Crossing: return "x" + p;
    case EventType::White: return "w" + p;
    case EventType::Node: return "n" + p;
  }
  throw invalid_argument("unknown event type");
}

ChartEvent parse_event_token(const std::string& tok) {
  static const std::regex re(R"(^(b|II|x|w|n)(\d+)([+-]?)$)");
  std::smatch m;
  if (!std::regex_match(tok, m, re))
    throw parse_error("bad event token: " + tok);
  std::string head = m[1], sign = m[3];
  int pos = std::stoi(m[2]);
  if (head == "b" || head == "II") {
    if (sign.empty()) throw parse_error("event token needs +/-: " + tok);
    if (head == "b")
      return {sign == "+" ? EventType::BlackBirth : EventType::BlackDeath, pos};
    return {sign == "+" ? EventType::IIBirth : EventType::IIDeath, pos};
  }
  if (!sign.empty()) throw parse_error("unexpected +/- on event token: " + tok);
  if (head == "x") return {EventType::Crossing, pos};
  if (head == "w") return {EventType::White, pos};
  return {EventType::Node, pos};
}

std::string serialize_movie_body(const ChartMovie& c) {
  std::ostringstream out;
  out << "[ " << word_to_string(c.slices.front());
  for (size_t t = 0; t < c.events.size(); ++t)
    out << " --" << event_token(c.events[t]) << "-> "
        << word_to_string(c.slices[t + 1]);
  out << " ]";
  return out.str();
}

ChartMovie parse_movie_body(const std::string& body, Kind kind, int degree) {
  size_t lb = body.find('[');
  size_t rb = body.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw parse_error("movie body must be bracketed");
  std::string inner = body.substr(lb + 1, rb - lb - 1);
  // lazy so event tokens may not contain "->"
  static const std::regex arrow(R"(--(.+?)->)");
  ChartMovie c;
  c.kind = kind;
  c.degree = degree;
  auto begin = std::sregex_iterator(inner.begin(), inner.end(), arrow);
  size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    c.slices.push_back(parse_word(
        inner.substr(last, it->position() - last), kind, degree));
    c.events.push_back(parse_event_token((*it)[1]));
    last = it->position() + it->length();
  }
  c.slices.push_back(parse_word(inner.substr(last), kind, degree));
  return c;
}

std::string serialize_movie(const ChartMovie& c) {
  std::ostringstream out;
  out << "degree: " << c.degree << "\n"
      << "kind: " << (c.kind == Kind::Perm ? "perm" : "braid") << "\n"
      << serialize_movie_body(c) << "\n";
  return out.str();
}

ChartMovie parse_movie(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  int degree = 0;
  Kind kind = Kind::Perm;
  if (!(in >> tok) || tok != "degree:" || !(in >> degree))
    throw parse_error("movie header must start with degree:");
  if (!(in >> tok) || tok != "kind:") throw parse_error("expected kind:");
  if (!(in >> tok)) throw parse_error("missing kind value");
  if (tok == "perm")
    kind = Kind::Perm;
  else if (tok == "braid")
    kind = Kind::Braid;
  else
    throw parse_error("kind must be perm or braid");
  if (degree < 2) throw parse_error("degree must be at least 2");
  std::string rest((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_movie_body(rest, kind, degree);
}

}  // namespace chartfold
