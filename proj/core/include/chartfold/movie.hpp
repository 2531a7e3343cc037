#pragma once
#include <string>
#include <vector>

#include "hurwitz.hpp"
#include "word.hpp"

namespace chartfold {

enum class EventType { BlackBirth, BlackDeath, IIBirth, IIDeath, Crossing, White, Node };

// pos is 0-based into the pre-event word
struct ChartEvent {
  EventType type = EventType::BlackBirth;
  int pos = 0;
  auto operator<=>(const ChartEvent&) const = default;
};

// slices.size() == events.size() + 1; first and last slice empty
struct ChartMovie {
  Kind kind = Kind::Perm;
  int degree = 2;
  std::vector<Word> slices;
  std::vector<ChartEvent> events;
  bool operator==(const ChartMovie&) const = default;
};

ChartMovie empty_movie(Kind kind, int degree);

struct Diagnostic {
  int index = -1;  // event index, -1 for global complaints
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

ValidationReport validate_movie(const ChartMovie& c);
void require_valid(const ChartMovie& c);  // throws on the first diagnostic

const Word& slice_word(const ChartMovie& c, int t);
int black_count(const ChartMovie& c);
int node_count(const ChartMovie& c);

// one transposition per black vertex in time order; for a black event with
// letter index i and prefix u above it, p = perm_image(u), the entry swaps
// p^-1(i) and p^-1(i+1). This reading makes closed movies multiply to the
// identity.
HurwitzSystem extract_hurwitz(const ChartMovie& c);

// entry of a single black event, same convention (signs ignored)
Transposition black_entry(const ChartMovie& c, int event_index);

// sign-forgetting; node events become no-ops and are elided
ChartMovie forget_signs(const ChartMovie& c);

std::string event_token(const ChartEvent& e);
ChartEvent parse_event_token(const std::string& tok);

// body form is the bracketed part: [ <word> --<event>-> <word> ... ]
std::string serialize_movie_body(const ChartMovie& c);
ChartMovie parse_movie_body(const std::string& body, Kind kind, int degree);

std::string serialize_movie(const ChartMovie& c);
ChartMovie parse_movie(const std::string& text);

}  // namespace chartfold
