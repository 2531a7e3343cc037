#pragma once
#include "movie.hpp"

namespace chartfold {

enum class MoveKind { OneH, TwoH, IIb, IIs, CC, X, Z, XiPlus, XiMinus, CIII, CI };

std::string move_name(MoveKind k);
MoveKind parse_move_name(const std::string& name);

// site = index of the first affected event in the source chart
struct CurtainMove {
  MoveKind kind = MoveKind::OneH;
  int site = 0;
  auto operator<=>(const CurtainMove&) const = default;
};

// sequence of charts joined by moves; first and last chart are empty
struct Essay {
  int degree = 2;
  Kind kind = Kind::Braid;
  std::vector<ChartMovie> charts;
  std::vector<CurtainMove> moves;
  bool operator==(const Essay&) const = default;
};

struct ValidateOptions {
  int ci_window_cap = 8;
};

ValidationReport validate_essay(const Essay& e, const ValidateOptions& opt = {});
void require_valid(const Essay& e, const ValidateOptions& opt = {});

struct HandleCounts {
  int one_handles = 0;
  int two_handles = 0;
  bool operator==(const HandleCounts&) const = default;
};
HandleCounts handle_counts(const Essay& e);

int essay_node_events(const Essay& e);
int count_moves(const Essay& e, MoveKind k);

std::string serialize_essay(const Essay& e);
Essay parse_essay(const std::string& text);

}  // namespace chartfold
