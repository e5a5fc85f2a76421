// diagrams.hpp - oriented tangle and link diagrams in Morse presentation
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcoalg {

enum class EventKind { cup, cap, cross };
enum class Leg { left, right, unset };  // unset only while rewriting
enum class Over { sw_ne, se_nw };

// pos is 0-based here; the text format is 1-based.
struct Event {
  EventKind kind;
  int pos = 0;
  Leg leg = Leg::left;    // cup/cap: the leg through which the strand enters
  Over over = Over::sw_ne;
  bool operator==(const Event&) const = default;
};

enum class DiagramKind { tangle, link };

struct Diagram {
  DiagramKind kind = DiagramKind::tangle;
  bool up = true;  // tangle only: orientation of the open strand
  std::vector<Event> events;
  bool operator==(const Diagram&) const = default;

  int crossings() const;
  // register width below event k (k == events.size() gives the top)
  int width_at(int k) const;
};

struct DiagramError : std::runtime_error {
  int line, column, event;  // -1 when not applicable
  DiagramError(const std::string& msg, int line_ = -1, int column_ = -1, int event_ = -1);
};

Diagram parse_diagram(const std::string& text);
std::string render(const Diagram& D);
// Throws DiagramError on width, orientation or open-strand problems.
void validate(const Diagram& D);

// Extremum types as seen by the traversal.
enum class Extremum { u_minus, u_plus, d_plus, d_minus };
const char* extremum_name(Extremum e);

struct Passage {
  bool is_crossing = true;
  int event = 0;
  // crossing passages
  bool over = false;
  bool strand_up = true;
  // extremum passages
  Extremum ex = Extremum::u_minus;
};

struct LabelInfo {
  int component = 0;
  int index = 0;  // 1-based within its component
  int crossing = 0;
  bool over = false;
  bool up = true;
  int ud = 0, uu = 0;
};

struct CrossingInfo {
  int event = 0;
  int over_label = 0, under_label = 0;  // indices into Traversal::labels
  int rule = 0;                         // 1..8
  int sign = 0;
};

struct ComponentInfo {
  int start_event = 0;
  std::vector<Passage> passages;  // cyclic for links, from the base for tangles
  std::vector<int> labels;        // indices into Traversal::labels in order
  std::array<int, 4> census{};    // indexed by Extremum
  int whitney() const;
};

struct Traversal {
  std::vector<ComponentInfo> components;
  std::vector<LabelInfo> labels;
  std::vector<CrossingInfo> crossings;  // in event order
};

// rotations[l] shifts the starting point of link component l forward by that
// many passages; empty means canonical starting points.
Traversal traverse(const Diagram& D, const std::vector<int>& rotations = {});

// ------------------------------------------------------------ crossing rules

enum class Shift { none, over_u, over_d, under_u, under_d };

struct CrossingRule {
  int id;
  Over over;
  bool over_up, under_up;
  bool inverse;  // b^-1 instead of b
  Shift shift;
};

const std::array<CrossingRule, 8>& crossing_rules();
const CrossingRule& find_rule(Over over, bool over_up, bool under_up);
int crossing_sign(Over over, bool over_up, bool under_up);

int writhe(const Diagram& D);
std::vector<int> whitney_degrees(const Diagram& D);
Diagram star(const Diagram& T1, const Diagram& T2);
Diagram reverse(const Diagram& D);
Diagram mirror(const Diagram& D);  // swaps the over strand at every crossing
// Closes a tangle to the right into a one-component link.
Diagram closure(const Diagram& T);

// Re-derives cup/cap legs from connectivity. Legs already set act as anchors;
// returns false on conflicts or components without an anchor.
bool resolve_legs(Diagram& D);

// ------------------------------------------------------------ moves

enum class MoveType {
  zigzag_insert,
  zigzag_remove,
  pair_insert,
  pair_remove,
  triple_slide,
  extremum_slide,
  twist_expand,
  twist_contract,
  commute,
};
const std::vector<MoveType>& all_move_types();
const char* move_name(MoveType m);

// Applies one random move of the given type; false when none applies.
bool apply_move(Diagram& D, MoveType type, std::mt19937_64& rng);
// applied, when given, is indexed by MoveType and counts the moves made.
Diagram perturb(const Diagram& D, std::uint64_t seed, int n_moves, std::vector<int>* applied = nullptr);

// ------------------------------------------------------------ builtins

// curl, curl-op, trefoil-tangle, trefoil, trefoil-mirror, figure-eight,
// hopf, borromean, circle, unlink, strand
const std::map<std::string, std::string>& builtin_sources();
Diagram builtin(const std::string& name);

}  // namespace qcoalg
