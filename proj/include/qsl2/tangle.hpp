// Bottom-tangle diagrams on a grid: DSL, validation, orientation inference.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsl2 {

enum class Cell { Strand, XPlus, XMinus, Cap, Cup };

class TangleError : public std::runtime_error {
 public:
  TangleError(const std::string& msg, int row = -1, int col = -1);
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

// One strand passing through a crossing.
struct CrossingStrand {
  int comp = -1;
  bool up = false;  // oriented upward at the crossing
};

struct Crossing {
  int id = 0;
  int row = 0;  // 0-based row index
  int col = 0;  // left input position
  Cell type = Cell::XPlus;
  CrossingStrand bl;  // strand from bottom-left to top-right
  CrossingStrand br;  // strand from bottom-right to top-left
  int sign = 0;
  // The R-matrix leg alpha sits on the under strand: br for X+, bl for X-.
  const CrossingStrand& alpha() const { return type == Cell::XPlus ? br : bl; }
  const CrossingStrand& beta() const { return type == Cell::XPlus ? bl : br; }
  const CrossingStrand& over() const { return type == Cell::XPlus ? bl : br; }
};

struct Extremum {
  int row = 0;
  int col = 0;
  bool cap = true;
  int comp = -1;
  bool left_to_right = false;  // traversal direction along the orientation
};

// Event met while reading a component against its orientation.
struct ReadEvent {
  enum Kind { CrossingAlpha, CrossingBeta, Extremum } kind;
  int index;  // crossing id or extremum index
};

struct TangleDiagram {
  std::string name;
  int n = 0;
  std::vector<std::vector<Cell>> rows;

  std::vector<int> widths;  // widths[r] = number of points at level r (level 0 = bottom)
  std::vector<Crossing> crossings;
  std::vector<Extremum> extrema;
  std::vector<std::vector<ReadEvent>> reading;  // per component
  // Orientation of each point: component and whether the strand points up.
  std::vector<std::vector<int>> point_comp;
  std::vector<std::vector<bool>> point_up;
};

TangleDiagram parse_tangle(const std::string& text);
std::string serialize_tangle(const TangleDiagram& d);
// Validates rows and infers components, orientations, crossings and reading order.
TangleDiagram build_tangle(std::string name, int n, std::vector<std::vector<Cell>> rows);

std::vector<std::vector<int>> linking_matrix(const TangleDiagram& d);
bool brunnian_form(const TangleDiagram& d, int i);

// trivialN, clasp_B, borromean_TB, borromean_P, borromean_plus_arc and a few
// regression diagrams.
TangleDiagram builtin(const std::string& name);
std::vector<std::string> builtin_names();

std::string cell_token(Cell c);

}  // namespace qsl2
