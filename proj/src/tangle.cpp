#include "qsl2/tangle.hpp"

#include <sstream>

namespace qsl2 {

namespace {

std::string where(int row, int col) {
  std::string s;
  if (row >= 0) s += "row " + std::to_string(row + 1);
  if (col >= 0) s += (s.empty() ? "" : ", ") + std::string("cell ") + std::to_string(col + 1);
  return s.empty() ? s : s + ": ";
}

struct Link {
  int level = -1;
  int pos = -1;
  int kind = -1;  // 0 strand, 1 crossing, 2 cap, 3 cup
  int idx = -1;
  int role = -1;  // crossing: 0 = bl strand, 1 = br strand
};

struct Point {
  Link lower;
  Link upper;
};

int inputs(Cell c) {
  switch (c) {
    case Cell::Strand: return 1;
    case Cell::Cup: return 0;
    default: return 2;
  }
}

int outputs(Cell c) {
  switch (c) {
    case Cell::Strand: return 1;
    case Cell::Cap: return 0;
    default: return 2;
  }
}

}  // namespace

TangleError::TangleError(const std::string& msg, int row, int col)
    : std::runtime_error(where(row, col) + msg), row_(row), col_(col) {}

std::string cell_token(Cell c) {
  switch (c) {
    case Cell::Strand: return "|";
    case Cell::XPlus: return "X+";
    case Cell::XMinus: return "X-";
    case Cell::Cap: return "cap";
    case Cell::Cup: return "cup";
  }
  return "?";
}

TangleDiagram build_tangle(std::string name, int n, std::vector<std::vector<Cell>> rows) {
  if (n < 0) throw TangleError("negative component count");
  TangleDiagram d;
  d.name = std::move(name);
  d.n = n;
  d.rows = std::move(rows);
  const int R = static_cast<int>(d.rows.size());
  d.widths.push_back(2 * n);
  std::vector<std::vector<Point>> pts(R + 1);
  pts[0].resize(2 * n);
  for (int r = 0; r < R; ++r) {
    int in = 0, out = 0;
    for (Cell c : d.rows[r]) in += inputs(c), out += outputs(c);
    if (in != d.widths[r])
      throw TangleError("width mismatch: row consumes " + std::to_string(in) + " strands but " +
                            std::to_string(d.widths[r]) + " arrive",
                        r);
    d.widths.push_back(out);
    pts[r + 1].resize(out);
    int i = 0, o = 0;
    for (int k = 0; k < static_cast<int>(d.rows[r].size()); ++k) {
      Cell c = d.rows[r][k];
      auto connect = [&](int li, int uo, int kind, int idx, int role) {
        pts[r][li].upper = Link{r + 1, uo, kind, idx, role};
        pts[r + 1][uo].lower = Link{r, li, kind, idx, role};
      };
      switch (c) {
        case Cell::Strand:
          connect(i, o, 0, -1, -1);
          break;
        case Cell::XPlus:
        case Cell::XMinus: {
          Crossing x;
          x.id = static_cast<int>(d.crossings.size());
          x.row = r;
          x.col = i;
          x.type = c;
          d.crossings.push_back(x);
          connect(i, o + 1, 1, x.id, 0);
          connect(i + 1, o, 1, x.id, 1);
          break;
        }
        case Cell::Cap: {
          int idx = static_cast<int>(d.extrema.size());
          d.extrema.push_back(Extremum{r, i, true, -1, false});
          pts[r][i].upper = Link{r, i + 1, 2, idx, -1};
          pts[r][i + 1].upper = Link{r, i, 2, idx, -1};
          break;
        }
        case Cell::Cup: {
          int idx = static_cast<int>(d.extrema.size());
          d.extrema.push_back(Extremum{r, o, false, -1, false});
          pts[r + 1][o].lower = Link{r + 1, o + 1, 3, idx, -1};
          pts[r + 1][o + 1].lower = Link{r + 1, o, 3, idx, -1};
          break;
        }
      }
      i += inputs(c);
      o += outputs(c);
    }
  }
  if (d.widths[R] != 0)
    throw TangleError(std::to_string(d.widths[R]) +
                      " strand ends are left open at the top; all endpoints must lie on the bottom");

  d.point_comp.resize(R + 1);
  d.point_up.resize(R + 1);
  for (int r = 0; r <= R; ++r) {
    d.point_comp[r].assign(d.widths[r], -1);
    d.point_up[r].assign(d.widths[r], false);
  }
  std::vector<std::vector<ReadEvent>> along(n);
  for (int k = 0; k < n; ++k) {
    int level = 0, pos = 2 * k + 1;
    bool going_up = true;  // leaving the current point through its upper link
    while (true) {
      d.point_comp[level][pos] = k;
      const Point& p = pts[level][pos];
      const Link& L = going_up ? p.upper : p.lower;
      if (L.kind < 0) throw TangleError("unclosed strand", level - 1, pos);
      d.point_up[level][pos] = going_up;
      if (L.kind == 1) {
        Crossing& x = d.crossings[L.idx];
        CrossingStrand& s = L.role == 0 ? x.bl : x.br;
        if (s.comp >= 0) throw TangleError("strand traversed twice", x.row, x.col);
        s.comp = k;
        s.up = going_up;
        bool is_alpha = (x.type == Cell::XPlus) == (L.role == 1);
        along[k].push_back({is_alpha ? ReadEvent::CrossingAlpha : ReadEvent::CrossingBeta, L.idx});
      } else if (L.kind == 2 || L.kind == 3) {
        Extremum& e = d.extrema[L.idx];
        e.comp = k;
        e.left_to_right = L.pos > pos;
        along[k].push_back({ReadEvent::Extremum, L.idx});
        going_up = !going_up;
      }
      level = L.level;
      pos = L.pos;
      if (level == 0 && !going_up) {
        d.point_comp[0][pos] = k;
        d.point_up[0][pos] = false;
        if (pos != 2 * k)
          throw TangleError("component starting at bottom point " + std::to_string(2 * k + 2) +
                            " ends at point " + std::to_string(pos + 1) +
                            "; the endpoints of a component must be adjacent");
        break;
      }
      if (level == 0)
        throw TangleError("internal: walked into the bottom while going up");
    }
  }
  for (int r = 0; r <= R; ++r)
    for (int p = 0; p < d.widths[r]; ++p)
      if (d.point_comp[r][p] < 0)
        throw TangleError("closed component not attached to the bottom", r > 0 ? r - 1 : 0, p);

  for (auto& x : d.crossings) {
    bool same = x.bl.up == x.br.up;
    x.sign = (same ? 1 : -1) * (x.type == Cell::XPlus ? 1 : -1);
  }
  d.reading.resize(n);
  for (int k = 0; k < n; ++k) d.reading[k].assign(along[k].rbegin(), along[k].rend());
  return d;
}

TangleDiagram parse_tangle(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  int n = -1;
  std::vector<std::vector<Cell>> rows;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 3 || toks[0] != "tangle" || toks[2].rfind("components=", 0) != 0)
        throw TangleError("line " + std::to_string(lineno) +
                          ": expected header 'tangle <name> components=<n>'");
      name = toks[1];
      try {
        n = std::stoi(toks[2].substr(11));
      } catch (...) {
        throw TangleError("line " + std::to_string(lineno) + ": bad component count");
      }
      if (n < 0) throw TangleError("negative component count");
      continue;
    }
    std::vector<Cell> row;
    for (std::size_t c = 0; c < toks.size(); ++c) {
      const std::string& t = toks[c];
      if (t == "|")
        row.push_back(Cell::Strand);
      else if (t == "X+")
        row.push_back(Cell::XPlus);
      else if (t == "X-")
        row.push_back(Cell::XMinus);
      else if (t == "cap")
        row.push_back(Cell::Cap);
      else if (t == "cup")
        row.push_back(Cell::Cup);
      else
        throw TangleError("unknown cell '" + t + "'", static_cast<int>(rows.size()), static_cast<int>(c));
    }
    rows.push_back(std::move(row));
  }
  if (n < 0) throw TangleError("missing header");
  return build_tangle(name, n, std::move(rows));
}

std::string serialize_tangle(const TangleDiagram& d) {
  std::string out = "tangle " + d.name + " components=" + std::to_string(d.n) + "\n";
  for (const auto& row : d.rows) {
    std::string line;
    for (Cell c : row) line += (line.empty() ? "" : " ") + cell_token(c);
    out += line + "\n";
  }
  return out;
}

std::vector<std::vector<int>> linking_matrix(const TangleDiagram& d) {
  std::vector<std::vector<int>> lk(d.n, std::vector<int>(d.n, 0));
  std::vector<std::vector<int>> twice(d.n, std::vector<int>(d.n, 0));
  for (const auto& x : d.crossings) {
    int i = x.bl.comp, j = x.br.comp;
    if (i == j) {
      lk[i][i] += x.sign;
    } else {
      twice[i][j] += x.sign;
      twice[j][i] += x.sign;
    }
  }
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (i != j) lk[i][j] = twice[i][j] / 2;
  return lk;
}

bool brunnian_form(const TangleDiagram& d, int i) {
  if (i < 1 || i > d.n) throw std::out_of_range("component index out of range");
  for (const auto& x : d.crossings)
    if (x.bl.comp != i - 1 && x.br.comp != i - 1) return false;
  return true;
}

namespace {

TangleDiagram from_rows(const std::string& name, int n, const std::vector<std::string>& rows) {
  std::string text = "tangle " + name + " components=" + std::to_string(n) + "\n";
  for (const auto& r : rows) text += r + "\n";
  return parse_tangle(text);
}

const std::vector<std::string> kBorromeanTB = {
    "| X+ X+ |", "| | X- | |", "| | | X+ |", "| | X- | |",
    "| cap | | |", "| | X-", "| cap |", "cap",
};

// Component 1 threads the legs of two plain arcs along a commutator word.
const std::vector<std::string> kBorromeanP = {
    "| X- | | |", "| | X+ | |", "| | | X- |", "| | | X- |", "| | X- | |",
    "| | X- | |", "| | | X+ |", "| | | X+ |", "| cap | | |", "cap cap",
};

}  // namespace

TangleDiagram builtin(const std::string& name) {
  if (name.rfind("trivial", 0) == 0) {
    std::string arg = name.substr(7);
    if (arg.size() > 2 && arg.front() == '(' && arg.back() == ')') arg = arg.substr(1, arg.size() - 2);
    int n = 0;
    try {
      n = std::stoi(arg);
    } catch (...) {
      throw TangleError("bad builtin name '" + name + "'");
    }
    if (n < 0) throw TangleError("bad builtin name '" + name + "'");
    std::string row;
    for (int k = 0; k < n; ++k) row += k ? " cap" : "cap";
    return from_rows("trivial" + std::to_string(n), n, n ? std::vector<std::string>{row}
                                                         : std::vector<std::string>{});
  }
  if (name == "clasp_B") return from_rows(name, 2, {"| X+ |", "| X+ |", "cap cap"});
  if (name == "borromean_TB") return from_rows(name, 3, kBorromeanTB);
  if (name == "borromean_P") return from_rows(name, 3, kBorromeanP);
  if (name == "borromean_plus_arc") {
    std::vector<std::string> rows;
    for (const auto& r : kBorromeanTB) rows.push_back(r + " | |");
    rows.push_back("cap");
    return from_rows(name, 4, rows);
  }
  if (name == "wiggle") return from_rows(name, 1, {"| | cup", "| cap |", "cap"});
  if (name == "wiggle_mirror") return from_rows(name, 1, {"cup | |", "| cap |", "cap"});
  if (name == "clasp_B_r2")
    return from_rows(name, 3, {"| X+ | | |", "| X+ | | |", "| | | X+ |", "| | | X- |",
                               "cap cap cap"});
  if (name == "borromean_TB_r2") {
    std::vector<std::string> rows = {"| | | | | X- |", "| | | | | X+ |"};
    for (const auto& r : kBorromeanTB) rows.push_back(r + " | |");
    rows.push_back("cap");
    return from_rows(name, 4, rows);
  }
  throw TangleError("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"trivial1",  "trivial2",       "trivial3",   "clasp_B",         "borromean_TB",
          "borromean_P", "borromean_plus_arc", "wiggle", "wiggle_mirror", "clasp_B_r2",
          "borromean_TB_r2"};
}

}  // namespace qsl2
