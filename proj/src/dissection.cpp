#include "tri/dissection.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "tri/chain.hpp"

namespace tri {

PieceRef PieceRef::child(Slot s) const {
  PieceRef r = *this;
  r.path.push_back(s);
  return r;
}

std::string PieceRef::str() const {
  std::string out = "root";
  for (Slot s : path) {
    out += '.';
    out += slot_name(s);
  }
  return out;
}

std::optional<PieceRef> PieceRef::parse(std::string_view text) {
  PieceRef r;
  std::size_t pos = text.find('.');
  if (text.substr(0, pos) != "root") return std::nullopt;
  while (pos != std::string_view::npos) {
    const std::size_t next = text.find('.', pos + 1);
    const auto slot = parse_slot(text.substr(pos + 1, next == std::string_view::npos ? next : next - pos - 1));
    if (!slot) return std::nullopt;
    r.path.push_back(*slot);
    pos = next;
  }
  return r;
}

std::string to_string(const Diagnostic& d) {
  return "line " + std::to_string(d.line) + ", column " + std::to_string(d.column) + ": " + d.message;
}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<Int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool valid_tag(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct PieceInfo {
  Int sign = 1;
  Int size = 0;
  bool expanded = false;
  bool tagged = false;
};

struct TagUse {
  int line;
  int column;
  Int sign;
};

class Parser {
 public:
  ParseResult run(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    bool have_target = false;
    while (pos <= text.size()) {
      const std::size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      const auto tokens = tokenize(line);
      if (tokens.empty()) continue;

      if (!have_target) {
        if (tokens[0].text != "target") {
          error(line_no, tokens[0].column, "expected 'target <size> [at <i>,<j>]' first");
          return finish(false);
        }
        if (!parse_target(tokens, line_no)) return finish(false);
        have_target = true;
        continue;
      }
      if (tokens[0].text == "target") {
        error(line_no, tokens[0].column, "duplicate 'target' line");
        continue;
      }
      if (tokens[0].text != "expand") {
        error(line_no, tokens[0].column, "unknown directive '" + std::string(tokens[0].text) + "'");
        continue;
      }
      parse_expand(tokens, line_no);
    }
    if (!have_target) {
      error(line_no, 1, "missing 'target' line");
      return finish(false);
    }
    check_tags();
    return finish(true);
  }

 private:
  void error(int line, int column, std::string message) {
    result_.diagnostics.push_back({line, column, std::move(message)});
  }

  ParseResult finish(bool complete) {
    if (complete && result_.diagnostics.empty()) result_.script = std::move(script_);
    return std::move(result_);
  }

  bool parse_target(const std::vector<Token>& tokens, int line) {
    if (tokens.size() < 2) {
      error(line, tokens[0].column, "target needs a size");
      return false;
    }
    const auto size = parse_int(tokens[1].text);
    if (!size) {
      error(line, tokens[1].column, "invalid target size '" + std::string(tokens[1].text) + "'");
      return false;
    }
    if (*size == 0) {
      error(line, tokens[1].column, "target size must be nonzero");
      return false;
    }
    script_.target_size = *size;
    if (tokens.size() > 2) {
      if (tokens[2].text != "at" || tokens.size() != 4) {
        error(line, tokens[2].column, "expected 'at <i>,<j>'");
        return false;
      }
      const std::string_view xy = tokens[3].text;
      const auto comma = xy.find(',');
      const auto i = comma == std::string_view::npos ? std::nullopt : parse_int(xy.substr(0, comma));
      const auto j = comma == std::string_view::npos ? std::nullopt : parse_int(xy.substr(comma + 1));
      if (!i || !j) {
        error(line, tokens[3].column, "invalid anchor '" + std::string(xy) + "'");
        return false;
      }
      script_.anchor = {*i, *j};
    }
    pieces_.emplace("root", PieceInfo{1, *size});
    return true;
  }

  void parse_expand(const std::vector<Token>& tokens, int line) {
    if (tokens.size() < 7 || tokens[2].text != "=") {
      error(line, tokens[0].column, "expected 'expand <ref> = <n> <k> <l> <t> [tags ...]'");
      return;
    }
    const auto ref = PieceRef::parse(tokens[1].text);
    if (!ref) {
      error(line, tokens[1].column, "malformed piece reference '" + std::string(tokens[1].text) + "'");
      return;
    }
    Int values[4];
    for (int i = 0; i < 4; ++i) {
      const auto v = parse_int(tokens[3 + i].text);
      if (!v) {
        error(line, tokens[3 + i].column, "invalid integer '" + std::string(tokens[3 + i].text) + "'");
        return;
      }
      values[i] = *v;
    }
    const SumLabel params{values[0], values[1], values[2], values[3]};

    const std::string key = ref->str();
    auto it = pieces_.find(key);
    if (it == pieces_.end()) {
      error(line, tokens[1].column, "reference to never-created piece '" + key + "'");
      return;
    }
    PieceInfo& target = it->second;
    if (target.expanded) {
      error(line, tokens[1].column, "piece '" + key + "' is already expanded");
      return;
    }
    if (target.tagged) {
      error(line, tokens[1].column, "piece '" + key + "' carries a cancellation tag and cannot be expanded");
      return;
    }
    Int total = 0;
    try {
      total = params.value();
    } catch (const OverflowError&) {
      error(line, tokens[3].column, "parameters overflow");
      return;
    }
    if (total != target.size) {
      error(line, tokens[3].column,
            "size mismatch: " + std::to_string(params.n) + "+" + std::to_string(params.k) + "+" +
                std::to_string(params.l) + "+" + std::to_string(params.t) + " = " + std::to_string(total) +
                " but '" + key + "' has size " + std::to_string(target.size));
      return;
    }

    ExpansionStep step{*ref, params, {}, line};
    std::vector<std::pair<Slot, int>> tag_columns;
    if (tokens.size() > 7) {
      if (tokens[7].text != "tags" || tokens.size() == 8) {
        error(line, tokens[7].column, "expected 'tags <slot>=<tag>,...'");
        return;
      }
      // The tag list may contain spaces after commas; rejoin it.
      std::string list;
      std::vector<int> columns;
      for (std::size_t i = 8; i < tokens.size(); ++i) {
        for (std::size_t c = 0; c < tokens[i].text.size(); ++c) columns.push_back(tokens[i].column + static_cast<int>(c));
        list += tokens[i].text;
      }
      std::size_t start = 0;
      std::set<Slot> seen;
      while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string item = list.substr(start, comma - start);
        const int col = start < columns.size() ? columns[start] : tokens.back().column;
        const auto eq = item.find('=');
        const auto slot = eq == std::string::npos ? std::nullopt : parse_slot(std::string_view(item).substr(0, eq));
        const std::string tag = eq == std::string::npos ? std::string() : item.substr(eq + 1);
        if (!slot || !valid_tag(tag)) {
          error(line, col, "malformed tag assignment '" + item + "'");
          return;
        }
        if (!seen.insert(*slot).second) {
          error(line, col, "slot '" + std::string(slot_name(*slot)) + "' tagged twice");
          return;
        }
        step.tags.push_back({*slot, tag});
        tag_columns.emplace_back(*slot, col);
        start = comma + 1;
      }
    }

    // Create the children; zero-size terms vanish.
    target.expanded = true;
    const Int parent_sign = target.sign;
    const SumLabel base = params;
    for (Slot s : kEq8Slots) {
      const Int size = base.restrict(slot_mask(s)).value();
      if (size == 0) continue;
      pieces_[ref->child(s).str()] = PieceInfo{parent_sign * slot_sign(s), size};
    }
    for (std::size_t i = 0; i < step.tags.size(); ++i) {
      const auto& [slot, tag] = step.tags[i];
      const int col = tag_columns[i].second;
      auto child = pieces_.find(ref->child(slot).str());
      if (child == pieces_.end()) {
        error(line, col, "tag '" + tag + "' names the zero-size slot '" + std::string(slot_name(slot)) + "'");
        continue;
      }
      child->second.tagged = true;
      auto& uses = tags_[tag];
      if (uses.size() >= 2) {
        error(line, col, "tag '" + tag + "' used more than twice");
        continue;
      }
      uses.push_back({line, col, child->second.sign});
    }
    script_.steps.push_back(std::move(step));
  }

  void check_tags() {
    for (const auto& [tag, uses] : tags_) {
      if (uses.size() == 1) {
        error(uses[0].line, uses[0].column, "unpaired tag '" + tag + "'");
      } else if (uses.size() == 2 && uses[0].sign == uses[1].sign) {
        error(uses[1].line, uses[1].column,
              "tag '" + tag + "' pairs two pieces of the same sign (needs one positive and one negative)");
      }
    }
  }

  DissectionScript script_;
  ParseResult result_;
  std::map<std::string, PieceInfo> pieces_;
  std::map<std::string, std::vector<TagUse>> tags_;
};

}  // namespace

ParseResult parse_script(std::string_view text) { return Parser().run(text); }

DissectionStats compute_stats(const std::vector<Piece>& pieces) {
  DissectionStats s;
  s.piece_count = pieces.size();
  for (const Piece& p : pieces) {
    s.signed_sizes.push_back(p.tri.size);
    s.sum_of_squares = checked_add(s.sum_of_squares, checked_mul(p.tri.size, p.tri.size));
  }
  return s;
}

DissectionResult interpret(const DissectionScript& script) { return interpret(script, script.anchor); }

std::vector<TaggedPiece> expand_script(const DissectionScript& script, const LatticeCoord& root_anchor) {
  struct Node {
    TaggedPiece leaf;
    bool expanded = false;
  };
  std::vector<Node> nodes;
  std::map<std::string, std::size_t> index;
  auto add_node = [&](Piece p) {
    index[p.ref.str()] = nodes.size();
    nodes.push_back({{std::move(p), {}}, false});
  };
  add_node({PieceRef{}, 1, PlacedTriangle{root_anchor, script.target_size}});

  for (const ExpansionStep& step : script.steps) {
    const auto it = index.find(step.target.str());
    if (it == index.end()) throw InterpretError(step.line, "unknown piece '" + step.target.str() + "'");
    Node& node = nodes[it->second];
    if (node.expanded) throw InterpretError(step.line, "piece '" + step.target.str() + "' expanded twice");
    if (!node.leaf.tag.empty()) throw InterpretError(step.line, "tagged piece '" + step.target.str() + "' expanded");
    node.expanded = true;
    const Piece parent = node.leaf.piece;

    const SumLabel& p = step.params;
    if (p.value() != parent.tri.size) throw InterpretError(step.line, "size mismatch at '" + parent.ref.str() + "'");
    const PlacedTriangle base{parent.tri.anchor + LatticeCoord{p.k, p.l}, p.t};
    const Eq8Layout layout = eq8_layout(base, p.n, p.k, p.l);
    if (layout.big != parent.tri) throw InterpretError(step.line, "layout does not reproduce the expanded piece");
    const auto terms = eq8_terms(layout);
    if (!geom_check(terms, {1, layout.big}, Mode::N2).empty()) {
      throw InterpretError(step.line, "expansion of '" + parent.ref.str() + "' leaves a nonzero residual");
    }
    for (std::size_t i = 0; i < kEq8Slots.size(); ++i) {
      if (terms[i].tri.size == 0) continue;
      add_node({parent.ref.child(kEq8Slots[i]), parent.sign * terms[i].sign, terms[i].tri});
    }
    for (const TagAssignment& tag : step.tags) {
      const auto child = index.find(parent.ref.child(tag.slot).str());
      if (child == index.end()) throw InterpretError(step.line, "tag '" + tag.tag + "' names a zero-size slot");
      nodes[child->second].leaf.tag = tag.tag;
    }
  }

  std::vector<TaggedPiece> leaves;
  for (const Node& n : nodes) {
    if (!n.expanded) leaves.push_back(n.leaf);
  }
  return leaves;
}

DissectionResult interpret(const DissectionScript& script, const LatticeCoord& root_anchor) {
  DissectionResult result;
  result.root = PlacedTriangle{root_anchor, script.target_size};
  const std::vector<TaggedPiece> leaves = expand_script(script, root_anchor);

  std::map<std::string, std::vector<std::size_t>> by_tag;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (!leaves[i].tag.empty()) by_tag[leaves[i].tag].push_back(i);
  }
  std::set<std::size_t> cancelled;
  for (const auto& [tag, members] : by_tag) {
    if (members.size() != 2) throw InterpretError(0, "tag '" + tag + "' is not paired");
    const Piece& a = leaves[members[0]].piece;
    const Piece& b = leaves[members[1]].piece;
    if (a.tri != b.tri) {
      throw InterpretError(0, "cancellation '" + tag + "' pairs different placements " + to_string(a.tri) + " and " +
                                  to_string(b.tri));
    }
    if (a.sign != -b.sign) throw InterpretError(0, "cancellation '" + tag + "' pairs pieces of equal sign");
    result.cancellations.push_back({tag, a.sign > 0 ? a : b, a.sign > 0 ? b : a});
    cancelled.insert(members.begin(), members.end());
  }

  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (cancelled.count(i)) continue;
    if (leaves[i].piece.sign < 0) {
      throw InterpretError(0, "negative piece '" + leaves[i].piece.ref.str() + "' survives cancellation");
    }
    result.pieces.push_back(leaves[i].piece);
  }
  result.stats = compute_stats(result.pieces);
  return result;
}

PerfectReport verify_perfect(const DissectionResult& r, const PlacedTriangle& target) {
  PerfectReport rep;
  Chain sum(Mode::N2);
  for (const Piece& p : r.pieces) accumulate(sum, p.tri, p.sign);
  const Chain expected = face_chain(target);
  rep.exact_tiling = sum == expected;
  if (!rep.exact_tiling) {
    Int off = 0;
    for (const auto& [s, m] : sum - expected) off += m < 0 ? -m : m;
    rep.failures.push_back("pieces do not tile the target with unit multiplicity (" + std::to_string(off) +
                           " cells off)");
  }

  std::map<Int, int> counts;
  for (const Piece& p : r.pieces) ++counts[p.tri.size];
  rep.distinct_sizes = true;
  for (const auto& [size, count] : counts) {
    if (count > 1) {
      rep.distinct_sizes = false;
      rep.failures.push_back("size " + std::to_string(size) + " occurs " + std::to_string(count) + " times");
    }
  }

  rep.sum_of_squares = compute_stats(r.pieces).sum_of_squares;
  rep.target_square = checked_mul(target.size, target.size);
  rep.squares_match = rep.sum_of_squares == rep.target_square;
  if (!rep.squares_match) {
    rep.failures.push_back("sum of squared sizes " + std::to_string(rep.sum_of_squares) + " != " +
                           std::to_string(rep.target_square));
  }
  return rep;
}

std::optional<Builtin> parse_builtin(std::string_view name) {
  if (name == "a" || name == "A") return Builtin::A;
  if (name == "b" || name == "B") return Builtin::B;
  return std::nullopt;
}

namespace {

constexpr std::string_view kBuiltinA = R"(# 15 distinct triangles in <39>, first decomposition.
target 39
# <39> = <19> + <20> + <27> - <7>_1 - <8>_2 + <-12>
expand root = 19 12 20 -12 tags n=1,l=2
# <27> = <16_1> + <11> + <16_2> - <5>_3 + <-11>
expand root.nl = 11 16 11 -11 tags k=3
# <16_1> = <7>_1 + <9_1> + <9_2> - <2>_4 + <-7>
expand root.nl.nk = 7 7 9 -7 tags nk=1,l=4
# <9_2> = <7_1> + <2>_4 + <7_2> - <5>_5 + <-2>
expand root.nl.nk.kl = 2 7 2 -2 tags nl=4,k=5
# <7_2> = <5>_5 + <2_1> + <2>_7 - <-3>_6 + <-5>
expand root.nl.nk.kl.kl = 5 5 2 -5 tags nk=5,kl=7,l=6
# <16_2> = <8_1> + <8_2> + <8>_2 + <-8>
expand root.nl.kl = 8 8 8 -8 tags kl=2
# <8_1> = <5>_3 + <5_2> + <3> - <2>_7 + <-3>_6
expand root.nl.kl.nk = 3 5 3 -3 tags nk=3,k=7,t=6
)";

constexpr std::string_view kBuiltinB = R"(# 15 distinct triangles in <39>, second decomposition.
target 39
# <39> = <19_1> + <20_1> + <20_2>_6 - <1_1>_1 + <-19>
expand root = 19 19 20 -19 tags nl=6,l=1
# <-19> = <-12_1> + <-7> + <-12_2> - <-5>_2 + <7>
expand root.t = -12 -7 -7 7 tags n=2
# <-12_1> = <-7>_7 + <-7_2> + <-5>_2 - <-2>_3 + <5>
expand root.t.nk = -5 -7 -5 5 tags nk=7,nl=2,k=3
# <-7_2> = <-5_1> + <-2> + <-5_2> - <-3>_4 + <2>
expand root.t.nk.kl = -5 -2 -2 2 tags n=4
# <-5_1> = <-2>_3 + <-2_2> + <-3>_4 - <1>_5 + <3>
expand root.t.nk.kl.nk = -3 -2 -3 3 tags nk=3,nl=4,k=5
# <-2_2> = <9_1> + <9_2> + <-11> - <20>_6 + <11>
expand root.t.nk.kl.nk.kl = -11 9 -11 11 tags k=6
# <9_1> = <1>_5 + <1>_1 + <8> - <-7>_7 + <-8>
expand root.t.nk.kl.nk.kl.nk = 8 1 8 -8 tags nk=5,kl=1,k=7
)";

}  // namespace

std::string_view builtin_dissection(Builtin which) { return which == Builtin::A ? kBuiltinA : kBuiltinB; }

DissectionScript builtin_script(Builtin which) {
  ParseResult parsed = parse_script(builtin_dissection(which));
  if (!parsed.ok()) throw std::logic_error("builtin dissection failed to parse: " + to_string(parsed.diagnostics.front()));
  return std::move(*parsed.script);
}

}  // namespace tri
