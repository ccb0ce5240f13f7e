#include "parasoc/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "parasoc/errors.hpp"

namespace parasoc {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-blank lines with comments removed.
std::vector<Line> tokenize(std::string_view text, bool strip_comments = true) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (strip_comments) {
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t b = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > b) line.tokens.push_back({raw.substr(b, i - b), b + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_int(std::string_view s) {
  int v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && p == s.data() + s.size();
}

int to_int(const Line& line, const Token& tok, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || p != tok.text.data() + tok.text.size()) {
    throw ParseError(line.number, tok.column,
                     std::string("expected integer ") + what + ", got '" + std::string(tok.text) + "'");
  }
  return v;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

PreferenceOrder parse_row(const Line& line, int m, int voter) {
  const std::string who = "voter " + std::to_string(voter) + ": ";
  if (static_cast<int>(line.tokens.size()) != m) {
    throw ParseError(line.number, 0,
                     who + "expected " + std::to_string(m) + " alternatives, got " +
                         std::to_string(line.tokens.size()));
  }
  std::vector<char> seen(m, 0);
  std::vector<Alternative> r;
  for (const auto& tok : line.tokens) {
    const int a = to_int(line, tok, "alternative id");
    if (a < 0 || a >= m) {
      throw ParseError(line.number, tok.column, who + "alternative " + std::to_string(a) + " out of range");
    }
    if (seen[a]) {
      throw ParseError(line.number, tok.column, who + "duplicate alternative " + std::to_string(a));
    }
    seen[a] = 1;
    r.push_back(a);
  }
  return PreferenceOrder(std::move(r));
}

}  // namespace

Election parse_election(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty input; expected header 'm n'");
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(head.number, 0, "header must be 'm n'");
  const int m = to_int(head, head.tokens[0], "m");
  const int n = to_int(head, head.tokens[1], "n");
  if (m < 1) throw ParseError(head.number, head.tokens[0].column, "m must be at least 1");
  if (n < 1) throw ParseError(head.number, head.tokens[1].column, "n must be at least 1");
  const std::size_t data = lines.size() - 1;
  if (data != static_cast<std::size_t>(n) && data != static_cast<std::size_t>(n) + 1) {
    const std::size_t at = data == 0 ? head.number : lines.back().number;
    throw ParseError(at, 0, "expected " + std::to_string(n) + " voter rows, found " + std::to_string(data));
  }
  std::size_t next = 1;
  std::vector<std::string> labels;
  if (data == static_cast<std::size_t>(n) + 1) {
    const Line& l = lines[next++];
    if (static_cast<int>(l.tokens.size()) != m) {
      throw ParseError(l.number, 0, "label line must name all " + std::to_string(m) + " alternatives");
    }
    for (const auto& tok : l.tokens) labels.emplace_back(tok.text);
  }
  std::vector<PreferenceOrder> voters;
  for (int v = 0; v < n; ++v) voters.push_back(parse_row(lines[next + v], m, v));
  try {
    return Election(m, std::move(voters), std::move(labels));
  } catch (const InputError& err) {
    throw ParseError(lines[1].number, 0, err.what());
  }
}

std::string write_election(const Election& e) {
  std::string out = std::to_string(e.num_alternatives()) + " " + std::to_string(e.num_voters()) + "\n";
  if (!e.labels().empty()) {
    for (std::size_t i = 0; i < e.labels().size(); ++i) {
      if (i) out += ' ';
      out += e.labels()[i];
    }
    out += '\n';
  }
  for (const auto& v : e.voters()) out += join(v.ranking()) + "\n";
  return out;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    auto part = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!part.empty() && (part.front() == ' ' || part.front() == '\t')) part.remove_prefix(1);
    while (!part.empty() && (part.back() == ' ' || part.back() == '\t' || part.back() == '\r')) part.remove_suffix(1);
    parts.push_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

int parse_plain_int(std::string_view s, std::size_t line, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, 0, std::string("expected integer ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::pair<std::size_t, std::string_view>> raw_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto l = text.substr(start, end - start);
    while (!l.empty() && (l.back() == '\r' || l.back() == ' ')) l.remove_suffix(1);
    if (!l.empty()) out.emplace_back(number, l);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

Election build_from_counts(int m, const std::vector<std::pair<int, std::vector<int>>>& rows,
                           std::vector<std::string> labels, std::size_t line) {
  std::vector<PreferenceOrder> voters;
  for (const auto& [count, order] : rows) {
    std::vector<Alternative> r;
    for (int id : order) r.push_back(id - 1);
    if (static_cast<int>(r.size()) != m) {
      throw ParseError(line, 0, "PrefLib row is not a complete strict order over " + std::to_string(m) + " alternatives");
    }
    PreferenceOrder o(std::move(r));
    for (int i = 0; i < count; ++i) voters.push_back(o);
  }
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(labels.size()) != m ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      std::any_of(labels.begin(), labels.end(), [](const std::string& s) {
        return s.empty() || s.find_first_of(" \t#") != std::string::npos;
      })) {
    labels.clear();
  }
  return Election(m, std::move(voters), std::move(labels));
}

}  // namespace

Election parse_preflib_soc(std::string_view text) {
  const auto lines = raw_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty PrefLib input");
  const bool modern = lines.front().second.starts_with("#");
  int m = -1;
  std::map<int, std::string> names;
  std::vector<std::pair<int, std::vector<int>>> rows;
  std::size_t last_line = lines.back().first;
  if (modern) {
    for (const auto& [no, l] : lines) {
      if (l.starts_with("#")) {
        const auto colon = l.find(':');
        if (colon == std::string_view::npos) continue;
        std::string key(l.substr(1, colon - 1));
        auto value = l.substr(colon + 1);
        while (!value.empty() && value.front() == ' ') value.remove_prefix(1);
        key.erase(0, key.find_first_not_of(' '));
        if (key == "NUMBER ALTERNATIVES") m = parse_plain_int(value, no, "alternative count");
        if (key.starts_with("ALTERNATIVE NAME ")) {
          names[parse_plain_int(std::string_view(key).substr(17), no, "alternative id")] = std::string(value);
        }
        continue;
      }
      const auto colon = l.find(':');
      if (colon == std::string_view::npos) throw ParseError(no, 0, "expected '<count>: <order>'");
      const int count = parse_plain_int(split_commas(l.substr(0, colon)).front(), no, "count");
      std::vector<int> order;
      for (auto part : split_commas(l.substr(colon + 1))) {
        if (part.starts_with("{")) throw ParseError(no, 0, "ties are not supported");
        order.push_back(parse_plain_int(part, no, "alternative id"));
      }
      rows.emplace_back(count, std::move(order));
    }
    if (m < 1) throw ParseError(1, 0, "missing '# NUMBER ALTERNATIVES' header");
  } else {
    std::size_t i = 0;
    m = parse_plain_int(lines[i].second, lines[i].first, "alternative count");
    ++i;
    for (int a = 0; a < m; ++a, ++i) {
      if (i >= lines.size()) throw ParseError(last_line, 0, "missing alternative names");
      const auto parts = split_commas(lines[i].second);
      const int id = parse_plain_int(parts.front(), lines[i].first, "alternative id");
      names[id] = parts.size() > 1 ? std::string(parts[1]) : std::string();
    }
    if (i >= lines.size()) throw ParseError(last_line, 0, "missing voter totals line");
    ++i;
    for (; i < lines.size(); ++i) {
      const auto parts = split_commas(lines[i].second);
      std::vector<int> order;
      for (std::size_t j = 1; j < parts.size(); ++j) {
        order.push_back(parse_plain_int(parts[j], lines[i].first, "alternative id"));
      }
      rows.emplace_back(parse_plain_int(parts.front(), lines[i].first, "count"), std::move(order));
    }
  }
  std::vector<std::string> labels;
  for (int a = 1; a <= m; ++a) {
    auto it = names.find(a);
    labels.push_back(it == names.end() ? std::string() : it->second);
  }
  try {
    return build_from_counts(m, rows, std::move(labels), last_line);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& err) {
    throw ParseError(last_line, 0, err.what());
  }
}

Election parse_election_auto(std::string_view text) {
  if (text.find("# NUMBER ALTERNATIVES") != std::string_view::npos ||
      text.find("# DATA TYPE") != std::string_view::npos) {
    return parse_preflib_soc(text);
  }
  const auto lines = tokenize(text);
  if (!lines.empty() && lines.front().tokens.size() == 1 && is_int(lines.front().tokens[0].text)) {
    return parse_preflib_soc(text);
  }
  return parse_election(text);
}

Circuit parse_circuit(std::string_view text) {
  const auto lines = tokenize(text);
  Circuit c;
  std::map<int, int> gate_of;  // file gid -> internal id
  bool seen_gate = false;
  bool seen_output = false;
  for (const auto& line : lines) {
    if (seen_output) throw ParseError(line.number, 0, "statement after OUTPUT");
    const auto& t = line.tokens;
    if (t[0].text == "OUTPUT") {
      if (t.size() != 2) throw ParseError(line.number, 0, "expected 'OUTPUT <gid>'");
      const int gid = to_int(line, t[1], "gate id");
      auto it = gate_of.find(gid);
      if (it == gate_of.end()) throw ParseError(line.number, t[1].column, "output gate is undefined");
      c.set_output(it->second);
      seen_output = true;
      continue;
    }
    if (t.size() < 2) throw ParseError(line.number, 0, "expected '<gid> <KIND> ...'");
    const int gid = to_int(line, t[0], "gate id");
    if (gid < 0) throw ParseError(line.number, t[0].column, "gate ids must be nonnegative");
    if (gate_of.count(gid)) throw ParseError(line.number, t[0].column, "gate id defined twice");
    const auto kind = gate_kind_from(t[1].text);
    if (!kind) throw ParseError(line.number, t[1].column, "unknown gate kind '" + std::string(t[1].text) + "'");
    if (*kind == GateKind::input) {
      if (t.size() != 2) throw ParseError(line.number, 0, "INPUT takes no arguments");
      if (seen_gate) throw ParseError(line.number, 0, "variables must be declared before gates");
      gate_of[gid] = c.add_input();
      continue;
    }
    seen_gate = true;
    std::vector<int> inputs;
    for (std::size_t i = 2; i < t.size(); ++i) {
      const int ref = to_int(line, t[i], "gate id");
      auto it = gate_of.find(ref);
      if (it == gate_of.end()) {
        throw ParseError(line.number, t[i].column, "reference to undefined gate " + std::to_string(ref));
      }
      inputs.push_back(it->second);
    }
    try {
      gate_of[gid] = c.add_gate(*kind, std::move(inputs));
    } catch (const InputError& err) {
      throw ParseError(line.number, 0, err.what());
    }
  }
  if (!seen_output) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 0, "missing OUTPUT statement");
  }
  return c;
}

std::string write_circuit(const Circuit& c) {
  std::string out;
  for (int id = 0; id < c.num_gates(); ++id) {
    const Gate& g = c.gate(id);
    out += std::to_string(id) + " " + std::string(to_string(g.kind));
    for (int in : g.inputs) out += " " + std::to_string(in);
    out += '\n';
  }
  out += "OUTPUT " + std::to_string(c.output()) + "\n";
  return out;
}

std::vector<PiecewisePolyDensity> parse_densities(std::string_view text, int max_degree) {
  const auto lines = tokenize(text);
  std::vector<PiecewisePolyDensity> out;
  std::vector<DensityPiece> current;
  std::size_t player_line = 0;
  auto flush = [&]() {
    if (player_line == 0) return;
    try {
      out.emplace_back(std::move(current), max_degree);
    } catch (const InputError& err) {
      throw ParseError(player_line, 0, "player " + std::to_string(out.size()) + ": " + err.what());
    }
    current.clear();
  };
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0].text == "player") {
      if (t.size() != 1) throw ParseError(line.number, 0, "'player' takes no arguments");
      flush();
      player_line = line.number;
      continue;
    }
    if (t[0].text != "piece") {
      throw ParseError(line.number, t[0].column, "expected 'player' or 'piece'");
    }
    if (player_line == 0) throw ParseError(line.number, 0, "piece before the first 'player' line");
    if (t.size() < 4) throw ParseError(line.number, 0, "expected 'piece <l> <r> <c0> ...'");
    DensityPiece piece;
    std::vector<Rational> nums;
    for (std::size_t i = 1; i < t.size(); ++i) {
      try {
        nums.push_back(parse_rational(t[i].text));
      } catch (const InputError& err) {
        throw ParseError(line.number, t[i].column, err.what());
      }
    }
    piece.left = nums[0];
    piece.right = nums[1];
    piece.coeffs.assign(nums.begin() + 2, nums.end());
    current.push_back(std::move(piece));
  }
  flush();
  if (out.empty()) throw ParseError(1, 0, "no players defined");
  return out;
}

std::string write_densities(std::span<const PiecewisePolyDensity> densities) {
  std::string out;
  for (const auto& f : densities) {
    out += "player\n";
    for (const auto& p : f.pieces()) {
      out += "piece " + to_string(p.left) + " " + to_string(p.right);
      if (p.coeffs.empty()) out += " 0";
      for (const auto& c : p.coeffs) out += " " + to_string(c);
      out += '\n';
    }
  }
  return out;
}

MabInstance parse_mab(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty input; expected header 'm n'");
  const Line& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(head.number, 0, "header must be 'm n'");
  MabInstance inst;
  inst.num_proposals = to_int(head, head.tokens[0], "m");
  const int n = to_int(head, head.tokens[1], "n");
  bool seen_agenda = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto keyword = line.tokens[0].text;
    std::vector<int> ids;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) ids.push_back(to_int(line, line.tokens[j], "proposal id"));
    std::sort(ids.begin(), ids.end());
    if (keyword == "agenda") {
      if (seen_agenda || !inst.ballots.empty()) throw ParseError(line.number, 0, "agenda must come once, before the ballots");
      seen_agenda = true;
      inst.agenda = std::move(ids);
    } else if (keyword == "ballot") {
      inst.ballots.push_back(std::move(ids));
    } else {
      throw ParseError(line.number, line.tokens[0].column, "expected 'agenda' or 'ballot'");
    }
  }
  if (static_cast<int>(inst.ballots.size()) != n) {
    throw ParseError(lines.back().number, 0,
                     "expected " + std::to_string(n) + " ballots, found " + std::to_string(inst.ballots.size()));
  }
  try {
    validate(inst);
  } catch (const InputError& err) {
    throw ParseError(head.number, 0, err.what());
  }
  return inst;
}

std::string write_mab(const MabInstance& inst) {
  std::string out = std::to_string(inst.num_proposals) + " " + std::to_string(inst.ballots.size()) + "\n";
  if (!inst.agenda.empty()) out += "agenda " + join(inst.agenda) + "\n";
  for (const auto& b : inst.ballots) out += b.empty() ? "ballot\n" : "ballot " + join(b) + "\n";
  return out;
}

}  // namespace parasoc
