#include "streett/format.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace streett {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
  std::vector<Line> out;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok)
      line.tokens.push_back(tok);
    if (!line.tokens.empty())
      out.push_back(std::move(line));
  }
  return out;
}

int parse_int(const std::string& s, int line)
{
  size_t pos = 0;
  int v;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + s + "'", line);
  }
  if (pos != s.size())
    throw parse_error("trailing junk after integer in '" + s + "'", line);
  return v;
}

// key=value token; returns value or throws
std::string expect_kv(const std::string& tok, const std::string& key, int line)
{
  if (tok.rfind(key + "=", 0) != 0)
    throw parse_error("expected " + key + "=..., got '" + tok + "'", line);
  return tok.substr(key.size() + 1);
}

std::vector<std::string> split_commas(const std::string& s)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<int> parse_int_list(const std::string& s, int line)
{
  std::vector<int> out;
  if (s == "-" || s.empty())
    return out;
  for (const auto& item : split_commas(s))
    out.push_back(parse_int(item, line));
  return out;
}

std::string join_ints(const std::vector<int>& v)
{
  if (v.empty())
    return "-";
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

// ---------------------------------------------------------------- native nsa

StreettNSA parse_native_nsa(const std::vector<Line>& lines)
{
  StreettNSA nsa;
  const Line& head = lines.front();
  if (head.tokens.size() != 4)
    throw parse_error("nsa header needs n=, k= and sigma=", head.number);
  nsa.n = parse_int(expect_kv(head.tokens[1], "n", head.number), head.number);
  int k = parse_int(expect_kv(head.tokens[2], "k", head.number), head.number);
  nsa.alphabet.size = parse_int(expect_kv(head.tokens[3], "sigma", head.number), head.number);
  if (k < 0)
    throw semantic_error("negative pair count", head.number);
  nsa.pairs.resize(k);

  bool saw_init = false;
  std::vector<char> saw_pair(k, 0);
  std::set<Transition> transitions;
  std::vector<std::vector<std::string>> pair_bodies(k, std::vector<std::string>{});
  std::vector<int> pair_lines(k, 0);

  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const std::string& kw = ln.tokens[0];
    if (kw == "letters") {
      if (!nsa.alphabet.names.empty())
        throw semantic_error("duplicate letters line", ln.number);
      nsa.alphabet.names.assign(ln.tokens.begin() + 1, ln.tokens.end());
    } else if (kw == "init") {
      if (saw_init)
        throw semantic_error("duplicate init line", ln.number);
      saw_init = true;
      for (size_t i = 1; i < ln.tokens.size(); ++i) {
        int q = parse_int(ln.tokens[i], ln.number);
        if (q < 0 || q >= nsa.n)
          throw semantic_error("initial state out of range", ln.number);
        nsa.initial |= state_bit(q);
      }
    } else if (kw == "t") {
      if (ln.tokens.size() != 4)
        throw parse_error("transition line needs src letter dst", ln.number);
      Transition t{parse_int(ln.tokens[1], ln.number), parse_int(ln.tokens[2], ln.number),
                   parse_int(ln.tokens[3], ln.number)};
      if (t.src < 0 || t.src >= nsa.n || t.dst < 0 || t.dst >= nsa.n)
        throw semantic_error("transition references an unknown state", ln.number);
      if (t.letter < 0 || t.letter >= nsa.alphabet.size)
        throw semantic_error("transition references an unknown letter", ln.number);
      transitions.insert(t);
    } else if (kw == "pair") {
      if (ln.tokens.size() != 4)
        throw parse_error("pair line needs index, G=... and B=...", ln.number);
      int idx = parse_int(ln.tokens[1], ln.number);
      if (idx < 1 || idx > k)
        throw semantic_error("pair index " + std::to_string(idx) + " outside 1..k"
                             + (idx > k ? " (more pair bodies than the declared k)" : ""),
                             ln.number);
      if (saw_pair[idx - 1])
        throw semantic_error("duplicate pair " + std::to_string(idx), ln.number);
      saw_pair[idx - 1] = 1;
      pair_bodies[idx - 1] = {expect_kv(ln.tokens[2], "G", ln.number),
                              expect_kv(ln.tokens[3], "B", ln.number)};
      pair_lines[idx - 1] = ln.number;
    } else {
      throw parse_error("unknown line keyword '" + kw + "'", ln.number);
    }
  }
  if (!saw_init)
    throw semantic_error("missing init line");
  for (int i = 0; i < k; ++i)
    if (!saw_pair[i])
      throw semantic_error("missing body for pair " + std::to_string(i + 1));

  nsa.transitions.assign(transitions.begin(), transitions.end());

  // an edge member looks like src:letter:dst; a state member is a bare int
  bool any_edges = false, any_states = false;
  for (const auto& body : pair_bodies)
    for (const auto& side : body)
      if (side != "-" && !side.empty()) {
        if (side.find(':') != std::string::npos)
          any_edges = true;
        else
          any_states = true;
      }
  if (any_edges && any_states)
    throw semantic_error("pairs mix state members and edge members");
  nsa.basis = any_edges ? PairBasis::transitions : PairBasis::states;

  for (int i = 0; i < k; ++i) {
    int line = pair_lines[i];
    for (int side = 0; side < 2; ++side) {
      const std::string& body = pair_bodies[i][side];
      if (body == "-" || body.empty())
        continue;
      if (nsa.basis == PairBasis::states) {
        StateSet set = 0;
        for (int q : parse_int_list(body, line)) {
          if (q < 0 || q >= nsa.n)
            throw semantic_error("pair member state out of range", line);
          set |= state_bit(q);
        }
        (side == 0 ? nsa.pairs[i].g_states : nsa.pairs[i].b_states) = set;
      } else {
        std::vector<int>& ids =
            side == 0 ? nsa.pairs[i].g_transitions : nsa.pairs[i].b_transitions;
        for (const auto& item : split_commas(body)) {
          std::vector<std::string> parts;
          std::string cur;
          for (char c : item) {
            if (c == ':') {
              parts.push_back(cur);
              cur.clear();
            } else
              cur.push_back(c);
          }
          parts.push_back(cur);
          if (parts.size() != 3)
            throw parse_error("edge member must be src:letter:dst", line);
          Transition t{parse_int(parts[0], line), parse_int(parts[1], line),
                       parse_int(parts[2], line)};
          int id = -1;
          auto it = transitions.find(t);
          if (it != transitions.end())
            id = static_cast<int>(std::distance(transitions.begin(), it));
          if (id < 0)
            throw semantic_error("pair references a transition not in the automaton", line);
          ids.push_back(id);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      }
    }
  }
  nsa.validate();
  return nsa;
}

// ---------------------------------------------------------------- native det

DetAutomaton parse_native_det(const std::vector<Line>& lines, DetKind kind)
{
  DetAutomaton aut;
  aut.kind = kind;
  const Line& head = lines.front();
  size_t want = kind == DetKind::parity_transitions ? 8 : 7;
  if (head.tokens.size() != want)
    throw parse_error("malformed header", head.number);
  size_t f = 1;
  aut.num_states = parse_int(expect_kv(head.tokens[f++], "states", head.number), head.number);
  aut.sigma = parse_int(expect_kv(head.tokens[f++], "sigma", head.number), head.number);
  aut.initial = parse_int(expect_kv(head.tokens[f++], "init", head.number), head.number);
  std::string sink = expect_kv(head.tokens[f++], "sink", head.number);
  aut.sink = sink == "-" ? -1 : parse_int(sink, head.number);
  if (kind == DetKind::parity_transitions)
    aut.max_priority =
        parse_int(expect_kv(head.tokens[f++], "maxprio", head.number), head.number);
  aut.source_n = parse_int(expect_kv(head.tokens[f++], "srcn", head.number), head.number);
  aut.source_k = parse_int(expect_kv(head.tokens[f++], "srck", head.number), head.number);

  if (aut.num_states < 1 || aut.sigma < 1)
    throw semantic_error("bad state or alphabet count", head.number);
  size_t nt = static_cast<size_t>(aut.num_states) * aut.sigma;
  aut.step.assign(nt, -1);
  if (kind == DetKind::rabin_transitions) {
    aut.t_acc.resize(nt);
    aut.t_rej.resize(nt);
  }
  if (kind == DetKind::parity_transitions)
    aut.priority.assign(nt, -1);

  for (size_t li = 1; li < lines.size(); ++li) {
    const Line& ln = lines[li];
    const std::string& kw = ln.tokens[0];
    if (kw == "pairname") {
      if (kind == DetKind::parity_transitions)
        throw parse_error("pairname in a parity automaton", ln.number);
      if (ln.tokens.size() != 3)
        throw parse_error("pairname needs id and name", ln.number);
      int id = parse_int(ln.tokens[1], ln.number);
      if (id != static_cast<int>(aut.pair_names.size()))
        throw semantic_error("pairname ids must be dense and ascending", ln.number);
      aut.pair_names.push_back(ln.tokens[2]);
      if (kind == DetKind::rabin_states)
        aut.state_pairs.emplace_back();
    } else if (kw == "pair") {
      if (kind != DetKind::rabin_states)
        throw parse_error("state pair line outside a dra", ln.number);
      if (ln.tokens.size() != 4)
        throw parse_error("pair line needs id, A=... and R=...", ln.number);
      int id = parse_int(ln.tokens[1], ln.number);
      if (id < 0 || id >= static_cast<int>(aut.state_pairs.size()))
        throw semantic_error("pair id without a preceding pairname", ln.number);
      aut.state_pairs[id].accept = parse_int_list(expect_kv(ln.tokens[2], "A", ln.number),
                                                  ln.number);
      aut.state_pairs[id].reject = parse_int_list(expect_kv(ln.tokens[3], "R", ln.number),
                                                  ln.number);
    } else if (kw == "t") {
      size_t base = 4;
      if (ln.tokens.size() < base)
        throw parse_error("transition line too short", ln.number);
      int src = parse_int(ln.tokens[1], ln.number);
      int letter = parse_int(ln.tokens[2], ln.number);
      int dst = parse_int(ln.tokens[3], ln.number);
      if (src < 0 || src >= aut.num_states || dst < 0 || dst >= aut.num_states)
        throw semantic_error("transition references an unknown state", ln.number);
      if (letter < 0 || letter >= aut.sigma)
        throw semantic_error("transition references an unknown letter", ln.number);
      size_t tid = static_cast<size_t>(src) * aut.sigma + letter;
      if (aut.step[tid] != -1)
        throw semantic_error("duplicate transition for (state, letter)", ln.number);
      aut.step[tid] = dst;
      if (kind == DetKind::rabin_transitions) {
        if (ln.tokens.size() != 6)
          throw parse_error("drta transition needs acc= and rej=", ln.number);
        aut.t_acc[tid] = parse_int_list(expect_kv(ln.tokens[4], "acc", ln.number), ln.number);
        aut.t_rej[tid] = parse_int_list(expect_kv(ln.tokens[5], "rej", ln.number), ln.number);
      } else if (kind == DetKind::parity_transitions) {
        if (ln.tokens.size() != 5)
          throw parse_error("dpta transition needs p=", ln.number);
        aut.priority[tid] = parse_int(expect_kv(ln.tokens[4], "p", ln.number), ln.number);
      } else if (ln.tokens.size() != 4) {
        throw parse_error("dra transition takes no extras", ln.number);
      }
    } else {
      throw parse_error("unknown line keyword '" + kw + "'", ln.number);
    }
  }
  for (int dst : aut.step)
    if (dst < 0)
      throw semantic_error("step function is not total");
  aut.validate();
  return aut;
}

// ----------------------------------------------------------------- HOA subset

struct HoaEdge {
  std::vector<int> letters;
  int dst = 0;
  std::vector<int> marks;
};

struct HoaState {
  int id = 0;
  std::vector<int> marks;
  std::vector<HoaEdge> edges;
};

struct Hoa {
  int states = -1;
  std::vector<int> starts;
  int aps = -1;
  int acc_sets = -1;
  std::string acc_name_kind; // Streett / Rabin / parity
  int acc_name_count = 0;
  std::vector<HoaState> body;
};

std::vector<int> expand_label(const std::string& expr, int aps, int line)
{
  if (aps > 16)
    throw unsupported_feature_error("more than 16 atomic propositions", line);
  int letters = 1 << aps;
  if (expr == "t") {
    std::vector<int> all(letters);
    for (int i = 0; i < letters; ++i)
      all[i] = i;
    return all;
  }
  if (expr == "f")
    return {};
  if (expr.find_first_of("()") != std::string::npos)
    throw unsupported_feature_error("parenthesised edge labels", line);
  std::set<int> out;
  std::string disj;
  std::istringstream ds(expr);
  while (std::getline(ds, disj, '|')) {
    int forced_true = 0, forced_false = 0;
    std::string lit;
    std::istringstream cs(disj);
    while (std::getline(cs, lit, '&')) {
      bool neg = !lit.empty() && lit[0] == '!';
      std::string num = neg ? lit.substr(1) : lit;
      int ap = parse_int(num, line);
      if (ap < 0 || ap >= aps)
        throw semantic_error("label references an unknown proposition", line);
      (neg ? forced_false : forced_true) |= 1 << ap;
    }
    if (forced_true & forced_false)
      continue; // contradictory conjunct
    for (int l = 0; l < letters; ++l)
      if ((l & forced_true) == forced_true && (l & forced_false) == 0)
        out.insert(l);
  }
  return {out.begin(), out.end()};
}

std::vector<int> parse_marks(std::istringstream& is, int line)
{
  std::vector<int> out;
  std::string tok;
  if (!(is >> tok))
    return out;
  if (tok.front() != '{')
    throw parse_error("expected acceptance marks in braces", line);
  std::string content = tok;
  while (content.find('}') == std::string::npos) {
    if (!(is >> tok))
      throw parse_error("unterminated acceptance marks", line);
    content += " " + tok;
  }
  content = content.substr(1, content.find('}') - 1);
  std::istringstream ms(content);
  while (ms >> tok)
    out.push_back(parse_int(tok, line));
  return out;
}

Hoa parse_hoa_text(const std::string& text)
{
  Hoa hoa;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  bool in_body = false;
  HoaState* cur = nullptr;
  while (std::getline(is, raw)) {
    ++number;
    if (auto slash = raw.find("/*"); slash != std::string::npos)
      throw unsupported_feature_error("block comments", number);
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first))
      continue;
    if (first == "--BODY--") {
      in_body = true;
      continue;
    }
    if (first == "--END--")
      break;
    if (!in_body) {
      if (first == "HOA:") {
        std::string v;
        ls >> v;
        if (v != "v1")
          throw unsupported_feature_error("HOA version " + v, number);
      } else if (first == "States:") {
        std::string v;
        ls >> v;
        hoa.states = parse_int(v, number);
      } else if (first == "Start:") {
        std::string v;
        while (ls >> v) {
          if (v == "&")
            throw unsupported_feature_error("conjunctive start sets", number);
          hoa.starts.push_back(parse_int(v, number));
        }
      } else if (first == "AP:") {
        std::string v;
        ls >> v;
        hoa.aps = parse_int(v, number);
      } else if (first == "Acceptance:") {
        std::string v;
        ls >> v;
        hoa.acc_sets = parse_int(v, number);
      } else if (first == "acc-name:") {
        std::string kind;
        ls >> kind;
        hoa.acc_name_kind = kind;
        if (kind == "Streett" || kind == "Rabin") {
          std::string v;
          ls >> v;
          hoa.acc_name_count = parse_int(v, number);
        } else if (kind == "parity") {
          std::string a, b, c;
          ls >> a >> b >> c;
          if (a != "min" || b != "even")
            throw unsupported_feature_error("parity variant " + a + " " + b, number);
          hoa.acc_name_count = parse_int(c, number);
        } else {
          throw unsupported_feature_error("acceptance name " + kind, number);
        }
      } else if (first == "name:" || first == "tool:" || first == "properties:" ||
                 first == "owner:") {
        // informational only
      } else {
        throw unsupported_feature_error("header item " + first, number);
      }
      continue;
    }
    if (first == "State:") {
      std::string tok;
      if (!(ls >> tok))
        throw parse_error("State: without an id", number);
      if (tok.front() == '[')
        throw unsupported_feature_error("state labels", number);
      hoa.body.push_back(HoaState{parse_int(tok, number), {}, {}});
      cur = &hoa.body.back();
      // optional quoted name, optional marks
      std::string rest;
      std::getline(ls, rest);
      std::string no_name = rest;
      if (auto q1 = no_name.find('"'); q1 != std::string::npos) {
        auto q2 = no_name.find('"', q1 + 1);
        if (q2 == std::string::npos)
          throw parse_error("unterminated state name", number);
        no_name = no_name.substr(0, q1) + no_name.substr(q2 + 1);
      }
      std::istringstream rs(no_name);
      cur->marks = parse_marks(rs, number);
    } else if (first.front() == '[') {
      if (!cur)
        throw parse_error("edge before any State:", number);
      std::string label = first;
      while (label.find(']') == std::string::npos) {
        std::string more;
        if (!(ls >> more))
          throw parse_error("unterminated edge label", number);
        label += more;
      }
      std::string expr = label.substr(1, label.find(']') - 1);
      std::string dst_tok;
      if (!(ls >> dst_tok))
        throw parse_error("edge without a destination", number);
      HoaEdge e;
      e.letters = expand_label(expr, hoa.aps, number);
      e.dst = parse_int(dst_tok, number);
      e.marks = parse_marks(ls, number);
      cur->edges.push_back(std::move(e));
    } else {
      throw unsupported_feature_error("implicitly labelled body item", number);
    }
  }
  if (hoa.states < 0 || hoa.aps < 0 || hoa.acc_sets < 0)
    throw semantic_error("missing States:, AP: or Acceptance: header");
  if (hoa.acc_name_kind.empty())
    throw unsupported_feature_error("missing acc-name; only Streett/Rabin/parity are supported");
  if (hoa.starts.empty())
    throw semantic_error("missing Start: header");
  for (int s : hoa.starts)
    if (s < 0 || s >= hoa.states)
      throw semantic_error("start state out of range");
  std::set<int> seen;
  for (const auto& st : hoa.body) {
    if (st.id < 0 || st.id >= hoa.states)
      throw semantic_error("body state out of range");
    if (!seen.insert(st.id).second)
      throw semantic_error("duplicate State: " + std::to_string(st.id));
    for (const auto& e : st.edges)
      if (e.dst < 0 || e.dst >= hoa.states)
        throw semantic_error("edge destination out of range");
  }
  return hoa;
}

ParsedAutomaton hoa_to_automaton(const Hoa& hoa)
{
  int sigma = 1 << hoa.aps;
  if (hoa.acc_name_kind == "Streett") {
    int k = hoa.acc_name_count;
    if (hoa.acc_sets != 2 * k)
      throw semantic_error("Streett " + std::to_string(k) + " needs "
                           + std::to_string(2 * k) + " acceptance sets");
    StreettNSA nsa;
    nsa.n = hoa.states == 0 ? 1 : hoa.states;
    nsa.alphabet.size = sigma;
    nsa.pairs.resize(k);
    for (int s : hoa.starts)
      nsa.initial |= state_bit(s);

    bool state_marks = false, edge_marks = false;
    for (const auto& st : hoa.body) {
      if (!st.marks.empty())
        state_marks = true;
      for (const auto& e : st.edges)
        if (!e.marks.empty())
          edge_marks = true;
    }
    if (state_marks && edge_marks)
      throw semantic_error("mixed state and edge acceptance marks");
    nsa.basis = edge_marks ? PairBasis::transitions : PairBasis::states;

    std::set<Transition> transitions;
    for (const auto& st : hoa.body)
      for (const auto& e : st.edges)
        for (int a : e.letters)
          transitions.insert(Transition{st.id, a, e.dst});
    nsa.transitions.assign(transitions.begin(), transitions.end());

    for (const auto& st : hoa.body) {
      for (int m : st.marks) {
        if (m < 0 || m >= 2 * k)
          throw semantic_error("acceptance mark out of range");
        // pair i: Fin(2(i-1)) = B_i, Inf(2(i-1)+1) = G_i
        if (m % 2 == 0)
          nsa.pairs[m / 2].b_states |= state_bit(st.id);
        else
          nsa.pairs[m / 2].g_states |= state_bit(st.id);
      }
      for (const auto& e : st.edges)
        for (int m : e.marks) {
          if (m < 0 || m >= 2 * k)
            throw semantic_error("acceptance mark out of range");
          for (int a : e.letters) {
            int id = nsa.transition_id(Transition{st.id, a, e.dst});
            auto& side = m % 2 == 0 ? nsa.pairs[m / 2].b_transitions
                                    : nsa.pairs[m / 2].g_transitions;
            side.push_back(id);
          }
        }
    }
    for (auto& p : nsa.pairs) {
      for (auto* side : {&p.g_transitions, &p.b_transitions}) {
        std::sort(side->begin(), side->end());
        side->erase(std::unique(side->begin(), side->end()), side->end());
      }
    }
    nsa.validate();
    return nsa;
  }

  // deterministic transition automata
  DetAutomaton aut;
  aut.num_states = hoa.states == 0 ? 1 : hoa.states;
  aut.sigma = sigma;
  if (hoa.starts.size() != 1)
    throw semantic_error("deterministic automaton needs a single start state");
  aut.initial = hoa.starts.front();
  aut.source_n = 0; // foreign automaton: source parameters unknown
  aut.source_k = 0;
  size_t nt = static_cast<size_t>(aut.num_states) * sigma;
  aut.step.assign(nt, -1);

  if (hoa.acc_name_kind == "Rabin") {
    int k = hoa.acc_name_count;
    if (hoa.acc_sets != 2 * k)
      throw semantic_error("Rabin " + std::to_string(k) + " needs "
                           + std::to_string(2 * k) + " acceptance sets");
    aut.kind = DetKind::rabin_transitions;
    aut.t_acc.resize(nt);
    aut.t_rej.resize(nt);
    for (int i = 0; i < k; ++i)
      aut.pair_names.push_back("p" + std::to_string(i));
  } else {
    aut.kind = DetKind::parity_transitions;
    aut.priority.assign(nt, -1);
    aut.max_priority = hoa.acc_name_count - 1;
  }

  for (const auto& st : hoa.body) {
    if (!st.marks.empty())
      throw unsupported_feature_error("state-based marks on a transition automaton");
    for (const auto& e : st.edges)
      for (int a : e.letters) {
        size_t tid = static_cast<size_t>(st.id) * sigma + a;
        if (aut.step[tid] != -1)
          throw semantic_error("automaton is not deterministic at state "
                               + std::to_string(st.id));
        aut.step[tid] = e.dst;
        if (aut.kind == DetKind::rabin_transitions) {
          for (int m : e.marks) {
            if (m < 0 || m >= hoa.acc_sets)
              throw semantic_error("acceptance mark out of range");
            // pair i: Fin(2(i-1)) = R_i, Inf(2(i-1)+1) = A_i
            auto& side = m % 2 == 0 ? aut.t_rej[tid] : aut.t_acc[tid];
            side.push_back(m / 2);
          }
          std::sort(aut.t_acc[tid].begin(), aut.t_acc[tid].end());
          std::sort(aut.t_rej[tid].begin(), aut.t_rej[tid].end());
        } else {
          if (e.marks.size() != 1)
            throw semantic_error("parity edge needs exactly one priority");
          aut.priority[tid] = e.marks.front();
        }
      }
  }
  for (int dst : aut.step)
    if (dst < 0)
      throw semantic_error("automaton is not total");
  // drop pairs no transition mentions so the pair table stays meaningful
  if (aut.kind == DetKind::rabin_transitions) {
    std::vector<char> used(aut.pair_names.size(), 0);
    for (const auto* table : {&aut.t_acc, &aut.t_rej})
      for (const auto& ids : *table)
        for (int id : ids)
          used[id] = 1;
    std::vector<int> remap(aut.pair_names.size(), -1);
    std::vector<std::string> names;
    for (size_t i = 0; i < used.size(); ++i)
      if (used[i]) {
        remap[i] = static_cast<int>(names.size());
        names.push_back(aut.pair_names[i]);
      }
    aut.pair_names = std::move(names);
    for (auto* table : {&aut.t_acc, &aut.t_rej})
      for (auto& ids : *table)
        for (auto& id : ids)
          id = remap[id];
  }
  aut.validate();
  return aut;
}

} // namespace

ParsedAutomaton parse_automaton(const std::string& text)
{
  // HOA input starts with the format marker
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 4, "HOA:") == 0)
    return hoa_to_automaton(parse_hoa_text(text));

  auto lines = tokenize(text);
  if (lines.empty())
    throw parse_error("empty input");
  const std::string& kw = lines.front().tokens[0];
  if (kw == "nsa")
    return parse_native_nsa(lines);
  if (kw == "drta")
    return parse_native_det(lines, DetKind::rabin_transitions);
  if (kw == "dpta")
    return parse_native_det(lines, DetKind::parity_transitions);
  if (kw == "dra")
    return parse_native_det(lines, DetKind::rabin_states);
  throw parse_error("unknown format keyword '" + kw + "'", lines.front().number);
}

std::string emit_automaton(const StreettNSA& nsa)
{
  nsa.validate();
  std::ostringstream os;
  os << "nsa n=" << nsa.n << " k=" << nsa.k() << " sigma=" << nsa.alphabet.size << '\n';
  if (!nsa.alphabet.names.empty()) {
    os << "letters";
    for (const auto& name : nsa.alphabet.names)
      os << ' ' << name;
    os << '\n';
  }
  os << "init";
  for (int q : states_of(nsa.initial))
    os << ' ' << q;
  os << '\n';
  for (const auto& t : nsa.transitions)
    os << "t " << t.src << ' ' << t.letter << ' ' << t.dst << '\n';
  for (int i = 0; i < nsa.k(); ++i) {
    const auto& p = nsa.pairs[i];
    os << "pair " << i + 1;
    if (nsa.basis == PairBasis::states) {
      os << " G=" << join_ints(states_of(p.g_states));
      os << " B=" << join_ints(states_of(p.b_states));
    } else {
      auto edges = [&](const std::vector<int>& ids) {
        if (ids.empty())
          return std::string("-");
        std::ostringstream es;
        for (size_t e = 0; e < ids.size(); ++e) {
          const auto& t = nsa.transitions[ids[e]];
          es << (e ? "," : "") << t.src << ':' << t.letter << ':' << t.dst;
        }
        return es.str();
      };
      os << " G=" << edges(p.g_transitions);
      os << " B=" << edges(p.b_transitions);
    }
    os << '\n';
  }
  return os.str();
}

std::string emit_automaton(const DetAutomaton& aut)
{
  aut.validate();
  std::ostringstream os;
  switch (aut.kind) {
  case DetKind::rabin_transitions: os << "drta"; break;
  case DetKind::parity_transitions: os << "dpta"; break;
  case DetKind::rabin_states: os << "dra"; break;
  }
  os << " states=" << aut.num_states << " sigma=" << aut.sigma << " init=" << aut.initial
     << " sink=";
  if (aut.sink < 0)
    os << '-';
  else
    os << aut.sink;
  if (aut.kind == DetKind::parity_transitions)
    os << " maxprio=" << aut.max_priority;
  os << " srcn=" << aut.source_n << " srck=" << aut.source_k << '\n';
  if (aut.kind != DetKind::parity_transitions)
    for (size_t i = 0; i < aut.pair_names.size(); ++i)
      os << "pairname " << i << ' ' << aut.pair_names[i] << '\n';
  if (aut.kind == DetKind::rabin_states)
    for (size_t i = 0; i < aut.state_pairs.size(); ++i)
      os << "pair " << i << " A=" << join_ints(aut.state_pairs[i].accept)
         << " R=" << join_ints(aut.state_pairs[i].reject) << '\n';
  for (int s = 0; s < aut.num_states; ++s)
    for (int a = 0; a < aut.sigma; ++a) {
      int tid = aut.transition(s, a);
      os << "t " << s << ' ' << a << ' ' << aut.step[tid];
      if (aut.kind == DetKind::rabin_transitions)
        os << " acc=" << join_ints(aut.t_acc[tid]) << " rej=" << join_ints(aut.t_rej[tid]);
      else if (aut.kind == DetKind::parity_transitions)
        os << " p=" << aut.priority[tid];
      os << '\n';
    }
  return os.str();
}

std::string emit_automaton(const ParsedAutomaton& parsed)
{
  if (std::holds_alternative<StreettNSA>(parsed))
    return emit_automaton(std::get<StreettNSA>(parsed));
  return emit_automaton(std::get<DetAutomaton>(parsed));
}

} // namespace streett
