#include "eoc/literal.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "eoc/error.hpp"

namespace eoc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_parens(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError(std::string(what) + " literal must be parenthesized: '" + std::string(s) + "'");
  return trim(s.substr(1, s.size() - 2));
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(what));
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// `v` or `v^m`, both positive.
Bundle parse_token(std::string_view tok, std::string_view what) {
  tok = trim(tok);
  Bundle b{0, 1};
  if (auto caret = tok.find('^'); caret != std::string_view::npos) {
    b.value = parse_int(tok.substr(0, caret), what);
    b.mult = parse_int(tok.substr(caret + 1), what);
  } else {
    b.value = parse_int(tok, what);
  }
  if (b.value < 1) throw ParseError(std::string(what) + " values must be positive, got " + std::to_string(b.value));
  if (b.mult < 1) throw ParseError(std::string(what) + " exponents must be positive, got " + std::to_string(b.mult));
  return b;
}

std::vector<Value> parse_tokens(std::string_view body, std::string_view what) {
  std::vector<Value> out;
  if (trim(body).empty()) return out;
  for (auto tok : split(body, ',')) {
    const Bundle b = parse_token(tok, what);
    out.insert(out.end(), static_cast<std::size_t>(b.mult), b.value);
  }
  return out;
}

std::string bundle_token(const Bundle& b) {
  std::string s = std::to_string(b.value);
  if (b.mult > 1) s += "^" + std::to_string(b.mult);
  return s;
}

std::string join_bundles(const std::vector<Bundle>& bundles) {
  std::string s;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (i) s += ',';
    s += bundle_token(bundles[i]);
  }
  return s;
}

}  // namespace

Multiset parse_multiset(std::string_view text) {
  const auto values = parse_tokens(text, "multiset");
  if (values.empty()) throw ParseError("empty multiset literal");
  return Multiset::of(values);
}

Cycle parse_cycle(std::string_view text) {
  auto values = parse_tokens(strip_parens(text, "cycle"), "cycle");
  if (values.empty()) throw ParseError("empty cycle");
  return Cycle::canonical(std::move(values));
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation literal");
  std::vector<Value> word;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad character '" + std::string(1, ch) + "' in permutation");
      word.push_back(ch - '0');
    }
    if (word.size() > 9) throw ParseError("digit-string permutations are limited to n <= 9; use commas");
  } else {
    for (auto tok : split(text, ',')) word.push_back(parse_int(tok, "permutation"));
  }
  return Permutation(std::move(word));
}

std::vector<Step> parse_steps(std::string_view text) {
  text = trim(text);
  std::vector<Step> steps;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      case 'L':
        if (i + 1 < text.size() && (text[i + 1] == '0' || text[i + 1] == '1')) {
          steps.push_back(text[i + 1] == '0' ? Step::L0 : Step::L1);
          ++i;
          break;
        }
        throw ParseError("level step must be L0 or L1 in '" + std::string(text) + "'");
      default:
        throw ParseError("bad step character '" + std::string(1, text[i]) + "'");
    }
  }
  return steps;
}

LaguerreHistory parse_laguerre(std::string_view text) {
  const auto body = strip_parens(text, "Laguerre history");
  auto sep = body.find(';');
  if (sep == std::string_view::npos) sep = body.find(',');
  const auto word_part = body.substr(0, sep);
  auto weight_part = sep == std::string_view::npos ? std::string_view{} : trim(body.substr(sep + 1));
  if (!weight_part.empty() && weight_part.front() == '(') weight_part = strip_parens(weight_part, "weight vector");

  std::vector<int> weights;
  if (!weight_part.empty())
    for (auto tok : split(weight_part, ',')) weights.push_back(parse_int(tok, "weight vector"));
  return LaguerreHistory(parse_steps(word_part), std::move(weights));
}

std::string format(const Multiset& m) {
  std::vector<Bundle> bundles;
  for (const auto& [v, k] : m.counts()) bundles.push_back({v, k});
  return join_bundles(bundles);
}

std::string format(const Cycle& c) {
  // Canonical rotation starts at a run boundary, so linear runs suffice.
  std::vector<Bundle> runs;
  for (Value v : c.seq()) {
    if (!runs.empty() && runs.back().value == v)
      ++runs.back().mult;
    else
      runs.push_back({v, 1});
  }
  return "(" + join_bundles(runs) + ")";
}

std::string format(const CompactCycle& c) { return "(" + join_bundles(c.bundles()) + ")"; }

std::string format(const Permutation& p) {
  std::string s;
  const bool digits = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (!digits && i > 1) s += ',';
    s += std::to_string(p.at(i));
  }
  return s;
}

std::string format_steps(std::span<const Step> steps) {
  std::string s;
  for (Step st : steps) {
    switch (st) {
      case Step::U: s += "U"; break;
      case Step::D: s += "D"; break;
      case Step::L0: s += "L0"; break;
      case Step::L1: s += "L1"; break;
    }
  }
  return s;
}

std::string format(const LaguerreHistory& h) {
  std::string s = "(" + format_steps(h.steps()) + ";";
  for (std::size_t i = 0; i < h.weights().size(); ++i) s += (i ? "," : " ") + std::to_string(h.weights()[i]);
  return s + ")";
}

std::string format_set(const std::set<Value>& s) {
  std::string out = "{";
  bool first = true;
  for (Value v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace eoc
