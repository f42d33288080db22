#include <sstream>
#include <stdexcept>

#include "mcsh/estimates.hpp"

namespace mcsh {

namespace {

// s0 and b0 are the negated exponents of the product norm: a bound for uv in
// X^{a,b} enters with s0 = -a, b0 = -b.
constexpr std::string_view kBuiltinCorpus = R"(# kind | id | parameters ... | range | note
# estimate: s0 | b0 | s1 | b1 | s2 | b2 ; inequality: lhs | > or >= | rhs

# A_0 equation, quadratic term phi <nabla> conj(phi)
estimate | a0-quadratic-low  | 7/4-2*s+ | 5/4-2*s+ | s | 1/2+ | s-1 | 1/2+ | (1/2,5/8] |
estimate | a0-quadratic-high | 7/4-2*s+ | 0        | s | 1/2+ | s-1 | 1/2+ | (5/8,1)   |

# A_0 equation, cubic term A_0 |phi|^2
estimate | a0-cubic-low  | 7/4-2*s+ | 5/4-2*s+ | 2*s-3/4- | 2*s-1/4-- | 0   | 0 | (1/2,5/8] |
estimate | a0-cubic-high | 7/4-2*s+ | 0        | 2*s-3/4- | 1-        | 0++ | 0 | (5/8,1)   |
estimate | a0-cubic-pair | 0--      | 0        | s        | 1/2+      | s   | 1/2+ | (1/2,1) | stated as a Sobolev embedding

# phi equation, remainder <nabla>^{-2} A_j d^j phi
estimate   | remainder           | 1-s | 1/2-- | 2*s+5/4- | 3/4-- | s-1 | 1/2+ | (1/2,1) |
inequality | remainder-embedding | (1-s)+(2*s+5/4)+(s-1) | > | 1 | (1/2,1) |

# phi equation, null-form estimates (1)-(8), 1/2 < s <= 5/8
estimate | est1-low | 1-s | 0     | 2*s-1/4- | 2*s-1/4-- | s-1     | 1/2+ | (1/2,5/8] |
estimate | est2-low | 1-s | 0     | 2*s-3/4- | 2*s-1/4-- | s-1/2-- | 1/2+ | (1/2,5/8] |
estimate | est3-low | 1-s | 1/2-- | 2*s-1/4- | 2*s-3/4-- | s-1     | 1/2+ | (1/2,5/8] |
estimate | est4-low | 1-s | 1/2-- | 2*s-3/4- | 2*s-3/4-- | s-1/2   | 1/2+ | (1/2,5/8] |
estimate | est5-low | 1-s | 1/2-- | 2*s-1/4- | 2*s-1/4-- | s-1     | 0+   | (1/2,5/8] |
estimate | est6-low | 1-s | 1/2-- | 2*s-3/4- | 2*s-1/4-- | s-1/2   | 0+   | (1/2,5/8] |
estimate | est7     | 1-s | 1/2-- | 2*s+1/4- | 3/4--     | s-1     | 1/2+ | (1/2,1)   | whole range
estimate | est8     | 1-s | 1/2-- | 2*s-3/4- | 3/4--     | s       | 1/2+ | (1/2,1)   | whole range
inequality | est7-8-embedding     | 1-s+2*s+1/2+s-1 | > | 5/4 | (1/2,1) |
inequality | est7-8-embedding-one | 5/4             | > | 1   | (1/2,1) |

# phi equation, (1)-(6) for 5/8 < s < 1: b1 = 2s-1/4-- becomes 1-, b1 = 2s-3/4-- becomes -1/2-
estimate | est1-high | 1-s | 0     | 2*s-1/4- | 1-    | s-1     | 1/2+ | (5/8,1) |
estimate | est2-high | 1-s | 0     | 2*s-3/4- | 1-    | s-1/2-- | 1/2+ | (5/8,1) |
estimate | est3-high | 1-s | 1/2-- | 2*s-1/4- | -1/2- | s-1     | 1/2+ | (5/8,1) |
estimate | est4-high | 1-s | 1/2-- | 2*s-3/4- | -1/2- | s-1/2   | 1/2+ | (5/8,1) |
estimate | est5-high | 1-s | 1/2-- | 2*s-1/4- | 1-    | s-1     | 0+   | (5/8,1) |
estimate | est6-high | 1-s | 1/2-- | 2*s-3/4- | 1-    | s-1/2   | 0+   | (5/8,1) |

# phi equation, A^2 phi
estimate | a2phi-outer | 1-s | 1/2-- | s-3/4    | 0  | s        | 1/2+ | (1/2,1) |
estimate | a2phi-inner | 3/4-s | 0   | 2*s-3/4- | 3/4- | 2*s-3/4- | 3/4- | (1/2,1) |

# phi equation, |phi|^2 phi and N^2 phi
estimate | cubic-phi-outer | 1-s | 1/2-- | 0+  | 0    | s   | 1/2+ | (1/2,1) |
estimate | cubic-phi-inner | 0-  | 0     | 1/2 | 1/2+ | 1/2 | 1/2+ | (1/2,1) |

# N equation, N |phi|^2
estimate | n-phi2-outer | 1/2 | 1/2-- | 1/2 | 1/2+ | 0+ | 0    | (1/2,1) |
estimate | n-phi2-inner | 0-  | 0     | s   | 1/2+ | s  | 1/2+ | (1/2,1) |
)";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '|')) {
    const auto a = field.find_first_not_of(" \t\r");
    const auto b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? std::string() : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == '|') out.emplace_back();
  return out;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto f = split_fields(line);
    const auto where = [&] { return "corpus line " + std::to_string(lineno) + ": "; };
    try {
      CorpusEntry e;
      if (f[0] == "estimate") {
        if (f.size() < 9 || f.size() > 10) throw std::invalid_argument("expected 9 or 10 fields");
        e.kind = CorpusEntry::Kind::Estimate;
        e.id = f[1];
        auto& p = e.estimate;
        p.s0 = parse_param_expr(f[2]);
        p.b0 = parse_param_expr(f[3]);
        p.s1 = parse_param_expr(f[4]);
        p.b1 = parse_param_expr(f[5]);
        p.s2 = parse_param_expr(f[6]);
        p.b2 = parse_param_expr(f[7]);
        p.range = parse_range(f[8]);
        if (f.size() == 10) e.note = f[9];
      } else if (f[0] == "inequality") {
        if (f.size() < 6 || f.size() > 7) throw std::invalid_argument("expected 6 or 7 fields");
        e.kind = CorpusEntry::Kind::Inequality;
        e.id = f[1];
        auto& q = e.inequality;
        q.lhs = parse_param_expr(f[2]);
        if (f[3] == ">")
          q.strict = true;
        else if (f[3] == ">=")
          q.strict = false;
        else
          throw std::invalid_argument("relation must be > or >=, got \"" + f[3] + "\"");
        q.rhs = parse_param_expr(f[4]);
        q.range = parse_range(f[5]);
        if (f.size() == 7) e.note = f[6];
      } else {
        throw std::invalid_argument("unknown entry kind \"" + f[0] + "\"");
      }
      if (e.id.empty()) throw std::invalid_argument("empty id");
      out.push_back(std::move(e));
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(where() + err.what());
    }
  }
  return out;
}

std::vector<CorpusResult> verify_corpus(const std::vector<CorpusEntry>& corpus) {
  std::vector<CorpusResult> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) {
    CorpusResult r;
    r.id = e.id;
    if (e.kind == CorpusEntry::Kind::Estimate) {
      r.range = to_string(e.estimate.range);
      r.verdict = check_conditions(e.estimate);
    } else {
      const auto& q = e.inequality;
      r.range = to_string(q.range);
      if (auto w = check_inequality(q)) {
        r.verdict.holds = false;
        r.verdict.violations.push_back(
            {to_string(q.lhs) + (q.strict ? " > " : " >= ") + to_string(q.rhs), *w});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string_view builtin_corpus_text() { return kBuiltinCorpus; }

std::vector<CorpusResult> verify_builtin_corpus() {
  return verify_corpus(parse_corpus(builtin_corpus_text()));
}

std::string corpus_report_csv(const std::vector<CorpusResult>& results) {
  const auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "id,range,holds,violations\n";
  for (const auto& r : results) {
    std::string v;
    for (const auto& x : r.verdict.violations) {
      if (!v.empty()) v += "; ";
      v += x.condition + " @ " + x.witness;
    }
    out += quote(r.id) + "," + quote(r.range) + "," + (r.verdict.holds ? "true" : "false") + "," +
           quote(v) + "\n";
  }
  return out;
}

}  // namespace mcsh
