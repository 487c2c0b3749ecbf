#include "wiener/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "wiener/error.hpp"

namespace wiener {

namespace {

using Json = nlohmann::ordered_json;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Parses a decimal integer occupying all of token; column is 1-based.
std::int64_t parse_integer(std::string_view token, std::size_t line, std::size_t column, const char* what) {
  std::int64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(token) + "'", line, column);
  }
  return value;
}

struct Token {
  std::string_view text;
  std::size_t column;
};

// Splits on delimiter, trimming blanks; columns point at each trimmed token.
std::vector<Token> split_trimmed(std::string_view text, char delimiter) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    const auto end = std::min(text.find(delimiter, start), text.size());
    std::size_t a = start;
    std::size_t b = end;
    while (a < b && is_space(text[a])) {
      ++a;
    }
    while (b > a && is_space(text[b - 1])) {
      --b;
    }
    out.push_back({text.substr(a, b - a), (a < b ? a : start) + 1});
    if (end == text.size()) {
      break;
    }
    start = end + 1;
  }
  return out;
}

// Strips blanks from part; column is where part starts, and moves with the trim.
std::pair<std::string_view, std::size_t> trimmed(std::string_view part, std::size_t column) {
  std::size_t a = 0;
  std::size_t b = part.size();
  while (a < b && is_space(part[a])) {
    ++a;
  }
  while (b > a && is_space(part[b - 1])) {
    --b;
  }
  return {part.substr(a, b - a), column + a};
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Rows of cells; the first row is the header. Numeric-looking columns are
// right aligned by the caller via right_align.
std::string render_table(const std::vector<std::vector<std::string>>& rows, const std::vector<bool>& right_align) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        line += "  ";
      }
      const bool right = c < right_align.size() && right_align[c];
      line += right ? pad_left(row[c], widths[c]) : pad_right(row[c], widths[c]);
    }
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    out += line + "\n";
  }
  return out;
}

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : "-"; }

Json optional_real_json(const std::optional<double>& v) { return v ? real_json(*v) : Json(nullptr); }

}  // namespace

Tree read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  Vertex max_vertex = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < view.size()) {
      while (i < view.size() && is_space(view[i])) {
        ++i;
      }
      const auto start = i;
      while (i < view.size() && !is_space(view[i])) {
        ++i;
      }
      if (i > start) {
        tokens.push_back({view.substr(start, i - start), start + 1});
      }
    }
    if (tokens.empty()) {
      continue;
    }
    if (tokens.size() != 2) {
      const auto column = tokens.size() < 2 ? view.size() + 1 : tokens[2].column;
      throw ParseError("expected exactly two vertex indices per line", line_no, column);
    }
    Vertex ends[2];
    for (int t = 0; t < 2; ++t) {
      const auto v = parse_integer(tokens[t].text, line_no, tokens[t].column, "a vertex index");
      if (v < 0 || v > static_cast<std::int64_t>(std::numeric_limits<Vertex>::max() - 1)) {
        throw ParseError("vertex index out of range", line_no, tokens[t].column);
      }
      ends[t] = static_cast<Vertex>(v);
      max_vertex = std::max(max_vertex, ends[t]);
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  if (edges.empty()) {
    throw ParseError("edge list contains no edges", std::max<std::size_t>(line_no, 1), 1);
  }
  return Tree(static_cast<std::size_t>(max_vertex) + 1, std::move(edges));
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open edge list '" + path + "'", 0, 0);
  }
  return read_edge_list(in);
}

std::string write_edge_list(const Tree& t) {
  std::string out;
  for (const auto& [u, v] : t.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

ValueMultiset parse_multiset(std::string_view text) {
  std::vector<ValueCount> pairs;
  for (const auto& token : split_trimmed(text, ',')) {
    const auto colon = token.text.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected value:multiplicity, got '" + std::string(token.text) + "'", 1, token.column);
    }
    const auto [value_text, value_col] = trimmed(token.text.substr(0, colon), token.column);
    const auto [count_text, count_col] = trimmed(token.text.substr(colon + 1), token.column + colon + 1);
    const auto value = parse_integer(value_text, 1, value_col, "a value");
    const auto count = parse_integer(count_text, 1, count_col, "a multiplicity");
    if (value < 1) {
      throw ParseError("values must be positive", 1, value_col);
    }
    if (count < 1) {
      throw ParseError("multiplicities must be positive", 1, count_col);
    }
    if (!pairs.empty() && pairs.back().value <= value) {
      throw ParseError("values must be strictly descending", 1, token.column);
    }
    pairs.push_back({value, count});
  }
  return ValueMultiset(std::move(pairs));
}

Arrangement parse_arrangement(std::string_view text) {
  Arrangement x;
  for (const auto& token : split_trimmed(text, ',')) {
    const auto v = parse_integer(token.text, 1, token.column, "a positive integer");
    if (v < 1) {
      throw ParseError("arrangement entries must be at least 1", 1, token.column);
    }
    x.push_back(v);
  }
  return x;
}

std::string format_arrangement(std::span<const std::int64_t> x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(x[i]);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Json real_json(double v) {
  if (!std::isfinite(v)) {
    return nullptr;
  }
  return std::stod(format_real(v));
}

Json to_json(const ExactPolynomial& p) { return Json(p.to_strings()); }

ExactPolynomial polynomial_from_json(const Json& j) {
  return ExactPolynomial::from_strings(j.get<std::vector<std::string>>());
}

Json to_json(const MaximizerResult& r, const ValueMultiset& b) {
  Json optima = Json::array();
  for (const auto& x : r.optima) {
    optima.push_back(x);
  }
  return {{"multiset", b.to_string()},
          {"k", b.size()},
          {"max_q", r.max_q},
          {"optima", optima},
          {"class_count", r.class_count},
          {"unique", r.unique},
          {"searched", r.searched},
          {"evaluated", r.evaluated}};
}

MaximizerResult maximizer_result_from_json(const Json& j) {
  MaximizerResult r;
  r.max_q = j.at("max_q").get<std::int64_t>();
  r.optima = j.at("optima").get<std::vector<Arrangement>>();
  r.class_count = j.at("class_count").get<std::size_t>();
  r.unique = j.at("unique").get<bool>();
  r.searched = j.at("searched").get<std::uint64_t>();
  r.evaluated = j.at("evaluated").get<std::uint64_t>();
  return r;
}

Json to_json(const SpectralReport& r) {
  return {{"k", r.k},
          {"theta", optional_real_json(r.theta)},
          {"a_constant", real_json(r.a_constant)},
          {"lambda",
           {{"transcendental", optional_real_json(r.lambda_transcendental)},
            {"power", real_json(r.lambda_power)},
            {"asymptotic", real_json(r.lambda_asymptotic)},
            {"rough", real_json(r.lambda_rough)}}},
          {"residuals",
           {{"transcendental", optional_real_json(r.residual_transcendental)},
            {"asymptotic", real_json(r.residual_asymptotic)},
            {"rough", real_json(r.residual_rough)}}}};
}

Json to_json(const VerificationReport& r, bool include_elapsed) {
  auto record_json = [](const InstanceRecord& rec) {
    return Json{{"instance", rec.instance}, {"passed", rec.passed}, {"strict_gap", rec.strict_gap}, {"data", rec.data}};
  };
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back(record_json(w));
  }
  Json instances = Json::array();
  for (const auto& rec : r.instances) {
    instances.push_back(record_json(rec));
  }
  Json out = {{"subject", to_string(r.subject)},
              {"parameters", r.parameters},
              {"verdict", to_string(r.verdict)},
              {"instance_count", r.instances.size()},
              {"witness_count", r.witnesses.size()},
              {"witnesses", witnesses},
              {"instances", instances}};
  if (include_elapsed) {
    out["elapsed_seconds"] = real_json(r.elapsed_seconds);
  }
  return out;
}

std::string render_text(const ExactPolynomial& p) {
  std::vector<std::vector<std::string>> rows{{"power", "coefficient"}};
  for (std::size_t i = p.degree() + 1; i-- > 0;) {
    rows.push_back({std::to_string(i), rational_string(p.coeff(i))});
  }
  return render_table(rows, {true, true});
}

std::string render_text(const MaximizerResult& r, const ValueMultiset& b) {
  std::vector<std::vector<std::string>> rows{
      {"multiset", b.to_string()},
      {"k", std::to_string(b.size())},
      {"max_q", std::to_string(r.max_q)},
      {"classes", std::to_string(r.class_count) + (r.unique ? " (unique)" : "")},
      {"searched", std::to_string(r.searched)},
      {"evaluated", std::to_string(r.evaluated)},
  };
  for (const auto& x : r.optima) {
    rows.push_back({"optimum", format_arrangement(x)});
  }
  return render_table(rows, {});
}

std::string render_text(const SpectralReport& r) {
  std::vector<std::vector<std::string>> rows{
      {"method", "lambda_max", "|diff vs power|"},
      {"transcendental", optional_real(r.lambda_transcendental), optional_real(r.residual_transcendental)},
      {"power", format_real(r.lambda_power), "0"},
      {"asymptotic", format_real(r.lambda_asymptotic), format_real(r.residual_asymptotic)},
      {"rough", format_real(r.lambda_rough), format_real(r.residual_rough)},
  };
  std::string out = "k      " + std::to_string(r.k) + "\n";
  out += "theta  " + optional_real(r.theta) + "\n";
  out += "a      " + format_real(r.a_constant) + "\n\n";
  return out + render_table(rows, {false, true, true});
}

std::string render_text(const VerificationReport& r) {
  std::string out;
  out += "subject     " + std::string(to_string(r.subject)) + "\n";
  out += "parameters  " + r.parameters.dump() + "\n";
  out += "verdict     " + std::string(to_string(r.verdict)) + "\n";
  out += "witnesses   " + std::to_string(r.witnesses.size()) + "\n\n";
  std::vector<std::vector<std::string>> rows{{"instance", "result", "detail"}};
  for (const auto& rec : r.instances) {
    std::string detail;
    if (rec.data.contains("max_q")) {
      detail = "max_q=" + rec.data["max_q"].dump();
      for (const char* key : {"q_dominant_odd", "q_symmetric_split", "q_best_admissible_split"}) {
        if (rec.data.contains(key)) {
          detail += std::string(" ") + key + "=" + rec.data[key].dump();
        }
      }
    } else if (rec.data.contains("first_mismatch")) {
      detail = rec.data["first_mismatch"].dump();
    } else if (rec.data.contains("closed_form")) {
      detail = "degree " + std::to_string(rec.data["closed_form"].size() - 1) + " coefficients equal";
    }
    rows.push_back({rec.instance, rec.passed ? "ok" : "FAIL", detail});
  }
  return out + render_table(rows, {});
}

}  // namespace wiener
