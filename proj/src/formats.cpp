// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#include "fewrows/formats.hpp"

#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <utility>

namespace fewrows {
namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw FormatError(at.line, at.col, message);
}

// Line-oriented token stream. Comments (`#` to end of line) and blank lines
// are dropped; every surviving line is a non-empty token vector.
class Reader {
 public:
  explicit Reader(const std::string& text) {
    int line_no = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::size_t end = (nl == std::string::npos) ? text.size() : nl;
      std::size_t len = end - pos;
      if (len > 0 && text[pos + len - 1] == '\r') --len;
      std::vector<Token> toks;
      int col = 1;
      std::size_t i = 0;
      while (i < len) {
        char ch = text[pos + i];
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t') {
          ++i;
          ++col;
          continue;
        }
        std::size_t start = i;
        int start_col = col;
        while (i < len && text[pos + i] != ' ' && text[pos + i] != '\t' && text[pos + i] != '#') {
          ++i;
          ++col;
        }
        toks.push_back(Token{text.substr(pos + start, i - start), line_no, start_col});
      }
      if (!toks.empty()) lines_.push_back(std::move(toks));
      if (nl == std::string::npos) break;
      pos = nl + 1;
      ++line_no;
    }
    end_line_ = line_no;
  }

  bool done() const { return idx_ == lines_.size(); }

  const std::vector<Token>& peek() const {
    if (done()) fail_eof();
    return lines_[idx_];
  }

  const std::vector<Token>& take() {
    if (done()) fail_eof();
    return lines_[idx_++];
  }

  [[noreturn]] void fail_eof() const {
    throw FormatError(end_line_, 1, "unexpected end of input");
  }

 private:
  std::vector<std::vector<Token>> lines_;
  std::size_t idx_ = 0;
  int end_line_ = 1;
};

std::int64_t parse_int(const Token& tok) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) fail(tok, "integer out of range: '" + tok.text + "'");
  if (ec != std::errc() || ptr != last) fail(tok, "expected an integer, found '" + tok.text + "'");
  return value;
}

// A line consisting of exactly the keyword.
void expect_bare(Reader& r, const std::string& word) {
  const auto& line = r.take();
  if (line[0].text != word) fail(line[0], "expected `" + word + "`, found '" + line[0].text + "'");
  if (line.size() > 1) fail(line[1], "unexpected token after `" + word + "`");
}

// A line `word <int>`.
std::int64_t keyword_int(Reader& r, const std::string& word) {
  const auto& line = r.take();
  if (line[0].text != word) fail(line[0], "expected `" + word + "`, found '" + line[0].text + "'");
  if (line.size() < 2) fail(line[0], "`" + word + "` needs a value");
  if (line.size() > 2) fail(line[2], "unexpected token after `" + word + "` value");
  return parse_int(line[1]);
}

// A line of exactly `count` integers. Zero-length rows occupy no line at all.
std::vector<std::int64_t> sized_row(Reader& r, std::size_t count, const std::string& what) {
  std::vector<std::int64_t> row;
  if (count == 0) return row;
  const auto& line = r.take();
  if (line.size() < count) {
    fail(line.back(), what + " has " + std::to_string(line.size()) + " integers, expected " +
                          std::to_string(count));
  }
  if (line.size() > count) fail(line[count], "unexpected token after " + what);
  row.reserve(count);
  for (const auto& tok : line) row.push_back(parse_int(tok));
  return row;
}

int parse_dim(Reader& r, const std::string& word) {
  const auto& line = r.peek();
  std::int64_t v = keyword_int(r, word);
  if (v < 0) fail(line[1], "`" + word + "` must be non-negative");
  if (v > 1 << 28) fail(line[1], "`" + word + "` is too large");
  return static_cast<int>(v);
}

bool next_is(const Reader& r, const std::string& word) {
  return !r.done() && r.peek()[0].text == word;
}

IntMatrix parse_matrix(Reader& r, const std::string& word, int rows, int cols) {
  expect_bare(r, word);
  IntMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    auto row = sized_row(r, static_cast<std::size_t>(cols), "row " + std::to_string(i + 1) + " of `" + word + "`");
    for (int j = 0; j < cols; ++j) a.at(i, j) = row[static_cast<std::size_t>(j)];
  }
  return a;
}

std::vector<std::int64_t> parse_vector(Reader& r, const std::string& word, int len) {
  expect_bare(r, word);
  return sized_row(r, static_cast<std::size_t>(len), "`" + word + "` row");
}

IlpInstance parse_ilp_body(Reader& r) {
  IlpInstance inst;
  inst.m = parse_dim(r, "m");
  inst.n = parse_dim(r, "n");
  inst.A = parse_matrix(r, "A", inst.m, inst.n);
  inst.b = parse_vector(r, "b", inst.m);
  inst.lower = parse_vector(r, "l", inst.n);
  inst.upper = parse_vector(r, "u", inst.n);
  if (next_is(r, "c")) inst.objective = parse_vector(r, "c", inst.n);
  return inst;
}

BinaryIlpInstance parse_bilp_body(Reader& r) {
  BinaryIlpInstance inst;
  inst.m = parse_dim(r, "m");
  inst.n = parse_dim(r, "n");
  inst.A = parse_matrix(r, "A", inst.m, inst.n);
  inst.b = parse_vector(r, "b", inst.m);
  if (next_is(r, "c")) inst.objective = parse_vector(r, "c", inst.n);
  inst.zero_one_matrix = true;
  for (std::int64_t v : inst.A.a) {
    if (v != 0 && v != 1) inst.zero_one_matrix = false;
  }
  return inst;
}

// Distances above n are equivalent to n; negative distances are malformed.
std::int64_t clamp_distance(std::int64_t d, int n, const Token& at) {
  if (d < 0) fail(at, "distance bound must be non-negative");
  return d > n ? n : d;
}

ClosestStringInstance parse_cstring_body(Reader& r) {
  ClosestStringInstance inst;
  inst.m = parse_dim(r, "m");
  inst.n = parse_dim(r, "n");
  if (next_is(r, "d")) {
    const auto& line = r.peek();
    const Token at = line.size() > 1 ? line[1] : line[0];
    inst.uniform_bound = clamp_distance(keyword_int(r, "d"), inst.n, at);
  } else if (next_is(r, "D")) {
    expect_bare(r, "D");
    if (inst.m > 0) {
      // References into the reader stay valid after the line is consumed.
      const auto& toks = r.peek();
      auto row = sized_row(r, static_cast<std::size_t>(inst.m), "`D` row");
      for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = clamp_distance(row[j], inst.n, toks[j]);
      }
      inst.bounds = std::move(row);
    } else {
      inst.bounds = std::vector<std::int64_t>{};
    }
  }
  inst.strings.resize(static_cast<std::size_t>(inst.m));
  if (inst.n > 0) {
    for (int i = 0; i < inst.m; ++i) {
      const auto& line = r.take();
      if (line.size() > 1) fail(line[1], "unexpected token after string");
      const Token& tok = line[0];
      if (static_cast<int>(tok.text.size()) != inst.n) {
        fail(tok, "string " + std::to_string(i + 1) + " has length " +
                      std::to_string(tok.text.size()) + ", expected " + std::to_string(inst.n));
      }
      std::vector<std::uint8_t> s(static_cast<std::size_t>(inst.n));
      for (int j = 0; j < inst.n; ++j) {
        char ch = tok.text[static_cast<std::size_t>(j)];
        if (ch != '0' && ch != '1') {
          throw FormatError(tok.line, tok.col + j, "character outside {0,1} in string");
        }
        s[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(ch - '0');
      }
      inst.strings[static_cast<std::size_t>(i)] = std::move(s);
    }
  }
  return inst;
}

// `S e1 e2 ...` with 1-indexed, strictly ascending elements of {1..limit}.
std::vector<int> parse_set_line(Reader& r, int limit) {
  const auto& line = r.take();
  if (line[0].text != "S") fail(line[0], "expected `S`, found '" + line[0].text + "'");
  std::vector<int> set;
  set.reserve(line.size() - 1);
  for (std::size_t t = 1; t < line.size(); ++t) {
    std::int64_t e = parse_int(line[t]);
    if (e < 1 || e > limit) {
      fail(line[t], "element " + std::to_string(e) + " outside 1.." + std::to_string(limit));
    }
    if (!set.empty() && static_cast<int>(e - 1) <= set.back()) {
      fail(line[t], "set elements must be strictly ascending");
    }
    set.push_back(static_cast<int>(e - 1));
  }
  return set;
}

DiscrepancyInstance parse_disc_body(Reader& r) {
  DiscrepancyInstance inst;
  inst.m = parse_dim(r, "m");
  inst.n = parse_dim(r, "n");
  if (next_is(r, "d")) {
    const auto& line = r.peek();
    const Token at = line.size() > 1 ? line[1] : line[0];
    inst.target = clamp_distance(keyword_int(r, "d"), inst.n, at);
  }
  inst.sets.reserve(static_cast<std::size_t>(inst.m));
  for (int i = 0; i < inst.m; ++i) inst.sets.push_back(parse_set_line(r, inst.n));
  return inst;
}

SetSystemInstance parse_setsys_body(Reader& r) {
  SetSystemInstance inst;
  {
    const auto& line = r.take();
    if (line[0].text != "kind") fail(line[0], "expected `kind`, found '" + line[0].text + "'");
    if (line.size() < 2) fail(line[0], "`kind` needs a value");
    if (line.size() > 2) fail(line[2], "unexpected token after `kind` value");
    if (line[1].text == "cover") {
      inst.kind = SetSystemKind::Cover;
    } else if (line[1].text == "packing") {
      inst.kind = SetSystemKind::Packing;
    } else {
      fail(line[1], "`kind` must be cover or packing");
    }
  }
  inst.m = parse_dim(r, "m");
  inst.n = parse_dim(r, "n");
  inst.b = keyword_int(r, "b");
  if (next_is(r, "card")) inst.cardinality = keyword_int(r, "card");
  inst.sets.reserve(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) inst.sets.push_back(parse_set_line(r, inst.m));
  return inst;
}

NFoldInstance parse_nfold_body(Reader& r) {
  NFoldInstance inst;
  inst.m = parse_dim(r, "m");
  inst.n = parse_dim(r, "n");
  inst.A.reserve(static_cast<std::size_t>(inst.n));
  inst.B.reserve(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) {
    inst.A.push_back(parse_matrix(r, "A", inst.m, inst.m));
    inst.B.push_back(parse_matrix(r, "B", inst.m, inst.m));
  }
  inst.b0 = parse_vector(r, "b0", inst.m);
  inst.b.reserve(static_cast<std::size_t>(inst.n));
  for (int i = 0; i < inst.n; ++i) inst.b.push_back(parse_vector(r, "b", inst.m));
  return inst;
}

Assignment parse_sol_body(Reader& r) {
  Assignment sol;
  {
    const auto& line = r.take();
    if (line[0].text != "kind") fail(line[0], "expected `kind`, found '" + line[0].text + "'");
    if (line.size() < 2) fail(line[0], "`kind` needs a value");
    if (line.size() > 2) fail(line[2], "unexpected token after `kind` value");
    auto k = solution_kind_from_tag(line[1].text);
    if (!k) fail(line[1], "unknown solution kind '" + line[1].text + "'");
    sol.kind = *k;
  }
  // Values share the `x` line because their count is not fixed in advance.
  const auto& line = r.take();
  if (line[0].text != "x") fail(line[0], "expected `x`, found '" + line[0].text + "'");
  sol.values.reserve(line.size() - 1);
  for (std::size_t t = 1; t < line.size(); ++t) sol.values.push_back(parse_int(line[t]));
  return sol;
}

bool valid_key(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])))) return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_') return false;
  }
  return true;
}

ReductionTrace parse_trace_body(Reader& r) {
  ReductionTrace trace;
  {
    const auto& line = r.take();
    if (line[0].text != "rule") fail(line[0], "expected `rule`, found '" + line[0].text + "'");
    if (line.size() < 2) fail(line[0], "`rule` needs a value");
    if (line.size() > 2) fail(line[2], "unexpected token after `rule` value");
    if (!valid_key(line[1].text)) fail(line[1], "malformed rule tag '" + line[1].text + "'");
    trace.rule = line[1].text;
  }
  while (!r.done()) {
    const auto& line = r.take();
    if (!valid_key(line[0].text)) fail(line[0], "malformed trace key '" + line[0].text + "'");
    std::vector<std::int64_t> values;
    values.reserve(line.size() - 1);
    for (std::size_t t = 1; t < line.size(); ++t) values.push_back(parse_int(line[t]));
    trace.entries.emplace_back(line[0].text, std::move(values));
  }
  return trace;
}

// --- Serialization -------------------------------------------------------

void put_row(std::string& out, const std::vector<std::int64_t>& row) {
  if (row.empty()) return;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(row[i]);
  }
  out += '\n';
}

void put_keyword_int(std::string& out, const char* word, std::int64_t v) {
  out += word;
  out += ' ';
  out += std::to_string(v);
  out += '\n';
}

void put_matrix(std::string& out, const char* word, const IntMatrix& a) {
  out += word;
  out += '\n';
  for (int i = 0; i < a.rows; ++i) {
    std::vector<std::int64_t> row(a.a.begin() + static_cast<std::ptrdiff_t>(i) * a.cols,
                                  a.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * a.cols);
    put_row(out, row);
  }
}

void put_vector(std::string& out, const char* word, const std::vector<std::int64_t>& v) {
  out += word;
  out += '\n';
  put_row(out, v);
}

void put_set(std::string& out, const std::vector<int>& set) {
  out += 'S';
  for (int e : set) {
    out += ' ';
    out += std::to_string(e + 1);
  }
  out += '\n';
}

}  // namespace

FormatError::FormatError(int line_, int col_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(col_) +
                         ": " + message),
      line(line_),
      col(col_) {}

Document parse(const std::string& text) {
  Reader r(text);
  const auto& head = r.peek();
  if (head.size() > 1) fail(head[1], "unexpected token after document tag");
  const std::string tag = head[0].text;
  Document doc;
  if (tag == "ILP") {
    r.take();
    doc.kind = DocKind::Ilp;
    doc.ilp = parse_ilp_body(r);
  } else if (tag == "BILP") {
    r.take();
    doc.kind = DocKind::Bilp;
    doc.bilp = parse_bilp_body(r);
  } else if (tag == "CSTRING") {
    r.take();
    doc.kind = DocKind::CString;
    doc.cstring = parse_cstring_body(r);
  } else if (tag == "DISC") {
    r.take();
    doc.kind = DocKind::Disc;
    doc.disc = parse_disc_body(r);
  } else if (tag == "SETSYS") {
    r.take();
    doc.kind = DocKind::SetSys;
    doc.setsys = parse_setsys_body(r);
  } else if (tag == "NFOLD") {
    r.take();
    doc.kind = DocKind::NFold;
    doc.nfold = parse_nfold_body(r);
  } else if (tag == "SOL") {
    r.take();
    doc.kind = DocKind::Sol;
    doc.sol = parse_sol_body(r);
  } else if (tag == "TRACE") {
    r.take();
    doc.kind = DocKind::Trace;
    doc.trace = parse_trace_body(r);
  } else {
    fail(head[0], "unknown document tag '" + tag + "'");
  }
  if (!r.done()) fail(r.peek()[0], "unexpected trailing content");
  return doc;
}

std::string serialize(const IlpInstance& inst) {
  std::string out = "ILP\n";
  put_keyword_int(out, "m", inst.m);
  put_keyword_int(out, "n", inst.n);
  put_matrix(out, "A", inst.A);
  put_vector(out, "b", inst.b);
  put_vector(out, "l", inst.lower);
  put_vector(out, "u", inst.upper);
  if (inst.objective) put_vector(out, "c", *inst.objective);
  return out;
}

std::string serialize(const BinaryIlpInstance& inst) {
  std::string out = "BILP\n";
  put_keyword_int(out, "m", inst.m);
  put_keyword_int(out, "n", inst.n);
  put_matrix(out, "A", inst.A);
  put_vector(out, "b", inst.b);
  if (inst.objective) put_vector(out, "c", *inst.objective);
  return out;
}

std::string serialize(const ClosestStringInstance& inst) {
  std::string out = "CSTRING\n";
  put_keyword_int(out, "m", inst.m);
  put_keyword_int(out, "n", inst.n);
  if (inst.uniform_bound) {
    put_keyword_int(out, "d", *inst.uniform_bound);
  } else if (inst.bounds) {
    put_vector(out, "D", *inst.bounds);
  }
  if (inst.n > 0) {
    for (const auto& s : inst.strings) {
      for (std::uint8_t chr : s) out += static_cast<char>('0' + chr);
      out += '\n';
    }
  }
  return out;
}

std::string serialize(const DiscrepancyInstance& inst) {
  std::string out = "DISC\n";
  put_keyword_int(out, "m", inst.m);
  put_keyword_int(out, "n", inst.n);
  if (inst.target) put_keyword_int(out, "d", *inst.target);
  for (const auto& set : inst.sets) put_set(out, set);
  return out;
}

std::string serialize(const SetSystemInstance& inst) {
  std::string out = "SETSYS\n";
  out += "kind ";
  out += (inst.kind == SetSystemKind::Cover) ? "cover" : "packing";
  out += '\n';
  put_keyword_int(out, "m", inst.m);
  put_keyword_int(out, "n", inst.n);
  put_keyword_int(out, "b", inst.b);
  if (inst.cardinality) put_keyword_int(out, "card", *inst.cardinality);
  for (const auto& set : inst.sets) put_set(out, set);
  return out;
}

std::string serialize(const NFoldInstance& inst) {
  std::string out = "NFOLD\n";
  put_keyword_int(out, "m", inst.m);
  put_keyword_int(out, "n", inst.n);
  for (int i = 0; i < inst.n; ++i) {
    put_matrix(out, "A", inst.A[static_cast<std::size_t>(i)]);
    put_matrix(out, "B", inst.B[static_cast<std::size_t>(i)]);
  }
  put_vector(out, "b0", inst.b0);
  for (int i = 0; i < inst.n; ++i) put_vector(out, "b", inst.b[static_cast<std::size_t>(i)]);
  return out;
}

std::string serialize(const Assignment& sol) {
  std::string out = "SOL\n";
  out += "kind ";
  out += solution_kind_tag(sol.kind);
  out += '\n';
  out += 'x';
  for (std::int64_t v : sol.values) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
  return out;
}

std::string serialize(const ReductionTrace& trace) {
  std::string out = "TRACE\n";
  out += "rule ";
  out += trace.rule;
  out += '\n';
  for (const auto& [key, values] : trace.entries) {
    out += key;
    for (std::int64_t v : values) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const Document& doc) {
  switch (doc.kind) {
    case DocKind::Ilp:
      return serialize(*doc.ilp);
    case DocKind::Bilp:
      return serialize(*doc.bilp);
    case DocKind::CString:
      return serialize(*doc.cstring);
    case DocKind::Disc:
      return serialize(*doc.disc);
    case DocKind::SetSys:
      return serialize(*doc.setsys);
    case DocKind::NFold:
      return serialize(*doc.nfold);
    case DocKind::Sol:
      return serialize(*doc.sol);
    case DocKind::Trace:
      return serialize(*doc.trace);
  }
  throw std::logic_error("unhandled document kind");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace fewrows
