// Copyright 2026 The milpdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "milpdist/mps.h"

#include <zlib.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "milpdist/error.h"

namespace milpdist {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Bound magnitudes at or above this are treated as infinite.
constexpr double kInfiniteBound = 1e30;

std::string Inflate(std::string_view bytes) {
  z_stream stream{};
  if (inflateInit2(&stream, 16 + MAX_WBITS) != Z_OK) {
    throw Error(ErrorCode::kIoError, "cannot initialize gzip decoder");
  }
  std::string out;
  std::array<char, 1 << 16> buffer;
  stream.next_in =
      reinterpret_cast<Bytef*>(const_cast<char*>(bytes.data()));
  stream.avail_in = static_cast<uInt>(bytes.size());
  int rc = Z_OK;
  while (true) {
    stream.next_out = reinterpret_cast<Bytef*>(buffer.data());
    stream.avail_out = static_cast<uInt>(buffer.size());
    rc = inflate(&stream, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) break;
    out.append(buffer.data(), buffer.size() - stream.avail_out);
    if (rc == Z_STREAM_END) {
      // Concatenated members.
      if (stream.avail_in == 0) break;
      inflateReset(&stream);
    }
  }
  inflateEnd(&stream);
  if (rc != Z_STREAM_END) {
    throw Error(ErrorCode::kIoError, "corrupt gzip stream");
  }
  return out;
}

bool IsGzip(std::string_view bytes) {
  return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
         static_cast<unsigned char>(bytes[1]) == 0x8b;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsSpace(char c) { return c == ' ' || c == '\t'; }

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !IsSpace(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Fixed-format field positions (0-based start, length).
constexpr std::array<std::pair<std::size_t, std::size_t>, 6> kFixedFields = {
    {{1, 2}, {4, 8}, {14, 8}, {24, 12}, {39, 8}, {49, 12}}};

std::vector<std::string_view> SplitFixed(std::string_view line) {
  std::vector<std::string_view> fields;
  for (const auto& [start, len] : kFixedFields) {
    if (start >= line.size()) break;
    std::string_view f = line.substr(start, len);
    while (!f.empty() && IsSpace(f.front())) f.remove_prefix(1);
    while (!f.empty() && IsSpace(f.back())) f.remove_suffix(1);
    fields.push_back(f);
  }
  while (!fields.empty() && fields.back().empty()) fields.pop_back();
  return fields;
}

std::optional<double> ParseNumber(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    return std::nullopt;
  }
  return value;
}

enum class Section {
  kNone, kName, kObjSense, kRows, kColumns, kRhs, kRanges, kBounds, kEnd
};

class MpsParser {
 public:
  RawInstance Parse(std::string_view text) {
    std::size_t pos = 0;
    bool saw_section = false;
    bool first_content = true;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      line_ = line;
      std::string_view trimmed = line;
      while (!trimmed.empty() && IsSpace(trimmed.front())) trimmed.remove_prefix(1);
      if (trimmed.empty() || trimmed.front() == '*') {
        if (end == text.size()) break;
        continue;
      }
      if (first_content) {
        RejectLpFormat(trimmed);
        first_content = false;
      }
      if (!IsSpace(line.front())) {
        HandleHeader(line);
        saw_section = true;
      } else {
        if (section_ == Section::kNone) Fail(line, "data line before any section");
        HandleData(line);
      }
      if (section_ == Section::kEnd || end == text.size()) break;
    }
    if (!saw_section) throw Error(ErrorCode::kEmptyFile, "no MPS content");
    return std::move(raw_);
  }

 private:
  [[noreturn]] void Fail(std::string_view token, const std::string& what,
                         ErrorCode code = ErrorCode::kMalformedSection) const {
    std::size_t column = 1;
    if (token.data() >= line_.data() &&
        token.data() <= line_.data() + line_.size()) {
      column = static_cast<std::size_t>(token.data() - line_.data()) + 1;
    }
    throw Error(code, "line " + std::to_string(line_no_) + ", column " +
                          std::to_string(column) + ": " + what);
  }

  void RejectLpFormat(std::string_view trimmed) {
    const std::string first = Upper(SplitWhitespace(trimmed).front());
    static const std::array<std::string_view, 10> kLpWords = {
        "MINIMIZE", "MAXIMIZE", "MINIMUM", "MAXIMUM", "MIN", "MAX",
        "MINIMISE", "MAXIMISE", "SUBJECT", "ST"};
    const bool lp_comment = trimmed.front() == '\\';
    const bool lp_word =
        std::find(kLpWords.begin(), kLpWords.end(), first) != kLpWords.end();
    if (lp_comment || lp_word) {
      throw Error(ErrorCode::kUnsupportedFormat,
                  "input looks like CPLEX LP format; only MPS is supported");
    }
  }

  void HandleHeader(std::string_view line) {
    const auto tokens = SplitWhitespace(line);
    const std::string head = Upper(tokens.front());
    if (head == "NAME") {
      section_ = Section::kName;
      std::string_view rest = line.substr(tokens.front().size());
      while (!rest.empty() && IsSpace(rest.front())) rest.remove_prefix(1);
      while (!rest.empty() && IsSpace(rest.back())) rest.remove_suffix(1);
      raw_.name = std::string(rest);
    } else if (head == "OBJSENSE" || head == "OBJSENS") {
      section_ = Section::kObjSense;
      if (tokens.size() > 1) SetObjSense(tokens[1]);
    } else if (head == "ROWS") {
      section_ = Section::kRows;
    } else if (head == "COLUMNS") {
      section_ = Section::kColumns;
    } else if (head == "RHS") {
      section_ = Section::kRhs;
    } else if (head == "RANGES") {
      section_ = Section::kRanges;
    } else if (head == "BOUNDS") {
      section_ = Section::kBounds;
    } else if (head == "ENDATA") {
      section_ = Section::kEnd;
    } else if (head == "SOS" || head == "QUADOBJ" || head == "QMATRIX" ||
               head == "QSECTION" || head == "QCMATRIX" ||
               head == "INDICATORS" || head == "GENCONS" ||
               head == "PWLOBJ" || head == "LAZYCONS" || head == "USERCUTS" ||
               head == "OBJNAME" || head == "CSECTION" || head == "BRANCH") {
      Fail(tokens.front(), "unsupported MPS section " + head,
           ErrorCode::kUnsupportedSection);
    } else {
      Fail(tokens.front(), "unknown MPS section '" + std::string(tokens.front()) + "'");
    }
  }

  void SetObjSense(std::string_view token) {
    const std::string s = Upper(token);
    if (s == "MAX" || s == "MAXIMIZE" || s == "MAXIMISE") {
      raw_.objective_sense = ObjectiveSense::kMaximize;
    } else if (s == "MIN" || s == "MINIMIZE" || s == "MINIMISE") {
      raw_.objective_sense = ObjectiveSense::kMinimize;
    } else {
      Fail(token, "unknown objective sense '" + std::string(token) + "'");
    }
  }

  void HandleData(std::string_view line) {
    auto tokens = SplitWhitespace(line);
    switch (section_) {
      case Section::kName:
        Fail(tokens.front(), "unexpected data in NAME section");
      case Section::kObjSense:
        if (tokens.size() != 1) Fail(tokens.front(), "OBJSENSE expects one field");
        SetObjSense(tokens.front());
        return;
      case Section::kRows:
        if (fixed_ || tokens.size() != 2) tokens = Fixed(line, false);
        if (tokens.size() != 2) Fail(tokens.empty() ? line : tokens.front(), "ROWS expects 2 fields");
        AddRow(tokens[0], tokens[1]);
        return;
      case Section::kColumns:
        HandleColumns(line, tokens);
        return;
      case Section::kRhs:
      case Section::kRanges:
        HandleRhsOrRanges(line, tokens);
        return;
      case Section::kBounds:
        HandleBounds(line, tokens);
        return;
      case Section::kNone:
      case Section::kEnd:
        break;
    }
    Fail(line, "unexpected data line");
  }

  void AddRow(std::string_view sense_token, std::string_view name) {
    const std::string s = Upper(sense_token);
    RowSense sense;
    if (s == "N") sense = RowSense::kFree;
    else if (s == "L") sense = RowSense::kLessEqual;
    else if (s == "G") sense = RowSense::kGreaterEqual;
    else if (s == "E") sense = RowSense::kEqual;
    else Fail(sense_token, "unknown row type '" + std::string(sense_token) + "'");
    const std::string key(name);
    if (row_index_.count(key) != 0) {
      Fail(name, "duplicate row '" + key + "'", ErrorCode::kDuplicateRow);
    }
    const int index = static_cast<int>(raw_.rows.size());
    row_index_.emplace(key, index);
    raw_.rows.push_back({key, sense});
    if (sense == RowSense::kFree && raw_.objective_row < 0) {
      raw_.objective_row = index;
    }
  }

  int RowRef(std::string_view name) const {
    const auto it = row_index_.find(std::string(name));
    if (it == row_index_.end()) {
      Fail(name, "reference to undeclared row '" + std::string(name) + "'",
           ErrorCode::kUnknownRowReference);
    }
    return it->second;
  }

  int ColumnRef(std::string_view name) const {
    const auto it = column_index_.find(std::string(name));
    if (it == column_index_.end()) {
      Fail(name, "reference to undeclared column '" + std::string(name) + "'",
           ErrorCode::kUnknownColumnReference);
    }
    return it->second;
  }

  // Fixed-column fields; field 1 must be blank when `skip_first`.
  std::vector<std::string_view> Fixed(std::string_view line, bool skip_first) {
    fixed_ = true;
    auto fields = SplitFixed(line);
    if (skip_first && !fields.empty()) {
      if (!fields.front().empty()) Fail(fields.front(), "unexpected text in field 1");
      fields.erase(fields.begin());
    }
    return fields;
  }

  double Number(std::string_view token) const {
    const auto value = ParseNumber(token);
    if (!value) Fail(token, "invalid number '" + std::string(token) + "'");
    return *value;
  }

  void HandleColumns(std::string_view line,
                     std::vector<std::string_view> tokens) {
    if (tokens.size() >= 3 && Upper(tokens[1]) == "'MARKER'") {
      const std::string marker = Upper(tokens[2]);
      if (marker == "'INTORG'") in_integer_block_ = true;
      else if (marker == "'INTEND'") in_integer_block_ = false;
      else Fail(tokens[2], "unknown marker " + std::string(tokens[2]));
      return;
    }
    if (fixed_ || (tokens.size() != 3 && tokens.size() != 5)) tokens = Fixed(line, true);
    if (tokens.size() != 3 && tokens.size() != 5) {
      Fail(tokens.empty() ? line : tokens.front(), "COLUMNS expects 3 or 5 fields");
    }
    const std::string col(tokens[0]);
    auto [it, inserted] =
        column_index_.emplace(col, static_cast<int>(raw_.columns.size()));
    if (inserted) raw_.columns.push_back({col, in_integer_block_});
    const int column = it->second;
    for (std::size_t f = 1; f + 1 < tokens.size(); f += 2) {
      const int row = RowRef(tokens[f]);
      const double value = Number(tokens[f + 1]);
      const std::uint64_t cell =
          (static_cast<std::uint64_t>(row) << 32) | static_cast<std::uint32_t>(column);
      if (!seen_cells_.insert(cell).second) {
        Fail(tokens[f], "duplicate entry for column '" + col + "' in row '" +
                            std::string(tokens[f]) + "'");
      }
      raw_.coefficients.push_back({row, column, value});
    }
  }

  void HandleRhsOrRanges(std::string_view line,
                         std::vector<std::string_view> tokens) {
    auto& target = section_ == Section::kRhs ? raw_.rhs : raw_.ranges;
    std::string& set_name = section_ == Section::kRhs ? rhs_set_ : range_set_;
    std::size_t offset = tokens.size() % 2 == 0 ? 0 : 1;
    if (fixed_ || tokens.size() < 2 || tokens.size() > 5) {
      tokens = Fixed(line, true);
      offset = 1;
      if (tokens.size() != 3 && tokens.size() != 5) {
        Fail(tokens.empty() ? line : tokens.front(), "expected 2 to 5 fields");
      }
    }
    if (offset == 1) {
      // Only the first vector of a section is read.
      if (set_name.empty()) set_name = std::string(tokens[0]);
      if (set_name != tokens[0]) return;
    }
    for (std::size_t f = offset; f + 1 < tokens.size(); f += 2) {
      const int row = RowRef(tokens[f]);
      target[row] = Number(tokens[f + 1]);
    }
  }

  void HandleBounds(std::string_view line,
                    std::vector<std::string_view> tokens) {
    if (fixed_ || tokens.size() < 2 || tokens.size() > 4) tokens = Fixed(line, false);
    if (tokens.size() < 2 || tokens.size() > 4) {
      Fail(tokens.empty() ? line : tokens.front(), "BOUNDS expects 2 to 4 fields");
    }
    const std::string type = Upper(tokens[0]);
    static const std::unordered_map<std::string, BoundType> kTypes = {
        {"UP", BoundType::kUp}, {"LO", BoundType::kLo}, {"FX", BoundType::kFx},
        {"FR", BoundType::kFr}, {"MI", BoundType::kMi}, {"PL", BoundType::kPl},
        {"BV", BoundType::kBv}, {"LI", BoundType::kLi}, {"UI", BoundType::kUi}};
    const auto t = kTypes.find(type);
    if (t == kTypes.end()) {
      if (type == "SC") {
        Fail(tokens[0], "semi-continuous bounds are not supported",
             ErrorCode::kUnsupportedSection);
      }
      Fail(tokens[0], "unknown bound type '" + std::string(tokens[0]) + "'");
    }
    const bool needs_value = type == "UP" || type == "LO" || type == "FX" ||
                             type == "LI" || type == "UI";
    std::string_view set, col, value;
    if (needs_value) {
      if (tokens.size() == 4) {
        set = tokens[1]; col = tokens[2]; value = tokens[3];
      } else if (tokens.size() == 3) {
        col = tokens[1]; value = tokens[2];
      } else {
        Fail(tokens[0], "bound " + type + " requires a value");
      }
    } else if (tokens.size() == 4) {
      set = tokens[1]; col = tokens[2]; value = tokens[3];
    } else if (tokens.size() == 3) {
      const bool second_is_column = column_index_.count(std::string(tokens[1])) != 0;
      const bool third_is_column = column_index_.count(std::string(tokens[2])) != 0;
      if (second_is_column && !third_is_column && ParseNumber(tokens[2])) {
        col = tokens[1]; value = tokens[2];
      } else {
        set = tokens[1]; col = tokens[2];
      }
    } else {
      col = tokens[1];
    }
    if (!set.empty()) {
      if (bound_set_.empty()) bound_set_ = std::string(set);
      if (bound_set_ != set) return;
    }
    MpsBound bound;
    bound.type = t->second;
    bound.column = ColumnRef(col);
    bound.value = value.empty() ? 0.0 : Number(value);
    if (bound.type == BoundType::kBv && value.empty()) bound.value = 1.0;
    raw_.bounds.push_back(bound);
  }

  RawInstance raw_;
  Section section_ = Section::kNone;
  std::size_t line_no_ = 0;
  std::string_view line_;
  bool in_integer_block_ = false;
  bool fixed_ = false;  // sticky once a line needs fixed columns
  std::unordered_map<std::string, int> row_index_;
  std::unordered_map<std::string, int> column_index_;
  std::unordered_set<std::uint64_t> seen_cells_;
  std::string rhs_set_, range_set_, bound_set_;
};

struct ColumnDomain {
  double lower = 0.0;
  double upper = kInf;
  bool integer = false;
};

double BoundValue(double v) {
  if (v >= kInfiniteBound) return kInf;
  if (v <= -kInfiniteBound) return -kInf;
  return v;
}

std::vector<ColumnDomain> ResolveDomains(const RawInstance& raw) {
  std::vector<ColumnDomain> domains(raw.columns.size());
  // Integer columns default to binary until a bound other than "LO 0",
  // "UP 1" or "BV" says otherwise (the common MPS convention).
  std::vector<bool> default_binary(raw.columns.size(), false);
  for (std::size_t j = 0; j < raw.columns.size(); ++j) {
    domains[j].integer = raw.columns[j].integer;
    if (domains[j].integer) {
      domains[j].upper = 1.0;
      default_binary[j] = true;
    }
  }
  for (const MpsBound& b : raw.bounds) {
    ColumnDomain& d = domains[b.column];
    const double v = BoundValue(b.value);
    if (default_binary[b.column]) {
      const bool keeps_binary = b.type == BoundType::kBv ||
                                (b.type == BoundType::kLo && v == 0.0) ||
                                (b.type == BoundType::kUp && v == 1.0);
      if (!keeps_binary) d.upper = kInf;
      default_binary[b.column] = false;
    }
    switch (b.type) {
      case BoundType::kUp:
        d.upper = v;
        if (v < 0.0 && d.lower == 0.0) d.lower = -kInf;
        break;
      case BoundType::kLo: d.lower = v; break;
      case BoundType::kFx: d.lower = d.upper = v; break;
      case BoundType::kFr: d.lower = -kInf; d.upper = kInf; break;
      case BoundType::kMi: d.lower = -kInf; break;
      case BoundType::kPl: d.upper = kInf; break;
      case BoundType::kBv:
        d.integer = true;
        d.lower = 0.0;
        d.upper = 1.0;
        break;
      case BoundType::kLi: d.integer = true; d.lower = v; break;
      case BoundType::kUi: d.integer = true; d.upper = v; break;
    }
  }
  for (std::size_t j = 0; j < domains.size(); ++j) {
    if (domains[j].lower > domains[j].upper) {
      throw Error(ErrorCode::kInfeasibleBoundDeclaration,
                  "column '" + raw.columns[j].name + "' has lower bound above upper bound");
    }
  }
  return domains;
}

std::vector<Term> Negated(std::vector<Term> terms) {
  for (Term& t : terms) t.coef = -t.coef;
  return terms;
}

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

RawInstance ParseMps(std::string_view bytes) {
  if (bytes.empty()) throw Error(ErrorCode::kEmptyFile, "empty input");
  if (IsGzip(bytes)) {
    const std::string text = Inflate(bytes);
    if (text.empty()) throw Error(ErrorCode::kEmptyFile, "empty input");
    return MpsParser().Parse(text);
  }
  return MpsParser().Parse(bytes);
}

RawInstance ReadMpsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kMissingFile, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseMps(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " +
                              std::string(e.what()).substr(
                                  ErrorCodeName(e.code()).size() + 2));
  }
}

CanonicalInstance Canonicalize(const RawInstance& raw) {
  if (raw.objective_row < 0) {
    throw Error(ErrorCode::kNoObjectiveRow, "MPS file declares no N row");
  }
  const std::vector<ColumnDomain> domains = ResolveDomains(raw);

  CanonicalInstance out;
  out.name = raw.name;
  out.variables.reserve(raw.columns.size());
  for (std::size_t j = 0; j < raw.columns.size(); ++j) {
    const ColumnDomain& d = domains[j];
    VarClass cls = VarClass::kContinuous;
    if (d.integer) {
      cls = (d.lower == 0.0 && d.upper == 1.0) ? VarClass::kBinary
                                               : VarClass::kInteger;
    }
    out.variables.push_back(cls);
    out.variable_names.push_back(raw.columns[j].name);
  }

  // Row-wise nonzeros, column order as they appear in the file.
  std::vector<std::vector<Term>> row_terms(raw.rows.size());
  for (const MpsCoefficient& c : raw.coefficients) {
    if (c.value == 0.0) continue;
    row_terms[c.row].push_back({static_cast<std::uint32_t>(c.column), c.value});
  }

  out.objective = row_terms[raw.objective_row];
  if (raw.objective_sense == ObjectiveSense::kMaximize) {
    out.objective = Negated(std::move(out.objective));
  }

  for (std::size_t i = 0; i < raw.rows.size(); ++i) {
    const RowSense sense = raw.rows[i].sense;
    if (sense == RowSense::kFree) continue;
    std::vector<Term>& terms = row_terms[i];
    if (terms.empty()) continue;
    const int row = static_cast<int>(i);
    const auto rhs_it = raw.rhs.find(row);
    const double rhs = rhs_it == raw.rhs.end() ? 0.0 : rhs_it->second;
    const auto range_it = raw.ranges.find(row);

    std::optional<double> upper, lower;
    if (range_it == raw.ranges.end()) {
      if (sense != RowSense::kGreaterEqual) upper = rhs;
      if (sense != RowSense::kLessEqual) lower = rhs;
    } else {
      const double r = range_it->second;
      switch (sense) {
        case RowSense::kLessEqual:
          upper = rhs;
          lower = rhs - std::abs(r);
          break;
        case RowSense::kGreaterEqual:
          upper = rhs + std::abs(r);
          lower = rhs;
          break;
        case RowSense::kEqual:
          upper = r >= 0.0 ? rhs + r : rhs;
          lower = r >= 0.0 ? rhs : rhs + r;
          break;
        case RowSense::kFree:
          break;
      }
    }
    if (upper) out.constraints.push_back({terms, *upper});
    if (lower) out.constraints.push_back({Negated(terms), -*lower});
  }
  return out;
}

std::string WriteMps(const CanonicalInstance& instance) {
  const std::size_t n = instance.variables.size();
  std::vector<std::string> names = instance.variable_names;
  if (names.size() != n) {
    names.clear();
    for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j));
  }
  // Column-major view of the coefficients.
  std::vector<std::vector<std::pair<std::string, double>>> columns(n);
  for (const Term& t : instance.objective) columns.at(t.var).emplace_back("obj", t.coef);
  for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
    for (const Term& t : instance.constraints[i].terms) {
      columns.at(t.var).emplace_back("c" + std::to_string(i), t.coef);
    }
  }

  std::ostringstream out;
  out << "NAME " << (instance.name.empty() ? "UNNAMED" : instance.name) << "\n";
  out << "ROWS\n N  obj\n";
  for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
    out << " L  c" << i << "\n";
  }
  out << "COLUMNS\n";
  bool in_marker = false;
  int marker = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const bool integer = instance.variables[j] != VarClass::kContinuous;
    if (integer != in_marker) {
      out << "    MARKER" << marker++ << " 'MARKER' "
          << (integer ? "'INTORG'" : "'INTEND'") << "\n";
      in_marker = integer;
    }
    if (columns[j].empty()) {
      // Keep the column declared.
      out << "    " << names[j] << " obj 0\n";
    }
    for (const auto& [row, coef] : columns[j]) {
      out << "    " << names[j] << " " << row << " " << FormatNumber(coef) << "\n";
    }
  }
  if (in_marker) out << "    MARKER" << marker++ << " 'MARKER' 'INTEND'\n";
  out << "RHS\n";
  for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
    const double rhs = instance.constraints[i].rhs;
    if (rhs != 0.0) out << "    RHS c" << i << " " << FormatNumber(rhs) << "\n";
  }
  out << "BOUNDS\n";
  for (std::size_t j = 0; j < n; ++j) {
    if (instance.variables[j] == VarClass::kBinary) {
      out << " UP BND " << names[j] << " 1\n";
    } else if (instance.variables[j] == VarClass::kInteger) {
      out << " PL BND " << names[j] << "\n";
    }
  }
  out << "ENDATA\n";
  return out.str();
}

}  // namespace milpdist
