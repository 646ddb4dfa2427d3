#include "orientseq/seq_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orientseq {

namespace {

// Tracks position in the raw buffer so every failure can name line/column.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (done()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void expect(char c, const char* what) {
    if (done() || peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  void expect_literal(const std::string& lit) {
    for (char c : lit) expect(c, ("'" + lit + "'").c_str());
  }

  long long parse_int(const char* what) {
    token_line_ = line_;
    token_column_ = column_;
    if (done() || (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '-'))
      fail(std::string("expected ") + what);
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    long long value = 0;
    auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{}) fail(std::string("invalid integer for ") + what);
    const auto consumed = static_cast<std::size_t>(res.ptr - begin);
    for (std::size_t i = 0; i < consumed; ++i) advance();
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line_, column_); }

  /// Like fail(), but points at the start of the most recently parsed integer.
  [[noreturn]] void fail_at_token(const std::string& msg) const {
    throw parse_error(msg, token_line_, token_column_);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t token_line_ = 1;
  std::size_t token_column_ = 1;
};

SequenceFile read_sequence_text(const std::string& content) {
  Cursor c(content);
  c.expect_literal("q=");
  long long q = c.parse_int("modulus q");
  if (q < kMinModulus || q > kMaxModulus) c.fail_at_token("modulus q out of range");
  c.expect_literal(" n=");
  long long n = c.parse_int("window length n");
  if (n < 1) c.fail_at_token("window length n must be positive");
  c.expect_literal(" period=");
  long long period = c.parse_int("period");
  if (period < 1 || static_cast<std::size_t>(period) > kMaxPeriod)
    c.fail_at_token("period out of range");
  c.expect('\n', "newline after header");

  std::vector<Symbol> terms;
  terms.reserve(static_cast<std::size_t>(period));
  for (long long i = 0; i < period; ++i) {
    if (i > 0) c.expect(',', "','");
    long long v = c.parse_int("term");
    if (v < 0 || v >= q) c.fail_at_token("term out of range for modulus");
    terms.push_back(static_cast<Symbol>(v));
  }
  c.expect('\n', "newline after terms");
  if (!c.done()) c.fail("trailing content after sequence");
  return SequenceFile{RingSequence(static_cast<int>(q), std::move(terms)), static_cast<int>(n)};
}

// Maps a byte offset reported by the JSON parser back to line/column.
std::pair<std::size_t, std::size_t> offset_to_line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

SequenceFile read_sequence_json(const std::string& content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = offset_to_line_column(content, e.byte > 0 ? e.byte - 1 : 0);
    throw parse_error(std::string("invalid JSON: ") + e.what(), line, column);
  }
  auto fail = [&](const std::string& msg) -> void { throw parse_error(msg, 1, 1); };
  if (!doc.is_object()) fail("JSON sequence must be an object");
  for (const char* key : {"q", "n", "period", "terms"}) {
    if (!doc.contains(key)) fail(std::string("missing key '") + key + "'");
  }
  if (!doc["q"].is_number_integer() || !doc["n"].is_number_integer() ||
      !doc["period"].is_number_integer() || !doc["terms"].is_array())
    fail("wrong JSON types for sequence fields");
  long long q = doc["q"].get<long long>();
  long long n = doc["n"].get<long long>();
  long long period = doc["period"].get<long long>();
  if (q < kMinModulus || q > kMaxModulus) fail("modulus q out of range");
  if (n < 1) fail("window length n must be positive");
  if (period < 1 || static_cast<std::size_t>(period) > kMaxPeriod) fail("period out of range");
  if (doc["terms"].size() != static_cast<std::size_t>(period)) fail("terms length does not match period");
  std::vector<Symbol> terms;
  terms.reserve(doc["terms"].size());
  for (const auto& v : doc["terms"]) {
    if (!v.is_number_integer()) fail("terms must be integers");
    long long t = v.get<long long>();
    if (t < 0 || t >= q) fail("term out of range for modulus");
    terms.push_back(static_cast<Symbol>(t));
  }
  return SequenceFile{RingSequence(static_cast<int>(q), std::move(terms)), static_cast<int>(n)};
}

}  // namespace

std::string write_sequence_text(const RingSequence& s, int n) {
  std::ostringstream os;
  os << "q=" << s.q() << " n=" << n << " period=" << s.period() << '\n';
  for (std::size_t i = 0; i < s.period(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '\n';
  return os.str();
}

std::string write_sequence_json(const RingSequence& s, int n) {
  nlohmann::ordered_json doc;
  doc["q"] = s.q();
  doc["n"] = n;
  doc["period"] = s.period();
  auto terms = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.period(); ++i) terms.push_back(static_cast<int>(s[i]));
  doc["terms"] = std::move(terms);
  return doc.dump() + "\n";
}

std::string write_sequence(const RingSequence& s, int n, SeqFormat format) {
  return format == SeqFormat::text ? write_sequence_text(s, n) : write_sequence_json(s, n);
}

SequenceFile read_sequence(const std::string& content) {
  for (char ch : content) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? read_sequence_json(content) : read_sequence_text(content);
  }
  throw parse_error("empty sequence file", 1, 1);
}

SequenceFile read_sequence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_sequence(buf.str());
}

void write_sequence_file(const std::string& path, const RingSequence& s, int n, SeqFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot open file for writing: " + path);
  out << write_sequence(s, n, format);
}

}  // namespace orientseq
