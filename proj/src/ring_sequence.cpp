#include "orientseq/ring_sequence.hpp"

#include <algorithm>
#include <sstream>

namespace orientseq {

parse_error::parse_error(const std::string& msg, std::size_t line, std::size_t column)
    : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

int reduce_mod(long long value, int q) {
  if (q < kMinModulus) throw std::invalid_argument("modulus must be at least 2");
  long long r = value % q;
  if (r < 0) r += q;
  return static_cast<int>(r);
}

Residue::Residue(int v, int q) : value(v), modulus(q) {
  if (q < kMinModulus || q > kMaxModulus) throw std::invalid_argument("modulus out of range");
  if (v < 0 || v >= q) throw std::invalid_argument("residue value out of range");
}

namespace {
void require_same_modulus(Residue a, Residue b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("mixed moduli in residue arithmetic");
}
}  // namespace

Residue operator+(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue(reduce_mod(static_cast<long long>(a.value) + b.value, a.modulus), a.modulus);
}

Residue operator-(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue(reduce_mod(static_cast<long long>(a.value) - b.value, a.modulus), a.modulus);
}

RingSequence::RingSequence(int q, std::vector<Symbol> terms) : q_(q), terms_(std::move(terms)) {
  if (q < kMinModulus || q > kMaxModulus) throw std::invalid_argument("modulus out of range");
  if (terms_.empty()) throw std::invalid_argument("ring sequence must have at least one term");
  if (terms_.size() > kMaxPeriod) throw std::invalid_argument("period exceeds supported maximum");
  for (Symbol t : terms_) {
    if (static_cast<int>(t) >= q) throw std::invalid_argument("term out of range for modulus");
  }
}

RingSequence RingSequence::from_ints(int q, const std::vector<int>& terms) {
  std::vector<Symbol> out;
  out.reserve(terms.size());
  for (int v : terms) {
    if (v < 0 || v >= q) throw std::invalid_argument("term out of range for modulus");
    out.push_back(static_cast<Symbol>(v));
  }
  return RingSequence(q, std::move(out));
}

Symbol RingSequence::at(std::int64_t i) const noexcept {
  const auto m = static_cast<std::int64_t>(terms_.size());
  std::int64_t r = i % m;
  if (r < 0) r += m;
  return terms_[static_cast<std::size_t>(r)];
}

RingSequence RingSequence::rotated(std::size_t offset) const {
  const std::size_t m = terms_.size();
  offset %= m;
  std::vector<Symbol> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = terms_[(offset + i) % m];
  return RingSequence(q_, std::move(out));
}

RingSequence RingSequence::canonical() const {
  // Booth's least-rotation algorithm on the doubled word.
  const std::size_t m = terms_.size();
  std::vector<std::ptrdiff_t> f(2 * m, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * m; ++j) {
    Symbol sj = terms_[j % m];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != terms_[(k + i + 1) % m]) {
      if (sj < terms_[(k + i + 1) % m]) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != terms_[(k) % m]) {
      if (sj < terms_[k % m]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return rotated(k % m);
}

std::size_t RingSequence::least_period() const {
  const std::size_t m = terms_.size();
  for (std::size_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = terms_[i] == terms_[(i + d) % m];
    if (ok) return d;
  }
  return m;
}

std::string RingSequence::to_string() const {
  std::ostringstream os;
  os << "Z_" << q_ << " [";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ',';
    os << terms_[i];
  }
  os << ']';
  return os.str();
}

std::string WindowTuple::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i];
  }
  os << ')';
  return os.str();
}

WindowTuple window(const RingSequence& s, std::int64_t i, int n) {
  if (n < 1) throw std::invalid_argument("window length must be at least 1");
  WindowTuple t;
  t.q = s.q();
  t.entries.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) t.entries[static_cast<std::size_t>(j)] = s.at(i + j);
  return t;
}

WindowTuple reverse(WindowTuple t) {
  std::reverse(t.entries.begin(), t.entries.end());
  return t;
}

WindowTuple negate(WindowTuple t) {
  for (Symbol& e : t.entries) e = static_cast<Symbol>(e == 0 ? 0 : t.q - e);
  return t;
}

RingSequence negate(const RingSequence& s) {
  std::vector<Symbol> out(s.terms());
  for (Symbol& e : out) e = static_cast<Symbol>(e == 0 ? 0 : s.q() - e);
  return RingSequence(s.q(), std::move(out));
}

RingSequence translate(const RingSequence& s, int lambda) {
  const int q = s.q();
  const int l = reduce_mod(lambda, q);
  std::vector<Symbol> out(s.terms());
  for (Symbol& e : out) e = static_cast<Symbol>((static_cast<int>(e) + l) % q);
  return RingSequence(q, std::move(out));
}

RingSequence translate(const RingSequence& s, Residue lambda) {
  if (lambda.modulus != s.q()) throw std::invalid_argument("translate: modulus mismatch");
  return translate(s, lambda.value);
}

std::uint64_t weight(const RingSequence& s) {
  std::uint64_t w = 0;
  for (Symbol e : s.terms()) w += e;
  return w;
}

int weight_mod(const RingSequence& s) {
  return static_cast<int>(weight(s) % static_cast<std::uint64_t>(s.q()));
}

RingSequence embed_E(const RingSequence& s, int q_prime) {
  if (q_prime <= s.q()) throw std::invalid_argument("embed_E requires q' > q");
  if (q_prime > kMaxModulus) throw std::invalid_argument("modulus out of range");
  return RingSequence(q_prime, s.terms());
}

Symbol map_M_symbol(Symbol y, int q, int q_prime) {
  const int v = static_cast<int>(y);
  if (v <= q - 1) return y;
  if (v <= q_prime - q) return 0;
  return static_cast<Symbol>(q_prime - v);
}

RingSequence map_M(const RingSequence& s, int q) {
  const int q_prime = s.q();
  if (q < kMinModulus) throw std::invalid_argument("modulus out of range");
  if (q_prime < 2 * q - 1) throw std::invalid_argument("map_M requires q' >= 2q-1");
  std::vector<Symbol> out(s.terms());
  for (Symbol& e : out) e = map_M_symbol(e, q, q_prime);
  return RingSequence(q, std::move(out));
}

RingSequence concat(const RingSequence& a, const RingSequence& b) {
  if (a.q() != b.q()) throw std::invalid_argument("concat: modulus mismatch");
  std::vector<Symbol> out;
  out.reserve(a.period() + b.period());
  out.insert(out.end(), a.terms().begin(), a.terms().end());
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return RingSequence(a.q(), std::move(out));
}

RingSequence erase_run(const RingSequence& s, std::size_t start, std::size_t count) {
  if (start + count > s.period()) throw std::invalid_argument("erase_run: range out of bounds");
  if (count >= s.period()) throw std::invalid_argument("erase_run: cannot empty the ring");
  std::vector<Symbol> out;
  out.reserve(s.period() - count);
  out.insert(out.end(), s.terms().begin(), s.terms().begin() + static_cast<std::ptrdiff_t>(start));
  out.insert(out.end(), s.terms().begin() + static_cast<std::ptrdiff_t>(start + count), s.terms().end());
  return RingSequence(s.q(), std::move(out));
}

}  // namespace orientseq
