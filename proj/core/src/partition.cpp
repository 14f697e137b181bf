#include "oddhooks/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

namespace oddhooks {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int row) const {
  if (row < 1 || row > rows()) return 0;
  return parts_[row - 1];
}

int Partition::colLength(int col) const {
  if (col < 1) return 0;
  int count = 0;
  for (int u : parts_) {
    if (u >= col) {
      ++count;
    } else {
      break;
    }
  }
  return count;
}

bool Partition::contains(int row, int col) const {
  return row >= 1 && row <= rows() && col >= 1 && col <= parts_[row - 1];
}

Partition Partition::conjugate() const {
  if (empty()) return {};
  std::vector<int> cols(parts_[0]);
  for (int c = 1; c <= parts_[0]; ++c) {
    cols[c - 1] = colLength(c);
  }
  return Partition(std::move(cols));
}

std::string Partition::str() const {
  if (empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

std::ostream& operator<<(std::ostream& os, const HookRef& h) {
  return os << "hook(row=" << h.row << ",col=" << h.col << ",len=" << h.length
            << ")";
}

std::vector<HookRef> hooks(const Partition& p) {
  std::vector<HookRef> result;
  result.reserve(p.size());
  const Partition conj = p.conjugate();
  for (int r = 1; r <= p.rows(); ++r) {
    for (int c = 1; c <= p.part(r); ++c) {
      const int arm = p.part(r) - c;
      const int leg = conj.part(c) - r;
      result.push_back(HookRef{r, c, arm + leg + 1, arm, leg});
    }
  }
  return result;
}

std::vector<HookRef> hooksOfLength(const Partition& p, int e) {
  std::vector<HookRef> result;
  for (const HookRef& h : hooks(p)) {
    if (h.length == e) result.push_back(h);
  }
  return result;
}

std::vector<HookRef> hooksOfLengthDivisible(const Partition& p, int e) {
  if (e < 1) throw std::invalid_argument("hook length divisor must be positive");
  std::vector<HookRef> result;
  for (const HookRef& h : hooks(p)) {
    if (h.length % e == 0) result.push_back(h);
  }
  return result;
}

HookRef hookAt(const Partition& p, int row, int col) {
  if (!p.contains(row, col)) {
    throw std::invalid_argument("not a node");
  }
  const int arm = p.part(row) - col;
  const int leg = p.colLength(col) - row;
  return HookRef{row, col, arm + leg + 1, arm, leg};
}

Partition removeHook(const Partition& p, const HookRef& h) {
  const HookRef actual = hookAt(p, h.row, h.col);
  if (actual != h) {
    throw std::invalid_argument("not a hook of the partition");
  }
  // Rows row..foot-1 take the value of the next row shrunk by one; the foot
  // row is cut back to col-1 nodes.
  const int foot = p.colLength(h.col);
  std::vector<int> parts = p.parts();
  for (int r = h.row; r < foot; ++r) {
    parts[r - 1] = parts[r] - 1;
  }
  parts[foot - 1] = h.col - 1;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

BetaSet betaSet(const Partition& p, int beads) {
  if (beads < p.rows()) {
    throw std::invalid_argument("bead count is smaller than the number of parts");
  }
  std::vector<int> values(beads);
  for (int i = 1; i <= beads; ++i) {
    values[i - 1] = p.part(i) + beads - i;
  }
  return BetaSet{std::move(values)};
}

Partition fromBetaSet(const BetaSet& b) {
  return partitionFromBetaValues(b.values);
}

Partition partitionFromBetaValues(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  const int m = static_cast<int>(values.size());
  std::vector<int> parts;
  parts.reserve(values.size());
  for (int i = 1; i <= m; ++i) {
    if (values[i - 1] < 0) {
      throw std::invalid_argument("beta-numbers must be non-negative");
    }
    if (i > 1 && values[i - 1] == values[i - 2]) {
      throw std::invalid_argument("beta-numbers must be distinct");
    }
    const int part = values[i - 1] - (m - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

std::vector<int> firstColumnHookLengths(const Partition& p) {
  return betaSet(p, p.rows()).values;
}

ParseError::ParseError(const std::string& message, std::string offendingToken)
    : std::invalid_argument(message), token(std::move(offendingToken)) {}

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parsePositiveInt(std::string_view digits, const std::string& token,
                     const char* what) {
  if (digits.empty()) {
    throw ParseError(std::string("missing ") + what + " in token '" + token +
                         "'",
                     token);
  }
  long long value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(std::string("invalid ") + what + " in token '" + token +
                           "'",
                       token);
    }
    value = value * 10 + (ch - '0');
    if (value > 1'000'000'000LL) {
      throw ParseError(std::string("value out of range in token '") + token +
                           "'",
                       token);
    }
  }
  return static_cast<int>(value);
}

}  // namespace

Partition parsePartition(std::string_view text) {
  const std::string_view whole = trimmed(text);
  if (whole.empty() || whole == "0") return {};

  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= whole.size()) {
    std::size_t comma = whole.find(',', start);
    if (comma == std::string_view::npos) comma = whole.size();
    const std::string token(trimmed(whole.substr(start, comma - start)));
    if (token.empty()) {
      throw ParseError("empty part in partition literal", token);
    }
    std::string_view body(token);
    int repeat = 1;
    if (const std::size_t caret = body.find('^');
        caret != std::string_view::npos) {
      repeat = parsePositiveInt(body.substr(caret + 1), token, "exponent");
      if (repeat < 1) {
        throw ParseError("exponent must be positive in token '" + token + "'",
                         token);
      }
      body = body.substr(0, caret);
    }
    const int value = parsePositiveInt(body, token, "part");
    if (value < 1) {
      throw ParseError("parts must be positive in token '" + token + "'",
                       token);
    }
    if (!parts.empty() && value > parts.back()) {
      throw ParseError("parts must be weakly decreasing at token '" + token +
                           "'",
                       token);
    }
    parts.insert(parts.end(), repeat, value);
    if (comma == whole.size()) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace oddhooks
