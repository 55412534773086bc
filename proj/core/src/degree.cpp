#include "kgraph/degree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

void require_same_rank(int a, int b, const char* op) {
  if (a != b) {
    throw DomainError(std::string("degree rank mismatch in ") + op + ": " + std::to_string(a) +
                      " vs " + std::to_string(b));
  }
}

std::int32_t checked_sum(std::int64_t value) {
  if (value > std::numeric_limits<std::int32_t>::max() ||
      value < std::numeric_limits<std::int32_t>::min()) {
    throw DomainError("degree coordinate overflow");
  }
  return static_cast<std::int32_t>(value);
}

template <class Coords>
std::string join_coords(const Coords& coords) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out << ',';
    out << coords[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

Degree::Degree(std::vector<std::int32_t> coords) : coords_(std::move(coords)) {
  for (auto c : coords_) {
    if (c < 0) throw DomainError("degree coordinates must be nonnegative");
  }
}

Degree::Degree(std::initializer_list<std::int32_t> coords)
    : Degree(std::vector<std::int32_t>(coords)) {}

Degree Degree::zero(int rank) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  return Degree(std::vector<std::int32_t>(static_cast<std::size_t>(rank), 0));
}

Degree Degree::unit(int rank, int color) {
  if (color < 0 || color >= rank) throw DomainError("color out of range");
  Degree d = zero(rank);
  d.coords_[static_cast<std::size_t>(color)] = 1;
  return d;
}

std::int64_t Degree::length() const {
  std::int64_t total = 0;
  for (auto c : coords_) total += c;
  return total;
}

bool Degree::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool operator<=(const Degree& a, const Degree& b) {
  require_same_rank(a.rank(), b.rank(), "<=");
  for (int i = 0; i < a.rank(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Degree operator+(const Degree& a, const Degree& b) {
  require_same_rank(a.rank(), b.rank(), "+");
  std::vector<std::int32_t> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_sum(std::int64_t{a.coords_[i]} + b.coords_[i]);
  }
  return Degree(std::move(out));
}

Degree operator-(const Degree& a, const Degree& b) {
  require_same_rank(a.rank(), b.rank(), "-");
  if (!(b <= a)) {
    throw DomainError("degree difference " + a.to_string() + " - " + b.to_string() +
                      " is undefined");
  }
  std::vector<std::int32_t> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coords_[i] - b.coords_[i];
  return Degree(std::move(out));
}

std::string Degree::to_string() const { return join_coords(coords_); }

Degree join(const Degree& a, const Degree& b) {
  require_same_rank(a.rank(), b.rank(), "join");
  std::vector<std::int32_t> out(static_cast<std::size_t>(a.rank()));
  for (int i = 0; i < a.rank(); ++i) out[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return Degree(std::move(out));
}

Degree meet(const Degree& a, const Degree& b) {
  require_same_rank(a.rank(), b.rank(), "meet");
  std::vector<std::int32_t> out(static_cast<std::size_t>(a.rank()));
  for (int i = 0; i < a.rank(); ++i) out[static_cast<std::size_t>(i)] = std::min(a[i], b[i]);
  return Degree(std::move(out));
}

Degree parse_degree(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ') cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw ParseError("empty degree");
  std::vector<std::int32_t> coords;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    auto end = cleaned.find(',', start);
    if (end == std::string::npos) end = cleaned.size();
    std::int32_t value = 0;
    const char* first = cleaned.data() + start;
    const char* last = cleaned.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 0) {
      throw ParseError("invalid degree '" + std::string(text) + "'");
    }
    coords.push_back(value);
    start = end + 1;
  }
  return Degree(std::move(coords));
}

std::vector<Degree> degrees_up_to(const Degree& bound) {
  std::vector<Degree> out;
  std::vector<std::int32_t> cur(static_cast<std::size_t>(bound.rank()), 0);
  while (true) {
    out.emplace_back(cur);
    int i = bound.rank() - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound[i]) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

Offset Offset::zero(int rank) {
  return Offset(std::vector<std::int32_t>(static_cast<std::size_t>(rank), 0));
}

Offset Offset::difference(const Degree& p, const Degree& q) {
  require_same_rank(p.rank(), q.rank(), "offset");
  std::vector<std::int32_t> out(static_cast<std::size_t>(p.rank()));
  for (int i = 0; i < p.rank(); ++i) {
    out[static_cast<std::size_t>(i)] = checked_sum(std::int64_t{p[i]} - q[i]);
  }
  return Offset(std::move(out));
}

bool Offset::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

Offset operator+(const Offset& a, const Offset& b) {
  require_same_rank(a.rank(), b.rank(), "offset +");
  std::vector<std::int32_t> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_sum(std::int64_t{a.coords_[i]} + b.coords_[i]);
  }
  return Offset(std::move(out));
}

Offset operator-(const Offset& a) {
  std::vector<std::int32_t> out(a.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coords_[i];
  return Offset(std::move(out));
}

std::string Offset::to_string() const { return join_coords(coords_); }

bool ExtendedDegree::is_finite() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& c) { return c.has_value(); });
}

std::string ExtendedDegree::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i != 0) out << ',';
    if (coords[i]) {
      out << *coords[i];
    } else {
      out << "inf";
    }
  }
  out << ')';
  return out.str();
}

}  // namespace kgraph
