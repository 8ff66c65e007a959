#include "symporb/involution.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace symporb {

Transposition::Transposition(int first, int second) : a(first), d(second) {
  if (first < 1 || second <= first) {
    throw DomainError("transposition needs 1 <= a < d, got (" +
                      std::to_string(first) + "," + std::to_string(second) + ")");
  }
}

std::string Transposition::label() const {
  if (d <= 9) return std::to_string(a) + std::to_string(d);
  return std::to_string(a) + "," + std::to_string(d);
}

Transposition Transposition::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError("bad transposition '" + std::string(text) + "'");
    }
    return v;
  };
  int first = 0;
  int second = 0;
  if (auto comma = text.find(','); comma != std::string_view::npos) {
    first = number(text.substr(0, comma));
    second = number(text.substr(comma + 1));
  } else if (text.size() == 2) {
    first = number(text.substr(0, 1));
    second = number(text.substr(1, 1));
  } else {
    throw ParseError("bad transposition '" + std::string(text) +
                     "', expected 'ij' or 'i,j'");
  }
  if (first > second) std::swap(first, second);
  try {
    return Transposition(first, second);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

FpfInvolution::FpfInvolution(std::vector<int> word) : word_(std::move(word)) {
  const int size = static_cast<int>(word_.size());
  if (size == 0 || size % 2 != 0) {
    throw DomainError("involution length must be even and positive, got " +
                      std::to_string(size));
  }
  for (int i = 1; i <= size; ++i) {
    const int v = word_[i - 1];
    if (v < 1 || v > size) {
      throw DomainError("value " + std::to_string(v) + " at position " +
                        std::to_string(i) + " is outside 1.." + std::to_string(size));
    }
    if (v == i) {
      throw DomainError("position " + std::to_string(i) + " is a fixed point");
    }
    if (word_[v - 1] != i) {
      throw DomainError("not an involution: pi(" + std::to_string(i) + ")=" +
                        std::to_string(v) + " but pi(" + std::to_string(v) +
                        ")=" + std::to_string(word_[v - 1]));
    }
  }
}

FpfInvolution FpfInvolution::parse(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const auto token = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("bad entry '" + std::string(token) + "' in '" +
                             std::string(text) + "'",
                         start + 1);
      }
      word.push_back(v);
      start = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '1' || c > '9') {
        throw ParseError(std::string("unexpected character '") + c + "' in '" +
                             std::string(text) + "'",
                         i + 1);
      }
      word.push_back(c - '0');
    }
  }
  try {
    return FpfInvolution(std::move(word));
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

FpfInvolution FpfInvolution::longest(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  std::vector<int> word(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) word[i] = 2 * n - i;
  return FpfInvolution(std::move(word), Unchecked{});
}

FpfInvolution FpfInvolution::open_orbit(int n) {
  if (n < 1) throw DomainError("n must be at least 1");
  std::vector<int> word(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; i += 2) {
    word[i] = i + 2;
    word[i + 1] = i + 1;
  }
  return FpfInvolution(std::move(word), Unchecked{});
}

std::vector<Transposition> FpfInvolution::arcs() const {
  std::vector<Transposition> out;
  out.reserve(word_.size() / 2);
  for (int i = 1; i <= size(); ++i) {
    if (i < (*this)(i)) out.emplace_back(i, (*this)(i));
  }
  return out;
}

bool FpfInvolution::has_arc(const Transposition& t) const {
  return t.d <= size() && (*this)(t.a) == t.d;
}

std::string format_word(std::span<const int> word) {
  const bool digits = std::all_of(word.begin(), word.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string FpfInvolution::to_string() const { return format_word(word_); }

std::uint64_t FpfInvolution::packed() const noexcept {
  std::uint64_t key = 0;
  for (int v : word_) key = (key << 4) | static_cast<std::uint64_t>(v - 1);
  return key;
}

std::uint64_t fpf_count(int n) {
  std::uint64_t count = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) count *= static_cast<std::uint64_t>(k);
  return count;
}

namespace {

void extend(std::vector<int>& word, int n2, std::vector<FpfInvolution>& out,
            const auto& make) {
  const auto first = std::find(word.begin(), word.end(), 0);
  if (first == word.end()) {
    out.push_back(make(word));
    return;
  }
  const int i = static_cast<int>(first - word.begin()) + 1;
  for (int j = i + 1; j <= n2; ++j) {
    if (word[j - 1] != 0) continue;
    word[i - 1] = j;
    word[j - 1] = i;
    extend(word, n2, out, make);
    word[i - 1] = 0;
    word[j - 1] = 0;
  }
}

}  // namespace

std::vector<FpfInvolution> enumerate(int n, int degree_cap) {
  if (n < 1) throw SizeError("enumerate needs n >= 1, got " + std::to_string(n));
  if (2 * n > degree_cap) {
    throw SizeError("2n = " + std::to_string(2 * n) + " exceeds the degree cap " +
                    std::to_string(degree_cap));
  }
  std::vector<FpfInvolution> out;
  out.reserve(fpf_count(n));
  std::vector<int> word(static_cast<std::size_t>(2 * n), 0);
  extend(word, 2 * n, out, [](const std::vector<int>& w) {
    return FpfInvolution(w, FpfInvolution::Unchecked{});
  });
  return out;
}

int rank(const FpfInvolution& pi) {
  const int n2 = pi.size();
  int total = 0;
  for (int i = 1; i <= n2; ++i) {
    const int j = pi(i);
    if (j < i) continue;
    int crossing_left = 0;
    for (int k = i + 1; k < j; ++k) {
      if (pi(k) < i) ++crossing_left;
    }
    total += j - i - crossing_left;
  }
  return pi.n() * pi.n() - total;
}

FpfInvolution conjugate(const FpfInvolution& pi, const Transposition& t) {
  if (t.d > pi.size()) {
    throw DomainError("transposition " + t.label() + " is out of range for " +
                      pi.to_string());
  }
  auto flip = [&](int x) { return x == t.a ? t.d : x == t.d ? t.a : x; };
  std::vector<int> word(pi.word().size());
  for (int i = 1; i <= pi.size(); ++i) word[i - 1] = flip(pi(flip(i)));
  return FpfInvolution(std::move(word), FpfInvolution::Unchecked{});
}

FpfInvolution reverse_complement(const FpfInvolution& pi) {
  const int n2 = pi.size();
  std::vector<int> word(pi.word().size());
  for (int i = 1; i <= n2; ++i) word[i - 1] = n2 + 1 - pi(n2 + 1 - i);
  return FpfInvolution(std::move(word), FpfInvolution::Unchecked{});
}

int encapsulation_count(const FpfInvolution& pi, const Transposition& t) {
  int count = 0;
  for (int a = 1; a < t.a; ++a) {
    if (pi(a) > t.d && pi(a) <= pi.size()) ++count;
  }
  return count;
}

FpfInvolution delete_pair_standardize(const FpfInvolution& pi,
                                      const Transposition& arc) {
  if (!pi.has_arc(arc)) {
    throw DomainError(arc.label() + " is not an arc of " + pi.to_string());
  }
  if (pi.n() < 2) {
    throw DomainError("cannot delete the only arc of " + pi.to_string());
  }
  auto shift = [&](int x) { return x - (x > arc.a ? 1 : 0) - (x > arc.d ? 1 : 0); };
  std::vector<int> word;
  word.reserve(pi.word().size() - 2);
  for (int i = 1; i <= pi.size(); ++i) {
    if (i == arc.a || i == arc.d) continue;
    word.push_back(shift(pi(i)));
  }
  return FpfInvolution(std::move(word), FpfInvolution::Unchecked{});
}

}  // namespace symporb
