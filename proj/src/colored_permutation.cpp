#include "cperm/colored_permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cperm {

namespace {

void check_order(int r) {
  if (r < 1 || r > kMaxColors) {
    throw std::invalid_argument("number of colors must be in 1.." + std::to_string(kMaxColors));
  }
}

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed window token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ColoredPermutation::ColoredPermutation(int r, std::span<const int> sigma,
                                       std::span<const int> colors) {
  check_order(r);
  if (sigma.size() != colors.size()) {
    throw std::invalid_argument("sigma and colors differ in length");
  }
  if (sigma.size() > static_cast<std::size_t>(kMaxLetters)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxLetters) + " letters supported");
  }
  const int n = static_cast<int>(sigma.size());
  std::array<bool, kMaxLetters + 1> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = sigma[i];
    if (v < 1 || v > n) {
      throw std::invalid_argument("letter " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) throw std::invalid_argument("duplicate letter " + std::to_string(v));
    seen[v] = true;
    if (colors[i] < 0 || colors[i] >= r) {
      throw std::invalid_argument("color " + std::to_string(colors[i]) + " outside 0.." +
                                  std::to_string(r - 1));
    }
    letters_[i] = static_cast<std::uint8_t>(v);
    colors_[i] = static_cast<std::uint8_t>(colors[i]);
  }
  r_ = static_cast<std::uint8_t>(r);
  n_ = static_cast<std::uint8_t>(n);
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
  check_order(r);
  if (n < 0 || n > kMaxLetters) throw std::invalid_argument("bad size");
  std::array<std::uint8_t, kMaxLetters> letters{};
  std::array<std::uint8_t, kMaxLetters> colors{};
  for (int i = 0; i < n; ++i) letters[i] = static_cast<std::uint8_t>(i + 1);
  return ColoredPermutation(Unchecked{}, r, n, letters.data(), colors.data());
}

ColoredPermutation parse_window(std::string_view text, int r) {
  check_order(r);
  std::vector<int> sigma;
  std::vector<int> colors;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    const std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view body = token;
    int color = 0;
    if (body.front() == '-') {
      if (r != 2) {
        throw std::invalid_argument("'-d' tokens require r = 2: '" + std::string(token) + "'");
      }
      body.remove_prefix(1);
      if (body.find('[') != std::string_view::npos) {
        throw std::invalid_argument("'-' cannot be combined with a color: '" + std::string(token) + "'");
      }
      color = 1;
    }
    if (const auto open = body.find('['); open != std::string_view::npos) {
      if (body.back() != ']') {
        throw std::invalid_argument("unterminated color in '" + std::string(token) + "'");
      }
      color = parse_int(body.substr(open + 1, body.size() - open - 2), token);
      body = body.substr(0, open);
    }
    sigma.push_back(parse_int(body, token));
    colors.push_back(color);
  }
  return ColoredPermutation(r, sigma, colors);
}

std::string format_window(const ColoredPermutation& p, WindowStyle style) {
  if (style == WindowStyle::kSigned && p.r() != 2) {
    throw std::invalid_argument("signed window style requires r = 2");
  }
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    if (style == WindowStyle::kSigned) {
      out += std::to_string(p.signed_value(i));
    } else {
      out += std::to_string(p.letter(i));
      if (p.color(i) != 0) out += "[" + std::to_string(p.color(i)) + "]";
    }
  }
  return out;
}

ColoredPermutation compose(const ColoredPermutation& p, const ColoredPermutation& q) {
  if (p.r() != q.r() || p.size() != q.size()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  const int n = p.size();
  const int r = p.r();
  std::array<std::uint8_t, kMaxLetters> letters{};
  std::array<std::uint8_t, kMaxLetters> colors{};
  for (int i = 0; i < n; ++i) {
    const int j = q.letter(i) - 1;
    letters[i] = static_cast<std::uint8_t>(p.letter(j));
    colors[i] = static_cast<std::uint8_t>((p.color(j) + q.color(i)) % r);
  }
  return ColoredPermutation(ColoredPermutation::Unchecked{}, r, n, letters.data(), colors.data());
}

ColoredPermutation inverse(const ColoredPermutation& p) {
  const int n = p.size();
  const int r = p.r();
  std::array<std::uint8_t, kMaxLetters> letters{};
  std::array<std::uint8_t, kMaxLetters> colors{};
  for (int i = 0; i < n; ++i) {
    const int v = p.letter(i) - 1;
    letters[v] = static_cast<std::uint8_t>(i + 1);
    colors[v] = static_cast<std::uint8_t>((r - p.color(i)) % r);
  }
  return ColoredPermutation(ColoredPermutation::Unchecked{}, r, n, letters.data(), colors.data());
}

ColoredPermutation apply_generator(const ColoredPermutation& p, int i, GeneratorSet set) {
  const int n = p.size();
  if (i < 0 || i >= std::max(n, 1) || (n == 0)) {
    throw std::invalid_argument("generator index out of range");
  }
  std::array<std::uint8_t, kMaxLetters> letters{};
  std::array<std::uint8_t, kMaxLetters> colors{};
  for (int j = 0; j < n; ++j) {
    letters[j] = static_cast<std::uint8_t>(p.letter(j));
    colors[j] = static_cast<std::uint8_t>(p.color(j));
  }
  if (i > 0) {
    std::swap(letters[i - 1], letters[i]);
    std::swap(colors[i - 1], colors[i]);
  } else if (set == GeneratorSet::kColored) {
    colors[0] = static_cast<std::uint8_t>((colors[0] + 1) % p.r());
  } else {
    if (p.r() != 2) throw std::invalid_argument("s_0' requires r = 2");
    if (n < 2) throw std::invalid_argument("s_0' requires n >= 2");
    std::swap(letters[0], letters[1]);
    std::swap(colors[0], colors[1]);
    colors[0] ^= 1;
    colors[1] ^= 1;
  }
  return ColoredPermutation(ColoredPermutation::Unchecked{}, p.r(), n, letters.data(), colors.data());
}

ColoredPermutation absolute(const ColoredPermutation& p) {
  std::array<std::uint8_t, kMaxLetters> colors{};
  return ColoredPermutation(ColoredPermutation::Unchecked{}, p.r(), p.size(), p.letters().data(),
                            colors.data());
}

std::vector<int> sigma_of(const ColoredPermutation& p) {
  return {p.letters().begin(), p.letters().end()};
}

std::vector<int> colors_of(const ColoredPermutation& p) {
  return {p.colors().begin(), p.colors().end()};
}

}  // namespace cperm
