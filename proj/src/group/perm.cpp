#include "dident/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dident {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::size_t degree, std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (images_.size() != degree)
    throw std::invalid_argument("Perm: image array does not match degree");
  std::vector<bool> seen(degree, false);
  for (auto im : images_) {
    if (im >= degree || seen[im])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[im] = true;
  }
}

namespace {

std::vector<std::vector<std::uint32_t>> parse_cycles(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("Perm::parse: expected '(' in \"" + std::string(text) + "\"");
    auto close = text.find(')', i);
    if (close == std::string_view::npos)
      throw std::invalid_argument("Perm::parse: unbalanced parenthesis in \"" + std::string(text) + "\"");
    std::string_view body = text.substr(i + 1, close - i - 1);
    bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    std::vector<std::uint32_t> cycle;
    if (separated) {
      std::size_t j = 0;
      while (j < body.size()) {
        while (j < body.size() && (body[j] == ' ' || body[j] == ',' || body[j] == '\t'))
          ++j;
        if (j == body.size())
          break;
        std::size_t start = j;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
          ++j;
        if (start == j)
          throw std::invalid_argument("Perm::parse: bad point in \"" + std::string(text) + "\"");
        cycle.push_back(static_cast<std::uint32_t>(std::stoul(std::string(body.substr(start, j - start)))));
      }
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("Perm::parse: bad point in \"" + std::string(text) + "\"");
        cycle.push_back(static_cast<std::uint32_t>(c - '0'));
      }
    }
    for (auto pt : cycle)
      if (pt == 0)
        throw std::invalid_argument("Perm::parse: points are 1-based");
    cycles.push_back(std::move(cycle));
    i = close + 1;
    skip_ws();
  }
  return cycles;
}

} // namespace

Perm Perm::parse(std::string_view text, std::size_t degree) {
  auto cycles = parse_cycles(text);
  std::uint32_t max_point = 0;
  for (const auto& c : cycles)
    for (auto pt : c)
      max_point = std::max(max_point, pt);
  if (degree == 0)
    degree = std::max<std::size_t>(max_point, 1);
  if (max_point > degree)
    throw std::invalid_argument("Perm::parse: point exceeds degree");

  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto from = c[k] - 1;
      if (used[from])
        throw std::invalid_argument("Perm::parse: cycles are not disjoint");
      used[from] = true;
      images[from] = c[(k + 1) % c.size()] - 1;
    }
  }
  return Perm(degree, std::move(images));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Perm::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<std::uint32_t> cycle;
    for (auto j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        s += ' ';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree < images_.size())
    throw std::invalid_argument("Perm::extended: cannot shrink degree");
  Perm r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("perm_compose: degree mismatch");
  Perm r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Perm perm_compose(const Perm& a, const Perm& b) { return a * b; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto im : p.images()) {
    h ^= im;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace dident
