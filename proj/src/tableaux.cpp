#include "fusionq/tableaux.hpp"

#include "fusionq/kostka.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fusionq {

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::vector<int> Tableau::content() const {
  std::vector<int> c;
  for (const auto& r : rows)
    for (int x : r) {
      if (x < 1) return {};
      if (static_cast<std::size_t>(x) > c.size()) c.resize(static_cast<std::size_t>(x), 0);
      ++c[static_cast<std::size_t>(x - 1)];
    }
  return c;
}

bool Tableau::is_semistandard() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << " / ";
    for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? " " : "") << rows[i][j];
  }
  return os.str();
}

std::vector<Tableau> enumerate_tableaux(std::span<const int> shape, std::span<const int> content) {
  const int n_shape = std::accumulate(shape.begin(), shape.end(), 0);
  const int n_content = std::accumulate(content.begin(), content.end(), 0);
  std::vector<Tableau> out;
  if (n_shape != n_content) return out;
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (shape[i] < 0 || (i > 0 && shape[i] > shape[i - 1])) return out;
  for (int c : content)
    if (c < 0) return out;

  // Letter j fills a horizontal strip of size content[j]; rows are chosen
  // top to bottom with the largest admissible count first.
  Tableau t;
  t.rows.resize(shape.size());
  auto place_letter = [&](auto&& self, std::size_t letter) -> void {
    if (letter == content.size()) {
      Tableau done = t;
      while (!done.rows.empty() && done.rows.back().empty()) done.rows.pop_back();
      out.push_back(std::move(done));
      return;
    }
    std::vector<int> before;
    for (const auto& r : t.rows) before.push_back(static_cast<int>(r.size()));
    auto fill_row = [&](auto&& fill, std::size_t row, int remaining) -> void {
      if (row == shape.size()) {
        if (remaining == 0) self(self, letter + 1);
        return;
      }
      const int len = static_cast<int>(t.rows[row].size());
      int room = shape[row] - len;
      // Horizontal strip: no two copies of the letter in one column.
      if (row > 0) {
        room = std::min(room, before[row - 1] - len);
      }
      room = std::max(room, 0);
      for (int c = std::min(room, remaining); c >= 0; --c) {
        t.rows[row].insert(t.rows[row].end(), static_cast<std::size_t>(c), static_cast<int>(letter) + 1);
        fill(fill, row + 1, remaining - c);
        t.rows[row].resize(static_cast<std::size_t>(len));
      }
    };
    fill_row(fill_row, 0, content[letter]);
  };
  place_letter(place_letter, 0);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge_of_word(std::span<const int> word) {
  std::vector<int> content;
  for (int x : word) {
    if (x < 1) throw std::invalid_argument("charge: letters must be positive");
    if (static_cast<std::size_t>(x) > content.size()) content.resize(static_cast<std::size_t>(x), 0);
    ++content[static_cast<std::size_t>(x - 1)];
  }
  for (std::size_t i = 1; i < content.size(); ++i)
    if (content[i] > content[i - 1]) throw std::invalid_argument("charge: content is not a partition");

  std::vector<int> w(word.begin(), word.end());
  int total = 0;
  while (!w.empty()) {
    const int n = *std::max_element(w.begin(), w.end());
    std::vector<bool> used(w.size(), false);
    // Locate 1 scanning from the right, then each next letter continuing
    // leftwards with wrap-around; a wrap means r+1 sits right of r.
    auto find_left_of = [&](int letter, std::ptrdiff_t start, bool& wrapped) {
      const auto len = static_cast<std::ptrdiff_t>(w.size());
      wrapped = false;
      for (std::ptrdiff_t step = 0; step < len; ++step) {
        std::ptrdiff_t pos = start - step;
        if (pos < 0) {
          pos += len;
          wrapped = true;
        }
        if (!used[static_cast<std::size_t>(pos)] && w[static_cast<std::size_t>(pos)] == letter) return pos;
      }
      throw std::logic_error("charge: letter missing from word");
    };
    bool wrapped = false;
    std::ptrdiff_t pos = find_left_of(1, static_cast<std::ptrdiff_t>(w.size()) - 1, wrapped);
    used[static_cast<std::size_t>(pos)] = true;
    int index = 0;
    for (int r = 2; r <= n; ++r) {
      pos = find_left_of(r, pos - 1, wrapped);
      used[static_cast<std::size_t>(pos)] = true;
      if (wrapped) ++index;
      total += index;
    }
    std::vector<int> rest;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!used[i]) rest.push_back(w[i]);
    w = std::move(rest);
  }
  return total;
}

int charge(const Tableau& t) {
  if (!t.is_semistandard()) throw std::invalid_argument("charge: tableau is not semistandard: " + t.to_string());
  return charge_of_word(reading_word(t));
}

std::vector<int> rectangle_content(std::span<const int> m) {
  std::vector<int> mu;
  for (std::size_t i = m.size(); i-- > 0;) mu.insert(mu.end(), static_cast<std::size_t>(m[i]), static_cast<int>(i) + 1);
  return mu;
}

std::vector<int> two_row_shape(int weight, std::span<const int> m) {
  const auto size = multiplicity_size(m);
  if (weight < 0 || weight > size || (size - weight) % 2 != 0) return {};
  std::vector<int> shape{static_cast<int>((size + weight) / 2), static_cast<int>((size - weight) / 2)};
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  return shape;
}

QPoly kostka_via_charge(int weight, std::span<const int> m) {
  const auto size = multiplicity_size(m);
  if (weight < 0 || weight > size || (size - weight) % 2 != 0) return {};
  const auto shape = two_row_shape(weight, m);
  const auto content = rectangle_content(m);
  QPoly kf;
  for (const auto& t : enumerate_tableaux(shape, content)) kf += QPoly::monomial(1, charge(t));
  return kf.reversed(static_cast<int>(multiplicity_norm(m)));
}

}  // namespace fusionq
