#include "bsdist/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bsdist {

Word::Word(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  if (n_ < 1) throw std::invalid_argument("Word: rank must be positive");
  for (int x : letters_)
    if (x < 1 || x > n_ - 1)
      throw std::invalid_argument("Word: letter " + std::to_string(x) + " outside [1, n-1]");
}

Word Word::parse(const std::string& text, int n) {
  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("Word::parse: bad letter '" + tok + "'");
      letters.push_back(x);
    }
  } else {
    if (n > 10)
      throw std::invalid_argument("Word::parse: digit form is ambiguous for n > 10; use commas");
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument("Word::parse: digit string must use digits 1-9");
      letters.push_back(ch - '0');
    }
  }
  return Word(n, std::move(letters));
}

Word Word::concat(const Word& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Word::concat: mismatched n");
  std::vector<int> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(n_, std::move(letters));
}

Word Word::erased(int j) const {
  if (j < 1 || j > size()) throw std::invalid_argument("Word::erased: index out of range");
  std::vector<int> letters = letters_;
  letters.erase(letters.begin() + (j - 1));
  return Word(n_, std::move(letters));
}

Word Word::prefix(int j) const {
  if (j < 0 || j > size()) throw std::invalid_argument("Word::prefix: index out of range");
  return Word(n_, std::vector<int>(letters_.begin(), letters_.begin() + j));
}

Word Word::suffix_from(int j) const {
  if (j < 1 || j > size() + 1) throw std::invalid_argument("Word::suffix_from: index out of range");
  return Word(n_, std::vector<int>(letters_.begin() + (j - 1), letters_.end()));
}

Word Word::with_window(int j, int a, int b, int c) const {
  if (j < 1 || j + 2 > size()) throw std::invalid_argument("Word::with_window: index out of range");
  std::vector<int> letters = letters_;
  letters[static_cast<size_t>(j - 1)] = a;
  letters[static_cast<size_t>(j)] = b;
  letters[static_cast<size_t>(j + 1)] = c;
  return Word(n_, std::move(letters));
}

std::string Word::str() const {
  std::string out;
  if (n_ <= 10) {
    for (int x : letters_) out += static_cast<char>('0' + x);
  } else {
    for (size_t k = 0; k < letters_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(letters_[k]);
    }
  }
  return out;
}

Perm product(const Word& r) {
  Perm w = Perm::identity(r.n());
  for (int x : r.letters()) w = w.right_mul(x);
  return w;
}

int coxeter_length(const Word& r) { return product(r).length(); }

bool is_reduced(const Word& r) {
  Perm w = Perm::identity(r.n());
  for (int x : r.letters()) {
    if (!w.right_ascent(x)) return false;
    w = w.right_mul(x);
  }
  return true;
}

ClassKey class_key(const Word& r) {
  if (r.n() <= 2) return {r.letters()};
  ClassKey key(static_cast<size_t>(r.n() - 2));
  for (int x : r.letters()) {
    if (x >= 2) key[static_cast<size_t>(x - 2)].push_back(x);
    if (x <= r.n() - 2) key[static_cast<size_t>(x - 1)].push_back(x);
  }
  return key;
}

std::string class_key_str(const Word& r) {
  std::string out;
  for (const auto& part : class_key(r)) {
    for (int x : part) out += std::to_string(x);
    out += '|';
  }
  return out;
}

MoveNeighbors neighbors(const Word& r) {
  MoveNeighbors out;
  const auto& l = r.letters();
  for (int j = 1; j < r.size(); ++j) {
    int a = l[static_cast<size_t>(j - 1)], b = l[static_cast<size_t>(j)];
    if (std::abs(a - b) > 1) {
      std::vector<int> swapped = l;
      std::swap(swapped[static_cast<size_t>(j - 1)], swapped[static_cast<size_t>(j)]);
      out.commutation.emplace_back(r.n(), std::move(swapped));
    }
  }
  for (int j = 1; j + 2 <= r.size(); ++j) {
    int a = l[static_cast<size_t>(j - 1)], b = l[static_cast<size_t>(j)],
        c = l[static_cast<size_t>(j + 1)];
    if (a == c && b == a + 1) out.braid.push_back(r.with_window(j, b, a, b));
    if (a == c && b == a - 1) out.braid.push_back(r.with_window(j, b, a, b));
  }
  return out;
}

namespace {

void gen_reduced(const Perm& w, std::vector<int>& tail, std::vector<Word>& out, int n) {
  if (w.is_identity()) {
    std::vector<int> letters(tail.rbegin(), tail.rend());
    out.emplace_back(n, std::move(letters));
    return;
  }
  for (int i = 1; i <= n - 1; ++i) {
    if (!w.right_ascent(i)) {  // right descent: peel the last letter
      tail.push_back(i);
      gen_reduced(w.right_mul(i), tail, out, n);
      tail.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> reduced_words(const Perm& w) {
  std::vector<Word> out;
  std::vector<int> tail;
  gen_reduced(w, tail, out, w.n());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> pair_order(int n) {
  std::vector<std::pair<int, int>> out;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a) out.emplace_back(a, b);
  return out;
}

std::vector<std::array<int, 3>> triple_order(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) out.push_back({a, b, c});
  return out;
}

TripleStat triple_stats(const Word& r) {
  int n = r.n();
  int big_n = n * (n - 1) / 2;
  if (r.size() != big_n)
    throw std::invalid_argument("triple_stats: word is not a reduced word of w0");
  TripleStat st;
  st.n = n;
  Perm x = Perm::identity(n);
  for (int t = 1; t <= r.size(); ++t) {
    int i = r.letter(t);
    if (!x.right_ascent(i))
      throw std::invalid_argument("triple_stats: word is not a reduced word of w0");
    int u = x(i), v = x(i + 1);  // the swapped values; u < v on an ascent
    st.tau[{std::min(u, v), std::max(u, v)}] = t;
    x = x.right_mul(i);
  }
  for (const auto& tr : triple_order(n)) {
    int tab = st.tau.at({tr[0], tr[1]});
    int tbc = st.tau.at({tr[1], tr[2]});
    st.tvals[tr] = tab < tbc ? 1 : -1;
  }
  return st;
}

int digit_sum(const Word& r) {
  int s = 0;
  for (int x : r.letters()) s += x;
  return s;
}

Word complement(const Word& r) {
  std::vector<int> letters;
  letters.reserve(r.letters().size());
  for (int x : r.letters()) letters.push_back(r.n() - x);
  return Word(r.n(), std::move(letters));
}

Word reversed(const Word& r) {
  std::vector<int> letters(r.letters().rbegin(), r.letters().rend());
  return Word(r.n(), std::move(letters));
}

Word std_word(const Perm& w) {
  std::vector<int> letters;
  Perm u = w;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 1; i <= u.n() - 1; ++i) {
      if (u.right_ascent(i)) {
        u = u.right_mul(i);
        letters.push_back(i);
        swapped = true;
      }
    }
  }
  return Word(w.n(), std::move(letters));
}

Word ext(const Word& r) {
  if (!is_reduced(r)) throw std::invalid_argument("ext: word is not reduced");
  return r.concat(std_word(product(r)));
}

std::set<int> k_set(const Word& r) {
  std::set<int> out;
  const auto& l = r.letters();
  for (int t = 1; t <= r.n() - 1; ++t) {
    auto first_of = [&](int x) {
      auto it = std::find(l.begin(), l.end(), x);
      return it == l.end() ? l.size() : static_cast<size_t>(it - l.begin());
    };
    size_t ft = first_of(t);
    if (ft == l.size()) continue;
    if (ft < first_of(t - 1) && ft < first_of(t + 1)) out.insert(t);
  }
  return out;
}

ClassGraph class_graph(const Perm& w) {
  ClassGraph g;
  g.n = w.n();
  g.w = w;
  std::vector<Word> words = reduced_words(w);  // lexicographic
  std::map<std::string, int> class_of_key;
  std::vector<int> word_class(words.size());
  std::unordered_map<std::string, int> index_of_word;
  for (size_t k = 0; k < words.size(); ++k) index_of_word[words[k].str()] = static_cast<int>(k);

  bool is_w0 = (w == Perm::longest(w.n()));
  for (size_t k = 0; k < words.size(); ++k) {
    std::string key = class_key_str(words[k]);
    auto it = class_of_key.find(key);
    if (it == class_of_key.end()) {
      int idx = static_cast<int>(g.vertices.size());
      class_of_key.emplace(key, idx);
      // first hit in lex order = least member of the class
      ClassGraph::Vertex vtx{words[k], 1, digit_sum(words[k]), {}};
      if (is_w0) {
        TripleStat st = triple_stats(words[k]);
        for (const auto& tr : triple_order(w.n())) vtx.t_vector.push_back(st.tvals.at(tr));
      }
      g.vertices.push_back(std::move(vtx));
      word_class[k] = idx;
    } else {
      word_class[k] = it->second;
      ++g.vertices[static_cast<size_t>(it->second)].size;
    }
  }

  std::set<std::pair<int, int>> edge_set;
  for (size_t k = 0; k < words.size(); ++k) {
    MoveNeighbors mv = neighbors(words[k]);
    for (const Word& b : mv.braid) {
      int other = index_of_word.at(b.str());
      int ci = word_class[k], cj = word_class[static_cast<size_t>(other)];
      if (ci != cj) edge_set.emplace(std::min(ci, cj), std::max(ci, cj));
    }
  }

  // Reindex vertices by canonical word for a stable public order.
  std::vector<int> order(g.vertices.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.vertices[static_cast<size_t>(a)].canonical < g.vertices[static_cast<size_t>(b)].canonical;
  });
  std::vector<int> new_index(order.size());
  for (size_t k = 0; k < order.size(); ++k) new_index[static_cast<size_t>(order[k])] = static_cast<int>(k);
  std::vector<ClassGraph::Vertex> sorted;
  sorted.reserve(order.size());
  for (int idx : order) sorted.push_back(std::move(g.vertices[static_cast<size_t>(idx)]));
  g.vertices = std::move(sorted);
  for (const auto& e : edge_set) {
    int a = new_index[static_cast<size_t>(e.first)], b = new_index[static_cast<size_t>(e.second)];
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace bsdist
