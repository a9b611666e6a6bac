#include "liftline/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liftline {

namespace {

std::string join_symbols(const std::vector<int>& symbols) {
  bool compact = std::all_of(symbols.begin(), symbols.end(),
                             [](int s) { return s >= 0 && s <= 9; });
  std::string out;
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (i && !compact) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out;
}

void check_contiguous(const std::vector<int>& alphabet, const char* who) {
  for (size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] != static_cast<int>(i))
      throw std::invalid_argument(std::string(who) + ": alphabet must be 0..m-1");
}

// Enumerates words lexicographically, with an optional consecutive-distinct
// constraint, and builds the shift digraph.
Digraph word_shift_digraph(const std::vector<int>& alphabet, int k,
                           bool consecutive_distinct, const std::string& name) {
  std::vector<std::vector<int>> words;
  std::vector<int> current;
  auto emit = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      words.push_back(current);
      return;
    }
    for (int s : alphabet) {
      if (consecutive_distinct && !current.empty() && current.back() == s) continue;
      current.push_back(s);
      self(self);
      current.pop_back();
    }
  };
  emit(emit);

  std::map<std::vector<int>, int> index_of;
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    index_of[words[i]] = static_cast<int>(i);
    labels.push_back(join_symbols(words[i]));
  }

  std::vector<Arc> arcs;
  for (size_t i = 0; i < words.size(); ++i) {
    std::vector<int> shifted(words[i].begin() + 1, words[i].end());
    shifted.push_back(0);
    for (int s : alphabet) {
      if (consecutive_distinct && words[i][k - 1] == s) continue;
      shifted[k - 1] = s;
      arcs.push_back({static_cast<int>(i), index_of.at(shifted)});
    }
  }
  return Digraph(static_cast<int>(words.size()), std::move(arcs), std::move(labels), name);
}

}  // namespace

Word::Word(std::vector<int> alphabet_in, std::vector<int> symbols_in)
    : alphabet(std::move(alphabet_in)), symbols(std::move(symbols_in)) {
  for (size_t i = 0; i < alphabet.size(); ++i)
    for (size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        throw std::invalid_argument("Word: alphabet symbols must be distinct");
  for (int s : symbols)
    if (std::find(alphabet.begin(), alphabet.end(), s) == alphabet.end())
      throw std::invalid_argument("Word: symbol not in alphabet");
}

std::string Word::str() const { return join_symbols(symbols); }

std::vector<int> contiguous_alphabet(int d) {
  if (d < 1) throw std::invalid_argument("alphabet must have at least one symbol");
  std::vector<int> a(d);
  for (int i = 0; i < d; ++i) a[i] = i;
  return a;
}

Digraph de_bruijn(const std::vector<int>& alphabet, int k) {
  if (alphabet.empty()) throw std::invalid_argument("de_bruijn: empty alphabet");
  if (k < 1) throw std::invalid_argument("de_bruijn: word length must be positive");
  std::string name = "B(" + std::to_string(alphabet.size()) + "," + std::to_string(k) + ")";
  bool contiguous = true;
  for (size_t i = 0; i < alphabet.size(); ++i) contiguous &= alphabet[i] == static_cast<int>(i);
  if (!contiguous) {
    std::string syms;
    for (size_t i = 0; i < alphabet.size(); ++i) {
      if (i) syms += ',';
      syms += std::to_string(alphabet[i]);
    }
    name = "B({" + syms + "}," + std::to_string(k) + ")";
  }
  return word_shift_digraph(alphabet, k, false, name);
}

Digraph kautz(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("kautz: d and k must be positive");
  return word_shift_digraph(contiguous_alphabet(d + 1), k, true,
                            "K(" + std::to_string(d) + "," + std::to_string(k) + ")");
}

Digraph alt_de_bruijn(int d, int k) {
  if (d < 1) throw std::invalid_argument("alt_de_bruijn: d must be positive");
  if (k < 2) throw std::invalid_argument("alt_de_bruijn: difference coordinates need k >= 2");

  // Vertices b1;b2..bk, all symbols in Z_d, lexicographic.
  std::vector<std::vector<int>> words;
  std::vector<int> current(k, 0);
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= d;
  words.reserve(count);
  for (long long idx = 0; idx < count; ++idx) {
    long long rem = idx;
    for (int i = k - 1; i >= 0; --i) {
      current[i] = static_cast<int>(rem % d);
      rem /= d;
    }
    words.push_back(current);
  }
  auto index_of = [&](const std::vector<int>& w) {
    long long idx = 0;
    for (int s : w) idx = idx * d + s;
    return static_cast<int>(idx);
  };

  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const std::vector<int>& w : words)
    labels.push_back(std::to_string(w[0]) + ";" +
                     join_symbols({w.begin() + 1, w.end()}));

  std::vector<Arc> arcs;
  std::vector<int> next(k);
  for (size_t i = 0; i < words.size(); ++i) {
    const std::vector<int>& w = words[i];
    next[0] = (w[0] + w[1]) % d;
    for (int j = 1; j + 1 < k; ++j) next[j] = w[j + 1];
    for (int c = 0; c < d; ++c) {
      next[k - 1] = c;
      arcs.push_back({static_cast<int>(i), index_of(next)});
    }
  }
  return Digraph(static_cast<int>(words.size()), std::move(arcs), std::move(labels),
                 "altB(" + std::to_string(d) + "," + std::to_string(k) + ")");
}

Digraph alt_kautz(int d, int k) {
  if (d < 1) throw std::invalid_argument("alt_kautz: d must be positive");
  if (k < 2) throw std::invalid_argument("alt_kautz: difference coordinates need k >= 2");
  const int m = d + 1;

  // Vertices a;b2..bk with a in Z_{d+1} and b_i in {1..d}, lexicographic.
  std::vector<std::vector<int>> words;
  std::vector<int> current;
  auto emit = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == k) {
      words.push_back(current);
      return;
    }
    int lo = current.empty() ? 0 : 1;
    for (int s = lo; s < m; ++s) {
      current.push_back(s);
      self(self);
      current.pop_back();
    }
  };
  emit(emit);

  std::map<std::vector<int>, int> index_of;
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    index_of[words[i]] = static_cast<int>(i);
    labels.push_back(std::to_string(words[i][0]) + ";" +
                     join_symbols({words[i].begin() + 1, words[i].end()}));
  }

  std::vector<Arc> arcs;
  std::vector<int> next(k);
  for (size_t i = 0; i < words.size(); ++i) {
    const std::vector<int>& w = words[i];
    next[0] = (w[0] + w[1]) % m;
    for (int j = 1; j + 1 < k; ++j) next[j] = w[j + 1];
    for (int c = 1; c < m; ++c) {
      next[k - 1] = c;
      arcs.push_back({static_cast<int>(i), index_of.at(next)});
    }
  }
  return Digraph(static_cast<int>(words.size()), std::move(arcs), std::move(labels),
                 "altK(" + std::to_string(d) + "," + std::to_string(k) + ")");
}

DiffCoords to_diff_coords(const Word& w) {
  check_contiguous(w.alphabet, "to_diff_coords");
  if (w.length() < 1) throw std::invalid_argument("to_diff_coords: empty word");
  const int m = static_cast<int>(w.alphabet.size());
  std::vector<int> diffs;
  diffs.reserve(w.length() - 1);
  for (int i = 1; i < w.length(); ++i)
    diffs.push_back(((w.symbols[i] - w.symbols[i - 1]) % m + m) % m);
  return DiffCoords{w.symbols[0], Word(w.alphabet, std::move(diffs))};
}

Word from_diff_coords(int prefix, const Word& diffs) {
  check_contiguous(diffs.alphabet, "from_diff_coords");
  const int m = static_cast<int>(diffs.alphabet.size());
  if (prefix < 0 || prefix >= m)
    throw std::invalid_argument("from_diff_coords: prefix out of range");
  std::vector<int> symbols;
  symbols.reserve(diffs.length() + 1);
  int acc = prefix;
  symbols.push_back(acc);
  for (int b : diffs.symbols) {
    acc = (acc + b) % m;
    symbols.push_back(acc);
  }
  return Word(diffs.alphabet, std::move(symbols));
}

Word kautz_to_de_bruijn(const Word& w) {
  check_contiguous(w.alphabet, "kautz_to_de_bruijn");
  const int m = static_cast<int>(w.alphabet.size());
  if (m < 2) throw std::invalid_argument("kautz_to_de_bruijn: alphabet too small");
  if (w.length() < 2)
    throw std::invalid_argument("kautz_to_de_bruijn: word must have length >= 2");
  std::vector<int> diffs;
  diffs.reserve(w.length() - 1);
  for (int i = 1; i < w.length(); ++i) {
    if (w.symbols[i] == w.symbols[i - 1])
      throw std::invalid_argument("kautz_to_de_bruijn: consecutive symbols must differ");
    diffs.push_back(((w.symbols[i] - w.symbols[i - 1]) % m + m) % m);
  }
  std::vector<int> nonzero(m - 1);
  for (int i = 1; i < m; ++i) nonzero[i - 1] = i;
  return Word(std::move(nonzero), std::move(diffs));
}

std::pair<Digraph, VoltageAssignment> de_bruijn_lift_voltage(int d, int k) {
  if (d < 2 || k < 1) throw std::invalid_argument("de_bruijn_lift_voltage: need d >= 2, k >= 1");
  Digraph base = de_bruijn(contiguous_alphabet(d), k);
  // Arc e is the (k+1)-word (tail word, new symbol); its voltage is the first
  // symbol of the tail word, as an element of Z_d.
  VoltageAssignment va{cyclic_group(d), {}};
  va.volts.reserve(base.size());
  for (int e = 0; e < base.size(); ++e) {
    int tail_index = base.tail(e);
    int first_symbol = tail_index;
    for (int i = 1; i < k; ++i) first_symbol /= d;
    va.volts.push_back(first_symbol);
  }
  return {std::move(base), std::move(va)};
}

std::pair<Digraph, VoltageAssignment> kautz_lift_voltage(int d, int k) {
  if (d < 2 || k < 1) throw std::invalid_argument("kautz_lift_voltage: need d >= 2, k >= 1");
  std::vector<int> nonzero(d);
  for (int i = 0; i < d; ++i) nonzero[i] = i + 1;
  Digraph base = de_bruijn(nonzero, k);
  VoltageAssignment va{cyclic_group(d + 1), {}};
  va.volts.reserve(base.size());
  for (int e = 0; e < base.size(); ++e) {
    int tail_index = base.tail(e);
    int first_digit = tail_index;
    for (int i = 1; i < k; ++i) first_digit /= d;
    va.volts.push_back(nonzero[first_digit]);  // symbol value, in Z_{d+1}
  }
  return {std::move(base), std::move(va)};
}

}  // namespace liftline
