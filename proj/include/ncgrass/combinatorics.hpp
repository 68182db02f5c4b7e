#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ncgrass/errors.hpp"

namespace ncgrass {

/**
 * Ordered tuple of 1-based indices. Order is significant and repeats are
 * allowed; most call sites use tuples that happen to be sorted sets, but
 * the signed sums concatenate pieces out of order on purpose.
 */
using IndexTuple = std::vector<int>;

/** Inversion count: pairs (a before b) with t[a] > t[b]. Equal entries do not count. */
inline long tuple_length(const IndexTuple& t) {
  long inv = 0;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b)
      if (t[a] > t[b]) ++inv;
  return inv;
}

inline std::string tuple_str(const IndexTuple& t) {
  std::string s = "(";
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (a) s += ",";
    s += std::to_string(t[a]);
  }
  return s + ")";
}

inline IndexTuple sorted(IndexTuple t) {
  std::sort(t.begin(), t.end());
  return t;
}

inline bool contains(const IndexTuple& t, int x) {
  return std::find(t.begin(), t.end(), x) != t.end();
}

inline IndexTuple concat(IndexTuple a, const IndexTuple& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/** Set difference a \ b, ascending. Inputs are treated as sets. */
inline IndexTuple tuple_diff(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple r;
  for (int x : sorted(a))
    if (!contains(b, x)) r.push_back(x);
  return r;
}

/** Set union, ascending. */
inline IndexTuple tuple_union(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple r = sorted(a);
  for (int x : sorted(b))
    if (!contains(r, x)) r.push_back(x);
  std::sort(r.begin(), r.end());
  return r;
}

/** 1-based position of x in t; IndexOutOfRange when absent. */
inline int pos_in(const IndexTuple& t, int x) {
  for (std::size_t a = 0; a < t.size(); ++a)
    if (t[a] == x) return static_cast<int>(a) + 1;
  throw IndexOutOfRange("value " + std::to_string(x) + " not in " + tuple_str(t));
}

/**
 * The concatenation I\Lambda | Lambda (each half ascending) together with
 * its inversion count. This is the tuple whose length drives the sign in
 * every alternating sum over subsets.
 */
inline std::pair<IndexTuple, long> split_tuple(const IndexTuple& I,
                                               const IndexTuple& Lambda) {
  for (int x : Lambda)
    if (!contains(I, x))
      throw NotASubset(tuple_str(Lambda) + " not within " + tuple_str(I));
  IndexTuple t = concat(tuple_diff(I, Lambda), sorted(Lambda));
  return {t, tuple_length(t)};
}

/** All r-element subsets of S in lexicographic order, each ascending. */
inline std::vector<IndexTuple> subsets(const IndexTuple& S, std::size_t r) {
  if (r > S.size())
    throw BadSize("cannot choose " + std::to_string(r) + " from " +
                  std::to_string(S.size()));
  IndexTuple base = sorted(S);
  std::vector<IndexTuple> out;
  IndexTuple cur;
  // Depth-first over start positions yields lex order directly.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t a = start; a < base.size(); ++a) {
      cur.push_back(base[a]);
      self(self, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/** A permutation of {1..m} as its image sequence, with inversion count. */
struct Permutation {
  IndexTuple image;
  long length = 0;
};

/** All m! permutations in lexicographic order. m = 0 gives the empty permutation. */
inline std::vector<Permutation> permutations(std::size_t m) {
  IndexTuple img(m);
  for (std::size_t a = 0; a < m; ++a) img[a] = static_cast<int>(a) + 1;
  std::vector<Permutation> out;
  do {
    out.push_back({img, tuple_length(img)});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace ncgrass
