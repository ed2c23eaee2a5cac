#include "braidpke/canonical.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "braidpke/errors.hpp"

namespace braidpke {

namespace {

// Swapping the values i and i+1 in the one-line table appends sigma_i when
// i is not a finishing letter and removes a trailing sigma_i when it is.
void swap_values(std::vector<std::uint8_t>& p, std::vector<std::uint8_t>& q,
                 int i) {
  std::uint8_t a = q[i - 1], b = q[i];
  p[a] = static_cast<std::uint8_t>(i + 1);
  p[b] = static_cast<std::uint8_t>(i);
  q[i - 1] = b;
  q[i] = a;
}

std::vector<std::uint8_t> inverse_table(const std::vector<std::uint8_t>& p) {
  std::vector<std::uint8_t> q(p.size());
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    q[p[pos] - 1] = static_cast<std::uint8_t>(pos);
  }
  return q;
}

int inversions(const std::vector<std::uint8_t>& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

// Flat factor storage: block j of P/Q holds the one-line table and its
// inverse for factor j; len[j] tracks the crossing count so identity and
// Delta tests are O(1).
class Engine {
 public:
  explicit Engine(int n)
      : n_(n), delta_len_(n * (n - 1) / 2) {}

  void push_identity() {
    std::size_t base = P_.size();
    P_.resize(base + n_);
    Q_.resize(base + n_);
    for (int v = 0; v < n_; ++v) {
      P_[base + v] = static_cast<std::uint8_t>(v + 1);
      Q_[base + v] = static_cast<std::uint8_t>(v);
    }
    len_.push_back(0);
  }

  std::size_t size() const { return len_.size(); }

  bool can_append(std::size_t j, int i) const {
    const std::uint8_t* q = Q_.data() + j * n_;
    return q[i - 1] < q[i];
  }

  void append(std::size_t j, int i) {
    swap(j, i);
    ++len_[j];
  }

  // Feeds one positive letter into the greedy right-end factorization.
  void feed(int i) {
    if (len_.empty() || !can_append(size() - 1, i)) push_identity();
    append(size() - 1, i);
  }

  // Makes the pair (j, j+1) left-weighted by moving crossings left.
  // Returns true if anything moved.
  bool rebalance(std::size_t j) {
    std::uint8_t* bp = P_.data() + (j + 1) * n_;
    const std::uint8_t* aq = Q_.data() + j * n_;
    bool moved = false;
    int i = 1;
    while (i <= n_ - 1) {
      // i starts B (descent of B) but does not finish A (no descent of
      // A's inverse): move the crossing into A.
      if (bp[i - 1] > bp[i] && aq[i - 1] < aq[i]) {
        append(j, i);
        remove_leading(j + 1, i);
        moved = true;
        i = 1;
      } else {
        ++i;
      }
    }
    return moved;
  }

  void run_to_fixpoint() {
    const std::size_t s = size();
    if (s < 2) return;
    std::deque<std::size_t> work;
    std::vector<char> queued(s - 1, 1);
    for (std::size_t j = 0; j + 1 < s; ++j) work.push_back(j);
    while (!work.empty()) {
      std::size_t j = work.front();
      work.pop_front();
      queued[j] = 0;
      if (rebalance(j)) {
        if (j > 0 && !queued[j - 1]) {
          queued[j - 1] = 1;
          work.push_back(j - 1);
        }
        if (j + 2 < s && !queued[j + 1]) {
          queued[j + 1] = 1;
          work.push_back(j + 1);
        }
      }
    }
  }

  // Absorbs leading Delta factors into k and drops identity factors
  // (which sit at the tail once the pairs are left-weighted).
  CanonicalForm finish(std::int64_t k) const {
    CanonicalForm cf;
    cf.n = n_;
    cf.k = k;
    std::size_t j = 0;
    while (j < size() && len_[j] == delta_len_) {
      ++cf.k;
      ++j;
    }
    for (; j < size(); ++j) {
      if (len_[j] == 0) continue;
      PermutationBraid f;
      f.n = n_;
      f.table.assign(P_.begin() + j * n_, P_.begin() + (j + 1) * n_);
      cf.factors.push_back(std::move(f));
    }
    return cf;
  }

 private:
  // Appends sigma_i on the right of factor j: values i, i+1 swap places.
  void swap(std::size_t j, int i) {
    std::uint8_t* p = P_.data() + j * n_;
    std::uint8_t* q = Q_.data() + j * n_;
    std::uint8_t a = q[i - 1], b = q[i];
    p[a] = static_cast<std::uint8_t>(i + 1);
    p[b] = static_cast<std::uint8_t>(i);
    q[i - 1] = b;
    q[i] = a;
  }

  // Strips a leading sigma_i from factor j: entries at positions i, i+1
  // swap. Caller guarantees i is in the starting set.
  void remove_leading(std::size_t j, int i) {
    std::uint8_t* p = P_.data() + j * n_;
    std::uint8_t* q = Q_.data() + j * n_;
    std::uint8_t u = p[i - 1], v = p[i];
    p[i - 1] = v;
    p[i] = u;
    q[u - 1] = static_cast<std::uint8_t>(i);
    q[v - 1] = static_cast<std::uint8_t>(i - 1);
    --len_[j];
  }

  int n_;
  int delta_len_;
  std::vector<std::uint8_t> P_, Q_;
  std::vector<int> len_;
};

// Positive word for Delta sigma_i^{-1}: the half twist with the values
// i, i+1 un-swapped.
std::vector<std::int16_t> delta_complement_word(int n, int i) {
  std::vector<std::uint8_t> p(n), q(n);
  for (int v = 0; v < n; ++v) p[v] = static_cast<std::uint8_t>(n - v);
  q = inverse_table(p);
  swap_values(p, q, i);
  PermutationBraid pb;
  pb.n = n;
  pb.table = std::move(p);
  return pb.word().letters;
}

}  // namespace

PermutationBraid PermutationBraid::identity(int n) {
  PermutationBraid pb;
  pb.n = n;
  pb.table.resize(n);
  std::iota(pb.table.begin(), pb.table.end(), std::uint8_t{1});
  return pb;
}

PermutationBraid PermutationBraid::delta(int n) {
  PermutationBraid pb;
  pb.n = n;
  pb.table.resize(n);
  for (int v = 0; v < n; ++v) pb.table[v] = static_cast<std::uint8_t>(n - v);
  return pb;
}

PermutationBraid PermutationBraid::of_positive_word(const BraidWord& w) {
  PermutationBraid pb = identity(w.n);
  std::vector<std::uint8_t> q = inverse_table(pb.table);
  for (std::int16_t e : w.letters) {
    if (e <= 0) {
      throw DomainError("permutation braids are positive words");
    }
    if (!(q[e - 1] < q[e])) {
      throw DomainError("strand pair crosses twice; not a permutation braid");
    }
    swap_values(pb.table, q, e);
  }
  return pb;
}

bool PermutationBraid::is_identity() const {
  for (int v = 0; v < n; ++v) {
    if (table[v] != v + 1) return false;
  }
  return true;
}

bool PermutationBraid::is_delta() const {
  for (int v = 0; v < n; ++v) {
    if (table[v] != n - v) return false;
  }
  return true;
}

int PermutationBraid::crossings() const { return inversions(table); }

std::vector<int> PermutationBraid::starting_set() const {
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i) {
    if (table[i - 1] > table[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> PermutationBraid::finishing_set() const {
  std::vector<std::uint8_t> q = inverse_table(table);
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i) {
    if (q[i - 1] > q[i]) out.push_back(i);
  }
  return out;
}

BraidWord PermutationBraid::word() const {
  std::vector<std::uint8_t> p = table;
  std::vector<std::uint8_t> q = inverse_table(p);
  std::vector<std::int16_t> rev;
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= n - 1; ++i) {
      if (q[i - 1] > q[i]) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    rev.push_back(static_cast<std::int16_t>(pick));
    swap_values(p, q, pick);
  }
  BraidWord out(n);
  out.letters.assign(rev.rbegin(), rev.rend());
  return out;
}

bool left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
  std::vector<std::uint8_t> aq = inverse_table(a.table);
  for (int i = 1; i <= a.n - 1; ++i) {
    if (b.table[i - 1] > b.table[i] && !(aq[i - 1] > aq[i])) return false;
  }
  return true;
}

BraidWord CanonicalForm::word() const {
  BraidWord out(n);
  const BraidWord delta = fundamental_braid(n);
  if (k >= 0) {
    for (std::int64_t t = 0; t < k; ++t) {
      out.letters.insert(out.letters.end(), delta.letters.begin(),
                         delta.letters.end());
    }
  } else {
    const BraidWord delta_inv = inverse(delta);
    for (std::int64_t t = 0; t < -k; ++t) {
      out.letters.insert(out.letters.end(), delta_inv.letters.begin(),
                         delta_inv.letters.end());
    }
  }
  for (const PermutationBraid& f : factors) {
    const BraidWord fw = f.word();
    out.letters.insert(out.letters.end(), fw.letters.begin(),
                       fw.letters.end());
  }
  return free_reduce(out);
}

CanonicalForm left_canonical_form(const BraidWord& w) {
  CanonicalForm trivial;
  trivial.n = w.n;
  if (w.n == 1 || w.letters.empty()) return trivial;

  const BraidWord reduced = free_reduce(w);
  if (reduced.letters.empty()) return trivial;
  const int n = w.n;

  std::int64_t total_neg = 0;
  for (std::int16_t e : reduced.letters) {
    if (e < 0) ++total_neg;
  }

  // Lazily built words for Delta sigma_i^{-1}.
  std::vector<std::vector<std::int16_t>> complement(n);

  Engine engine(n);
  // Each sigma_i^{-1} contributes Delta^{-1} (Delta sigma_i^{-1}); the
  // Delta^{-1} migrates to the front, flipping every letter to its tau
  // image once per negative letter that follows it.
  std::int64_t neg_seen = 0;
  for (std::int16_t e : reduced.letters) {
    const bool negative = e < 0;
    if (negative) ++neg_seen;
    const bool flip = ((total_neg - neg_seen) & 1) != 0;
    int i = negative ? -e : e;
    if (flip) i = n - i;
    if (!negative) {
      engine.feed(i);
    } else {
      if (complement[i].empty()) complement[i] = delta_complement_word(n, i);
      for (std::int16_t c : complement[i]) engine.feed(c);
    }
  }
  engine.run_to_fixpoint();
  return engine.finish(-total_neg);
}

bool equals(const BraidWord& a, const BraidWord& b) {
  require_same_group(a, b);
  return left_canonical_form(a) == left_canonical_form(b);
}

}  // namespace braidpke
