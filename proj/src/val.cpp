#include "pcalab/val.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pcalab {
namespace {

struct Node {
  bool is_pair;
  std::uint64_t small;  // valid when !is_pair
  std::uint32_t a, b;   // valid when is_pair
};

struct PairKey {
  std::uint32_t a, b;
  bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return (std::size_t(k.a) * 0x9e3779b97f4a7c15ULL) ^ (std::size_t(k.b) + 0x7f4a7c15ULL);
  }
};

struct Store {
  std::mutex mu;
  std::vector<Node> nodes;
  std::unordered_map<std::uint64_t, std::uint32_t> smalls;
  std::unordered_map<PairKey, std::uint32_t, PairKeyHash> pairs;

  Store() {
    nodes.push_back(Node{false, 0, 0, 0});  // id 0 is the number 0
    smalls.emplace(0, 0);
  }
};

Store& store() {
  static Store s;
  return s;
}

// pair2 on machine words, when it fits.
std::optional<std::uint64_t> cantor_u64(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 s = (unsigned __int128)a + b;
  unsigned __int128 v = s * (s + 1) / 2 + b;
  if (v > UINT64_MAX) return std::nullopt;
  return (std::uint64_t)v;
}

std::uint64_t isqrt_u128(unsigned __int128 n) {
  if (n == 0) return 0;
  std::uint64_t x = (std::uint64_t)std::min<unsigned __int128>(n, UINT64_MAX);
  // Newton iterations from a floating point seed.
  std::uint64_t r = (std::uint64_t)__builtin_sqrtl((long double)n);
  for (int i = 0; i < 6; i++) {
    if (r == 0) break;
    std::uint64_t q = (std::uint64_t)(n / r);
    r = (r + q) / 2;
  }
  while ((unsigned __int128)r * r > n) r--;
  while ((unsigned __int128)(r + 1) * (r + 1) <= n) r++;
  (void)x;
  return r;
}

std::pair<std::uint64_t, std::uint64_t> uncantor_u64(std::uint64_t n) {
  unsigned __int128 m = (unsigned __int128)8 * n + 1;
  std::uint64_t w = (isqrt_u128(m) - 1) / 2;
  unsigned __int128 t = (unsigned __int128)w * (w + 1) / 2;
  std::uint64_t b = (std::uint64_t)(n - t);
  std::uint64_t a = w - b;
  return {a, b};
}

}  // namespace

Val make_raw(std::uint32_t id);

Val Val::of(std::uint64_t n) {
  auto& s = store();
  std::lock_guard<std::mutex> lk(s.mu);
  auto it = s.smalls.find(n);
  if (it != s.smalls.end()) return Val(it->second);
  std::uint32_t id = (std::uint32_t)s.nodes.size();
  s.nodes.push_back(Node{false, n, 0, 0});
  s.smalls.emplace(n, id);
  return Val(id);
}

Val Val::pair(Val a, Val b) {
  auto& s = store();
  {
    std::lock_guard<std::mutex> lk(s.mu);
    const Node& na = s.nodes[a.id_];
    const Node& nb = s.nodes[b.id_];
    if (!na.is_pair && !nb.is_pair) {
      if (auto f = cantor_u64(na.small, nb.small)) {
        auto it = s.smalls.find(*f);
        if (it != s.smalls.end()) return Val(it->second);
        std::uint32_t id = (std::uint32_t)s.nodes.size();
        s.nodes.push_back(Node{false, *f, 0, 0});
        s.smalls.emplace(*f, id);
        return Val(id);
      }
    }
    PairKey k{a.id_, b.id_};
    auto it = s.pairs.find(k);
    if (it != s.pairs.end()) return Val(it->second);
    std::uint32_t id = (std::uint32_t)s.nodes.size();
    s.nodes.push_back(Node{true, 0, a.id_, b.id_});
    s.pairs.emplace(k, id);
    return Val(id);
  }
}

bool Val::is_small() const {
  auto& s = store();
  std::lock_guard<std::mutex> lk(s.mu);
  return !s.nodes[id_].is_pair;
}

std::uint64_t Val::small() const {
  auto& s = store();
  std::lock_guard<std::mutex> lk(s.mu);
  const Node& n = s.nodes[id_];
  if (n.is_pair) throw std::logic_error("Val::small on a large value");
  return n.small;
}

std::pair<Val, Val> Val::unpair() const {
  auto& s = store();
  bool is_pair;
  std::uint64_t sm;
  std::uint32_t a, b;
  {
    std::lock_guard<std::mutex> lk(s.mu);
    const Node& n = s.nodes[id_];
    is_pair = n.is_pair;
    sm = n.small;
    a = n.a;
    b = n.b;
  }
  if (is_pair) return {Val(a), Val(b)};
  auto [x, y] = uncantor_u64(sm);
  return {Val::of(x), Val::of(y)};
}

Val Val::succ() const {
  if (is_small()) {
    std::uint64_t n = small();
    if (n < UINT64_MAX) return Val::of(n + 1);
  }
  // pair2(a,b)+1 moves along the diagonal.
  auto [a, b] = unpair();
  if (!a.is_zero()) return Val::pair(a.pred(), b.succ());
  return Val::pair(b.succ(), Val::of(0));
}

Val Val::pred() const {
  if (is_zero()) throw std::logic_error("Val::pred of 0");
  if (is_small()) {
    std::uint64_t n = small();
    if (n > 0) return Val::of(n - 1);
  }
  auto [a, b] = unpair();
  if (!b.is_zero()) return Val::pair(a.succ(), b.pred());
  return Val::pair(Val::of(0), a.pred());
}

bool Val::lt(Val o) const {
  if (*this == o) return false;
  bool ls = is_small(), rs = o.is_small();
  if (ls && rs) return small() < o.small();
  if (ls && !rs) return true;   // every interned pair exceeds any machine word
  if (!ls && rs) return false;
  throw std::logic_error(
      "numeric comparison of two large values is unsupported (large values "
      "only arise as program codes, which are never ordered)");
}

int Val::cmp_struct(Val o) const {
  if (*this == o) return 0;
  bool ls = is_small(), rs = o.is_small();
  if (ls && rs) return small() < o.small() ? -1 : 1;
  if (ls != rs) return ls ? -1 : 1;
  auto [a, b] = unpair();
  auto [c, d] = o.unpair();
  if (int r = a.cmp_struct(c)) return r;
  return b.cmp_struct(d);
}

std::size_t Val::hash() const { return std::size_t(id_) * 0x9e3779b97f4a7c15ULL; }

std::size_t Val::dag_size() const {
  std::unordered_set<std::uint32_t> seen;
  std::vector<Val> stack{*this};
  while (!stack.empty()) {
    Val v = stack.back();
    stack.pop_back();
    if (!seen.insert(v.raw_id()).second) continue;
    if (!v.is_small()) {
      auto [a, b] = v.unpair();
      stack.push_back(a);
      stack.push_back(b);
    }
  }
  return seen.size();
}

namespace {
void brief_rec(Val v, std::string& out, std::size_t& budget) {
  if (budget == 0) {
    out += "…";
    return;
  }
  budget--;
  if (v.is_small()) {
    out += std::to_string(v.small());
    return;
  }
  auto [a, b] = v.unpair();
  out += "(";
  brief_rec(a, out, budget);
  out += ".";
  brief_rec(b, out, budget);
  out += ")";
}
}  // namespace

std::string Val::brief(std::size_t max_nodes) const {
  std::string out;
  std::size_t budget = max_nodes;
  brief_rec(*this, out, budget);
  return out;
}

// ---- string kit -----------------------------------------------------------

Val str_append(Val s, Val x) { return Val::pair(s, x).succ(); }

std::uint64_t str_len(Val s) {
  std::uint64_t n = 0;
  while (!s.is_zero()) {
    s = s.pred().fst();
    n++;
  }
  return n;
}

std::optional<std::pair<Val, Val>> str_split(Val s) {
  if (s.is_zero()) return std::nullopt;
  auto [pre, last] = s.pred().unpair();
  return std::make_pair(pre, last);
}

Val str_at(Val s, std::uint64_t i) {
  std::vector<Val> items = str_items(s);
  if (i >= items.size()) return Val::of(0);
  return items[i];
}

Val str_of(const std::vector<Val>& xs) {
  Val s = str_empty();
  for (const Val& x : xs) s = str_append(s, x);
  return s;
}

std::vector<Val> str_items(Val s) {
  std::vector<Val> rev;
  while (auto sp = str_split(s)) {
    rev.push_back(sp->second);
    s = sp->first;
  }
  return std::vector<Val>(rev.rbegin(), rev.rend());
}

// ---- tuple kit -------------------------------------------------------------

Val tuple_of(const std::vector<Val>& xs) {
  if (xs.empty()) throw std::invalid_argument("tuple_of: empty tuple");
  Val v = xs.back();
  for (std::size_t i = xs.size() - 1; i-- > 0;) v = Val::pair(xs[i], v);
  return v;
}

std::vector<Val> tuple_items(Val v, std::size_t n) {
  if (n == 0) throw std::invalid_argument("tuple_items: n must be ≥ 1");
  std::vector<Val> out;
  for (std::size_t i = 0; i + 1 < n; i++) {
    auto [a, b] = v.unpair();
    out.push_back(a);
    v = b;
  }
  out.push_back(v);
  return out;
}

}  // namespace pcalab
