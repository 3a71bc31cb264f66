#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcalab {

// A natural number with exact Cantor-pair structure.
//
// Values that fit in a machine word are stored directly; anything larger only
// ever arises as pair2(a, b) of existing values and is interned as a node, so
// pair2/unpair2 are O(1), equality is pointer identity, and successor /
// predecessor walk Cantor diagonals structurally. Magnitudes far beyond any
// bignum are representable as long as they are built from pair2 and +-1,
// which is all the machine ever does.
//
// Interning is global and guarded by a mutex; Val itself is a trivially
// copyable handle.
class Val {
 public:
  Val() : id_(0) {}

  static Val of(std::uint64_t n);
  static Val pair(Val a, Val b);  // pair2, the Cantor bijection

  bool is_small() const;
  std::uint64_t small() const;  // requires is_small()
  bool is_zero() const { return id_ == 0; }

  std::pair<Val, Val> unpair() const;  // total inverse of pair
  Val fst() const { return unpair().first; }
  Val snd() const { return unpair().second; }

  Val succ() const;
  Val pred() const;  // requires !is_zero()

  bool operator==(const Val& o) const { return id_ == o.id_; }
  bool operator!=(const Val& o) const { return id_ != o.id_; }

  // Numeric order. Exact for any small/small or small/large mix; two large
  // interned pairs cannot be compared without general addition, which nothing
  // in scope needs, so that case throws.
  bool lt(Val o) const;

  // Deterministic total order (not numeric beyond smalls); used only for
  // canonical output ordering.
  int cmp_struct(Val o) const;

  std::size_t hash() const;
  std::uint32_t raw_id() const { return id_; }

  // Number of distinct DAG nodes reachable from this value.
  std::size_t dag_size() const;

  // Decimal for smalls, "(a.b)" pair notation otherwise, elided beyond a
  // node budget.
  std::string brief(std::size_t max_nodes = 32) const;

 private:
  explicit Val(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

struct ValHash {
  std::size_t operator()(const Val& v) const { return v.hash(); }
};

// ---- string kit (str_code coding) ----------------------------------------

inline Val str_empty() { return Val::of(0); }
Val str_append(Val s, Val x);                      // str_code(σ ⌢ x)
std::uint64_t str_len(Val s);
Val str_at(Val s, std::uint64_t i);                // 0 when out of range
std::optional<std::pair<Val, Val>> str_split(Val s);  // (prefix, last)
Val str_of(const std::vector<Val>& xs);
std::vector<Val> str_items(Val s);

// ---- tuple kit (⟨·⟩_n, right-nested pairs, n ≥ 1) -------------------------

Val tuple_of(const std::vector<Val>& xs);
std::vector<Val> tuple_items(Val v, std::size_t n);

}  // namespace pcalab
