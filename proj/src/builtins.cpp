#include <array>
#include <string>
#include <utility>

#include "mltt/eval.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

namespace {

struct Signature {
  std::vector<std::string> level_params;
  std::string_view type;
};

// Level parameters are positional: the first level argument binds u, then v, then w.
const std::array<Signature, kBuiltinCount>& signatures() {
  static const std::array<Signature, kBuiltinCount> sigs{{
      {{}, "U lzero"},
      {{}, "Nat"},
      {{}, "Nat -> Nat"},
      {{"u"}, "(A : Nat -> U u) -> A zero -> ((n : Nat) -> A n -> A (succ n)) -> (n : Nat) -> A n"},
      {{}, "U lzero"},
      {{"u"}, "(A : Empty -> U u) -> (e : Empty) -> A e"},
      {{}, "U lzero"},
      {{}, "Unit"},
      {{"u"}, "(A : Unit -> U u) -> A star -> (x : Unit) -> A x"},
      {{"u", "v"}, "U u -> U v -> U (lmax u v)"},
      {{"u", "v"}, "(X : U u) -> (Y : U v) -> X -> Sum {u, v} X Y"},
      {{"u", "v"}, "(X : U u) -> (Y : U v) -> Y -> Sum {u, v} X Y"},
      {{"u", "v", "w"},
       "(X : U u) -> (Y : U v) -> (A : Sum {u, v} X Y -> U w) -> ((x : X) -> A (inl {u, v} X Y x)) -> "
       "((y : Y) -> A (inr {u, v} X Y y)) -> (z : Sum {u, v} X Y) -> A z"},
      {{"u"}, "(X : U u) -> X -> X -> U u"},
      {{"u"}, "(X : U u) -> (x : X) -> Id {u} X x x"},
      {{"u", "v"},
       "(X : U u) -> (A : (x y : X) -> Id {u} X x y -> U v) -> ((x : X) -> A x x (refl {u} X x)) -> "
       "(x y : X) -> (p : Id {u} X x y) -> A x y p"},
      {{"u", "v"}, "U u -> U (lmax u v)"},
      {{"u", "v"}, "(X : U u) -> X -> Lift {u, v} X"},
      {{"u", "v"}, "(X : U u) -> Lift {u, v} X -> X"},
  }};
  return sigs;
}

}  // namespace

const TermPtr& builtin_signature(Builtin which) {
  static const std::array<TermPtr, kBuiltinCount> parsed = [] {
    std::array<TermPtr, kBuiltinCount> out;
    for (std::size_t i = 0; i < kBuiltinCount; ++i) out[i] = parse_term(signatures()[i].type);
    return out;
  }();
  return parsed[static_cast<std::size_t>(which)];
}

const std::vector<std::string>& builtin_level_params(Builtin which) {
  return signatures()[static_cast<std::size_t>(which)].level_params;
}

}  // namespace mltt
